#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <set>
#include <string>

namespace anthem {

/// A predicate symbol; `p/1` and `p/2` are distinct predicates.
struct Predicate {
  std::string name;
  std::size_t arity = 0;

  auto operator<=>(const Predicate &) const = default;

  std::string str() const { return name + "/" + std::to_string(arity); }
};

using PredicateSet = std::set<Predicate>;

inline std::ostream &operator<<(std::ostream &out, const Predicate &predicate) {
  return out << predicate.str();
}

} // namespace anthem
