#pragma once

#include <anthem/fol/syntax.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace anthem::transform {

/// Here/there copies of each predicate: `p/2` becomes `hp/2` and `tp/2`, with
/// underscores appended when the prefixed name is already in use.
class HereThereNaming {
public:
  HereThereNaming() = default;
  /// Builds names for `predicates`; `reserved` lists names that must not be generated.
  HereThereNaming(const PredicateSet &predicates, const PredicateSet &reserved = {});

  const std::string &here(const Predicate &predicate) const;
  const std::string &there(const Predicate &predicate) const;
  const std::vector<std::string> &warnings() const { return warnings_; }
  const PredicateSet &predicates() const { return predicates_; }

private:
  PredicateSet predicates_;
  std::map<Predicate, std::pair<std::string, std::string>> names_;
  std::vector<std::string> warnings_;
};

fol::Formula here(const fol::Formula &formula, const HereThereNaming &naming);
fol::Formula there(const fol::Formula &formula, const HereThereNaming &naming);
fol::Formula gamma(const fol::Formula &formula, const HereThereNaming &naming);
fol::Theory gamma(const fol::Theory &theory, const HereThereNaming &naming);
/// Uses a naming built from the predicates of `theory`.
fol::Theory gamma(const fol::Theory &theory);

/// `forall X1 ... Xk (hp(X1, ..., Xk) -> tp(X1, ..., Xk))` for each predicate.
fol::Theory ordering_axioms(const HereThereNaming &naming);
fol::Theory ordering_axioms(const PredicateSet &predicates);

/// Shape check for completion: universally closed implications with an atomic
/// consequent over distinct general variables, or constraints with consequent `#false`.
bool is_completable(const fol::Theory &theory);

/// Completed definitions for every predicate of `theory` except `inputs`,
/// in order of first definition, then undefined predicates by first occurrence;
/// constraints follow as universally closed negations.
fol::Theory completion(const fol::Theory &theory, const PredicateSet &inputs = {});

/// Completed definitions only (constraints dropped), keyed by predicate.
struct CompletionParts {
  std::vector<std::pair<Predicate, fol::Formula>> definitions;
  std::vector<fol::Formula> constraints;
};
CompletionParts complete(const fol::Theory &theory, const PredicateSet &inputs = {});

fol::Formula simplify(const fol::Formula &formula);
fol::Theory simplify(const fol::Theory &theory);

} // namespace anthem::transform
