#pragma once

#include <anthem/asp/syntax.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace anthem::analyze {

enum class Polarity { Positive, Negative };

struct Edge {
  Predicate from;
  Predicate to;
  Polarity polarity = Polarity::Positive;

  auto operator<=>(const Edge &) const = default;
};

/// Edge p -> q when q occurs in the body of a rule with head predicate p;
/// positive unless the occurrence is under `not`. The implicit `not not` of a
/// choice head contributes no edge.
struct DependencyGraph {
  PredicateSet vertices;
  std::set<Edge> edges;

  std::vector<Predicate> positive_successors(const Predicate &predicate) const;
  std::vector<Predicate> successors(const Predicate &predicate) const;
};

DependencyGraph dependency_graph(const asp::Program &program);

enum class Property { Tightness, Regularity, PrivateRecursion };

struct AnalysisReport {
  Property property = Property::Tightness;
  bool verdict = true;
  /// Cycle as a predicate list with the first predicate repeated at the end,
  /// or the first non-regular rule.
  std::vector<std::string> witness;
};

AnalysisReport check_tightness(const asp::Program &program);
AnalysisReport check_regularity(const asp::Program &program);
/// Any dependency cycle (of either polarity) through a predicate outside `public_predicates`.
AnalysisReport check_private_recursion(const asp::Program &program, const PredicateSet &public_predicates);

} // namespace anthem::analyze
