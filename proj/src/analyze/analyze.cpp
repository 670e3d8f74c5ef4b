#include <anthem/analyze/analyze.hpp>
#include <anthem/translate/translate.hpp>

#include <map>
#include <queue>
#include <variant>

namespace anthem::analyze {

std::vector<Predicate> DependencyGraph::positive_successors(const Predicate &predicate) const {
  std::vector<Predicate> result;
  for (auto it = edges.lower_bound(Edge{predicate, {}, Polarity::Positive}); it != edges.end() && it->from == predicate;
       ++it)
    if (it->polarity == Polarity::Positive)
      result.push_back(it->to);
  return result;
}

std::vector<Predicate> DependencyGraph::successors(const Predicate &predicate) const {
  std::vector<Predicate> result;
  for (auto it = edges.lower_bound(Edge{predicate, {}, Polarity::Positive}); it != edges.end() && it->from == predicate;
       ++it)
    if (result.empty() || result.back() != it->to)
      result.push_back(it->to);
  return result;
}

DependencyGraph dependency_graph(const asp::Program &program) {
  DependencyGraph graph;
  graph.vertices = asp::predicates(program);
  for (const asp::Rule &rule : program.rules) {
    if (!rule.head)
      continue;
    Predicate head = rule.head->predicate();
    for (const asp::BodyLiteral &body_literal : rule.body)
      if (const auto *literal = std::get_if<asp::Literal>(&body_literal))
        graph.edges.insert(Edge{head, literal->atom.predicate(),
                                literal->negations == 0 ? Polarity::Positive : Polarity::Negative});
  }
  return graph;
}

namespace {

// Shortest path from `start` back to itself, or empty when none exists.
template <typename Successors>
std::vector<Predicate> cycle_through(const Predicate &start, Successors successors) {
  std::map<Predicate, Predicate> parent;
  std::queue<Predicate> queue;
  queue.push(start);
  std::set<Predicate> visited;
  while (!queue.empty()) {
    Predicate current = queue.front();
    queue.pop();
    for (const Predicate &next : successors(current)) {
      if (next == start) {
        std::vector<Predicate> path{start};
        for (Predicate node = current; node != start; node = parent.at(node))
          path.insert(path.begin() + 1, node);
        path.push_back(start);
        return path;
      }
      if (visited.insert(next).second) {
        parent.emplace(next, current);
        queue.push(next);
      }
    }
  }
  return {};
}

std::vector<std::string> names(const std::vector<Predicate> &cycle) {
  std::vector<std::string> result;
  for (const Predicate &predicate : cycle)
    result.push_back(predicate.str());
  return result;
}

} // namespace

AnalysisReport check_tightness(const asp::Program &program) {
  DependencyGraph graph = dependency_graph(program);
  AnalysisReport report{Property::Tightness, true, {}};
  for (const Predicate &vertex : graph.vertices) {
    auto cycle = cycle_through(vertex, [&](const Predicate &p) { return graph.positive_successors(p); });
    if (!cycle.empty()) {
      report.verdict = false;
      report.witness = names(cycle);
      break;
    }
  }
  return report;
}

AnalysisReport check_regularity(const asp::Program &program) {
  AnalysisReport report{Property::Regularity, true, {}};
  for (const asp::Rule &rule : program.rules) {
    if (!translate::is_regular(rule)) {
      report.verdict = false;
      report.witness = {asp::format_rule(rule)};
      break;
    }
  }
  return report;
}

AnalysisReport check_private_recursion(const asp::Program &program, const PredicateSet &public_predicates) {
  DependencyGraph graph = dependency_graph(program);
  AnalysisReport report{Property::PrivateRecursion, true, {}};
  for (const Predicate &vertex : graph.vertices) {
    if (public_predicates.contains(vertex))
      continue;
    auto cycle = cycle_through(vertex, [&](const Predicate &p) { return graph.successors(p); });
    if (!cycle.empty()) {
      report.verdict = false;
      report.witness = names(cycle);
      break;
    }
  }
  return report;
}

} // namespace anthem::analyze
