#include <anthem/analyze/analyze.hpp>

#include "common.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace anthem;
using analyze::Edge;
using analyze::Polarity;

namespace {

asp::Program program(const std::string &text) { return asp::parse_program(text); }

asp::Program corpus_program(const char *name) { return asp::parse_program(testing_support::read_corpus(name)); }

// Every consecutive pair of the witness is an edge of the graph, and the witness is closed.
void expect_cycle(const analyze::DependencyGraph &graph, const std::vector<std::string> &witness, bool positive_only) {
  ASSERT_GE(witness.size(), 2u);
  EXPECT_EQ(witness.front(), witness.back());
  for (std::size_t i = 0; i + 1 < witness.size(); ++i) {
    bool found = std::any_of(graph.edges.begin(), graph.edges.end(), [&](const Edge &edge) {
      return edge.from.str() == witness[i] && edge.to.str() == witness[i + 1] &&
             (!positive_only || edge.polarity == Polarity::Positive);
    });
    EXPECT_TRUE(found) << witness[i] << " -> " << witness[i + 1];
  }
}

} // namespace

TEST(DependencyGraph, Edges) {
  analyze::DependencyGraph graph = analyze::dependency_graph(program("p(X) :- q(X), not r(X), not not s(X). :- p(1)."));
  EXPECT_EQ(graph.vertices.size(), 4u);
  EXPECT_EQ(graph.edges, (std::set<Edge>{{{"p", 1}, {"q", 1}, Polarity::Positive},
                                         {{"p", 1}, {"r", 1}, Polarity::Negative},
                                         {{"p", 1}, {"s", 1}, Polarity::Negative}}));
}

TEST(DependencyGraph, ChoiceHeadAddsNoSelfEdge) {
  analyze::DependencyGraph graph = analyze::dependency_graph(program("{q(X)} :- p(X)."));
  EXPECT_EQ(graph.edges, (std::set<Edge>{{{"q", 1}, {"p", 1}, Polarity::Positive}}));
}

TEST(Tightness, Examples) {
  EXPECT_TRUE(analyze::check_tightness(program("p :- not p.")).verdict);
  EXPECT_TRUE(analyze::check_tightness(corpus_program("choice.1.lp")).verdict);
  EXPECT_TRUE(analyze::check_tightness(corpus_program("primes.1.lp")).verdict);
  EXPECT_TRUE(analyze::check_tightness(corpus_program("cover.lp")).verdict);
  EXPECT_TRUE(analyze::check_tightness(corpus_program("reach.2.lp")).verdict);

  analyze::AnalysisReport report = analyze::check_tightness(corpus_program("reach.1.lp"));
  EXPECT_FALSE(report.verdict);
  EXPECT_EQ(report.witness, (std::vector<std::string>{"reach/1", "reach/1"}));

  report = analyze::check_tightness(program("p :- q. q :- r. r :- p."));
  EXPECT_FALSE(report.verdict);
  EXPECT_EQ(report.witness.size(), 4u);
}

TEST(Tightness, NegativeCyclesAreAllowed) {
  EXPECT_TRUE(analyze::check_tightness(program("p :- not q. q :- not p.")).verdict);
  EXPECT_TRUE(analyze::check_tightness(program("p :- not not p.")).verdict);
}

TEST(Regularity, Report) {
  EXPECT_TRUE(analyze::check_regularity(corpus_program("successor.1.lp")).verdict);
  analyze::AnalysisReport report = analyze::check_regularity(program("q(1). p(X,Y) :- X / Y > 0."));
  EXPECT_FALSE(report.verdict);
  ASSERT_EQ(report.witness.size(), 1u);
  EXPECT_EQ(report.witness[0], "p(X,Y) :- X/Y > 0.");
}

TEST(PrivateRecursion, Examples) {
  asp::Program reach = corpus_program("reach.1.lp");
  EXPECT_TRUE(analyze::check_private_recursion(reach, {{"reach", 1}, {"edge", 2}, {"start", 1}}).verdict);
  analyze::AnalysisReport report = analyze::check_private_recursion(reach, {{"edge", 2}, {"start", 1}});
  EXPECT_FALSE(report.verdict);
  EXPECT_EQ(report.witness.front(), "reach/1");
  // negative cycles count as recursion as well
  EXPECT_FALSE(analyze::check_private_recursion(program("p :- not q. q :- not p."), {{"p", 0}}).verdict);
  EXPECT_TRUE(analyze::check_private_recursion(program("p :- not p. q :- p."), {{"p", 0}}).verdict);
}

TEST(AnalyzeProperties, RandomGraphsAgreeWithCycleEnumeration) {
  std::mt19937 rng(3);
  for (int round = 0; round < 300; ++round) {
    int predicates = 2 + static_cast<int>(rng() % 9);
    auto name = [&](int i) { return std::string("p") + std::to_string(i); };
    std::string text;
    int rules = 1 + static_cast<int>(rng() % 12);
    for (int r = 0; r < rules; ++r) {
      text += (rng() % 5 == 0 ? "{" + name(static_cast<int>(rng() % predicates)) + "}"
                              : name(static_cast<int>(rng() % predicates)));
      text += " :- ";
      int body = 1 + static_cast<int>(rng() % 3);
      for (int b = 0; b < body; ++b) {
        if (b > 0)
          text += ", ";
        int negations = rng() % 4 == 0 ? 1 + static_cast<int>(rng() % 2) : 0;
        for (int n = 0; n < negations; ++n)
          text += "not ";
        text += name(static_cast<int>(rng() % predicates));
      }
      text += ". ";
    }
    asp::Program p = program(text);
    oracle::Graph graph = oracle::dependency_graph(p);
    analyze::DependencyGraph dependencies = analyze::dependency_graph(p);

    analyze::AnalysisReport tight = analyze::check_tightness(p);
    ASSERT_EQ(tight.verdict, !oracle::has_positive_cycle(graph)) << text;
    if (!tight.verdict)
      expect_cycle(dependencies, tight.witness, true);

    PredicateSet public_predicates;
    std::set<std::string> private_names;
    for (const Predicate &predicate : dependencies.vertices) {
      if (rng() % 2)
        public_predicates.insert(predicate);
      else
        private_names.insert(predicate.str());
    }
    analyze::AnalysisReport recursion = analyze::check_private_recursion(p, public_predicates);
    ASSERT_EQ(recursion.verdict, !oracle::has_cycle_through(graph, private_names)) << text;
    if (!recursion.verdict) {
      expect_cycle(dependencies, recursion.witness, false);
      EXPECT_TRUE(private_names.contains(recursion.witness.front()));
    }
  }
}
