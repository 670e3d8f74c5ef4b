#include <anthem/error.hpp>
#include <anthem/fol/io.hpp>
#include <anthem/fol/operations.hpp>

#include "common.hpp"

#include <gtest/gtest.h>

using namespace anthem;
using namespace anthem::fol;
using testing_support::strip_spaces;

namespace {

const char *const successor_formula = "forall V1 X (exists I$i J$i (V1 = I$i + J$i and I$i = X and J$i = 1) and "
                                      "exists Z (Z = X and p(Z)) -> q(V1))";

} // namespace

TEST(FolParse, SuccessorFormulaStructure) {
  Formula formula = parse_formula(successor_formula);
  ASSERT_EQ(formula.kind(), FormulaKind::Forall);
  EXPECT_EQ(formula.variables(), (std::vector<Variable>{{"V1", Sort::General}, {"X", Sort::General}}));
  const Formula &body = formula.child();
  ASSERT_EQ(body.kind(), FormulaKind::Implies);
  EXPECT_EQ(body.rhs(), Formula::atom("q", {Term::variable("V1", Sort::General)}));
  const Formula &antecedent = body.lhs();
  ASSERT_EQ(antecedent.kind(), FormulaKind::And);
  ASSERT_EQ(antecedent.children().size(), 2u);
  const Formula &first = antecedent.children()[0];
  ASSERT_EQ(first.kind(), FormulaKind::Exists);
  EXPECT_EQ(first.variables(), (std::vector<Variable>{{"I", Sort::Integer}, {"J", Sort::Integer}}));
  const Formula &sum = first.child().children()[0];
  ASSERT_EQ(sum.kind(), FormulaKind::Comparison);
  EXPECT_EQ(sum.guards()[0].term,
            Term::add(Term::variable("I", Sort::Integer), Term::variable("J", Sort::Integer)));
}

TEST(FolParse, Constants) {
  EXPECT_EQ(parse_formula("#false").kind(), FormulaKind::Falsity);
  EXPECT_EQ(parse_formula("#true.").kind(), FormulaKind::Truth);
  EXPECT_EQ(parse_formula("p(#inf, #sup, a, 3, -3)"),
            Formula::atom("p", {Term::infimum(), Term::supremum(), Term::symbol("a"), Term::numeral(3),
                                Term::numeral(-3)}));
}

TEST(FolParse, SortSuffixes) {
  const auto sort_of = [](const std::string &variable) {
    return parse_formula("exists " + variable + " p(" + variable + ")").variables()[0].sort;
  };
  EXPECT_EQ(sort_of("X"), Sort::General);
  EXPECT_EQ(sort_of("X$g"), Sort::General);
  EXPECT_EQ(sort_of("X$general"), Sort::General);
  EXPECT_EQ(sort_of("X$"), Sort::Integer);
  EXPECT_EQ(sort_of("X$i"), Sort::Integer);
  EXPECT_EQ(sort_of("X$integer"), Sort::Integer);
  EXPECT_EQ(sort_of("X$s"), Sort::Symbol);
  EXPECT_EQ(sort_of("X$symbol"), Sort::Symbol);
}

TEST(FolParse, FunctionConstants) {
  Formula formula = parse_formula("p(n$i + 1)");
  const Term &argument = formula.terms()[0];
  ASSERT_EQ(argument.kind(), TermKind::Add);
  EXPECT_EQ(argument.args()[0], Term::function_constant("n", Sort::Integer));
}

TEST(FolParse, SortErrors) {
  EXPECT_THROW(parse_formula("exists S$s p(S$s + 1)"), SortError);
  EXPECT_THROW(parse_formula("exists X p(X * 2)"), SortError);
  EXPECT_THROW(parse_formula("p(a + 1)"), SortError);
  EXPECT_NO_THROW(parse_formula("exists N$i p(N$i * 2)"));
}

TEST(FolParse, SyntaxErrors) {
  EXPECT_THROW(parse_formula("p(X"), SyntaxError);
  EXPECT_THROW(parse_formula("forall (p)"), SyntaxError);
  EXPECT_THROW(parse_formula("p and"), SyntaxError);
  EXPECT_THROW(parse_theory("p. q"), SyntaxError);
}

TEST(FolParse, Theory) {
  Theory theory = parse_theory("p. forall X (q(X) -> p).\n% comment\nr.");
  EXPECT_EQ(theory.formulas.size(), 3u);
  EXPECT_TRUE(parse_theory("").formulas.empty());
}

TEST(FolParse, ConnectivePrecedence) {
  Formula formula = parse_formula("p or q and r -> s <-> t");
  ASSERT_EQ(formula.kind(), FormulaKind::Iff);
  ASSERT_EQ(formula.lhs().kind(), FormulaKind::Implies);
  ASSERT_EQ(formula.lhs().lhs().kind(), FormulaKind::Or);
  EXPECT_EQ(formula.lhs().lhs().children()[1].kind(), FormulaKind::And);
  // implication associates to the right
  Formula chain = parse_formula("p -> q -> r");
  EXPECT_EQ(chain.rhs().kind(), FormulaKind::Implies);
  // a quantifier binds the formula directly after it
  Formula quantified = parse_formula("forall X p(X) and q");
  EXPECT_EQ(quantified.kind(), FormulaKind::And);
}

TEST(FolFormat, Goldens) {
  EXPECT_EQ(format_default(parse_formula("forall X (p(X) and not not q(X) -> q(X))")),
            "forall X (p(X) and not not q(X) -> q(X))");
  EXPECT_EQ(format_default(parse_formula("forall X$i (p(X$i) -> q(X$i + 1))")), "forall X$i (p(X$i) -> q(X$i + 1))");
  EXPECT_EQ(format_default(parse_formula("#false")), "#false");
  EXPECT_EQ(format_default(parse_formula("forall X (not (q(X) and s))")), "forall X (not (q(X) and s))");
  EXPECT_EQ(format_default(parse_formula("p(n$i * (2 - 1))")), "p(n$i * (2 - 1))");
  EXPECT_EQ(format_default(parse_formula("(p -> q) -> r")), "(p -> q) -> r");
  EXPECT_EQ(format_default(parse_theory("p. q.")), "p.\nq.\n");
}

TEST(FolFormat, SuccessorRoundTrip) {
  EXPECT_EQ(format_default(parse_formula(successor_formula)), successor_formula);
}

TEST(FolFormat, ChainedComparisonRoundTrip) {
  Formula formula = parse_formula("exists I$i J$i K$i (I$i <= K$i <= J$i)");
  EXPECT_EQ(formula.child().guards().size(), 2u);
  EXPECT_EQ(format_default(formula), "exists I$i J$i K$i (I$i <= K$i <= J$i)");
  EXPECT_EQ(parse_formula(format_default(formula)), formula);
}

TEST(FolFormat, Tptp) {
  std::string tptp = format_tptp(parse_formula("forall X ( exists I$ (I$ = X and p(I$)) -> q(X))"));
  EXPECT_EQ(strip_spaces(tptp), strip_spaces("![X: general]: ( ?[I: $int]: ( ( f__integer__(I) = X ) &\n"
                                             "p(f__integer__(I)) ) => q(X) )"));
  EXPECT_EQ(format_tptp(Formula::truth()), "$true");
  EXPECT_EQ(format_tptp(Formula::falsity()), "$false");
  EXPECT_EQ(format_tptp(parse_formula("p(a)")), "p(f__symbolic__(a))");
  EXPECT_THROW(format_tptp(parse_formula("p(X)")), ClosureError);
}

TEST(FolOperations, FreeVariables) {
  Formula formula = parse_formula("forall X (p(X, Y) and exists Z$i q(Z$i, W$s))");
  EXPECT_EQ(free_variables(formula), (VariableSet{{"W", Sort::Symbol}, {"Y", Sort::General}}));
  EXPECT_TRUE(free_variables(parse_formula(successor_formula)).empty());
}

TEST(FolOperations, Substitute) {
  Formula formula = parse_formula("p(X) and exists Y q(X, Y)");
  Variable x{"X", Sort::General};
  EXPECT_EQ(format_default(substitute(formula, x, Term::numeral(3))), "p(3) and exists Y q(3, Y)");
  // capture avoidance
  Formula captured = substitute(formula, x, Term::variable("Y", Sort::General));
  EXPECT_EQ(free_variables(captured), (VariableSet{{"Y", Sort::General}}));
  EXPECT_TRUE(alpha_equivalent(captured, parse_formula("p(Y) and exists Z q(Y, Z)")));
  // integer variables only accept integer terms
  EXPECT_THROW(substitute(parse_formula("p(N$i)"), Variable{"N", Sort::Integer}, Term::symbol("a")), SortError);
  EXPECT_NO_THROW(substitute(parse_formula("p(X)"), x, Term::variable("N", Sort::Integer)));
}

TEST(FolOperations, UniversalClosure) {
  Formula closed = universal_closure(parse_formula("p(X, Y$i) -> q(X)"));
  ASSERT_EQ(closed.kind(), FormulaKind::Forall);
  EXPECT_TRUE(free_variables(closed).empty());
  Formula ground = parse_formula("p");
  EXPECT_EQ(universal_closure(ground), ground);
}

TEST(FolOperations, AlphaEquivalence) {
  EXPECT_TRUE(alpha_equivalent(parse_formula("forall X p(X)"), parse_formula("forall Y p(Y)")));
  EXPECT_FALSE(alpha_equivalent(parse_formula("forall X p(X)"), parse_formula("forall Y$i p(Y$i)")));
  EXPECT_FALSE(alpha_equivalent(parse_formula("forall X p(X, Y)"), parse_formula("forall Y p(Y, Y)")));
  EXPECT_TRUE(alpha_equivalent(parse_formula("forall X Y q(X, Y)"), parse_formula("forall A B q(A, B)")));
}

TEST(FolOperations, Predicates) {
  EXPECT_EQ(predicates(parse_formula(successor_formula)), (PredicateSet{{"p", 1}, {"q", 1}}));
  EXPECT_EQ(predicates(parse_formula("p and p(1)")), (PredicateSet{{"p", 0}, {"p", 1}}));
}

TEST(FolOperations, RenamePredicates) {
  Formula renamed = rename_predicates(parse_formula("p(1) and p and q"), {{Predicate{"p", 1}, "r"}});
  EXPECT_EQ(format_default(renamed), "r(1) and p and q");
}

TEST(FolOperations, ReplacePlaceholders) {
  Formula formula = replace_placeholders(parse_formula("p(n) and q(a)"), {{"n", Sort::Integer}});
  EXPECT_EQ(format_default(formula), "p(n$i) and q(a)");
}
