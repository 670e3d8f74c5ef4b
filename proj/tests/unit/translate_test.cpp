#include <anthem/error.hpp>
#include <anthem/fol/io.hpp>
#include <anthem/fol/operations.hpp>
#include <anthem/translate/translate.hpp>

#include "common.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace anthem;
using anthem::fol::Sort;
using anthem::fol::Variable;

namespace {

std::string translated(translate::TranslationKind kind, const std::string &text) {
  asp::Program program = asp::parse_program(text);
  switch (kind) {
  case translate::TranslationKind::TauStar:
    return fol::format_default(translate::tau_star(program));
  case translate::TranslationKind::Natural:
    return fol::format_default(translate::natural(program));
  default:
    return fol::format_default(translate::mu(program));
  }
}

asp::Term term_of(const std::string &text) { return asp::parse_program("p(" + text + ").").rules[0].head->terms[0]; }

} // namespace

TEST(Val, Division) {
  fol::Formula formula = translate::val(asp::parse_program("p(X/Y).").rules[0].head->terms[0], {"Z", Sort::General});
  EXPECT_EQ(fol::format_default(formula),
            "exists I$i J$i Q$i R$i (I$i = J$i * Q$i + R$i and (I$i = X and J$i = Y) and (J$i != 0 and R$i >= 0 and "
            "R$i < J$i) and Z = Q$i)");
}

TEST(Val, Numeral) {
  EXPECT_EQ(fol::format_default(translate::val(asp::Term::numeral(0), {"Z1", Sort::General})), "Z1 = 0");
}

TEST(Val, FreshHelpers) {
  fol::Formula formula = translate::val(term_of("X+1"), {"Z", Sort::General}, {"I", "J"});
  std::set<std::string> names = fol::variable_names(formula);
  EXPECT_FALSE(names.contains("I"));
  EXPECT_FALSE(names.contains("J"));
}

// val(t, z) holds exactly for the values of t, for every assignment over a small universe
TEST(Val, AgreesWithTermValues) {
  oracle::Universe universe = oracle::Universe::make({-2, -1, 0, 1, 2, 3}, {"a"});
  for (const char *text : {"X", "3", "a", "X+1", "X-Y", "X*Y", "-X", "|X|", "X/Y", "X\\Y", "X..Y", "1..3",
                           "X/2", "(X+1)*2", "X..Y+1", "#inf", "#sup", "a+1"}) {
    asp::Term term = term_of(text);
    Variable z{"Z", Sort::General};
    fol::Formula formula = translate::val(term, z);
    std::set<std::string> names = asp::variables(term);
    std::vector<std::string> variables(names.begin(), names.end());
    std::vector<Variable> bound{z};
    for (const auto &name : variables)
      bound.push_back({name, Sort::General});

    std::vector<std::size_t> index(variables.size(), 0);
    const auto &values = universe.values;
    for (;;) {
      std::map<std::string, oracle::Value> assignment;
      fol::Formula instance = formula;
      for (std::size_t i = 0; i < variables.size(); ++i) {
        assignment[variables[i]] = values[index[i]];
        const oracle::Value &v = values[index[i]];
        fol::Term value = v.is_integer() ? fol::Term::numeral(v.number) : fol::Term::symbol(v.symbol);
        instance = fol::substitute(instance, {variables[i], Sort::General}, value);
      }
      std::set<oracle::Value> expected = oracle::values(term, assignment, universe);
      for (const oracle::Value &candidate : values) {
        fol::Term value =
            candidate.is_integer() ? fol::Term::numeral(candidate.number) : fol::Term::symbol(candidate.symbol);
        bool holds = oracle::holds(fol::substitute(instance, z, value), {}, universe);
        ASSERT_EQ(holds, expected.contains(candidate)) << text << " at " << oracle::to_string(candidate);
      }
      std::size_t position = 0;
      while (position < index.size() && ++index[position] == values.size())
        index[position++] = 0;
      if (position == index.size())
        break;
    }
  }
}

TEST(TauStar, DivisionRule) {
  EXPECT_EQ(translated(translate::TranslationKind::TauStar, "p(X,Y) :- X / Y > 0."),
            "forall V1 V2 X Y (V1 = X and V2 = Y and exists Z Z1 (exists I$i J$i Q$i R$i (I$i = J$i * Q$i + R$i and "
            "(I$i = X and J$i = Y) and (J$i != 0 and R$i >= 0 and R$i < J$i) and Z = Q$i) and Z1 = 0 and Z > Z1) -> "
            "p(V1, V2)).\n");
}

TEST(TauStar, ChoiceRule) {
  EXPECT_EQ(translated(translate::TranslationKind::TauStar, "{q(X)} :- p(X)."),
            "forall V1 X (V1 = X and exists Z (Z = X and p(Z)) and not not q(V1) -> q(V1)).\n");
}

TEST(TauStar, ConstraintAndNegation) {
  EXPECT_EQ(translated(translate::TranslationKind::TauStar, ":- q(X), not p(X)."),
            "forall X (exists Z (Z = X and q(Z)) and exists Z (Z = X and not p(Z)) -> #false).\n");
}

TEST(TauStar, Facts) {
  EXPECT_EQ(translated(translate::TranslationKind::TauStar, "p."), "#true -> p.\n");
}

TEST(TauStar, IsClosedAndCompletable) {
  for (const char *name : {"primes.1.lp", "primes.2.lp", "primes.3.lp", "cover.lp", "transitive.1.lp"}) {
    fol::Theory theory = translate::tau_star(asp::parse_program(testing_support::read_corpus(name)));
    EXPECT_TRUE(fol::free_variables(theory).empty()) << name;
  }
}

TEST(Regularity, Examples) {
  const auto regular = [](const char *text) { return translate::is_regular(asp::parse_program(text).rules[0]); };
  EXPECT_TRUE(regular("q(X+1) :- p(X)."));
  EXPECT_TRUE(regular("q(X) :- p(X-1)."));
  EXPECT_TRUE(regular("{q(X)} :- p(X)."));
  EXPECT_TRUE(regular(":- q(X,Y), q(Y,Z), not q(X,Z), p(X), p(Y), p(Z)."));
  EXPECT_FALSE(regular("p(X,Y) :- X / Y > 0."));
  EXPECT_FALSE(regular("composite(I*J) :- I = 2..b, J = 2..b."));
  EXPECT_FALSE(regular("p(1..3)."));
}

TEST(Natural, SuccessorPrograms) {
  EXPECT_EQ(translated(translate::TranslationKind::Natural, "q(X+1) :- p(X)."),
            "forall X$i (p(X$i) -> q(X$i + 1)).\n");
  EXPECT_EQ(translated(translate::TranslationKind::Natural, "q(X) :- p(X-1)."),
            "forall X$i (p(X$i - 1) -> q(X$i)).\n");
}

TEST(Natural, ChoiceAndConstraint) {
  EXPECT_EQ(translated(translate::TranslationKind::Natural, "{q(X)} :- p(X)."),
            "forall X (p(X) and not not q(X) -> q(X)).\n");
  EXPECT_EQ(translated(translate::TranslationKind::Natural, ":- q(X), not p(X)."),
            "forall X (q(X) and not p(X) -> #false).\n");
}

TEST(Natural, RejectsIrregularRules) {
  try {
    translate::natural(asp::parse_program("q(1). p(X,Y) :- X / Y > 0."));
    FAIL() << "expected NotRegular";
  } catch (const NotRegular &error) {
    EXPECT_NE(std::string(error.what()).find("X/Y"), std::string::npos) << error.what();
  }
}

TEST(Mu, MixesTranslations) {
  asp::Program program = asp::parse_program("q(X+1) :- p(X). p(X,Y) :- X / Y > 0.");
  fol::Theory theory = translate::mu(program);
  ASSERT_EQ(theory.formulas.size(), 2u);
  EXPECT_EQ(theory.formulas[0], translate::natural(program.rules[0]));
  EXPECT_EQ(theory.formulas[1], translate::tau_star(program.rules[1]));
}

TEST(TranslationKind, Spellings) {
  EXPECT_EQ(translate::parse_translation_kind("tau-star"), translate::TranslationKind::TauStar);
  EXPECT_EQ(translate::parse_translation_kind("natural"), translate::TranslationKind::Natural);
  EXPECT_EQ(translate::parse_translation_kind("mu"), translate::TranslationKind::Mu);
  EXPECT_EQ(translate::parse_translation_kind("completion"), translate::TranslationKind::Completion);
  EXPECT_EQ(translate::parse_translation_kind("gamma"), translate::TranslationKind::Gamma);
  EXPECT_FALSE(translate::parse_translation_kind("nu"));
}

namespace {

// HT models of a theory over every atom of the given predicates, as (here, there) pairs.
std::set<std::pair<oracle::Interpretation, oracle::Interpretation>>
ht_models(const std::vector<fol::Formula> &theory, const std::vector<oracle::GroundAtom> &atoms,
          const oracle::Universe &universe, oracle::OutsideAtoms outside) {
  std::set<std::pair<oracle::Interpretation, oracle::Interpretation>> result;
  oracle::Mask all = (oracle::Mask{1} << atoms.size()) - 1;
  for (oracle::Mask there = all;; there = (there - 1) & all) {
    oracle::Interpretation there_atoms;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if ((there >> i) & 1u)
        there_atoms.insert(atoms[i]);
    for (oracle::Mask here = there;; here = (here - 1) & there) {
      oracle::Interpretation here_atoms;
      for (std::size_t i = 0; i < atoms.size(); ++i)
        if ((here >> i) & 1u)
          here_atoms.insert(atoms[i]);
      bool satisfied = true;
      for (const auto &formula : theory)
        satisfied = satisfied && oracle::ht_holds(formula, here_atoms, there_atoms, universe, {}, outside);
      if (satisfied)
        result.emplace(here_atoms, there_atoms);
      if (here == 0)
        break;
    }
    if (there == 0)
      break;
  }
  return result;
}

std::vector<oracle::GroundAtom> all_atoms(const PredicateSet &predicates, const oracle::Universe &universe) {
  std::vector<oracle::GroundAtom> atoms;
  for (const Predicate &predicate : predicates) {
    std::vector<std::vector<oracle::Value>> tuples{{}};
    for (std::size_t i = 0; i < predicate.arity; ++i) {
      std::vector<std::vector<oracle::Value>> next;
      for (const auto &prefix : tuples)
        for (const auto &value : universe.values) {
          next.push_back(prefix);
          next.back().push_back(value);
        }
      tuples = std::move(next);
    }
    for (auto &tuple : tuples)
      atoms.emplace_back(predicate.name, std::move(tuple));
  }
  return atoms;
}

asp::Term random_simple_term(std::mt19937 &rng, const std::vector<std::string> &variables) {
  switch (rng() % 5) {
  case 0:
    return asp::Term::numeral(static_cast<int>(rng() % 3));
  case 1:
  case 2:
    return asp::Term::variable(variables[rng() % variables.size()]);
  default: {
    auto op = rng() % 2 ? asp::BinaryOperator::Add : asp::BinaryOperator::Subtract;
    return asp::Term::binary(op, asp::Term::variable(variables[rng() % variables.size()]),
                             asp::Term::numeral(static_cast<int>(rng() % 2) + 1));
  }
  }
}

asp::Rule random_rule(std::mt19937 &rng) {
  std::vector<std::string> variables{"X", "Y"};
  asp::Rule rule;
  rule.head_kind = static_cast<asp::HeadKind>(rng() % 3);
  if (rule.head_kind != asp::HeadKind::Constraint)
    rule.head = asp::Atom{rng() % 2 ? "p" : "q", {random_simple_term(rng, variables)}};
  int body = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < body; ++i) {
    if (rng() % 4 == 0) {
      rule.body.push_back(asp::Comparison{static_cast<asp::Relation>(rng() % 6), random_simple_term(rng, variables),
                                          random_simple_term(rng, variables)});
    } else {
      rule.body.push_back(
          asp::Literal{static_cast<int>(rng() % 3), asp::Atom{rng() % 2 ? "p" : "q", {random_simple_term(rng, variables)}}});
    }
  }
  return rule;
}

} // namespace

TEST(NaturalProperties, HtEquivalentToTauStarOnCorpus) {
  oracle::Universe universe = oracle::Universe::make({0, 1, 2});
  for (const char *name : {"choice.1.lp", "successor.1.lp", "successor.2.lp"}) {
    asp::Program program = asp::parse_program(testing_support::read_corpus(name));
    auto atoms = all_atoms(asp::predicates(program), universe);
    for (const asp::Rule &rule : program.rules) {
      ASSERT_TRUE(translate::is_regular(rule)) << name;
      auto natural = ht_models({translate::natural(rule)}, atoms, universe, oracle::OutsideAtoms::ByPolarity);
      auto tau = ht_models({translate::tau_star(rule)}, atoms, universe, oracle::OutsideAtoms::ByPolarity);
      EXPECT_TRUE(natural == tau) << name << ": " << asp::format_rule(rule);
    }
  }
}

TEST(NaturalProperties, HtEquivalentToTauStarOnRandomRules) {
  std::mt19937 rng(11);
  oracle::Universe universe = oracle::Universe::make({0, 1, 2});
  auto atoms = all_atoms({{"p", 1}, {"q", 1}}, universe);
  int checked = 0;
  for (int round = 0; round < 400 && checked < 60; ++round) {
    asp::Rule rule = random_rule(rng);
    if (!translate::is_regular(rule))
      continue;
    ++checked;
    auto natural = ht_models({translate::natural(rule)}, atoms, universe, oracle::OutsideAtoms::ByPolarity);
    auto tau = ht_models({translate::tau_star(rule)}, atoms, universe, oracle::OutsideAtoms::ByPolarity);
    ASSERT_TRUE(natural == tau) << asp::format_rule(rule) << fol::format_default(translate::natural(rule)) << "\n"
                                << fol::format_default(translate::tau_star(rule));
  }
  EXPECT_GE(checked, 30);
}

// The HT models of tau-star coincide with those of the ground program.
TEST(TauStarProperties, HtModelsMatchGrounding) {
  oracle::Universe universe = oracle::Universe::make({0, 1, 2});
  std::mt19937 rng(5);
  for (int round = 0; round < 60; ++round) {
    asp::Program program{{random_rule(rng), random_rule(rng)}};
    if (rng() % 3 == 0)
      program.rules.push_back(asp::parse_program("p(X/2) :- q(X), X = 0..2.").rules[0]);
    oracle::GroundProgram grounded = oracle::ground(program, universe);
    for (const auto &atom : all_atoms({{"p", 1}, {"q", 1}}, universe))
      grounded.id(atom);
    fol::Theory theory = translate::tau_star(program);
    oracle::Mask all = (oracle::Mask{1} << grounded.atoms.size()) - 1;
    for (oracle::Mask there = all;; there = (there - 1) & all) {
      for (oracle::Mask here = there;; here = (here - 1) & there) {
        bool expected = true;
        for (const auto &rule : grounded.rules)
          expected = expected && oracle::ht(rule, here, there);
        bool actual = true;
        for (const auto &formula : theory.formulas)
          actual = actual && oracle::ht_holds(formula, grounded.interpretation(here), grounded.interpretation(there),
                                              universe);
        ASSERT_EQ(actual, expected) << asp::format_program(program);
        if (here == 0)
          break;
      }
      if (there == 0)
        break;
    }
  }
}
