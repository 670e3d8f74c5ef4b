#include <anthem/error.hpp>
#include <anthem/fol/operations.hpp>
#include <anthem/translate/translate.hpp>

#include <variant>

namespace anthem::translate {

namespace {

using fol::Formula;
using fol::Sort;
using fol::Term;
using fol::Variable;

Variable fresh(const std::string &prefix, Sort sort, std::set<std::string> &taken, bool numbered_only = false) {
  Variable variable{fol::fresh_name(prefix, taken, numbered_only), sort};
  taken.insert(variable.name);
  return variable;
}

Term var(const Variable &variable) { return Term::variable(variable); }

Formula equals(const Variable &z, Term term) { return Formula::comparison(var(z), fol::Relation::Equal, std::move(term)); }

Term primitive(const asp::Term &term) {
  switch (term.kind) {
  case asp::Term::Kind::Numeral:
    return Term::numeral(term.value);
  case asp::Term::Kind::SymbolicConstant:
    return Term::symbol(term.name);
  case asp::Term::Kind::Infimum:
    return Term::infimum();
  case asp::Term::Kind::Supremum:
    return Term::supremum();
  case asp::Term::Kind::Variable:
    return Term::variable(term.name, Sort::General);
  default:
    throw UnsupportedFeature("compound term `" + asp::format_term(term) + "` is not primitive");
  }
}

fol::Relation convert(asp::Relation relation) {
  switch (relation) {
  case asp::Relation::Equal:
    return fol::Relation::Equal;
  case asp::Relation::NotEqual:
    return fol::Relation::NotEqual;
  case asp::Relation::Less:
    return fol::Relation::Less;
  case asp::Relation::LessEqual:
    return fol::Relation::LessEqual;
  case asp::Relation::Greater:
    return fol::Relation::Greater;
  case asp::Relation::GreaterEqual:
    return fol::Relation::GreaterEqual;
  }
  return fol::Relation::Equal;
}

Formula negate(Formula formula, int negations) {
  for (int i = 0; i < negations; ++i)
    formula = Formula::negation(std::move(formula));
  return formula;
}

Formula literal(const asp::Literal &literal, std::set<std::string> taken) {
  const asp::Atom &atom = literal.atom;
  if (atom.terms.empty())
    return negate(Formula::atom(atom.predicate_name), literal.negations);

  std::vector<Variable> zs;
  for (std::size_t i = 0; i < atom.terms.size(); ++i)
    zs.push_back(fresh("Z", Sort::General, taken));
  std::vector<Formula> parts;
  std::vector<Term> args;
  for (std::size_t i = 0; i < atom.terms.size(); ++i) {
    parts.push_back(val(atom.terms[i], zs[i], taken));
    args.push_back(var(zs[i]));
  }
  parts.push_back(negate(Formula::atom(atom.predicate_name, std::move(args)), literal.negations));
  return Formula::exists(std::move(zs), Formula::conjunction(std::move(parts)));
}

Formula comparison(const asp::Comparison &comparison, std::set<std::string> taken) {
  Variable z = fresh("Z", Sort::General, taken);
  Variable z1 = fresh("Z", Sort::General, taken);
  std::vector<Formula> parts;
  parts.push_back(val(comparison.lhs, z, taken));
  parts.push_back(val(comparison.rhs, z1, taken));
  parts.push_back(Formula::comparison(var(z), convert(comparison.relation), var(z1)));
  return Formula::exists({z, z1}, Formula::conjunction(std::move(parts)));
}

} // namespace

Formula val(const asp::Term &term, const Variable &z, const std::set<std::string> &taken_in) {
  std::set<std::string> taken = taken_in;
  taken.insert(z.name);
  if (term.kind != asp::Term::Kind::Unary && term.kind != asp::Term::Kind::Binary)
    return equals(z, primitive(term));

  if (term.kind == asp::Term::Kind::Unary) {
    Variable i = fresh("I", Sort::Integer, taken);
    if (term.unary_op == asp::UnaryOperator::Negative)
      return Formula::exists({i}, Formula::conjunction({equals(z, Term::negative(var(i))), val(term.args[0], i, taken)}));
    Formula positive = Formula::conjunction(
        {Formula::comparison(var(i), fol::Relation::GreaterEqual, Term::numeral(0)), equals(z, var(i))});
    Formula negative = Formula::conjunction(
        {Formula::comparison(var(i), fol::Relation::Less, Term::numeral(0)), equals(z, Term::negative(var(i)))});
    return Formula::exists(
        {i}, Formula::conjunction({val(term.args[0], i, taken), Formula::disjunction({positive, negative})}));
  }

  switch (term.binary_op) {
  case asp::BinaryOperator::Add:
  case asp::BinaryOperator::Subtract:
  case asp::BinaryOperator::Multiply: {
    Variable i = fresh("I", Sort::Integer, taken);
    Variable j = fresh("J", Sort::Integer, taken);
    fol::TermKind kind = term.binary_op == asp::BinaryOperator::Add        ? fol::TermKind::Add
                         : term.binary_op == asp::BinaryOperator::Subtract ? fol::TermKind::Subtract
                                                                           : fol::TermKind::Multiply;
    return Formula::exists({i, j}, Formula::conjunction({equals(z, Term::arithmetic(kind, var(i), var(j))),
                                                         val(term.lhs(), i, taken), val(term.rhs(), j, taken)}));
  }
  case asp::BinaryOperator::Divide:
  case asp::BinaryOperator::Modulo: {
    Variable i = fresh("I", Sort::Integer, taken);
    Variable j = fresh("J", Sort::Integer, taken);
    Variable q = fresh("Q", Sort::Integer, taken);
    Variable r = fresh("R", Sort::Integer, taken);
    Formula decomposition = equals(i, Term::add(Term::multiply(var(j), var(q)), var(r)));
    Formula operands =
        Formula::connective(fol::FormulaKind::And, {val(term.lhs(), i, taken), val(term.rhs(), j, taken)});
    Formula bounds = Formula::connective(
        fol::FormulaKind::And, {Formula::comparison(var(j), fol::Relation::NotEqual, Term::numeral(0)),
                                Formula::comparison(var(r), fol::Relation::GreaterEqual, Term::numeral(0)),
                                Formula::comparison(var(r), fol::Relation::Less, var(j))});
    Formula result = equals(z, var(term.binary_op == asp::BinaryOperator::Divide ? q : r));
    return Formula::exists({i, j, q, r}, Formula::connective(fol::FormulaKind::And,
                                                             {decomposition, operands, bounds, result}));
  }
  case asp::BinaryOperator::Interval: {
    Variable i = fresh("I", Sort::Integer, taken);
    Variable j = fresh("J", Sort::Integer, taken);
    Variable k = fresh("K", Sort::Integer, taken);
    Formula range = Formula::comparison(
        var(i), {fol::Guard{fol::Relation::LessEqual, var(k)}, fol::Guard{fol::Relation::LessEqual, var(j)}});
    return Formula::exists({i, j, k}, Formula::conjunction({val(term.lhs(), i, taken), val(term.rhs(), j, taken),
                                                            range, equals(z, var(k))}));
  }
  }
  return Formula::truth();
}

Formula tau_star(const asp::Rule &rule) {
  std::set<std::string> taken = asp::variables(rule);
  std::vector<Variable> head_variables;
  std::vector<Formula> antecedent;
  Formula consequent = Formula::falsity();

  if (rule.head) {
    std::vector<Term> args;
    for (std::size_t i = 0; i < rule.head->terms.size(); ++i) {
      head_variables.push_back(fresh("V", Sort::General, taken, true));
      args.push_back(var(head_variables.back()));
    }
    consequent = Formula::atom(rule.head->predicate_name, std::move(args));
    for (std::size_t i = 0; i < head_variables.size(); ++i)
      antecedent.push_back(val(rule.head->terms[i], head_variables[i], taken));
  }

  for (const asp::BodyLiteral &body_literal : rule.body) {
    if (const auto *lit = std::get_if<asp::Literal>(&body_literal))
      antecedent.push_back(literal(*lit, taken));
    else
      antecedent.push_back(comparison(std::get<asp::Comparison>(body_literal), taken));
  }

  if (rule.head_kind == asp::HeadKind::Choice)
    antecedent.push_back(Formula::negation(Formula::negation(consequent)));

  std::vector<Variable> variables = head_variables;
  for (const std::string &name : asp::variables(rule))
    variables.push_back(Variable{name, Sort::General});

  return Formula::forall(std::move(variables),
                         Formula::implication(Formula::conjunction(std::move(antecedent)), std::move(consequent)));
}

fol::Theory tau_star(const asp::Program &program) {
  fol::Theory theory;
  for (const asp::Rule &rule : program.rules)
    theory.formulas.push_back(tau_star(rule));
  return theory;
}

std::string_view to_string(TranslationKind kind) {
  switch (kind) {
  case TranslationKind::TauStar:
    return "tau-star";
  case TranslationKind::Natural:
    return "natural";
  case TranslationKind::Mu:
    return "mu";
  case TranslationKind::Completion:
    return "completion";
  case TranslationKind::Gamma:
    return "gamma";
  }
  return "?";
}

std::optional<TranslationKind> parse_translation_kind(std::string_view text) {
  for (TranslationKind kind : {TranslationKind::TauStar, TranslationKind::Natural, TranslationKind::Mu,
                               TranslationKind::Completion, TranslationKind::Gamma})
    if (to_string(kind) == text)
      return kind;
  return std::nullopt;
}

} // namespace anthem::translate
