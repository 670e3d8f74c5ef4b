#include <anthem/error.hpp>
#include <anthem/translate/translate.hpp>

#include <variant>

namespace anthem::translate {

namespace {

using fol::Formula;
using fol::Sort;
using fol::Term;
using fol::Variable;

bool is_interval(const asp::Term &term) {
  return term.kind == asp::Term::Kind::Binary && term.binary_op == asp::BinaryOperator::Interval;
}

bool is_arithmetic(const asp::Term &term) { return term.kind == asp::Term::Kind::Unary || term.kind == asp::Term::Kind::Binary; }

// Operands of arithmetic must be numerals, variables or arithmetic themselves;
// division, modulo, absolute value and intervals are excluded.
bool regular_arithmetic(const asp::Term &term) {
  switch (term.kind) {
  case asp::Term::Kind::Numeral:
  case asp::Term::Kind::Variable:
    return true;
  case asp::Term::Kind::Unary:
    return term.unary_op == asp::UnaryOperator::Negative && regular_arithmetic(term.args[0]);
  case asp::Term::Kind::Binary:
    if (term.binary_op != asp::BinaryOperator::Add && term.binary_op != asp::BinaryOperator::Subtract &&
        term.binary_op != asp::BinaryOperator::Multiply)
      return false;
    return regular_arithmetic(term.lhs()) && regular_arithmetic(term.rhs());
  default:
    return false;
  }
}

bool regular_term(const asp::Term &term) { return !is_arithmetic(term) || regular_arithmetic(term); }

bool regular_interval_comparison(const asp::Comparison &comparison) {
  return comparison.relation == asp::Relation::Equal && comparison.lhs.kind == asp::Term::Kind::Variable &&
         is_interval(comparison.rhs) && regular_arithmetic(comparison.rhs.lhs()) &&
         regular_arithmetic(comparison.rhs.rhs());
}

void collect_arithmetic_variables(const asp::Term &term, bool in_arithmetic, std::set<std::string> &out) {
  if (term.kind == asp::Term::Kind::Variable && in_arithmetic)
    out.insert(term.name);
  for (const asp::Term &arg : term.args)
    collect_arithmetic_variables(arg, in_arithmetic || is_arithmetic(term), out);
}

std::set<std::string> integer_variables(const asp::Rule &rule) {
  std::set<std::string> result;
  if (rule.head)
    for (const asp::Term &term : rule.head->terms)
      collect_arithmetic_variables(term, false, result);
  for (const asp::BodyLiteral &body_literal : rule.body) {
    if (const auto *lit = std::get_if<asp::Literal>(&body_literal)) {
      for (const asp::Term &term : lit->atom.terms)
        collect_arithmetic_variables(term, false, result);
    } else {
      const auto &comparison = std::get<asp::Comparison>(body_literal);
      if (regular_interval_comparison(comparison))
        result.insert(comparison.lhs.name);
      collect_arithmetic_variables(comparison.lhs, false, result);
      collect_arithmetic_variables(comparison.rhs, false, result);
    }
  }
  return result;
}

class NaturalTranslator {
public:
  explicit NaturalTranslator(const asp::Rule &rule) : integers_(integer_variables(rule)) {}

  Term term(const asp::Term &t) const {
    switch (t.kind) {
    case asp::Term::Kind::Numeral:
      return Term::numeral(t.value);
    case asp::Term::Kind::SymbolicConstant:
      return Term::symbol(t.name);
    case asp::Term::Kind::Infimum:
      return Term::infimum();
    case asp::Term::Kind::Supremum:
      return Term::supremum();
    case asp::Term::Kind::Variable:
      return Term::variable(t.name, integers_.contains(t.name) ? Sort::Integer : Sort::General);
    case asp::Term::Kind::Unary:
      return Term::negative(term(t.args[0]));
    case asp::Term::Kind::Binary:
      switch (t.binary_op) {
      case asp::BinaryOperator::Add:
        return Term::add(term(t.lhs()), term(t.rhs()));
      case asp::BinaryOperator::Subtract:
        return Term::subtract(term(t.lhs()), term(t.rhs()));
      case asp::BinaryOperator::Multiply:
        return Term::multiply(term(t.lhs()), term(t.rhs()));
      default:
        break;
      }
    }
    throw NotRegular("term `" + asp::format_term(t) + "` has no natural translation");
  }

  Formula atom(const asp::Atom &a) const {
    std::vector<Term> args;
    for (const asp::Term &t : a.terms)
      args.push_back(term(t));
    return Formula::atom(a.predicate_name, std::move(args));
  }

  Formula body_literal(const asp::BodyLiteral &body_literal) const {
    if (const auto *lit = std::get_if<asp::Literal>(&body_literal)) {
      Formula result = atom(lit->atom);
      for (int i = 0; i < lit->negations; ++i)
        result = Formula::negation(std::move(result));
      return result;
    }
    const auto &comparison = std::get<asp::Comparison>(body_literal);
    if (is_interval(comparison.rhs))
      return Formula::comparison(term(comparison.rhs.lhs()),
                                 {fol::Guard{fol::Relation::LessEqual, term(comparison.lhs)},
                                  fol::Guard{fol::Relation::LessEqual, term(comparison.rhs.rhs())}});
    static const fol::Relation relations[] = {fol::Relation::Equal,     fol::Relation::NotEqual,
                                              fol::Relation::Less,      fol::Relation::LessEqual,
                                              fol::Relation::Greater,   fol::Relation::GreaterEqual};
    return Formula::comparison(term(comparison.lhs), relations[static_cast<int>(comparison.relation)],
                               term(comparison.rhs));
  }

  Sort sort_of(const std::string &name) const { return integers_.contains(name) ? Sort::Integer : Sort::General; }

private:
  std::set<std::string> integers_;
};

} // namespace

bool is_regular(const asp::Rule &rule) {
  if (rule.head)
    for (const asp::Term &term : rule.head->terms)
      if (!regular_term(term))
        return false;
  for (const asp::BodyLiteral &body_literal : rule.body) {
    if (const auto *lit = std::get_if<asp::Literal>(&body_literal)) {
      for (const asp::Term &term : lit->atom.terms)
        if (!regular_term(term))
          return false;
    } else {
      const auto &comparison = std::get<asp::Comparison>(body_literal);
      if (regular_interval_comparison(comparison))
        continue;
      if (!regular_term(comparison.lhs) || !regular_term(comparison.rhs))
        return false;
    }
  }
  return true;
}

Formula natural(const asp::Rule &rule) {
  if (!is_regular(rule))
    throw NotRegular("rule `" + asp::format_rule(rule) + "` is not regular");
  NaturalTranslator translator(rule);

  std::vector<Formula> antecedent;
  for (const asp::BodyLiteral &body_literal : rule.body)
    antecedent.push_back(translator.body_literal(body_literal));

  Formula consequent = rule.head ? translator.atom(*rule.head) : Formula::falsity();
  if (rule.head_kind == asp::HeadKind::Choice)
    antecedent.push_back(Formula::negation(Formula::negation(consequent)));

  std::vector<Variable> variables;
  for (const std::string &name : asp::variables(rule))
    variables.push_back(Variable{name, translator.sort_of(name)});

  return Formula::forall(std::move(variables),
                         Formula::implication(Formula::conjunction(std::move(antecedent)), std::move(consequent)));
}

fol::Theory natural(const asp::Program &program) {
  fol::Theory theory;
  for (const asp::Rule &rule : program.rules)
    theory.formulas.push_back(natural(rule));
  return theory;
}

fol::Theory mu(const asp::Program &program) {
  fol::Theory theory;
  for (const asp::Rule &rule : program.rules)
    theory.formulas.push_back(is_regular(rule) ? natural(rule) : tau_star(rule));
  return theory;
}

} // namespace anthem::translate
