#include <anthem/error.hpp>
#include <anthem/fol/syntax.hpp>

namespace anthem::fol {

std::string_view to_string(Sort sort) {
  switch (sort) {
  case Sort::General:
    return "general";
  case Sort::Integer:
    return "integer";
  case Sort::Symbol:
    return "symbol";
  }
  return "?";
}

std::string_view to_string(Relation relation) {
  switch (relation) {
  case Relation::Equal:
    return "=";
  case Relation::NotEqual:
    return "!=";
  case Relation::Less:
    return "<";
  case Relation::LessEqual:
    return "<=";
  case Relation::Greater:
    return ">";
  case Relation::GreaterEqual:
    return ">=";
  }
  return "?";
}

Term Term::numeral(std::int64_t value) {
  Term term;
  term.kind_ = TermKind::Numeral;
  term.value_ = value;
  return term;
}

Term Term::symbol(std::string name) {
  Term term;
  term.kind_ = TermKind::SymbolicConstant;
  term.name_ = std::move(name);
  return term;
}

Term Term::infimum() {
  Term term;
  term.kind_ = TermKind::Infimum;
  return term;
}

Term Term::supremum() {
  Term term;
  term.kind_ = TermKind::Supremum;
  return term;
}

Term Term::variable(Variable variable) { return Term::variable(std::move(variable.name), variable.sort); }

Term Term::variable(std::string name, Sort sort) {
  Term term;
  term.kind_ = TermKind::Variable;
  term.name_ = std::move(name);
  term.sort_ = sort;
  return term;
}

Term Term::function_constant(std::string name, Sort sort) {
  Term term;
  term.kind_ = TermKind::FunctionConstant;
  term.name_ = std::move(name);
  term.sort_ = sort;
  return term;
}

namespace {

void require_integer(const Term &term, std::string_view context) {
  if (term.sort() != Sort::Integer)
    throw SortError("operand of " + std::string(context) + " must be of sort integer, found " +
                    std::string(to_string(term.sort())) + " term" +
                    (term.name().empty() ? std::string() : " `" + term.name() + "`"));
}

} // namespace

Term Term::negative(Term arg) {
  require_integer(arg, "unary minus");
  Term term;
  term.kind_ = TermKind::Negative;
  term.args_.push_back(std::move(arg));
  return term;
}

Term Term::arithmetic(TermKind kind, Term lhs, Term rhs) {
  std::string_view context = kind == TermKind::Add        ? "addition"
                             : kind == TermKind::Subtract ? "subtraction"
                                                          : "multiplication";
  require_integer(lhs, context);
  require_integer(rhs, context);
  Term term;
  term.kind_ = kind;
  term.args_.push_back(std::move(lhs));
  term.args_.push_back(std::move(rhs));
  return term;
}

Term Term::add(Term lhs, Term rhs) { return arithmetic(TermKind::Add, std::move(lhs), std::move(rhs)); }
Term Term::subtract(Term lhs, Term rhs) {
  return arithmetic(TermKind::Subtract, std::move(lhs), std::move(rhs));
}
Term Term::multiply(Term lhs, Term rhs) {
  return arithmetic(TermKind::Multiply, std::move(lhs), std::move(rhs));
}

Sort Term::sort() const {
  switch (kind_) {
  case TermKind::Numeral:
  case TermKind::Negative:
  case TermKind::Add:
  case TermKind::Subtract:
  case TermKind::Multiply:
    return Sort::Integer;
  case TermKind::SymbolicConstant:
    return Sort::Symbol;
  case TermKind::Infimum:
  case TermKind::Supremum:
    return Sort::General;
  case TermKind::Variable:
  case TermKind::FunctionConstant:
    return sort_;
  }
  return Sort::General;
}

bool Term::is_arithmetic() const {
  return kind_ == TermKind::Negative || kind_ == TermKind::Add || kind_ == TermKind::Subtract ||
         kind_ == TermKind::Multiply;
}

Term Term::with_args(std::vector<Term> args) const {
  if (kind_ == TermKind::Negative)
    return negative(std::move(args.at(0)));
  return arithmetic(kind_, std::move(args.at(0)), std::move(args.at(1)));
}

Formula Formula::truth() { return Formula(); }

Formula Formula::falsity() {
  Formula formula;
  formula.kind_ = FormulaKind::Falsity;
  return formula;
}

Formula Formula::atom(std::string predicate, std::vector<Term> terms) {
  Formula formula;
  formula.kind_ = FormulaKind::Atom;
  formula.name_ = std::move(predicate);
  formula.terms_ = std::move(terms);
  return formula;
}

Formula Formula::comparison(Term lhs, Relation relation, Term rhs) {
  return comparison(std::move(lhs), {Guard{relation, std::move(rhs)}});
}

Formula Formula::comparison(Term first, std::vector<Guard> guards) {
  Formula formula;
  formula.kind_ = FormulaKind::Comparison;
  formula.terms_.push_back(std::move(first));
  formula.guards_ = std::move(guards);
  return formula;
}

Formula Formula::negation(Formula body) {
  Formula formula;
  formula.kind_ = FormulaKind::Not;
  formula.children_.push_back(std::move(body));
  return formula;
}

Formula Formula::connective(FormulaKind kind, std::vector<Formula> children) {
  Formula formula;
  formula.kind_ = kind;
  formula.children_ = std::move(children);
  return formula;
}

Formula Formula::conjunction(std::vector<Formula> children) {
  if (children.empty())
    return truth();
  if (children.size() == 1)
    return std::move(children.front());
  return connective(FormulaKind::And, std::move(children));
}

Formula Formula::disjunction(std::vector<Formula> children) {
  if (children.empty())
    return falsity();
  if (children.size() == 1)
    return std::move(children.front());
  return connective(FormulaKind::Or, std::move(children));
}

Formula Formula::implication(Formula antecedent, Formula consequent) {
  Formula formula;
  formula.kind_ = FormulaKind::Implies;
  formula.children_.push_back(std::move(antecedent));
  formula.children_.push_back(std::move(consequent));
  return formula;
}

Formula Formula::equivalence(Formula lhs, Formula rhs) {
  Formula formula;
  formula.kind_ = FormulaKind::Iff;
  formula.children_.push_back(std::move(lhs));
  formula.children_.push_back(std::move(rhs));
  return formula;
}

Formula Formula::quantified(Quantifier quantifier, std::vector<Variable> variables, Formula body) {
  if (variables.empty())
    return body;
  Formula formula;
  formula.kind_ = quantifier == Quantifier::Forall ? FormulaKind::Forall : FormulaKind::Exists;
  formula.variables_ = std::move(variables);
  formula.children_.push_back(std::move(body));
  return formula;
}

bool Formula::is_atomic() const {
  return kind_ == FormulaKind::Truth || kind_ == FormulaKind::Falsity || kind_ == FormulaKind::Atom ||
         kind_ == FormulaKind::Comparison;
}

Formula Formula::with_children(std::vector<Formula> children) const {
  Formula formula = *this;
  formula.children_ = std::move(children);
  return formula;
}

Formula Formula::with_variables(std::vector<Variable> variables) const {
  Formula formula = *this;
  formula.variables_ = std::move(variables);
  return formula;
}

Formula Formula::with_predicate_name(std::string name) const {
  Formula formula = *this;
  formula.name_ = std::move(name);
  return formula;
}

Formula Formula::with_terms(std::vector<Term> terms) const {
  Formula formula = *this;
  formula.terms_ = std::move(terms);
  return formula;
}

Formula Formula::with_guards(std::vector<Guard> guards) const {
  Formula formula = *this;
  formula.guards_ = std::move(guards);
  return formula;
}

} // namespace anthem::fol
