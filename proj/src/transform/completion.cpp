#include <anthem/error.hpp>
#include <anthem/fol/io.hpp>
#include <anthem/fol/operations.hpp>
#include <anthem/transform/transform.hpp>

#include <algorithm>
#include <optional>

namespace anthem::transform {

namespace {

using fol::Formula;
using fol::FormulaKind;
using fol::Term;
using fol::Variable;

struct RuleShape {
  std::vector<Variable> variables;
  Formula antecedent;
  std::optional<Formula> head; // empty for constraints
};

std::optional<RuleShape> decompose(const Formula &formula) {
  if (!fol::free_variables(formula).empty())
    return std::nullopt;
  RuleShape shape;
  const Formula *current = &formula;
  while (current->kind() == FormulaKind::Forall) {
    for (const Variable &variable : current->variables())
      shape.variables.push_back(variable);
    current = &current->child();
  }
  if (current->kind() != FormulaKind::Implies)
    return std::nullopt;
  shape.antecedent = current->lhs();
  const Formula &consequent = current->rhs();
  if (consequent.kind() == FormulaKind::Falsity)
    return shape;
  if (consequent.kind() != FormulaKind::Atom)
    return std::nullopt;

  std::vector<Variable> seen;
  for (const Term &term : consequent.terms()) {
    if (term.kind() != fol::TermKind::Variable || term.sort() != fol::Sort::General)
      return std::nullopt;
    Variable variable = term.as_variable();
    if (std::find(seen.begin(), seen.end(), variable) != seen.end())
      return std::nullopt;
    seen.push_back(variable);
  }
  shape.head = consequent;
  return shape;
}

void collect_occurrences(const Formula &formula, std::vector<Predicate> &order, PredicateSet &seen) {
  if (formula.kind() == FormulaKind::Atom && seen.insert(formula.predicate()).second)
    order.push_back(formula.predicate());
  for (const Formula &child : formula.children())
    collect_occurrences(child, order, seen);
}

std::vector<Variable> definition_variables(std::size_t arity) {
  std::vector<Variable> variables;
  for (std::size_t i = 1; i <= arity; ++i)
    variables.push_back({"V" + std::to_string(i), fol::Sort::General});
  return variables;
}

// Body of one rule as a disjunct over the definition variables V1, ..., Vk.
Formula disjunct(const RuleShape &shape, const std::vector<Variable> &targets) {
  const auto &head_terms = shape.head->terms();
  std::vector<Variable> head_variables;
  for (const Term &term : head_terms)
    head_variables.push_back(term.as_variable());

  std::set<std::string> taken = fol::variable_names(shape.antecedent);
  for (const Variable &variable : shape.variables)
    taken.insert(variable.name);
  for (const Variable &target : targets)
    taken.insert(target.name);

  Formula body = shape.antecedent;
  std::vector<Variable> existential;
  for (const Variable &variable : shape.variables) {
    if (std::find(head_variables.begin(), head_variables.end(), variable) != head_variables.end())
      continue;
    Variable renamed = variable;
    if (std::any_of(targets.begin(), targets.end(), [&](const Variable &t) { return t.name == variable.name; })) {
      renamed.name = fol::fresh_name(variable.name, taken, true);
      taken.insert(renamed.name);
      body = fol::substitute(body, variable, Term::variable(renamed));
    }
    existential.push_back(renamed);
  }

  // Two passes so that permuted head variables are not captured by each other.
  std::vector<Variable> temporaries;
  for (const Variable &variable : head_variables) {
    Variable temporary{fol::fresh_name(variable.name + "_", taken, true), variable.sort};
    taken.insert(temporary.name);
    body = fol::substitute(body, variable, Term::variable(temporary));
    temporaries.push_back(temporary);
  }
  for (std::size_t i = 0; i < temporaries.size(); ++i)
    body = fol::substitute(body, temporaries[i], Term::variable(targets[i]));

  return Formula::exists(std::move(existential), body);
}

} // namespace

bool is_completable(const fol::Theory &theory) {
  return std::all_of(theory.formulas.begin(), theory.formulas.end(),
                     [](const Formula &formula) { return decompose(formula).has_value(); });
}

CompletionParts complete(const fol::Theory &theory, const PredicateSet &inputs) {
  std::vector<RuleShape> shapes;
  for (const Formula &formula : theory.formulas) {
    auto shape = decompose(formula);
    if (!shape)
      throw NotCompletable("formula `" + fol::format_default(formula) + "` is not completable");
    if (shape->head && inputs.contains(shape->head->predicate()))
      throw ValidationError("input predicate " + shape->head->predicate().str() + " occurs in a rule head");
    shapes.push_back(std::move(*shape));
  }

  std::vector<Predicate> order;
  PredicateSet seen;
  for (const RuleShape &shape : shapes)
    if (shape.head && seen.insert(shape.head->predicate()).second)
      order.push_back(shape.head->predicate());
  for (const Formula &formula : theory.formulas)
    collect_occurrences(formula, order, seen);

  CompletionParts parts;
  for (const Predicate &predicate : order) {
    if (inputs.contains(predicate))
      continue;
    std::vector<Variable> targets = definition_variables(predicate.arity);
    std::vector<Formula> disjuncts;
    for (const RuleShape &shape : shapes)
      if (shape.head && shape.head->predicate() == predicate)
        disjuncts.push_back(disjunct(shape, targets));
    std::vector<Term> args;
    for (const Variable &target : targets)
      args.push_back(Term::variable(target));
    Formula definition = Formula::equivalence(Formula::atom(predicate.name, std::move(args)),
                                              Formula::disjunction(std::move(disjuncts)));
    parts.definitions.emplace_back(predicate, Formula::forall(std::move(targets), std::move(definition)));
  }

  for (const RuleShape &shape : shapes)
    if (!shape.head)
      parts.constraints.push_back(Formula::forall(shape.variables, Formula::negation(shape.antecedent)));
  return parts;
}

fol::Theory completion(const fol::Theory &theory, const PredicateSet &inputs) {
  CompletionParts parts = complete(theory, inputs);
  fol::Theory result;
  for (auto &[predicate, definition] : parts.definitions)
    result.formulas.push_back(std::move(definition));
  for (Formula &constraint : parts.constraints)
    result.formulas.push_back(std::move(constraint));
  return result;
}

} // namespace anthem::transform
