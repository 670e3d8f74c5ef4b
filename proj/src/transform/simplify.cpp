#include <anthem/fol/operations.hpp>
#include <anthem/transform/transform.hpp>

namespace anthem::transform {

namespace {

using fol::Formula;
using fol::FormulaKind;

Formula simplify_once(const Formula &formula) {
  std::vector<Formula> children;
  for (const Formula &child : formula.children())
    children.push_back(simplify_once(child));

  switch (formula.kind()) {
  case FormulaKind::And:
  case FormulaKind::Or: {
    bool conjunction = formula.kind() == FormulaKind::And;
    FormulaKind neutral = conjunction ? FormulaKind::Truth : FormulaKind::Falsity;
    FormulaKind absorbing = conjunction ? FormulaKind::Falsity : FormulaKind::Truth;
    std::vector<Formula> kept;
    for (Formula &child : children) {
      if (child.kind() == absorbing)
        return child;
      if (child.kind() != neutral)
        kept.push_back(std::move(child));
    }
    if (kept.size() == children.size())
      return formula.with_children(std::move(kept));
    return conjunction ? Formula::conjunction(std::move(kept)) : Formula::disjunction(std::move(kept));
  }
  case FormulaKind::Forall:
  case FormulaKind::Exists: {
    fol::VariableSet used = fol::free_variables(children.front());
    std::vector<fol::Variable> variables;
    for (const fol::Variable &variable : formula.variables())
      if (used.contains(variable))
        variables.push_back(variable);
    return Formula::quantified(formula.kind() == FormulaKind::Forall ? fol::Quantifier::Forall
                                                                      : fol::Quantifier::Exists,
                               std::move(variables), std::move(children.front()));
  }
  default:
    return formula.with_children(std::move(children));
  }
}

} // namespace

Formula simplify(const Formula &formula) {
  Formula current = formula;
  while (true) {
    Formula next = simplify_once(current);
    if (next == current)
      return current;
    current = std::move(next);
  }
}

fol::Theory simplify(const fol::Theory &theory) {
  fol::Theory result;
  for (const Formula &formula : theory.formulas)
    result.formulas.push_back(simplify(formula));
  return result;
}

} // namespace anthem::transform
