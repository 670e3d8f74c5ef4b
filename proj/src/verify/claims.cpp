#include <anthem/error.hpp>
#include <anthem/fol/io.hpp>
#include <anthem/fol/operations.hpp>
#include <anthem/verify/verify.hpp>

#include <algorithm>

namespace anthem::verify {

using fol::Formula;
using fol::FormulaKind;
using fol::Term;
using fol::Variable;

std::string_view to_string(ClaimStatus status) {
  switch (status) {
  case ClaimStatus::Pending:
    return "pending";
  case ClaimStatus::Trivial:
    return "trivial";
  case ClaimStatus::Proven:
    return "proven";
  case ClaimStatus::NotProven:
    return "not proven";
  case ClaimStatus::Timeout:
    return "timeout";
  case ClaimStatus::Error:
    return "error";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
  case Verdict::Success:
    return "success";
  case Verdict::Failure:
    return "failure";
  case Verdict::Inconclusive:
    return "inconclusive";
  }
  return "?";
}

bool is_trivial(const Claim &claim) {
  if (claim.conjecture.kind() == FormulaKind::Truth)
    return true;
  Formula conjecture = fol::canonical_alpha(claim.conjecture);
  return std::any_of(claim.axioms.begin(), claim.axioms.end(), [&](const NamedFormula &axiom) {
    return fol::canonical_alpha(axiom.formula) == conjecture;
  });
}

std::pair<Formula, Formula> split_inductive_lemma(const Formula &formula) {
  Formula closed = fol::universal_closure(formula);
  std::vector<Variable> variables;
  const Formula *current = &closed;
  while (current->kind() == FormulaKind::Forall) {
    variables.insert(variables.end(), current->variables().begin(), current->variables().end());
    current = &current->child();
  }
  auto fail = [&]() -> ShapeError {
    return ShapeError("`" + fol::format_default(formula) + "` does not have the form `forall X N$ (N$ >= n -> F)`");
  };
  if (current->kind() != FormulaKind::Implies)
    throw fail();
  const Formula &guard = current->lhs();
  if (guard.kind() != FormulaKind::Comparison || guard.guards().size() != 1 ||
      guard.guards()[0].relation != fol::Relation::GreaterEqual)
    throw fail();
  const Term &induction = guard.terms()[0];
  const Term &start = guard.guards()[0].term;
  if (induction.kind() != fol::TermKind::Variable || induction.sort() != fol::Sort::Integer ||
      start.kind() != fol::TermKind::Numeral)
    throw fail();
  Variable n = induction.as_variable();
  auto position = std::find(variables.begin(), variables.end(), n);
  if (position == variables.end())
    throw fail();
  variables.erase(position);

  const Formula &body = current->rhs();
  Formula base = Formula::forall(variables, fol::substitute(body, n, start));
  Formula next = fol::substitute(body, n, Term::add(Term::variable(n), Term::numeral(1)));
  std::vector<Variable> step_variables = variables;
  step_variables.push_back(n);
  Formula step = Formula::forall(
      std::move(step_variables),
      Formula::implication(Formula::conjunction({guard, body}), std::move(next)));
  return {std::move(base), std::move(step)};
}

OutlineSequence sequence_outline(const control::ProofOutline &outline, const std::vector<NamedFormula> &base,
                                 Direction direction, const std::map<std::string, fol::Sort> &placeholders) {
  OutlineSequence sequence;
  sequence.axioms = base;
  for (const control::AnnotatedFormula &entry : outline.entries) {
    if (entry.direction != Direction::Universal && entry.direction != direction)
      continue;
    Formula formula = fol::universal_closure(fol::replace_placeholders(entry.formula, placeholders));

    auto claim = [&](std::string name, Formula conjecture) {
      Claim result;
      result.name = std::move(name);
      result.direction = direction;
      result.axioms = sequence.axioms;
      result.conjecture = std::move(conjecture);
      result.requires_claims = sequence.requirements;
      if (is_trivial(result))
        result.status = ClaimStatus::Trivial;
      sequence.claims.push_back(std::move(result));
    };

    switch (entry.role) {
    case control::Role::Lemma:
      claim(entry.name, formula);
      sequence.requirements.push_back(entry.name);
      break;
    case control::Role::InductiveLemma: {
      auto [base_case, step] = split_inductive_lemma(formula);
      claim(entry.name + "_base", std::move(base_case));
      claim(entry.name + "_step", std::move(step));
      sequence.requirements.push_back(entry.name + "_base");
      sequence.requirements.push_back(entry.name + "_step");
      break;
    }
    default:
      break;
    }
    sequence.axioms.push_back({entry.name, formula});
  }
  return sequence;
}

atp::Problem problem_for(const Task &task, const Claim &claim) {
  atp::Problem problem;
  problem.name = task.name + "_" + claim.name + "_" + std::string(control::to_string(claim.direction));
  problem.axioms = claim.axioms;
  problem.conjecture = {claim.name, claim.conjecture};
  return problem;
}

} // namespace anthem::verify
