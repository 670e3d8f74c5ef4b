#include <anthem/fol/operations.hpp>
#include <anthem/transform/transform.hpp>
#include <anthem/verify/verify.hpp>

namespace anthem::verify {

namespace {

fol::Theory represent(const asp::Program &program, translate::TranslationKind representation) {
  return representation == translate::TranslationKind::Mu ? translate::mu(program) : translate::tau_star(program);
}

std::vector<NamedFormula> named(const fol::Theory &theory, const std::string &prefix) {
  std::vector<NamedFormula> result;
  for (std::size_t i = 0; i < theory.formulas.size(); ++i)
    result.push_back({prefix + std::to_string(i + 1), theory.formulas[i]});
  return result;
}

} // namespace

Task assemble_strong_equivalence(const asp::Program &left, const asp::Program &right,
                                 translate::TranslationKind representation, Direction direction) {
  PredicateSet predicates = asp::predicates(left);
  PredicateSet right_predicates = asp::predicates(right);
  predicates.insert(right_predicates.begin(), right_predicates.end());

  transform::HereThereNaming naming(predicates);
  Task task;
  task.name = "strong";
  task.warnings = naming.warnings();

  fol::Theory left_theory = transform::gamma(represent(left, representation), naming);
  fol::Theory right_theory = transform::gamma(represent(right, representation), naming);
  std::vector<NamedFormula> ordering = named(transform::ordering_axioms(naming), "ordering_");

  auto emit = [&](Direction claim_direction, const fol::Theory &premises, const std::string &premise_prefix,
                  const fol::Theory &goals, const std::string &goal_prefix) {
    if (direction != Direction::Universal && direction != claim_direction)
      return;
    std::vector<NamedFormula> axioms = ordering;
    for (NamedFormula &formula : named(premises, premise_prefix))
      axioms.push_back(std::move(formula));
    for (std::size_t i = 0; i < goals.formulas.size(); ++i) {
      Claim claim;
      claim.name = goal_prefix + std::to_string(i + 1);
      claim.direction = claim_direction;
      claim.axioms = axioms;
      claim.conjecture = goals.formulas[i];
      if (is_trivial(claim))
        claim.status = ClaimStatus::Trivial;
      task.claims.push_back(std::move(claim));
    }
  };

  emit(Direction::Forward, left_theory, "left_", right_theory, "right_");
  emit(Direction::Backward, right_theory, "right_", left_theory, "left_");
  return task;
}

} // namespace anthem::verify
