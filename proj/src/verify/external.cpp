#include <anthem/analyze/analyze.hpp>
#include <anthem/error.hpp>
#include <anthem/fol/io.hpp>
#include <anthem/fol/operations.hpp>
#include <anthem/transform/transform.hpp>
#include <anthem/verify/verify.hpp>

namespace anthem::verify {

namespace {

using fol::Formula;

std::string formula_name(const std::string &prefix, const Predicate &predicate) {
  return prefix + predicate.name + "_" + std::to_string(predicate.arity);
}

Formula undefined(const Predicate &predicate) {
  std::vector<fol::Variable> variables;
  std::vector<fol::Term> args;
  for (std::size_t i = 1; i <= predicate.arity; ++i) {
    variables.push_back({"V" + std::to_string(i), fol::Sort::General});
    args.push_back(fol::Term::variable(variables.back()));
  }
  return Formula::forall(std::move(variables),
                         Formula::equivalence(Formula::atom(predicate.name, std::move(args)), Formula::falsity()));
}

std::string qualified(const std::string &label, const std::string &name) {
  return name.starts_with('_') ? label + name : label + "_" + name;
}

struct SideTheory {
  std::vector<NamedFormula> assumptions;
  std::vector<NamedFormula> private_part;
  std::vector<NamedFormula> public_part;
};

void check_program(const asp::Program &program, const std::string &label, const control::UserGuide &guide,
                   bool bypass) {
  if (bypass)
    return;
  analyze::AnalysisReport tightness = analyze::check_tightness(program);
  if (!tightness.verdict)
    throw RefusedNotTight("the " + label + " program is not tight", tightness.witness);
  PredicateSet public_predicates = guide.inputs();
  for (const Predicate &output : guide.output_predicates)
    public_predicates.insert(output);
  analyze::AnalysisReport recursion = analyze::check_private_recursion(program, public_predicates);
  if (!recursion.verdict)
    throw RefusedPrivateRecursion("the " + label + " program has private recursion", recursion.witness);
}

fol::Theory program_theory(const asp::Program &program, const std::map<std::string, fol::Sort> &placeholders) {
  fol::Theory theory = translate::tau_star(program);
  for (Formula &formula : theory.formulas)
    formula = fol::replace_placeholders(formula, placeholders);
  return theory;
}

SideTheory program_side(const asp::Program &program, const std::string &label, const control::UserGuide &guide,
                        PredicateSet &taken) {
  auto placeholders = guide.placeholder_sorts();
  auto [renamed, renaming] = rename_private_predicates(program_theory(program, placeholders), guide, taken);
  transform::CompletionParts parts = transform::complete(renamed, guide.inputs());

  PredicateSet outputs = guide.outputs();
  SideTheory side;
  PredicateSet defined;
  for (auto &[predicate, definition] : parts.definitions) {
    defined.insert(predicate);
    NamedFormula named{formula_name(label + "_completion_", predicate), definition};
    (outputs.contains(predicate) ? side.public_part : side.private_part).push_back(std::move(named));
  }
  for (const Predicate &output : guide.output_predicates)
    if (!defined.contains(output))
      side.public_part.push_back({formula_name(label + "_completion_", output), undefined(output)});
  for (std::size_t i = 0; i < parts.constraints.size(); ++i)
    side.public_part.push_back({label + "_constraint_" + std::to_string(i + 1), parts.constraints[i]});
  return side;
}

SideTheory specification_side(const control::Specification &specification, const std::string &label,
                              const control::UserGuide &guide) {
  auto placeholders = guide.placeholder_sorts();
  PredicateSet inputs = guide.inputs();
  PredicateSet visible = inputs;
  for (const Predicate &output : guide.output_predicates)
    visible.insert(output);

  SideTheory side;
  for (const control::AnnotatedFormula &assumption : specification.assumptions) {
    for (const Predicate &predicate : fol::predicates(assumption.formula))
      if (!inputs.contains(predicate))
        throw ValidationError("specification assumption `" + assumption.name + "` mentions non-input predicate " +
                              predicate.str());
    side.assumptions.push_back(
        {qualified(label, assumption.name), fol::universal_closure(fol::replace_placeholders(assumption.formula, placeholders))});
  }
  for (const control::AnnotatedFormula &spec : specification.specs) {
    for (const Predicate &predicate : fol::predicates(spec.formula))
      if (!visible.contains(predicate))
        throw ValidationError("spec `" + spec.name + "` mentions predicate " + predicate.str() +
                              " that is neither input nor output");
    side.public_part.push_back(
        {qualified(label, spec.name), fol::universal_closure(fol::replace_placeholders(spec.formula, placeholders))});
  }
  return side;
}

PredicateSet side_predicates(const Side &side) {
  if (const auto *program = std::get_if<asp::Program>(&side))
    return asp::predicates(*program);
  PredicateSet result;
  const auto &specification = std::get<control::Specification>(side);
  for (const auto *group : {&specification.assumptions, &specification.specs})
    for (const control::AnnotatedFormula &formula : *group)
      for (const Predicate &predicate : fol::predicates(formula.formula))
        result.insert(predicate);
  return result;
}

PredicateSet initial_taken(const control::UserGuide &guide, const control::ProofOutline &outline) {
  PredicateSet taken = guide.inputs();
  for (const Predicate &output : guide.output_predicates)
    taken.insert(output);
  for (const control::AnnotatedFormula &entry : outline.entries)
    if (entry.role == control::Role::Definition)
      taken.insert(control::defined_predicate(entry));
  return taken;
}

void append(std::vector<NamedFormula> &to, const std::vector<NamedFormula> &from) {
  to.insert(to.end(), from.begin(), from.end());
}

} // namespace

std::pair<fol::Theory, RenamingMap> rename_private_predicates(const fol::Theory &theory,
                                                              const control::UserGuide &guide, PredicateSet &taken) {
  PredicateSet public_predicates = guide.inputs();
  for (const Predicate &output : guide.output_predicates)
    public_predicates.insert(output);
  PredicateSet own = fol::predicates(theory);

  RenamingMap renaming;
  std::map<Predicate, std::string> names;
  for (const Predicate &predicate : own) {
    if (public_predicates.contains(predicate))
      continue;
    Predicate candidate = predicate;
    // A name is free when nothing else took it and it is not another predicate of this theory.
    while (taken.contains(candidate) || (candidate != predicate && own.contains(candidate)))
      candidate.name += "_p";
    taken.insert(candidate);
    renaming.mapping.emplace(predicate, candidate);
    if (candidate != predicate)
      names.emplace(predicate, candidate.name);
  }
  return {fol::rename_predicates(theory, names), renaming};
}

std::pair<RenamingMap, RenamingMap> private_renamings(const asp::Program &left, const asp::Program &right,
                                                      const control::UserGuide &guide,
                                                      const control::ProofOutline &outline) {
  auto placeholders = guide.placeholder_sorts();
  PredicateSet taken = initial_taken(guide, outline);
  RenamingMap left_map = rename_private_predicates(program_theory(left, placeholders), guide, taken).second;
  RenamingMap right_map = rename_private_predicates(program_theory(right, placeholders), guide, taken).second;
  return {left_map, right_map};
}

Task assemble_external_equivalence(const Side &left, const Side &right, const control::UserGuide &guide,
                                   const control::ProofOutline &outline, const ExternalOptions &options) {
  if (const auto *program = std::get_if<asp::Program>(&left))
    check_program(*program, "left", guide, options.bypass_tightness);
  if (const auto *program = std::get_if<asp::Program>(&right))
    check_program(*program, "right", guide, options.bypass_tightness);

  PredicateSet all = initial_taken(guide, {});
  for (const Side *side : {&left, &right}) {
    PredicateSet predicates = side_predicates(*side);
    all.insert(predicates.begin(), predicates.end());
  }
  control::validate_outline(outline, all);

  PredicateSet taken = initial_taken(guide, outline);
  auto build = [&](const Side &side, const std::string &label) {
    if (const auto *program = std::get_if<asp::Program>(&side))
      return program_side(*program, label, guide, taken);
    return specification_side(std::get<control::Specification>(side), label, guide);
  };
  SideTheory left_theory = build(left, "left");
  SideTheory right_theory = build(right, "right");

  auto placeholders = guide.placeholder_sorts();
  std::vector<NamedFormula> assumptions;
  for (const control::AnnotatedFormula &assumption : guide.assumptions)
    assumptions.push_back({qualified("guide", assumption.name),
                           fol::universal_closure(fol::replace_placeholders(assumption.formula, placeholders))});
  append(assumptions, left_theory.assumptions);
  append(assumptions, right_theory.assumptions);

  Task task;
  task.name = "external";
  std::vector<Claim> finals;
  for (Direction direction : {Direction::Forward, Direction::Backward}) {
    if (options.direction != Direction::Universal && options.direction != direction)
      continue;
    bool forward = direction == Direction::Forward;
    std::vector<NamedFormula> base = assumptions;
    append(base, left_theory.private_part);
    append(base, right_theory.private_part);
    append(base, forward ? left_theory.public_part : right_theory.public_part);

    OutlineSequence sequence = sequence_outline(outline, base, direction, placeholders);
    for (Claim &claim : sequence.claims)
      task.claims.push_back(std::move(claim));

    std::vector<Formula> goals;
    for (const NamedFormula &formula : forward ? right_theory.public_part : left_theory.public_part)
      goals.push_back(formula.formula);
    Claim final_claim;
    final_claim.name = "equivalence";
    final_claim.direction = direction;
    final_claim.axioms = std::move(sequence.axioms);
    final_claim.conjecture = Formula::conjunction(std::move(goals));
    final_claim.requires_claims = std::move(sequence.requirements);
    if (is_trivial(final_claim))
      final_claim.status = ClaimStatus::Trivial;
    finals.push_back(std::move(final_claim));
  }
  for (Claim &claim : finals)
    task.claims.push_back(std::move(claim));
  return task;
}

} // namespace anthem::verify
