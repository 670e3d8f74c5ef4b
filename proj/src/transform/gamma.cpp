#include <anthem/fol/operations.hpp>
#include <anthem/transform/transform.hpp>

#include <set>

namespace anthem::transform {

using fol::Formula;
using fol::FormulaKind;

HereThereNaming::HereThereNaming(const PredicateSet &predicates, const PredicateSet &reserved)
    : predicates_(predicates) {
  PredicateSet used = predicates;
  used.insert(reserved.begin(), reserved.end());

  auto generate = [&](const std::string &prefix, const Predicate &predicate) {
    std::string name = prefix + predicate.name;
    bool renamed = false;
    while (used.contains(Predicate{name, predicate.arity})) {
      name += "_";
      renamed = true;
    }
    if (renamed)
      warnings_.push_back("predicate name `" + prefix + predicate.name + "` is taken; using `" + name + "` for " +
                          predicate.str());
    used.insert(Predicate{name, predicate.arity});
    return name;
  };

  for (const Predicate &predicate : predicates) {
    std::string h = generate("h", predicate);
    std::string t = generate("t", predicate);
    names_.emplace(predicate, std::make_pair(std::move(h), std::move(t)));
  }
}

const std::string &HereThereNaming::here(const Predicate &predicate) const { return names_.at(predicate).first; }

const std::string &HereThereNaming::there(const Predicate &predicate) const { return names_.at(predicate).second; }

namespace {

Formula rename_world(const Formula &formula, const HereThereNaming &naming, bool here_world) {
  if (formula.kind() == FormulaKind::Atom)
    return formula.with_predicate_name(here_world ? naming.here(formula.predicate())
                                                  : naming.there(formula.predicate()));
  if (formula.children().empty())
    return formula;
  std::vector<Formula> children;
  for (const Formula &child : formula.children())
    children.push_back(rename_world(child, naming, here_world));
  return formula.with_children(std::move(children));
}

} // namespace

Formula here(const Formula &formula, const HereThereNaming &naming) { return rename_world(formula, naming, true); }

Formula there(const Formula &formula, const HereThereNaming &naming) { return rename_world(formula, naming, false); }

Formula gamma(const Formula &formula, const HereThereNaming &naming) {
  switch (formula.kind()) {
  case FormulaKind::Truth:
  case FormulaKind::Falsity:
  case FormulaKind::Comparison:
    return formula;
  case FormulaKind::Atom:
    return here(formula, naming);
  case FormulaKind::Not:
    return Formula::negation(there(formula.child(), naming));
  case FormulaKind::Implies:
    return Formula::connective(
        FormulaKind::And,
        {Formula::implication(gamma(formula.lhs(), naming), gamma(formula.rhs(), naming)),
         Formula::implication(there(formula.lhs(), naming), there(formula.rhs(), naming))});
  case FormulaKind::Iff:
    return Formula::connective(FormulaKind::And,
                               {gamma(Formula::implication(formula.lhs(), formula.rhs()), naming),
                                gamma(Formula::implication(formula.rhs(), formula.lhs()), naming)});
  default: {
    std::vector<Formula> children;
    for (const Formula &child : formula.children())
      children.push_back(gamma(child, naming));
    return formula.with_children(std::move(children));
  }
  }
}

fol::Theory gamma(const fol::Theory &theory, const HereThereNaming &naming) {
  fol::Theory result;
  for (const Formula &formula : theory.formulas)
    result.formulas.push_back(gamma(formula, naming));
  return result;
}

fol::Theory gamma(const fol::Theory &theory) { return gamma(theory, HereThereNaming(fol::predicates(theory))); }

fol::Theory ordering_axioms(const HereThereNaming &naming) {
  fol::Theory result;
  for (const Predicate &predicate : naming.predicates()) {
    std::vector<fol::Variable> variables;
    std::vector<fol::Term> args;
    for (std::size_t i = 1; i <= predicate.arity; ++i) {
      variables.push_back({predicate.arity == 1 ? "X" : "X" + std::to_string(i), fol::Sort::General});
      args.push_back(fol::Term::variable(variables.back()));
    }
    Formula implication = Formula::implication(Formula::atom(naming.here(predicate), args),
                                               Formula::atom(naming.there(predicate), args));
    result.formulas.push_back(Formula::forall(std::move(variables), std::move(implication)));
  }
  return result;
}

fol::Theory ordering_axioms(const PredicateSet &predicates) { return ordering_axioms(HereThereNaming(predicates)); }

} // namespace anthem::transform
