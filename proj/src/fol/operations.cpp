#include <anthem/error.hpp>
#include <anthem/fol/io.hpp>
#include <anthem/fol/operations.hpp>

#include <algorithm>

namespace anthem::fol {

namespace {

void collect_free(const Term &term, VariableSet &out) {
  if (term.kind() == TermKind::Variable)
    out.insert(term.as_variable());
  for (const Term &arg : term.args())
    collect_free(arg, out);
}

template <typename TermFn> Formula map_terms(const Formula &formula, TermFn fn) {
  switch (formula.kind()) {
  case FormulaKind::Atom: {
    std::vector<Term> terms;
    for (const Term &term : formula.terms())
      terms.push_back(fn(term));
    return formula.with_terms(std::move(terms));
  }
  case FormulaKind::Comparison: {
    std::vector<Guard> guards;
    for (const Guard &guard : formula.guards())
      guards.push_back(Guard{guard.relation, fn(guard.term)});
    return formula.with_terms({fn(formula.terms()[0])}).with_guards(std::move(guards));
  }
  default: {
    std::vector<Formula> children;
    for (const Formula &child : formula.children())
      children.push_back(map_terms(child, fn));
    return formula.with_children(std::move(children));
  }
  }
}

template <typename TermFn> Term map_leaves(const Term &term, TermFn fn) {
  if (term.args().empty())
    return fn(term);
  std::vector<Term> args;
  for (const Term &arg : term.args())
    args.push_back(map_leaves(arg, fn));
  return term.with_args(std::move(args));
}

void collect_names(const Term &term, std::set<std::string> &out) {
  if (term.kind() == TermKind::Variable)
    out.insert(term.name());
  for (const Term &arg : term.args())
    collect_names(arg, out);
}

void collect_names(const Formula &formula, std::set<std::string> &out) {
  for (const Term &term : formula.terms())
    collect_names(term, out);
  for (const Guard &guard : formula.guards())
    collect_names(guard.term, out);
  for (const Variable &variable : formula.variables())
    out.insert(variable.name);
  for (const Formula &child : formula.children())
    collect_names(child, out);
}

Formula rename_free(const Formula &formula, const Variable &from, const Variable &to) {
  return substitute(formula, from, Term::variable(to));
}

} // namespace

VariableSet free_variables(const Term &term) {
  VariableSet result;
  collect_free(term, result);
  return result;
}

VariableSet free_variables(const Formula &formula) {
  VariableSet result;
  switch (formula.kind()) {
  case FormulaKind::Atom:
  case FormulaKind::Comparison:
    for (const Term &term : formula.terms())
      collect_free(term, result);
    for (const Guard &guard : formula.guards())
      collect_free(guard.term, result);
    break;
  case FormulaKind::Forall:
  case FormulaKind::Exists: {
    result = free_variables(formula.child());
    for (const Variable &variable : formula.variables())
      result.erase(variable);
    break;
  }
  default:
    for (const Formula &child : formula.children()) {
      VariableSet inner = free_variables(child);
      result.insert(inner.begin(), inner.end());
    }
    break;
  }
  return result;
}

VariableSet free_variables(const Theory &theory) {
  VariableSet result;
  for (const Formula &formula : theory.formulas) {
    VariableSet inner = free_variables(formula);
    result.insert(inner.begin(), inner.end());
  }
  return result;
}

std::set<std::string> variable_names(const Formula &formula) {
  std::set<std::string> names;
  collect_names(formula, names);
  return names;
}

Term substitute(const Term &in, const Variable &variable, const Term &term) {
  return map_leaves(in, [&](const Term &leaf) {
    if (leaf.kind() == TermKind::Variable && leaf.as_variable() == variable)
      return term;
    return leaf;
  });
}

Formula substitute(const Formula &formula, const Variable &variable, const Term &term) {
  if (!is_subsort(term.sort(), variable.sort))
    throw SortError("cannot substitute a " + std::string(to_string(term.sort())) + " term for " +
                    std::string(to_string(variable.sort)) + " variable `" + format_variable(variable) + "`");

  switch (formula.kind()) {
  case FormulaKind::Atom:
  case FormulaKind::Comparison:
    return map_terms(formula, [&](const Term &t) { return substitute(t, variable, term); });
  case FormulaKind::Forall:
  case FormulaKind::Exists: {
    const auto &bound = formula.variables();
    if (std::find(bound.begin(), bound.end(), variable) != bound.end())
      return formula;
    if (!free_variables(formula.child()).contains(variable))
      return formula;

    // Rename bound variables that would capture free variables of `term`.
    VariableSet term_free = free_variables(term);
    std::vector<Variable> variables = bound;
    Formula body = formula.child();
    std::set<std::string> taken = variable_names(formula);
    for (const Variable &v : term_free)
      taken.insert(v.name);
    taken.insert(variable.name);
    for (Variable &bound_variable : variables) {
      if (!term_free.contains(bound_variable))
        continue;
      Variable renamed{fresh_name(bound_variable.name, taken, true), bound_variable.sort};
      taken.insert(renamed.name);
      body = rename_free(body, bound_variable, renamed);
      bound_variable = renamed;
    }
    return formula.with_variables(std::move(variables)).with_children({substitute(body, variable, term)});
  }
  default: {
    std::vector<Formula> children;
    for (const Formula &child : formula.children())
      children.push_back(substitute(child, variable, term));
    return formula.with_children(std::move(children));
  }
  }
}

Formula universal_closure(const Formula &formula) {
  VariableSet free = free_variables(formula);
  if (free.empty())
    return formula;
  std::vector<Variable> variables(free.begin(), free.end());
  return Formula::forall(std::move(variables), formula);
}

PredicateSet predicates(const Formula &formula) {
  PredicateSet result;
  if (formula.kind() == FormulaKind::Atom)
    result.insert(formula.predicate());
  for (const Formula &child : formula.children()) {
    PredicateSet inner = predicates(child);
    result.insert(inner.begin(), inner.end());
  }
  return result;
}

PredicateSet predicates(const Theory &theory) {
  PredicateSet result;
  for (const Formula &formula : theory.formulas) {
    PredicateSet inner = predicates(formula);
    result.insert(inner.begin(), inner.end());
  }
  return result;
}

namespace {

void collect_symbols(const Term &term, std::set<std::string> &out) {
  if (term.kind() == TermKind::SymbolicConstant)
    out.insert(term.name());
  for (const Term &arg : term.args())
    collect_symbols(arg, out);
}

void collect_function_constants(const Term &term, std::set<std::pair<std::string, Sort>> &out) {
  if (term.kind() == TermKind::FunctionConstant)
    out.insert({term.name(), term.sort()});
  for (const Term &arg : term.args())
    collect_function_constants(arg, out);
}

template <typename Collect, typename Out> void collect_in_formula(const Formula &formula, Out &out, Collect collect) {
  for (const Term &term : formula.terms())
    collect(term, out);
  for (const Guard &guard : formula.guards())
    collect(guard.term, out);
  for (const Formula &child : formula.children())
    collect_in_formula(child, out, collect);
}

} // namespace

std::set<std::string> symbolic_constants(const Formula &formula) {
  std::set<std::string> result;
  collect_in_formula(formula, result, [](const Term &t, std::set<std::string> &out) { collect_symbols(t, out); });
  return result;
}

std::set<std::pair<std::string, Sort>> function_constants(const Formula &formula) {
  std::set<std::pair<std::string, Sort>> result;
  collect_in_formula(formula, result, [](const Term &t, std::set<std::pair<std::string, Sort>> &out) {
    collect_function_constants(t, out);
  });
  return result;
}

Formula rename_predicates(const Formula &formula, const std::map<Predicate, std::string> &renaming) {
  if (formula.kind() == FormulaKind::Atom) {
    auto it = renaming.find(formula.predicate());
    return it == renaming.end() ? formula : formula.with_predicate_name(it->second);
  }
  if (formula.children().empty())
    return formula;
  std::vector<Formula> children;
  for (const Formula &child : formula.children())
    children.push_back(rename_predicates(child, renaming));
  return formula.with_children(std::move(children));
}

Theory rename_predicates(const Theory &theory, const std::map<Predicate, std::string> &renaming) {
  Theory result;
  for (const Formula &formula : theory.formulas)
    result.formulas.push_back(rename_predicates(formula, renaming));
  return result;
}

Formula replace_placeholders(const Formula &formula, const std::map<std::string, Sort> &placeholders) {
  if (placeholders.empty())
    return formula;
  return map_terms(formula, [&](const Term &term) {
    return map_leaves(term, [&](const Term &leaf) {
      if (leaf.kind() == TermKind::SymbolicConstant) {
        auto it = placeholders.find(leaf.name());
        if (it != placeholders.end())
          return Term::function_constant(leaf.name(), it->second);
      }
      return leaf;
    });
  });
}

Formula flatten(const Formula &formula) {
  std::vector<Formula> children;
  for (const Formula &child : formula.children()) {
    Formula flat = flatten(child);
    if ((formula.kind() == FormulaKind::And || formula.kind() == FormulaKind::Or) && flat.kind() == formula.kind()) {
      for (const Formula &grandchild : flat.children())
        children.push_back(grandchild);
    } else {
      children.push_back(std::move(flat));
    }
  }
  return formula.with_children(std::move(children));
}

namespace {

class AlphaCanonicalizer {
public:
  explicit AlphaCanonicalizer(const Formula &formula) {
    for (const Variable &variable : free_variables(formula))
      taken_.insert(variable.name);
  }

  Formula run(const Formula &formula) {
    if (!formula.is_quantified()) {
      if (formula.children().empty())
        return formula;
      std::vector<Formula> children;
      for (const Formula &child : formula.children())
        children.push_back(run(child));
      return formula.with_children(std::move(children));
    }
    Formula body = formula.child();
    std::vector<Variable> renamed;
    for (const Variable &variable : formula.variables()) {
      Variable fresh{next_name(variable.sort), variable.sort};
      body = substitute(body, variable, Term::variable(fresh));
      renamed.push_back(fresh);
    }
    return formula.with_variables(std::move(renamed)).with_children({run(body)});
  }

private:
  std::string next_name(Sort sort) {
    std::string prefix = sort == Sort::General ? "X" : sort == Sort::Integer ? "I" : "S";
    std::size_t &counter = counters_[static_cast<int>(sort)];
    std::string name;
    do {
      name = prefix + std::to_string(++counter);
    } while (taken_.contains(name));
    return name;
  }

  std::set<std::string> taken_;
  std::size_t counters_[3] = {0, 0, 0};
};

} // namespace

Formula canonical_alpha(const Formula &formula) {
  // Renaming into names that already occur bound would let substitution see
  // spurious clashes, so first move every bound variable out of the way.
  AlphaCanonicalizer canonicalizer(formula);
  return canonicalizer.run(formula);
}

bool alpha_equivalent(const Formula &lhs, const Formula &rhs) { return canonical_alpha(lhs) == canonical_alpha(rhs); }

std::string fresh_name(const std::string &prefix, const std::set<std::string> &taken, bool numbered_only) {
  if (!numbered_only && !taken.contains(prefix))
    return prefix;
  for (std::size_t i = 1;; ++i) {
    std::string candidate = prefix + std::to_string(i);
    if (!taken.contains(candidate))
      return candidate;
  }
}

} // namespace anthem::fol
