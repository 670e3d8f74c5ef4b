#pragma once

#include <anthem/fol/syntax.hpp>

#include <functional>
#include <map>
#include <set>
#include <string>

namespace anthem::fol {

VariableSet free_variables(const Term &term);
VariableSet free_variables(const Formula &formula);
VariableSet free_variables(const Theory &theory);

/// Names of all variables occurring in the formula, free or bound, of any sort.
std::set<std::string> variable_names(const Formula &formula);

/// Capture-avoiding substitution of `term` for the free occurrences of `variable`.
/// Throws SortError unless the sort of `term` is a subsort of the variable's sort.
Formula substitute(const Formula &formula, const Variable &variable, const Term &term);
Term substitute(const Term &in, const Variable &variable, const Term &term);

/// Binds all free variables with a leading `forall`, in sorted order.
Formula universal_closure(const Formula &formula);

PredicateSet predicates(const Formula &formula);
PredicateSet predicates(const Theory &theory);

std::set<std::string> symbolic_constants(const Formula &formula);
/// Function constants as (name, sort) pairs.
std::set<std::pair<std::string, Sort>> function_constants(const Formula &formula);

/// Renames predicate symbols according to `renaming`; unmapped predicates stay.
Formula rename_predicates(const Formula &formula, const std::map<Predicate, std::string> &renaming);
Theory rename_predicates(const Theory &theory, const std::map<Predicate, std::string> &renaming);

/// Replaces symbolic constants named in `placeholders` by function constants of the given sort.
Formula replace_placeholders(const Formula &formula, const std::map<std::string, Sort> &placeholders);

/// Merges nested conjunctions and disjunctions of the same kind into one n-ary node.
Formula flatten(const Formula &formula);

/// Renames bound variables to `X1, X2, ...` (general), `I1, ...` (integer),
/// `S1, ...` (symbol) in traversal order; free variables are left untouched.
Formula canonical_alpha(const Formula &formula);

/// Structural equality up to renaming of bound variables.
bool alpha_equivalent(const Formula &lhs, const Formula &rhs);

/// First name of the form `prefix`, `prefix1`, `prefix2`, ... not in `taken`
/// (`prefix` itself is skipped when `numbered_only` is set).
std::string fresh_name(const std::string &prefix, const std::set<std::string> &taken, bool numbered_only = false);

} // namespace anthem::fol
