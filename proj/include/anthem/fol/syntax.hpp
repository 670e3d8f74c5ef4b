#pragma once

// Three-sorted first-order target language. The universe of the general sort
// contains integers, symbolic constants, #inf and #sup; integer and symbol are
// subsorts of general.

#include <anthem/predicate.hpp>

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace anthem::fol {

enum class Sort { General, Integer, Symbol };

std::string_view to_string(Sort sort);

/// True when every value of `sub` is a value of `super`.
constexpr bool is_subsort(Sort sub, Sort super) { return sub == super || super == Sort::General; }

struct Variable {
  std::string name;
  Sort sort = Sort::General;

  auto operator<=>(const Variable &) const = default;
};

using VariableSet = std::set<Variable>;

enum class TermKind {
  Numeral,
  SymbolicConstant,
  Infimum,
  Supremum,
  Variable,
  FunctionConstant, // placeholder constant of a fixed sort, written `n$i`
  Negative,
  Add,
  Subtract,
  Multiply,
};

/// A term of the target language. Arithmetic nodes only ever take integer-sorted
/// operands; the factories enforce this and throw SortError otherwise.
class Term {
public:
  static Term numeral(std::int64_t value);
  static Term symbol(std::string name);
  static Term infimum();
  static Term supremum();
  static Term variable(Variable variable);
  static Term variable(std::string name, Sort sort);
  static Term function_constant(std::string name, Sort sort);
  static Term negative(Term arg);
  static Term add(Term lhs, Term rhs);
  static Term subtract(Term lhs, Term rhs);
  static Term multiply(Term lhs, Term rhs);
  static Term arithmetic(TermKind kind, Term lhs, Term rhs);

  TermKind kind() const { return kind_; }
  Sort sort() const;
  std::int64_t value() const { return value_; }
  const std::string &name() const { return name_; }
  Variable as_variable() const { return {name_, sort_}; }
  const std::vector<Term> &args() const { return args_; }

  bool is_arithmetic() const;

  /// Same node with replaced operands (arithmetic nodes only).
  Term with_args(std::vector<Term> args) const;

  bool operator==(const Term &) const = default;

private:
  TermKind kind_ = TermKind::Numeral;
  std::int64_t value_ = 0;
  std::string name_;
  Sort sort_ = Sort::General; // Variable and FunctionConstant
  std::vector<Term> args_;
};

enum class Relation { Equal, NotEqual, Less, LessEqual, Greater, GreaterEqual };

std::string_view to_string(Relation relation);

struct Guard {
  Relation relation = Relation::Equal;
  Term term;

  bool operator==(const Guard &) const = default;
};

enum class FormulaKind {
  Truth,
  Falsity,
  Atom,
  Comparison, // first term followed by one or more guards: `a <= X <= b`
  Not,
  And,
  Or,
  Implies, // children: antecedent, consequent
  Iff,
  Forall,
  Exists,
};

enum class Quantifier { Forall, Exists };

class Formula {
public:
  static Formula truth();
  static Formula falsity();
  static Formula atom(std::string predicate, std::vector<Term> terms = {});
  static Formula comparison(Term lhs, Relation relation, Term rhs);
  static Formula comparison(Term first, std::vector<Guard> guards);
  static Formula negation(Formula body);
  /// n-ary conjunction; an empty list yields #true, a single element is returned unchanged.
  static Formula conjunction(std::vector<Formula> children);
  /// n-ary disjunction; an empty list yields #false, a single element is returned unchanged.
  static Formula disjunction(std::vector<Formula> children);
  static Formula implication(Formula antecedent, Formula consequent);
  static Formula equivalence(Formula lhs, Formula rhs);
  /// Quantifies over `variables`; no variables returns the body unchanged.
  static Formula quantified(Quantifier quantifier, std::vector<Variable> variables, Formula body);
  static Formula forall(std::vector<Variable> variables, Formula body) {
    return quantified(Quantifier::Forall, std::move(variables), std::move(body));
  }
  static Formula exists(std::vector<Variable> variables, Formula body) {
    return quantified(Quantifier::Exists, std::move(variables), std::move(body));
  }

  /// Builds an And/Or node with exactly the given children, without collapsing.
  static Formula connective(FormulaKind kind, std::vector<Formula> children);

  FormulaKind kind() const { return kind_; }
  bool is_atomic() const;
  bool is_quantified() const { return kind_ == FormulaKind::Forall || kind_ == FormulaKind::Exists; }

  // Atom
  const std::string &predicate_name() const { return name_; }
  Predicate predicate() const { return {name_, terms_.size()}; }
  // Atom arguments, or the first term of a comparison.
  const std::vector<Term> &terms() const { return terms_; }
  // Comparison
  const std::vector<Guard> &guards() const { return guards_; }
  // Not: one child; And/Or: n children; Implies/Iff: two; quantifiers: one.
  const std::vector<Formula> &children() const { return children_; }
  const Formula &child(std::size_t index = 0) const { return children_.at(index); }
  const Formula &lhs() const { return children_.at(0); }
  const Formula &rhs() const { return children_.at(1); }
  // Quantifiers
  const std::vector<Variable> &variables() const { return variables_; }

  // Copies with one component replaced; the kind is preserved.
  Formula with_children(std::vector<Formula> children) const;
  Formula with_variables(std::vector<Variable> variables) const;
  Formula with_predicate_name(std::string name) const;
  Formula with_terms(std::vector<Term> terms) const;
  Formula with_guards(std::vector<Guard> guards) const;

  bool operator==(const Formula &) const = default;

private:
  FormulaKind kind_ = FormulaKind::Truth;
  std::string name_;
  std::vector<Term> terms_;
  std::vector<Guard> guards_;
  std::vector<Formula> children_;
  std::vector<Variable> variables_;
};

struct Theory {
  std::vector<Formula> formulas;

  bool operator==(const Theory &) const = default;
};

} // namespace anthem::fol
