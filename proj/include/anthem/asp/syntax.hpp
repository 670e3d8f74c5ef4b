#pragma once

// Abstract syntax of mini-gringo programs: basic rules, choice rules and
// constraints over atoms, (double) negated atoms and comparisons.

#include <anthem/predicate.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace anthem::asp {

enum class UnaryOperator { Negative, AbsoluteValue };
enum class BinaryOperator { Add, Subtract, Multiply, Divide, Modulo, Interval };
enum class Relation { Equal, NotEqual, Less, LessEqual, Greater, GreaterEqual };

std::string_view to_string(BinaryOperator op);
std::string_view to_string(Relation relation);

struct Term {
  enum class Kind {
    Numeral,
    SymbolicConstant,
    Infimum,
    Supremum,
    Variable,
    Unary,
    Binary,
  };

  Kind kind = Kind::Numeral;
  std::int64_t value = 0; // Numeral
  std::string name;       // SymbolicConstant, Variable
  UnaryOperator unary_op = UnaryOperator::Negative;
  BinaryOperator binary_op = BinaryOperator::Add;
  std::vector<Term> args; // one for Unary, two for Binary

  static Term numeral(std::int64_t value);
  static Term constant(std::string name);
  static Term variable(std::string name);
  static Term infimum();
  static Term supremum();
  static Term unary(UnaryOperator op, Term arg);
  static Term binary(BinaryOperator op, Term lhs, Term rhs);

  const Term &lhs() const { return args.at(0); }
  const Term &rhs() const { return args.at(1); }

  bool operator==(const Term &) const = default;
};

struct Atom {
  std::string predicate_name;
  std::vector<Term> terms;

  Predicate predicate() const { return {predicate_name, terms.size()}; }
  bool operator==(const Atom &) const = default;
};

/// An atom preceded by zero, one or two `not`.
struct Literal {
  int negations = 0;
  Atom atom;

  bool operator==(const Literal &) const = default;
};

struct Comparison {
  Relation relation = Relation::Equal;
  Term lhs;
  Term rhs;

  bool operator==(const Comparison &) const = default;
};

using BodyLiteral = std::variant<Literal, Comparison>;

enum class HeadKind { Basic, Choice, Constraint };

struct Rule {
  HeadKind head_kind = HeadKind::Constraint;
  std::optional<Atom> head; // empty iff head_kind == Constraint
  std::vector<BodyLiteral> body;

  bool operator==(const Rule &) const = default;
};

struct Program {
  std::vector<Rule> rules;

  bool operator==(const Program &) const = default;
};

/// Parses program text. Throws SyntaxError with line/column on malformed input,
/// UnsupportedFeature for anonymous variables, pools and similar constructs
/// outside the fragment.
Program parse_program(std::string_view text);

std::string format_term(const Term &term);
std::string format_rule(const Rule &rule);
std::string format_program(const Program &program);

PredicateSet predicates(const Program &program);
PredicateSet head_predicates(const Program &program);

std::set<std::string> variables(const Term &term);
std::set<std::string> variables(const Rule &rule);

/// Symbolic constants occurring anywhere in the program (placeholder candidates).
std::set<std::string> symbolic_constants(const Program &program);

} // namespace anthem::asp
