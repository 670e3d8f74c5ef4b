#pragma once

// Control language: user guides (.ug), first-order specifications (.spec) and
// proof outlines (.po). Statements have the form `role(direction)[name]: body.`

#include <anthem/fol/syntax.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace anthem::control {

enum class Role { Assumption, Spec, Definition, Lemma, InductiveLemma };
enum class Direction { Universal, Forward, Backward };

std::string_view to_string(Role role);
std::string_view to_string(Direction direction);
std::optional<Direction> parse_direction(std::string_view text);

struct AnnotatedFormula {
  Role role = Role::Assumption;
  Direction direction = Direction::Universal;
  std::string name; // generated as `_<role>_<index>` when absent in the source
  bool named = false;
  fol::Formula formula;

  bool operator==(const AnnotatedFormula &) const = default;
};

struct Placeholder {
  std::string name;
  fol::Sort sort = fol::Sort::Integer;

  bool operator==(const Placeholder &) const = default;
};

struct UserGuide {
  std::vector<Predicate> input_predicates;
  std::vector<Placeholder> placeholders;
  std::vector<Predicate> output_predicates;
  std::vector<AnnotatedFormula> assumptions;

  PredicateSet inputs() const;
  PredicateSet outputs() const;
  std::map<std::string, fol::Sort> placeholder_sorts() const;

  bool operator==(const UserGuide &) const = default;
};

struct Specification {
  std::vector<AnnotatedFormula> assumptions;
  std::vector<AnnotatedFormula> specs;

  bool operator==(const Specification &) const = default;
};

struct ProofOutline {
  std::vector<AnnotatedFormula> entries;

  bool operator==(const ProofOutline &) const = default;
};

/// Throws SyntaxError, or ValidationError when a predicate is both input and
/// output or an assumption mentions a non-input predicate.
UserGuide parse_user_guide(std::string_view text);
Specification parse_specification(std::string_view text);
/// Checks definition shape, definition freshness against earlier entries and
/// inductive-lemma shape; freshness against programs is checked by validate_outline.
ProofOutline parse_proof_outline(std::string_view text);

/// Definitions must introduce predicates outside `taken`, and each definition
/// may only use predicates from `taken` or earlier definitions.
void validate_outline(const ProofOutline &outline, const PredicateSet &taken);

/// Predicate defined by a definition entry.
Predicate defined_predicate(const AnnotatedFormula &definition);

std::string format_user_guide(const UserGuide &guide);
std::string format_specification(const Specification &specification);
std::string format_proof_outline(const ProofOutline &outline);
std::string format_annotated(const AnnotatedFormula &formula);

} // namespace anthem::control
