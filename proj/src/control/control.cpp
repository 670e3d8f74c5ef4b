#include <anthem/control/control.hpp>
#include <anthem/error.hpp>
#include <anthem/fol/io.hpp>
#include <anthem/fol/operations.hpp>
#include <anthem/verify/verify.hpp>

#include "fol/parser_internal.hpp"
#include "lexer.hpp"

#include <algorithm>
#include <sstream>

namespace anthem::control {

namespace {

using anthem::detail::Token;
using anthem::detail::TokenKind;
using anthem::detail::TokenStream;

struct Header {
  std::string role;
  Location location;
  Direction direction = Direction::Universal;
  std::optional<std::string> name;
};

Header parse_header(TokenStream &tokens) {
  Header header;
  const Token &role = tokens.peek();
  if (role.kind != TokenKind::Identifier || role.suffix)
    tokens.fail("statement role");
  header.location = role.location;
  header.role = tokens.next().text;
  if (header.role == "inductive" && tokens.peek().is("-") && tokens.peek(1).is_word("lemma")) {
    tokens.next();
    tokens.next();
    header.role = "inductive-lemma";
  }
  if (tokens.accept("(")) {
    const Token &direction = tokens.peek();
    auto parsed = direction.kind == TokenKind::Identifier && !direction.suffix ? parse_direction(direction.text)
                                                                              : std::nullopt;
    if (!parsed)
      tokens.fail("direction (universal, forward or backward)");
    tokens.next();
    header.direction = *parsed;
    tokens.expect(")");
  }
  if (tokens.accept("[")) {
    const Token &name = tokens.peek();
    if ((name.kind != TokenKind::Identifier && name.kind != TokenKind::Variable) || name.suffix)
      tokens.fail("name");
    header.name = tokens.next().text;
    tokens.expect("]");
  }
  tokens.expect(":");
  return header;
}

Predicate parse_predicate(TokenStream &tokens) {
  const Token &name = tokens.peek();
  if (name.kind != TokenKind::Identifier || name.suffix)
    tokens.fail("predicate name");
  std::string predicate_name = tokens.next().text;
  tokens.expect("/");
  const Token &arity = tokens.peek();
  if (arity.kind != TokenKind::Number)
    tokens.fail("arity");
  tokens.next();
  return Predicate{predicate_name, static_cast<std::size_t>(std::stoull(arity.text))};
}

// Generated names count statements per role, so reordering roles keeps them stable.
AnnotatedFormula annotated(Role role, const Header &header, fol::Formula formula,
                           std::map<Role, std::size_t> &counters) {
  std::size_t index = ++counters[role];
  AnnotatedFormula result;
  result.role = role;
  result.direction = header.direction;
  result.named = header.name.has_value();
  result.name = header.name ? *header.name : "_" + std::string(to_string(role)) + "_" + std::to_string(index);
  result.formula = std::move(formula);
  return result;
}

[[noreturn]] void unknown_role(const Header &header, std::string_view file_kind) {
  throw SyntaxError(header.location, "role `" + header.role + "` is not allowed in a " + std::string(file_kind));
}

void require_universal(const Header &header, std::string_view file_kind) {
  if (header.direction != Direction::Universal || header.name)
    throw SyntaxError(header.location, "`" + header.role + "` statements in a " + std::string(file_kind) +
                                           " take no direction or name");
}

struct DefinitionShape {
  Predicate predicate;
  fol::Formula body;
};

DefinitionShape definition_shape(const fol::Formula &formula) {
  fol::Formula closed = fol::universal_closure(formula);
  const fol::Formula *current = &closed;
  while (current->kind() == fol::FormulaKind::Forall)
    current = &current->child();
  if (current->kind() != fol::FormulaKind::Iff || current->lhs().kind() != fol::FormulaKind::Atom)
    throw ValidationError("definition `" + fol::format_default(formula) +
                          "` does not have the form `forall X (p(X) <-> F(X))`");
  const fol::Formula &head = current->lhs();
  fol::VariableSet head_variables;
  for (const fol::Term &term : head.terms()) {
    if (term.kind() != fol::TermKind::Variable || !head_variables.insert(term.as_variable()).second)
      throw ValidationError("definition `" + fol::format_default(formula) +
                            "` must define its predicate over distinct variables");
  }
  for (const fol::Variable &variable : fol::free_variables(current->rhs()))
    if (!head_variables.contains(variable))
      throw ValidationError("definition `" + fol::format_default(formula) + "` has variable `" +
                            fol::format_variable(variable) + "` that does not occur in the defined atom");
  return {head.predicate(), current->rhs()};
}

} // namespace

std::string_view to_string(Role role) {
  switch (role) {
  case Role::Assumption:
    return "assumption";
  case Role::Spec:
    return "spec";
  case Role::Definition:
    return "definition";
  case Role::Lemma:
    return "lemma";
  case Role::InductiveLemma:
    return "inductive-lemma";
  }
  return "?";
}

std::string_view to_string(Direction direction) {
  switch (direction) {
  case Direction::Universal:
    return "universal";
  case Direction::Forward:
    return "forward";
  case Direction::Backward:
    return "backward";
  }
  return "?";
}

std::optional<Direction> parse_direction(std::string_view text) {
  for (Direction direction : {Direction::Universal, Direction::Forward, Direction::Backward})
    if (to_string(direction) == text)
      return direction;
  return std::nullopt;
}

PredicateSet UserGuide::inputs() const { return PredicateSet(input_predicates.begin(), input_predicates.end()); }

PredicateSet UserGuide::outputs() const { return PredicateSet(output_predicates.begin(), output_predicates.end()); }

std::map<std::string, fol::Sort> UserGuide::placeholder_sorts() const {
  std::map<std::string, fol::Sort> result;
  for (const Placeholder &placeholder : placeholders)
    result[placeholder.name] = placeholder.sort;
  return result;
}

UserGuide parse_user_guide(std::string_view text) {
  TokenStream tokens(anthem::detail::tokenize(text));
  UserGuide guide;
  std::map<Role, std::size_t> counters;
  while (!tokens.at_end()) {
    Header header = parse_header(tokens);
    require_universal(header, "user guide");
    if (header.role == "input") {
      if (tokens.peek().kind == TokenKind::Identifier && tokens.peek(1).is("->")) {
        std::string name = tokens.next().text;
        tokens.next();
        const Token &sort = tokens.peek();
        if (sort.is_word("integer"))
          guide.placeholders.push_back({name, fol::Sort::Integer});
        else if (sort.is_word("symbol"))
          guide.placeholders.push_back({name, fol::Sort::Symbol});
        else
          tokens.fail("placeholder sort (integer or symbol)");
        tokens.next();
      } else {
        guide.input_predicates.push_back(parse_predicate(tokens));
      }
    } else if (header.role == "output") {
      guide.output_predicates.push_back(parse_predicate(tokens));
    } else if (header.role == "assumption") {
      guide.assumptions.push_back(
          annotated(Role::Assumption, header, fol::detail::parse_formula(tokens), counters));
    } else {
      unknown_role(header, "user guide");
    }
    tokens.expect(".");
  }

  PredicateSet inputs = guide.inputs();
  for (const Predicate &output : guide.output_predicates)
    if (inputs.contains(output))
      throw ValidationError("predicate " + output.str() + " is declared both input and output");
  for (const AnnotatedFormula &assumption : guide.assumptions)
    for (const Predicate &predicate : fol::predicates(assumption.formula))
      if (!inputs.contains(predicate))
        throw ValidationError("assumption `" + fol::format_default(assumption.formula) +
                              "` mentions non-input predicate " + predicate.str());
  return guide;
}

Specification parse_specification(std::string_view text) {
  TokenStream tokens(anthem::detail::tokenize(text));
  Specification specification;
  std::map<Role, std::size_t> counters;
  while (!tokens.at_end()) {
    Header header = parse_header(tokens);
    Role role;
    if (header.role == "assumption")
      role = Role::Assumption;
    else if (header.role == "spec")
      role = Role::Spec;
    else
      unknown_role(header, "specification");
    AnnotatedFormula formula = annotated(role, header, fol::detail::parse_formula(tokens), counters);
    tokens.expect(".");
    (role == Role::Spec ? specification.specs : specification.assumptions).push_back(std::move(formula));
  }
  return specification;
}

ProofOutline parse_proof_outline(std::string_view text) {
  TokenStream tokens(anthem::detail::tokenize(text));
  ProofOutline outline;
  std::map<Role, std::size_t> counters;
  PredicateSet defined;
  while (!tokens.at_end()) {
    Header header = parse_header(tokens);
    Role role;
    if (header.role == "definition")
      role = Role::Definition;
    else if (header.role == "lemma")
      role = Role::Lemma;
    else if (header.role == "inductive-lemma")
      role = Role::InductiveLemma;
    else
      unknown_role(header, "proof outline");
    AnnotatedFormula formula = annotated(role, header, fol::detail::parse_formula(tokens), counters);
    tokens.expect(".");

    if (role == Role::Definition) {
      Predicate predicate = definition_shape(formula.formula).predicate;
      if (!defined.insert(predicate).second)
        throw ValidationError("predicate " + predicate.str() + " is defined twice");
    } else if (role == Role::InductiveLemma) {
      try {
        verify::split_inductive_lemma(formula.formula);
      } catch (const ShapeError &error) {
        throw ValidationError(std::string("inductive lemma `") + formula.name + "`: " + error.what());
      }
    }
    outline.entries.push_back(std::move(formula));
  }
  return outline;
}

Predicate defined_predicate(const AnnotatedFormula &definition) {
  return definition_shape(definition.formula).predicate;
}

void validate_outline(const ProofOutline &outline, const PredicateSet &taken) {
  PredicateSet available = taken;
  for (const AnnotatedFormula &entry : outline.entries) {
    if (entry.role != Role::Definition)
      continue;
    DefinitionShape shape = definition_shape(entry.formula);
    if (available.contains(shape.predicate))
      throw ValidationError("definition `" + entry.name + "` introduces predicate " + shape.predicate.str() +
                            " which is not fresh");
    for (const Predicate &used : fol::predicates(shape.body))
      if (!available.contains(used))
        throw ValidationError("definition `" + entry.name + "` uses predicate " + used.str() +
                              " before it is defined");
    available.insert(shape.predicate);
  }
}

std::string format_annotated(const AnnotatedFormula &formula) {
  std::string result(to_string(formula.role));
  if (formula.direction != Direction::Universal)
    result += "(" + std::string(to_string(formula.direction)) + ")";
  if (formula.named)
    result += "[" + formula.name + "]";
  return result + ": " + fol::format_default(formula.formula) + ".";
}

std::string format_user_guide(const UserGuide &guide) {
  std::ostringstream out;
  for (const Predicate &predicate : guide.input_predicates)
    out << "input: " << predicate.str() << ".\n";
  for (const Placeholder &placeholder : guide.placeholders)
    out << "input: " << placeholder.name << " -> " << (placeholder.sort == fol::Sort::Symbol ? "symbol" : "integer")
        << ".\n";
  for (const Predicate &predicate : guide.output_predicates)
    out << "output: " << predicate.str() << ".\n";
  for (const AnnotatedFormula &assumption : guide.assumptions)
    out << format_annotated(assumption) << "\n";
  return out.str();
}

std::string format_specification(const Specification &specification) {
  std::ostringstream out;
  for (const AnnotatedFormula &assumption : specification.assumptions)
    out << format_annotated(assumption) << "\n";
  for (const AnnotatedFormula &spec : specification.specs)
    out << format_annotated(spec) << "\n";
  return out.str();
}

std::string format_proof_outline(const ProofOutline &outline) {
  std::ostringstream out;
  for (const AnnotatedFormula &entry : outline.entries)
    out << format_annotated(entry) << "\n";
  return out.str();
}

} // namespace anthem::control
