#include <anthem/asp/syntax.hpp>
#include <anthem/error.hpp>

#include "lexer.hpp"

#include <charconv>
#include <limits>

namespace anthem::asp {

namespace {

using detail::Token;
using detail::TokenKind;
using detail::TokenStream;

std::int64_t parse_numeral(const Token &token, bool negative) {
  // Accumulate as a negative number so INT64_MIN is representable.
  std::int64_t value = 0;
  for (char c : token.text) {
    int digit = c - '0';
    if (value < (std::numeric_limits<std::int64_t>::min() + digit) / 10)
      throw SyntaxError(token.location, "numeral `" + token.text + "` exceeds the 64-bit range");
    value = value * 10 - digit;
  }
  if (!negative) {
    if (value == std::numeric_limits<std::int64_t>::min())
      throw SyntaxError(token.location, "numeral `" + token.text + "` exceeds the 64-bit range");
    value = -value;
  }
  return value;
}

class ProgramParser {
public:
  explicit ProgramParser(std::string_view text) : tokens_(detail::tokenize(text)) {}

  Program parse() {
    Program program;
    while (!tokens_.at_end())
      program.rules.push_back(parse_rule());
    return program;
  }

private:
  Rule parse_rule() {
    Rule rule;
    if (tokens_.peek().kind == TokenKind::Hash)
      throw UnsupportedFeature("directive `#" + tokens_.peek().text + "` at line " +
                               std::to_string(tokens_.peek().location.line) + " is not supported");
    if (tokens_.accept("{")) {
      rule.head_kind = HeadKind::Choice;
      rule.head = parse_atom();
      if (tokens_.peek().is(";") || tokens_.peek().is(":"))
        unsupported("choice elements other than a single atom");
      tokens_.expect("}");
    } else if (!tokens_.peek().is(":-")) {
      rule.head_kind = HeadKind::Basic;
      rule.head = parse_atom();
      if (tokens_.peek().is(";") || tokens_.peek().is("|"))
        unsupported("disjunctive heads");
    }

    if (tokens_.accept(":-")) {
      if (!tokens_.peek().is(".")) {
        rule.body.push_back(parse_body_literal());
        while (tokens_.accept(",")) {
          rule.body.push_back(parse_body_literal());
        }
        if (tokens_.peek().is(";"))
          unsupported("`;` in rule bodies");
      }
    } else if (rule.head_kind == HeadKind::Constraint) {
      tokens_.fail("rule head or `:-`");
    }
    tokens_.expect(".");
    return rule;
  }

  BodyLiteral parse_body_literal() {
    int negations = 0;
    while (tokens_.peek().is_word("not")) {
      tokens_.next();
      ++negations;
    }
    if (negations > 2)
      unsupported("more than two negations");

    if (negations > 0)
      return Literal{negations, parse_atom()};

    // Either an atom or a comparison: try the comparison first.
    std::size_t start = tokens_.position();
    if (tokens_.peek().kind == TokenKind::Identifier && tokens_.peek(1).is("(")) {
      Atom atom = parse_atom();
      if (!relation_ahead())
        return Literal{0, std::move(atom)};
      unsupported("function terms");
    }
    tokens_.reset(start);
    Term lhs = parse_term();
    if (!relation_ahead()) {
      if (lhs.kind == Term::Kind::SymbolicConstant)
        return Literal{0, Atom{lhs.name, {}}};
      tokens_.fail("comparison operator");
    }
    Relation relation = parse_relation();
    Term rhs = parse_term();
    if (relation_ahead())
      unsupported("chained comparisons in rule bodies");
    return Comparison{relation, std::move(lhs), std::move(rhs)};
  }

  bool relation_ahead() const {
    const Token &token = tokens_.peek();
    return token.is("=") || token.is("!=") || token.is("<") || token.is("<=") || token.is(">") ||
           token.is(">=");
  }

  Relation parse_relation() {
    const Token &token = tokens_.next();
    if (token.is("="))
      return Relation::Equal;
    if (token.is("!="))
      return Relation::NotEqual;
    if (token.is("<"))
      return Relation::Less;
    if (token.is("<="))
      return Relation::LessEqual;
    if (token.is(">"))
      return Relation::Greater;
    return Relation::GreaterEqual;
  }

  Atom parse_atom() {
    if (tokens_.peek().is("-"))
      unsupported("classical negation");
    const Token &name = tokens_.peek();
    if (name.kind != TokenKind::Identifier || name.suffix)
      tokens_.fail("predicate name");
    tokens_.next();
    Atom atom{name.text, {}};
    if (tokens_.accept("(")) {
      if (!tokens_.peek().is(")")) {
        atom.terms.push_back(parse_term());
        while (tokens_.accept(","))
          atom.terms.push_back(parse_term());
        if (tokens_.peek().is(";"))
          unsupported("pools");
      }
      tokens_.expect(")");
    }
    return atom;
  }

  Term parse_term() {
    Term lhs = parse_additive();
    if (tokens_.accept("..")) {
      Term rhs = parse_additive();
      return Term::binary(BinaryOperator::Interval, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Term parse_additive() {
    Term lhs = parse_multiplicative();
    while (true) {
      if (tokens_.accept("+"))
        lhs = Term::binary(BinaryOperator::Add, std::move(lhs), parse_multiplicative());
      else if (tokens_.accept("-"))
        lhs = Term::binary(BinaryOperator::Subtract, std::move(lhs), parse_multiplicative());
      else
        return lhs;
    }
  }

  Term parse_multiplicative() {
    Term lhs = parse_unary();
    while (true) {
      if (tokens_.accept("*")) {
        if (tokens_.peek().is("*"))
          unsupported("exponentiation");
        lhs = Term::binary(BinaryOperator::Multiply, std::move(lhs), parse_unary());
      } else if (tokens_.accept("/")) {
        lhs = Term::binary(BinaryOperator::Divide, std::move(lhs), parse_unary());
      } else if (tokens_.accept("\\")) {
        lhs = Term::binary(BinaryOperator::Modulo, std::move(lhs), parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Term parse_unary() {
    if (tokens_.accept("-")) {
      if (tokens_.peek().kind == TokenKind::Number)
        return Term::numeral(parse_numeral(tokens_.next(), true));
      return Term::unary(UnaryOperator::Negative, parse_unary());
    }
    return parse_primary();
  }

  Term parse_primary() {
    const Token &token = tokens_.peek();
    switch (token.kind) {
    case TokenKind::Number:
      tokens_.next();
      return Term::numeral(parse_numeral(token, false));
    case TokenKind::Identifier:
      if (token.suffix)
        tokens_.fail("term");
      if (tokens_.peek(1).is("("))
        unsupported("function terms");
      tokens_.next();
      return Term::constant(token.text);
    case TokenKind::Variable:
      if (token.suffix)
        tokens_.fail("term");
      tokens_.next();
      return Term::variable(token.text);
    case TokenKind::Underscore:
      unsupported("anonymous variables");
    case TokenKind::Hash:
      if (token.text == "inf") {
        tokens_.next();
        return Term::infimum();
      }
      if (token.text == "sup") {
        tokens_.next();
        return Term::supremum();
      }
      tokens_.fail("term");
    case TokenKind::Punct:
      if (token.is("(")) {
        tokens_.next();
        Term inner = parse_term();
        if (tokens_.peek().is(",") || tokens_.peek().is(";"))
          unsupported("tuples and pools");
        tokens_.expect(")");
        return inner;
      }
      if (token.is("|")) {
        tokens_.next();
        Term inner = parse_term();
        tokens_.expect("|");
        return Term::unary(UnaryOperator::AbsoluteValue, std::move(inner));
      }
      [[fallthrough]];
    default:
      tokens_.fail("term");
    }
  }

  [[noreturn]] void unsupported(const std::string &feature) const {
    const Location location = tokens_.peek().location;
    throw UnsupportedFeature(std::to_string(location.line) + ":" + std::to_string(location.column) +
                             ": unsupported feature: " + feature);
  }

  TokenStream tokens_;
};

} // namespace

Program parse_program(std::string_view text) { return ProgramParser(text).parse(); }

} // namespace anthem::asp
