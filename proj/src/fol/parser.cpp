#include <anthem/error.hpp>
#include <anthem/fol/io.hpp>

#include "fol/parser_internal.hpp"
#include "lexer.hpp"

#include <limits>

namespace anthem::fol {

namespace {

using anthem::detail::Token;
using anthem::detail::TokenKind;
using anthem::detail::TokenStream;

Sort parse_sort_suffix(const Token &token, bool lowercase) {
  if (!token.suffix)
    return Sort::General;
  const std::string &suffix = *token.suffix;
  if (suffix.empty() || suffix == "i" || suffix == "integer")
    return Sort::Integer;
  if (suffix == "g" || suffix == "general")
    return Sort::General;
  if (suffix == "s" || suffix == "symbol")
    return Sort::Symbol;
  throw SyntaxError(token.location, std::string("unknown sort suffix `$") + suffix + "` on " +
                                        (lowercase ? "function constant" : "variable") + " `" +
                                        token.text + "`");
}

std::int64_t parse_numeral(const Token &token, bool negative) {
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

bool is_relation(const Token &token) {
  return token.is("=") || token.is("!=") || token.is("<") || token.is("<=") || token.is(">") ||
         token.is(">=");
}

bool is_term_operator(const Token &token) {
  return token.is("+") || token.is("-") || token.is("*") || is_relation(token);
}

Relation to_relation(const Token &token) {
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

bool is_keyword(const Token &token) {
  return token.is_word("forall") || token.is_word("exists") || token.is_word("not") ||
         token.is_word("and") || token.is_word("or");
}

class FormulaParser {
public:
  explicit FormulaParser(TokenStream &tokens) : tokens_(tokens) {}

  Formula parse_formula() { return parse_equivalence(); }

private:
  Formula parse_equivalence() {
    Formula lhs = parse_implication();
    while (tokens_.accept("<->"))
      lhs = Formula::equivalence(std::move(lhs), parse_implication());
    return lhs;
  }

  Formula parse_implication() {
    Formula lhs = parse_disjunction();
    if (tokens_.accept("->"))
      return Formula::implication(std::move(lhs), parse_implication());
    // `F <- G` is read as `G -> F`.
    while (tokens_.accept("<-"))
      lhs = Formula::implication(parse_disjunction(), std::move(lhs));
    return lhs;
  }

  Formula parse_disjunction() {
    std::vector<Formula> children;
    children.push_back(parse_conjunction());
    while (tokens_.accept_word("or"))
      children.push_back(parse_conjunction());
    if (children.size() == 1)
      return std::move(children.front());
    return Formula::connective(FormulaKind::Or, std::move(children));
  }

  Formula parse_conjunction() {
    std::vector<Formula> children;
    children.push_back(parse_unary());
    while (tokens_.accept_word("and"))
      children.push_back(parse_unary());
    if (children.size() == 1)
      return std::move(children.front());
    return Formula::connective(FormulaKind::And, std::move(children));
  }

  Formula parse_unary() {
    if (tokens_.accept_word("not"))
      return Formula::negation(parse_unary());
    if (tokens_.peek().is_word("forall") || tokens_.peek().is_word("exists")) {
      Quantifier quantifier = tokens_.next().text == "forall" ? Quantifier::Forall : Quantifier::Exists;
      std::vector<Variable> variables;
      while (tokens_.peek().kind == TokenKind::Variable) {
        Variable variable = detail::parse_variable(tokens_.peek());
        for (const Variable &other : variables)
          if (other == variable)
            throw SyntaxError(tokens_.peek().location,
                              "variable `" + tokens_.peek().text + "` bound twice in one quantifier");
        variables.push_back(std::move(variable));
        tokens_.next();
      }
      if (variables.empty())
        tokens_.fail("quantified variable");
      return Formula::quantified(quantifier, std::move(variables), parse_unary());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    const Token &token = tokens_.peek();
    if (token.kind == TokenKind::Hash && token.text == "true") {
      tokens_.next();
      return Formula::truth();
    }
    if (token.kind == TokenKind::Hash && token.text == "false") {
      tokens_.next();
      return Formula::falsity();
    }
    if (token.is("(")) {
      if (parenthesis_starts_term())
        return parse_comparison();
      tokens_.next();
      Formula inner = parse_formula();
      tokens_.expect(")");
      return inner;
    }
    if (token.kind == TokenKind::Identifier && !token.suffix && !is_keyword(token)) {
      if (tokens_.peek(1).is("("))
        return parse_atom();
      if (!is_term_operator(tokens_.peek(1))) {
        tokens_.next();
        return Formula::atom(token.text);
      }
    }
    return parse_comparison();
  }

  // Looks past the balanced parenthesis at the cursor: an arithmetic or
  // relational operator afterwards means the parenthesis encloses a term.
  bool parenthesis_starts_term() const {
    std::size_t depth = 0;
    for (std::size_t ahead = 0;; ++ahead) {
      const Token &token = tokens_.peek(ahead);
      if (token.kind == TokenKind::End)
        return false;
      if (token.is("("))
        ++depth;
      else if (token.is(")") && --depth == 0)
        return is_term_operator(tokens_.peek(ahead + 1));
    }
  }

  Formula parse_atom() {
    const Token &name = tokens_.next();
    std::vector<Term> terms;
    tokens_.expect("(");
    if (!tokens_.peek().is(")")) {
      terms.push_back(parse_term());
      while (tokens_.accept(","))
        terms.push_back(parse_term());
    }
    tokens_.expect(")");
    return Formula::atom(name.text, std::move(terms));
  }

  Formula parse_comparison() {
    Term first = parse_term();
    std::vector<Guard> guards;
    while (is_relation(tokens_.peek())) {
      Relation relation = to_relation(tokens_.next());
      guards.push_back(Guard{relation, parse_term()});
    }
    if (guards.empty())
      tokens_.fail("comparison operator");
    return Formula::comparison(std::move(first), std::move(guards));
  }

  Term parse_term() {
    Term lhs = parse_multiplicative();
    while (true) {
      if (tokens_.peek().is("+")) {
        Location location = tokens_.next().location;
        lhs = sorted(location, [&] { return Term::add(std::move(lhs), parse_multiplicative()); });
      } else if (tokens_.peek().is("-")) {
        Location location = tokens_.next().location;
        lhs = sorted(location, [&] { return Term::subtract(std::move(lhs), parse_multiplicative()); });
      } else {
        return lhs;
      }
    }
  }

  Term parse_multiplicative() {
    Term lhs = parse_unary_term();
    while (tokens_.peek().is("*")) {
      Location location = tokens_.next().location;
      lhs = sorted(location, [&] { return Term::multiply(std::move(lhs), parse_unary_term()); });
    }
    return lhs;
  }

  Term parse_unary_term() {
    if (tokens_.peek().is("-")) {
      Location location = tokens_.next().location;
      if (tokens_.peek().kind == TokenKind::Number)
        return Term::numeral(parse_numeral(tokens_.next(), true));
      return sorted(location, [&] { return Term::negative(parse_unary_term()); });
    }
    return parse_primary_term();
  }

  Term parse_primary_term() {
    const Token &token = tokens_.peek();
    switch (token.kind) {
    case TokenKind::Number:
      tokens_.next();
      return Term::numeral(parse_numeral(token, false));
    case TokenKind::Variable:
      tokens_.next();
      return Term::variable(detail::parse_variable(token));
    case TokenKind::Identifier:
      if (is_keyword(token))
        break;
      tokens_.next();
      if (token.suffix)
        return Term::function_constant(token.text, parse_sort_suffix(token, true));
      return Term::symbol(token.text);
    case TokenKind::Hash:
      if (token.text == "inf") {
        tokens_.next();
        return Term::infimum();
      }
      if (token.text == "sup") {
        tokens_.next();
        return Term::supremum();
      }
      break;
    case TokenKind::Punct:
      if (token.is("(")) {
        tokens_.next();
        Term inner = parse_term();
        tokens_.expect(")");
        return inner;
      }
      if (token.is("/") || token.is("\\") || token.is(".."))
        throw SortError("operator `" + token.text + "` is not part of the target language");
      break;
    default:
      break;
    }
    tokens_.fail("term");
  }

  // Attaches a source location to sort errors raised while building a term.
  template <typename Build> Term sorted(Location location, Build build) {
    try {
      return build();
    } catch (const SortError &error) {
      throw SortError(std::to_string(location.line) + ":" + std::to_string(location.column) + ": " +
                      error.what());
    }
  }

  TokenStream &tokens_;
};

} // namespace

namespace detail {

Variable parse_variable(const Token &token) { return Variable{token.text, parse_sort_suffix(token, false)}; }

Formula parse_formula(TokenStream &tokens) { return FormulaParser(tokens).parse_formula(); }

} // namespace detail

Formula parse_formula(std::string_view text) {
  TokenStream tokens(anthem::detail::tokenize(text));
  Formula formula = detail::parse_formula(tokens);
  tokens.accept(".");
  if (!tokens.at_end())
    tokens.fail("end of formula");
  return formula;
}

Theory parse_theory(std::string_view text) {
  TokenStream tokens(anthem::detail::tokenize(text));
  Theory theory;
  while (!tokens.at_end()) {
    theory.formulas.push_back(detail::parse_formula(tokens));
    tokens.expect(".");
  }
  return theory;
}

} // namespace anthem::fol
