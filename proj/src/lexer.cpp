#include "lexer.hpp"

#include <array>
#include <cctype>

namespace anthem::detail {

namespace {

bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Longest match first.
constexpr std::array<std::string_view, 28> kPunctuation = {
    "<->", ":-", "->", "<-", "<=", ">=", "!=", "..", "(", ")", ",", ".", ":", ";",
    "[",   "]",  "{",  "}",  "<",  ">",  "=",  "+",  "-", "*", "/", "\\", "|", "^",
};

} // namespace

std::string Token::describe() const {
  switch (kind) {
  case TokenKind::End:
    return "end of input";
  case TokenKind::Number:
    return "number `" + text + "`";
  case TokenKind::Identifier:
  case TokenKind::Variable:
    return "`" + text + (suffix ? "$" + *suffix : "") + "`";
  case TokenKind::Hash:
    return "`#" + text + "`";
  case TokenKind::Underscore:
    return "`_`";
  case TokenKind::Punct:
    return "`" + text + "`";
  }
  return text;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  Location location;

  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++location.line;
        location.column = 1;
      } else {
        ++location.column;
      }
    }
  };

  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      if (i + 1 < text.size() && text[i + 1] == '*') {
        std::size_t close = text.find("*%", i + 2);
        if (close == std::string_view::npos)
          throw SyntaxError(location, "unterminated block comment");
        advance(close + 2 - i);
      } else {
        while (i < text.size() && text[i] != '\n')
          advance(1);
      }
      continue;
    }

    Token token;
    token.location = location;

    auto read_name = [&](TokenKind kind) {
      std::size_t start = i;
      while (i < text.size() && is_name_char(text[i]))
        advance(1);
      token.kind = kind;
      token.text = std::string(text.substr(start, i - start));
      if (i < text.size() && text[i] == '$') {
        advance(1);
        std::size_t suffix_start = i;
        while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])))
          advance(1);
        token.suffix = std::string(text.substr(suffix_start, i - suffix_start));
      }
    };

    if (std::islower(static_cast<unsigned char>(c))) {
      read_name(TokenKind::Identifier);
    } else if (std::isupper(static_cast<unsigned char>(c))) {
      read_name(TokenKind::Variable);
    } else if (c == '_') {
      std::size_t start = i;
      while (i < text.size() && is_name_char(text[i]))
        advance(1);
      token.kind = TokenKind::Underscore;
      token.text = std::string(text.substr(start, i - start));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        advance(1);
      token.kind = TokenKind::Number;
      token.text = std::string(text.substr(start, i - start));
    } else if (c == '#') {
      advance(1);
      std::size_t start = i;
      while (i < text.size() && is_name_char(text[i]))
        advance(1);
      token.kind = TokenKind::Hash;
      token.text = std::string(text.substr(start, i - start));
    } else {
      bool matched = false;
      for (std::string_view punct : kPunctuation) {
        if (text.substr(i, punct.size()) == punct) {
          token.kind = TokenKind::Punct;
          token.text = std::string(punct);
          advance(punct.size());
          matched = true;
          break;
        }
      }
      if (!matched)
        throw SyntaxError(location, std::string("unexpected character `") + c + "`");
    }
    tokens.push_back(std::move(token));
  }

  Token end;
  end.kind = TokenKind::End;
  end.location = location;
  tokens.push_back(end);
  return tokens;
}

const Token &TokenStream::expect(std::string_view punct) {
  if (!peek().is(punct))
    fail("`" + std::string(punct) + "`");
  return next();
}

void TokenStream::expect_word(std::string_view word) {
  if (!peek().is_word(word))
    fail("`" + std::string(word) + "`");
  next();
}

void TokenStream::fail(const std::string &expected) const {
  throw SyntaxError(peek().location, "expected " + expected + ", found " + peek().describe());
}

} // namespace anthem::detail
