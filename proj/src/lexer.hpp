#pragma once

#include <anthem/error.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace anthem::detail {

enum class TokenKind {
  Identifier, // [a-z][a-zA-Z0-9_]*, optionally followed by `$suffix`
  Variable,   // [A-Z][a-zA-Z0-9_]*, optionally followed by `$suffix`
  Number,
  Hash,       // #true, #false, #inf, #sup, ...
  Underscore, // anonymous variable
  Punct,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;                  // name without suffix, or the punctuation itself
  std::optional<std::string> suffix; // present iff a `$` followed the name
  Location location;

  bool is(std::string_view punct) const { return kind == TokenKind::Punct && text == punct; }
  bool is_word(std::string_view word) const {
    return kind == TokenKind::Identifier && text == word && !suffix;
  }
  std::string describe() const;
};

/// Splits text into tokens; `%` starts a comment running to the end of the line,
/// `%* ... *%` is a block comment.
std::vector<Token> tokenize(std::string_view text);

/// Cursor over a token vector with the small helpers every recursive-descent parser here needs.
class TokenStream {
public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token &peek(std::size_t ahead = 0) const {
    std::size_t index = std::min(position_ + ahead, tokens_.size() - 1);
    return tokens_[index];
  }
  const Token &next() {
    const Token &token = peek();
    if (position_ + 1 < tokens_.size())
      ++position_;
    return token;
  }
  bool at_end() const { return peek().kind == TokenKind::End; }

  bool accept(std::string_view punct) {
    if (!peek().is(punct))
      return false;
    next();
    return true;
  }
  bool accept_word(std::string_view word) {
    if (!peek().is_word(word))
      return false;
    next();
    return true;
  }
  const Token &expect(std::string_view punct);
  void expect_word(std::string_view word);

  [[noreturn]] void fail(const std::string &expected) const;

  std::size_t position() const { return position_; }
  void reset(std::size_t position) { position_ = position; }

private:
  std::vector<Token> tokens_;
  std::size_t position_ = 0;
};

} // namespace anthem::detail
