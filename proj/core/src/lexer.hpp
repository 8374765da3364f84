#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "telescope/errors.hpp"

namespace telescope::detail {

enum class TokenKind { number, ident, punct, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c >= '0' && c <= '9') {
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
        ++i;
      }
      out.push_back({TokenKind::number, std::string(s.substr(start, i - start)), start});
    } else if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
      while (i < s.size() && ((s[i] >= 'a' && s[i] <= 'z') || (s[i] >= 'A' && s[i] <= 'Z') ||
                              (s[i] >= '0' && s[i] <= '9') || s[i] == '_')) {
        ++i;
      }
      out.push_back({TokenKind::ident, std::string(s.substr(start, i - start)), start});
    } else if (std::string_view("+-*/^(),[]").find(c) != std::string_view::npos) {
      out.push_back({TokenKind::punct, std::string(1, c), start});
      ++i;
    } else {
      throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({TokenKind::end, "", s.size()});
  return out;
}

// Cursor over a token stream with the usual peek/accept/expect helpers.
class TokenCursor {
 public:
  explicit TokenCursor(std::string_view text) : tokens_(tokenize(text)) {}

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) {
      ++pos_;
    }
    return t;
  }
  bool at_end() const { return peek().kind == TokenKind::end; }
  bool is_punct(char c, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == TokenKind::punct && t.text[0] == c;
  }
  bool is_ident(std::string_view name) const {
    return peek().kind == TokenKind::ident && peek().text == name;
  }
  bool accept(char c) {
    if (is_punct(c)) {
      next();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'");
    }
  }
  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    const std::string found = t.kind == TokenKind::end ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.pos, message + ", found " + found);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace telescope::detail
