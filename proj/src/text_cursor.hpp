#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "spdom/error.hpp"

namespace spdom::detail {

// Shared scanner for the text grammars. Whitespace is insignificant
// everywhere, so every lookahead skips it first.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool done() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool try_eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool try_eat(std::string_view word) {
    skip_ws();
    if (text.substr(pos, word.size()) == word) {
      pos += word.size();
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& what) {
    if (!try_eat(c)) fail("expected '" + std::string(1, c) + "' in " + what);
  }

  void expect(std::string_view word, const std::string& what) {
    if (!try_eat(word)) fail("expected \"" + std::string(word) + "\" in " + what);
  }

  bool at_digit() {
    skip_ws();
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }

  mpz_class nat(const std::string& what) {
    skip_ws();
    if (!at_digit()) fail("expected a number in " + what);
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return mpz_class(std::string(text.substr(start, pos - start)), 10);
  }

  mpz_class integer(const std::string& what) {
    skip_ws();
    bool neg = try_eat('-');
    mpz_class v = nat(what);
    return neg ? mpz_class(-v) : v;
  }

  void expect_end(const std::string& what) {
    if (!done()) fail("unexpected trailing input after " + what);
  }

  [[noreturn]] void fail(const std::string& message) { throw ParseError(message, pos); }
};

}  // namespace spdom::detail
