// Copyright 2026 The dsforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>

#include "dsforge/scalar.hpp"

namespace dsforge {

namespace {

// Recursive-descent parser; every method leaves pos_ after the consumed text.
class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Scalar v = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return v;
  }

 private:
  Scalar expr() {
    Scalar acc = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Scalar term() {
    Scalar acc = atom();
    for (;;) {
      skip_space();
      if (accept('*')) {
        acc *= atom();
      } else if (peek() == '/') {
        const std::size_t at = pos_++;
        Scalar d = atom();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  Scalar atom() {
    skip_space();
    if (at_end()) fail("expected a number, 'z' or '('");
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'z') {
      const std::size_t at = pos_++;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("expected field order after 'z'");
      }
      const Integer n = integer();
      if (n < 1) throw ParseError("root of unity order must be at least 1", at);
      if (!n.fits_ulong_p()) throw ParseError("root of unity order too large", at);
      std::int64_t k = 1;
      skip_space();
      if (accept('^')) {
        skip_space();
        const bool neg = accept('-');
        skip_space();
        const std::size_t exp_at = pos_;
        const Integer e = integer();
        if (!e.fits_slong_p()) throw ParseError("exponent too large", exp_at);
        k = neg ? -e.get_si() : e.get_si();
      }
      try {
        return Scalar::root_of_unity(n.get_ui(), k);
      } catch (const FieldOrderError& e) {
        throw ParseError(e.what(), at);
      }
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Integer num = integer();
      const std::size_t save = pos_;
      skip_space();
      if (peek() == '/') {
        const std::size_t slash = pos_;
        ++pos_;
        skip_space();
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
          const Integer den = integer();
          if (den == 0) throw ParseError("division by zero", slash);
          return Scalar(Rational(num, den));
        }
        // '/' followed by a non-integer atom: leave it to term().
        pos_ = slash;
        return Scalar(Rational(num));
      }
      pos_ = save;
      return Scalar(Rational(num));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool accept(char c) {
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace dsforge
