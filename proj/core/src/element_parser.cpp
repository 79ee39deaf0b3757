// Copyright 2026 The metasym Authors
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

#include "metasym/element_parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "metasym/errors.hpp"

namespace metasym {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  StructuredElement element() {
    skip();
    StructuredElement e = peek_word() == "blocks" ? blocks() : atom();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("element expression: " + what + " at position " + std::to_string(pos_) + " in '" +
                      std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string peek_word() const {
    size_t p = pos_;
    while (p < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p])))) ++p;
    return std::string(s_.substr(pos_, p - pos_));
  }

  std::string word() {
    std::string w = peek_word();
    if (w.empty()) fail("expected a keyword");
    pos_ += w.size();
    return w;
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Rational number() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-' ||
                                s_[pos_] == '+' || s_[pos_] == '/' || s_[pos_] == '.'))
      ++pos_;
    if (start == pos_) fail("expected a number");
    try {
      return parse_rational(s_.substr(start, pos_ - start));
    } catch (const Error&) {
      pos_ = start;
      fail("malformed number");
    }
  }

  int integer() {
    Rational x = number();
    if (x.get_den() != 1 || !x.get_num().fits_sint_p()) fail("expected an integer");
    return static_cast<int>(x.get_num().get_si());
  }

  std::vector<Rational> number_list() {
    std::vector<Rational> out{number()};
    while (accept(',')) out.push_back(number());
    return out;
  }

  StructuredElement atom() {
    skip();
    std::string kw = word();
    expect('(');
    StructuredElement e = [&]() -> StructuredElement {
      if (kw == "torus" || kw == "diag") return StructuredElement::torus(number_list());
      if (kw == "central") {
        Rational a = number();
        expect(',');
        return StructuredElement::central(a, integer());
      }
      if (kw == "id") return StructuredElement::identity(integer());
      if (kw == "sl2" || kw == "gl2") {
        auto v = number_list();
        if (v.size() != 4) fail(kw + " takes four entries");
        return kw == "sl2" ? StructuredElement::sl2(v[0], v[1], v[2], v[3])
                           : StructuredElement::gl2(v[0], v[1], v[2], v[3]);
      }
      if (kw == "unip") {
        int r = integer();
        if (r < 1) fail("rank must be positive");
        Matrix m = identity_matrix(r);
        while (accept(';')) {
          int i = integer();
          expect(',');
          int j = integer();
          expect(':');
          Rational x = number();
          if (i < 1 || j <= i || j > r) fail("unipotent entry must satisfy 1 <= i < j <= r");
          m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = x;
        }
        return StructuredElement::unipotent(std::move(m));
      }
      fail("unknown element kind '" + kw + "'");
    }();
    expect(')');
    return e;
  }

  StructuredElement blocks() {
    word();
    expect('[');
    std::vector<StructuredElement> parts{atom()};
    while (accept(',')) parts.push_back(atom());
    expect(']');
    return StructuredElement::block_diagonal(parts);
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

StructuredElement parse_element(std::string_view text) { return Parser(text).element(); }

}  // namespace metasym
