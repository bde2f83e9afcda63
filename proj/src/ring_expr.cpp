// Copyright 2026 The finring Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "finring/ring_expr.hpp"

#include <array>
#include <cctype>
#include <limits>

#include "finring/galois.hpp"
#include "finring/matrix.hpp"
#include "finring/modular.hpp"
#include "finring/product.hpp"

namespace finring {

namespace {

enum class Tok { kKeyword, kInt, kLParen, kRParen, kComma, kEnd, kInvalid };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
  std::uint64_t value = 0;
};

// Longest keywords first so "Prod" wins over a shorter prefix.
constexpr std::array<std::string_view, 7> kKeywords{"Prod", "GF", "UT", "Z", "M", "B", "x"};

const std::vector<std::string>& term_start() {
  static const std::vector<std::string> set{"'Z'", "'GF'", "'M'", "'UT'", "'B'", "'Prod'", "'('"};
  return set;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  RingExpr parse() {
    RingExpr e = expr();
    if (tok_.kind != Tok::kEnd) fail({"'x'", "end of input"});
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found;
    switch (tok_.kind) {
      case Tok::kEnd: found = "end of input"; break;
      case Tok::kInt: found = "integer " + tok_.text; break;
      default: found = "'" + tok_.text + "'"; break;
    }
    throw ParseError(tok_.column, std::move(expected), std::move(found));
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t column = pos_ + 1;
    if (pos_ == text_.size()) {
      tok_ = {Tok::kEnd, "", column};
      return;
    }
    const char c = text_[pos_];
    if (c == '(' || c == ')' || c == ',') {
      ++pos_;
      tok_ = {c == '(' ? Tok::kLParen : c == ')' ? Tok::kRParen : Tok::kComma, std::string(1, c), column};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      tok_ = {Tok::kInt, std::string(text_.substr(start, pos_ - start)), column};
      return;
    }
    for (auto kw : kKeywords) {
      if (text_.substr(pos_, kw.size()) == kw) {
        pos_ += kw.size();
        tok_ = {Tok::kKeyword, std::string(kw), column};
        return;
      }
    }
    // Report the rest of the offending word.
    std::size_t end = pos_ + 1;
    while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
    tok_ = {Tok::kInvalid, std::string(text_.substr(pos_, end - pos_)), column};
  }

  bool at_keyword(std::string_view kw) const { return tok_.kind == Tok::kKeyword && tok_.text == kw; }

  void expect(Tok kind, const std::string& shown, std::vector<std::string> also = {}) {
    if (tok_.kind != kind) {
      also.push_back(shown);
      fail(std::move(also));
    }
    advance();
  }

  std::uint64_t integer() {
    if (tok_.kind != Tok::kInt) fail({"integer >= 1"});
    std::uint64_t v = 0;
    for (char c : tok_.text) {
      const std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail({"integer >= 1 (fits in 64 bits)"});
      v = v * 10 + digit;
    }
    if (v == 0) fail({"integer >= 1"});
    advance();
    return v;
  }

  RingExpr expr() {
    RingExpr first = term();
    if (!at_keyword("x")) return first;
    RingExpr prod{RingExpr::Kind::kProduct, 0, {std::move(first)}};
    while (at_keyword("x")) {
      advance();
      prod.args.push_back(term());
    }
    return prod;
  }

  RingExpr unary(RingExpr::Kind kind) {
    advance();
    expect(Tok::kLParen, "'('");
    RingExpr e{kind, integer(), {}};
    expect(Tok::kRParen, "')'");
    return e;
  }

  RingExpr matrix(RingExpr::Kind kind) {
    advance();
    expect(Tok::kLParen, "'('");
    const std::uint64_t n = integer();
    expect(Tok::kComma, "','");
    RingExpr base = expr();
    expect(Tok::kRParen, "')'", {"'x'"});
    return RingExpr{kind, n, {std::move(base)}};
  }

  RingExpr term() {
    if (tok_.kind == Tok::kLParen) {
      advance();
      RingExpr inner = expr();
      expect(Tok::kRParen, "')'", {"'x'"});
      return inner;
    }
    if (tok_.kind != Tok::kKeyword || tok_.text == "x") fail(term_start());
    if (tok_.text == "Z") return unary(RingExpr::Kind::kZn);
    if (tok_.text == "GF") return unary(RingExpr::Kind::kGF);
    if (tok_.text == "B") return unary(RingExpr::Kind::kBoolean);
    if (tok_.text == "M") return matrix(RingExpr::Kind::kMatrix);
    if (tok_.text == "UT") return matrix(RingExpr::Kind::kTriangular);
    // Prod
    advance();
    expect(Tok::kLParen, "'('");
    RingExpr prod{RingExpr::Kind::kProduct, 0, {expr()}};
    while (tok_.kind == Tok::kComma) {
      advance();
      prod.args.push_back(expr());
    }
    expect(Tok::kRParen, "')'", {"'x'", "','"});
    return prod;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token tok_{Tok::kEnd, "", 1};
};

bool is_chain(const RingExpr& e) { return e.kind == RingExpr::Kind::kProduct && e.args.size() > 1; }

}  // namespace

RingExpr parse_ring_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const RingExpr& e) {
  const std::string n = std::to_string(e.n);
  switch (e.kind) {
    case RingExpr::Kind::kZn: return "Z(" + n + ")";
    case RingExpr::Kind::kGF: return "GF(" + n + ")";
    case RingExpr::Kind::kBoolean: return "B(" + n + ")";
    case RingExpr::Kind::kMatrix: return "M(" + n + ", " + to_string(e.args.at(0)) + ")";
    case RingExpr::Kind::kTriangular: return "UT(" + n + ", " + to_string(e.args.at(0)) + ")";
    case RingExpr::Kind::kProduct: {
      if (e.args.size() == 1) return "Prod(" + to_string(e.args[0]) + ")";
      std::string out;
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += " x ";
        out += is_chain(e.args[i]) ? "(" + to_string(e.args[i]) + ")" : to_string(e.args[i]);
      }
      return out;
    }
  }
  return {};
}

RingPtr build_ring(const RingExpr& e) {
  switch (e.kind) {
    case RingExpr::Kind::kZn: return make_zn(e.n);
    case RingExpr::Kind::kGF: return make_gf(e.n);
    case RingExpr::Kind::kMatrix: return make_matrix_ring(e.n, build_ring(e.args.at(0)));
    case RingExpr::Kind::kTriangular: return make_triangular_ring(e.n, build_ring(e.args.at(0)));
    case RingExpr::Kind::kBoolean: {
      if (e.n > 32) throw ConstructionError("B(" + std::to_string(e.n) + ") exceeds the order cap");
      const RingPtr z2 = make_zn(2);
      return make_product(std::vector<RingPtr>(e.n, z2));
    }
    case RingExpr::Kind::kProduct: {
      std::vector<RingPtr> factors;
      for (const auto& a : e.args) factors.push_back(build_ring(a));
      return make_product(std::move(factors));
    }
  }
  throw ConstructionError("unknown ring expression");
}

}  // namespace finring
