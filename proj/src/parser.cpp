/*
   Copyright 2026 diffop developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "diffop/parser.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace diffop {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  OrePoly run() {
    OrePoly result = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  OrePoly expr() {
    skip_ws();
    bool negate = consume('-');
    OrePoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      if (consume('+'))
        acc += term();
      else if (consume('-'))
        acc -= term();
      else
        return acc;
    }
  }

  OrePoly term() {
    OrePoly acc = factor();
    for (;;) {
      skip_ws();
      if (consume('*')) {
        acc = acc * factor();
      } else if (consume('/')) {
        std::size_t at = pos_;
        OrePoly divisor = factor();
        if (divisor.is_zero()) fail("division by zero", at);
        if (!divisor.is_unit())
          fail("division requires an order-zero divisor", at);
        acc = acc * divisor.unit_inverse();
      } else {
        return acc;
      }
    }
  }

  OrePoly factor() {
    OrePoly b = base();
    skip_ws();
    if (!consume('^')) return b;
    skip_ws();
    unsigned long e = integer_literal();
    OrePoly acc = OrePoly::one();
    for (unsigned long i = 0; i < e; ++i) acc = acc * b;
    return acc;
  }

  OrePoly base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      OrePoly inner = expr();
      skip_ws();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'D') {
      ++pos_;
      return OrePoly::d();
    }
    if (c == 'x') {
      ++pos_;
      return OrePoly::variable();
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return OrePoly(Rational(integer_literal()));
    fail("expected 'D', 'x', a number, or '('");
  }

  unsigned long integer_literal() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected a number");
    unsigned long value = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      if (value > (1ul << 60)) fail("number literal too large", start);
      value = value * 10 + static_cast<unsigned long>(text_[i] - '0');
    }
    return value;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) { fail(what, pos_); }

  [[noreturn]] void fail(const std::string& what, std::size_t at) {
    throw ParseError(what, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_negative(const Rational& q) { return sgn(q) < 0; }

/* One additive piece of a printed expression. */
struct Piece {
  bool negative = false;
  std::string text;
};

std::string monomial_string(const Rational& coeff, int degree) {
  std::string out;
  if (degree == 0) return to_string(coeff);
  if (coeff != 1) out = to_string(coeff) + "*";
  out += "x";
  if (degree > 1) out += "^" + std::to_string(degree);
  return out;
}

/* Signed rendering of a polynomial, used inside parentheses. */
std::string poly_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (c == 0) continue;
    bool neg = is_negative(c);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? "-" : "+";
    }
    out += monomial_string(neg ? Rational(-c) : c, i);
  }
  return out;
}

bool is_single_monomial(const Poly& p) {
  if (p.is_zero()) return false;
  for (int i = 0; i < p.degree(); ++i)
    if (p.coeff(i) != 0) return false;
  return true;
}

bool is_monic_power_of_x(const Poly& p) {
  return is_single_monomial(p) && p.leading() == 1;
}

/* Renders |f| as a term-level product, assuming the leading coefficient of
   the numerator is positive. */
std::string magnitude_string(const RatFunc& f) {
  std::string num = is_single_monomial(f.num())
                        ? monomial_string(f.num().leading(), f.num().degree())
                        : "(" + poly_string(f.num()) + ")";
  if (f.den().is_one()) return num;
  std::string den = is_monic_power_of_x(f.den())
                        ? monomial_string(Rational(1), f.den().degree())
                        : "(" + poly_string(f.den()) + ")";
  return num + "/" + den;
}

std::string d_string(int order) {
  if (order == 1) return "D";
  return "D^" + std::to_string(order);
}

/* Splits a coefficient into additive pieces.  Polynomial coefficients of the
   order-zero term are flattened into one piece per monomial so the printed
   sum needs no parentheses there. */
std::vector<Piece> coefficient_pieces(const RatFunc& f, int order) {
  std::vector<Piece> pieces;
  if (order == 0 && f.den().is_one()) {
    for (int i = f.num().degree(); i >= 0; --i) {
      Rational c = f.num().coeff(i);
      if (c == 0) continue;
      bool neg = is_negative(c);
      pieces.push_back({neg, monomial_string(neg ? Rational(-c) : c, i)});
    }
    return pieces;
  }
  bool neg = is_negative(f.num().leading());
  RatFunc mag = neg ? -f : f;
  if (order == 0) {
    pieces.push_back({neg, magnitude_string(mag)});
    return pieces;
  }
  if (mag.is_one()) {
    pieces.push_back({neg, d_string(order)});
    return pieces;
  }
  pieces.push_back({neg, magnitude_string(mag) + "*" + d_string(order)});
  return pieces;
}

std::string assemble(const std::vector<Piece>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0)
      out += pieces[i].negative ? "-" : "";
    else
      out += pieces[i].negative ? " - " : " + ";
    out += pieces[i].text;
  }
  return out;
}

}  // namespace

OrePoly parse_operator(std::string_view text) { return Parser(text).run(); }

RatFunc parse_ratfunc(std::string_view text) {
  OrePoly p = Parser(text).run();
  if (p.order() > 0)
    throw ParseError("expected an expression without 'D'", text.size());
  return p.coeff(0);
}

Side parse_side(std::string_view text) {
  if (text == "left") return Side::left;
  if (text == "right") return Side::right;
  throw ParseError("side must be 'left' or 'right'", 0);
}

std::string to_string(const OrePoly& a) {
  std::vector<Piece> pieces;
  for (int i = a.order(); i >= 0; --i) {
    RatFunc c = a.coeff(i);
    if (c.is_zero()) continue;
    for (auto& piece : coefficient_pieces(c, i))
      pieces.push_back(std::move(piece));
  }
  return assemble(pieces);
}

std::string to_string(const RatFunc& f) {
  return to_string(OrePoly(f));
}

}  // namespace diffop
