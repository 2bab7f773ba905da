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

#pragma once

#include <utility>
#include <vector>

#include "diffop/rational.hpp"

namespace diffop {

/* Dense univariate polynomial over Q in the variable x.  Coefficients are
   stored little-endian; the zero polynomial is the empty sequence, so the
   leading stored coefficient is always nonzero. */
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& constant);
  explicit Poly(long constant) : Poly(Rational(constant)) {}

  static Poly variable();
  static Poly monomial(const Rational& coeff, int power);
  static Poly from_coeffs(std::vector<Rational> coeffs);

  static const Poly& zero();
  static const Poly& one();

  /* -1 for the zero polynomial. */
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /* Zero outside the stored range. */
  Rational coeff(int power) const;
  const Rational& leading() const;
  Rational constant_term() const { return coeff(0); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& scalar);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Rational& lhs, Poly rhs) { return rhs *= lhs; }

  friend bool operator==(const Poly& lhs, const Poly& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }
  friend bool operator!=(const Poly& lhs, const Poly& rhs) {
    return !(lhs == rhs);
  }

  Poly derivative() const;
  Poly antiderivative() const;
  Poly monic() const;
  Rational eval(const Rational& point) const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/* Euclidean division: a = q * b + rem with deg(rem) < deg(b). */
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

/* Exact quotient; throws InternalError if b does not divide a. */
Poly divexact(const Poly& a, const Poly& b);

/* Monic gcd; gcd(0, 0) = 0. */
Poly gcd(const Poly& a, const Poly& b);

/* Positive rational g such that p / g has coprime integer coefficients;
   zero for the zero polynomial. */
Rational coefficient_content(const Poly& p);

struct PolyXgcd {
  Poly g, s, t;  // g = s * a + t * b, g monic (or zero)
};

PolyXgcd xgcd(const Poly& a, const Poly& b);

/* Solves s * a + t * b = c with deg(s) < deg(b) - deg(gcd(a, b)).
   Requires gcd(a, b) | c. */
std::pair<Poly, Poly> solve_diophantine(const Poly& a, const Poly& b,
                                        const Poly& c);

}  // namespace diffop
