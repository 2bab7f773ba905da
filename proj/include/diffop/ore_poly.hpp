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

#include <climits>
#include <utility>
#include <vector>

#include "diffop/ratfunc.hpp"

namespace diffop {

/* Which side a quotient, gcd or lcm lives on.  The precise meaning is fixed
   by each operation's contract:

     divide,  left : a = q * b + r      right: a = b * q + r
     gcd,     right: d = u*a + v*b generates R*a + R*b, a = a1*d, b = b1*d
              left : d = a*u + b*v generates a*R + b*R, a = d*a1, b = d*b1
     lcm,     right: m = a*b1 = b*a1 generates a*R  intersect  b*R
              left : m = b1*a = a1*b generates R*a  intersect  R*b        */
enum class Side { left, right };

inline const char* side_name(Side s) {
  return s == Side::left ? "left" : "right";
}

/* order() of the zero operator: a sentinel strictly below any real order,
   chosen small enough that sums of two sentinels do not overflow. */
inline constexpr int kOrderNegInf = INT_MIN / 4;

/* Differential operator with coefficients in Q(x), written
   sum c_i(x) * D^i, under the commutation rule D * f = f * D + f'.
   Values are immutable in spirit: every operation returns a new operator in
   normalized form (no stored zero leading coefficient). */
class OrePoly {
 public:
  OrePoly() = default;
  explicit OrePoly(RatFunc constant);
  explicit OrePoly(const Rational& constant) : OrePoly(RatFunc(constant)) {}

  static OrePoly d();                         // the derivation D
  static OrePoly variable();                  // x as an order-0 operator
  static OrePoly monomial(RatFunc coeff, int order);
  static OrePoly from_coeffs(std::vector<RatFunc> coeffs);

  static const OrePoly& zero();
  static const OrePoly& one();

  int order() const {
    return coeffs_.empty() ? kOrderNegInf : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  /* Units of the ring are the nonzero elements of Q(x). */
  bool is_unit() const { return coeffs_.size() == 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

  RatFunc coeff(int i) const;
  const RatFunc& leading() const;
  const std::vector<RatFunc>& coeffs() const { return coeffs_; }

  /* Inverse of a unit, as an order-0 operator. */
  OrePoly unit_inverse() const;

  OrePoly operator-() const;
  OrePoly& operator+=(const OrePoly& rhs);
  OrePoly& operator-=(const OrePoly& rhs);

  friend OrePoly operator+(OrePoly lhs, const OrePoly& rhs) {
    return lhs += rhs;
  }
  friend OrePoly operator-(OrePoly lhs, const OrePoly& rhs) {
    return lhs -= rhs;
  }
  friend OrePoly operator*(const OrePoly& lhs, const OrePoly& rhs);

  friend bool operator==(const OrePoly& lhs, const OrePoly& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }
  friend bool operator!=(const OrePoly& lhs, const OrePoly& rhs) {
    return !(lhs == rhs);
  }

  /* Natural action on Q(x): sum c_i * f^(i). */
  RatFunc apply(const RatFunc& f) const;

 private:
  void trim();

  std::vector<RatFunc> coeffs_;
};

struct DivisionResult {
  OrePoly quotient;
  OrePoly remainder;
  Side side;  // left: a = q*b + r,  right: a = b*q + r
};

/* Euclidean division; order(remainder) < order(b) on either side. */
DivisionResult divide(const OrePoly& a, const OrePoly& b, Side side);

/* Quotient of an exact division (remainder known to vanish by theory);
   throws InternalError otherwise.  side as in divide. */
OrePoly exact_quotient(const OrePoly& a, const OrePoly& b, Side side);

struct BezoutCertificate {
  OrePoly d;       // monic gcd
  OrePoly u, v;    // right: d = u*a + v*b,   left: d = a*u + b*v
  OrePoly a1, b1;  // right: a = a1*d, b = b1*d,  left: a = d*a1, b = d*b1
  Side side;
};

/* Extended Euclidean algorithm. gcd(0, 0) is rejected. */
BezoutCertificate gcd_extended(const OrePoly& a, const OrePoly& b, Side side);

struct GcdParts {
  OrePoly d;       // monic gcd
  OrePoly a1, b1;  // right: a = a1*d, b = b1*d,  left: a = d*a1, b = d*b1
  Side side;
};

/* Gcd and quotients without the Bezout cofactors.  Much cheaper than
   gcd_extended when the inputs carry large coefficients, since the cofactor
   rows dominate the cost of the remainder chain. */
GcdParts gcd_parts(const OrePoly& a, const OrePoly& b, Side side);

struct LcmCertificate {
  OrePoly m;       // monic least common multiple
  OrePoly a1, b1;  // right: m = a*b1 = b*a1,  left: m = b1*a = a1*b
  Side side;
};

/* Least common multiple of two nonzero operators;
   order(m) = order(a) + order(b) - order(gcd on the opposite side). */
LcmCertificate lcm(const OrePoly& a, const OrePoly& b, Side side);

/* Ore condition witness: (a1, b1) with b * a1 = a * b1 and b1 != 0.
   Needs b != 0. */
std::pair<OrePoly, OrePoly> ore_witness(const OrePoly& a, const OrePoly& b);

/* Formal adjoint: (sum f_i D^i)* = sum (-D)^i f_i.  An anti-involution. */
OrePoly adjoint(const OrePoly& a);

}  // namespace diffop
