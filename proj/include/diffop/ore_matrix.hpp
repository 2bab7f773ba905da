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

#ifndef DIFFOP_ORE_MATRIX_HPP
#define DIFFOP_ORE_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "diffop/ore_poly.hpp"

namespace diffop {

/* Square matrix over the operator ring, row major. */
class OreMatrix {
 public:
  OreMatrix() : size_(0) {}
  explicit OreMatrix(int size);
  static OreMatrix identity(int size);
  static OreMatrix scalar(int size, const OrePoly& p);
  static OreMatrix from_entries(int size, std::vector<OrePoly> entries);

  int size() const { return size_; }
  const OrePoly& at(int row, int col) const;
  OrePoly& at(int row, int col);

  bool is_zero() const;
  bool is_identity() const;

  OreMatrix operator-() const;
  OreMatrix& operator+=(const OreMatrix& rhs);
  OreMatrix& operator-=(const OreMatrix& rhs);
  friend OreMatrix operator+(OreMatrix lhs, const OreMatrix& rhs) {
    return lhs += rhs;
  }
  friend OreMatrix operator-(OreMatrix lhs, const OreMatrix& rhs) {
    return lhs -= rhs;
  }
  friend OreMatrix operator*(const OreMatrix& lhs, const OreMatrix& rhs);
  friend bool operator==(const OreMatrix& lhs, const OreMatrix& rhs) {
    return lhs.size_ == rhs.size_ && lhs.entries_ == rhs.entries_;
  }
  friend bool operator!=(const OreMatrix& lhs, const OreMatrix& rhs) {
    return !(lhs == rhs);
  }

  /* Componentwise action on a tuple of functions. */
  std::vector<RatFunc> apply(const std::vector<RatFunc>& f) const;

 private:
  int size_;
  std::vector<OrePoly> entries_;
};

/* Transpose of the entrywise adjoint, so (A*B) maps to adjoint(B)*adjoint(A). */
OreMatrix adjoint(const OreMatrix& m);

/*
  Row reduction by elementary operations: swapping rows, scaling a row by an
  order-zero unit, and adding a left operator multiple of one row to another.
  The result is a staircase form with monic pivots of minimal order in their
  column and all entries above a pivot of strictly smaller order.

  h = u * input and input = uinv * h, with u * uinv the identity.
*/
struct MatrixHermiteForm {
  OreMatrix h;
  OreMatrix u;
  OreMatrix uinv;
};
MatrixHermiteForm row_hermite(const OreMatrix& m);

/* Same reduction without the inverse transform, which costs a second
   reduction pass. */
struct MatrixStaircase {
  OreMatrix h;
  OreMatrix u;
};
MatrixStaircase row_staircase(const OreMatrix& m);

/* A matrix is regular when its rows are independent, equivalently when the
   staircase form has a full diagonal. */
bool is_regular(const OreMatrix& m);

/* Total order of the staircase diagonal; empty for non-regular input.
   Additive on products of regular matrices and zero exactly on the
   invertible ones. */
std::optional<int> ddet_degree(const OreMatrix& m);

bool is_unimodular(const OreMatrix& m);
OreMatrix unimodular_inverse(const OreMatrix& m);

/*
  Greatest common divisor of a pair of matrices, with certificates.

  side == right:  d = u*a + v*b,  a = a1*d,  b = b1*d
  side == left:   d = a*u + b*v,  a = d*a1,  b = d*b1
*/
struct MatrixBezoutCertificate {
  OreMatrix d, u, v, a1, b1;
  Side side;
};
MatrixBezoutCertificate matrix_gcd(const OreMatrix& a, const OreMatrix& b,
                                   Side side);

/*
  Least common multiple of two regular matrices.

  side == right:  m = a*b1 = b*a1
  side == left:   m = b1*a = a1*b
*/
struct MatrixLcmCertificate {
  OreMatrix m, a1, b1;
  Side side;
};
MatrixLcmCertificate matrix_lcm(const OreMatrix& a, const OreMatrix& b,
                                Side side);

/*
  Right multiple shared by a and b, dropping the minimality demanded by
  matrix_lcm so that a may be singular or zero.

  side == right:  a*b1 = b*a1
  side == left:   b1*a = a1*b

  b must be regular; b1 is then regular as well.
*/
struct MatrixOreWitness {
  OreMatrix a1, b1;
  Side side;
};
MatrixOreWitness matrix_ore_witness(const OreMatrix& a, const OreMatrix& b,
                                    Side side);

/* Exact quotient, throwing PreconditionError when the division leaves a
   remainder.  side == left solves m = q*b, side == right solves m = b*q;
   b must be regular. */
OreMatrix exact_quotient(const OreMatrix& m, const OreMatrix& b, Side side);

/*
  Searches for a shift q making a + q*b (side left) or a + b*q (side right)
  regular.  Candidates are drawn from a deterministic ramp (small scalar
  multiples of the identity, then diagonal sign patterns) followed by seeded
  random constant matrices and then random first-order matrices.  Throws
  SearchError when the budget runs out and PreconditionError when b is not
  regular.
*/
struct RegularizeResult {
  OreMatrix q;
  OreMatrix value;
  int attempts;
};
RegularizeResult regularize(const OreMatrix& a, const OreMatrix& b, Side side,
                            std::uint64_t seed = 0, int budget = 10000);

/* Same candidate stream, applied to two pairs at once: finds q with
   a1 + q*b1 and a2 + q*b2 (side left; mirrored on the right)
   simultaneously regular. */
struct RegularizePairResult {
  OreMatrix q;
  OreMatrix value1;
  OreMatrix value2;
  int attempts;
};
RegularizePairResult regularize_pair(const OreMatrix& a1, const OreMatrix& b1,
                                     const OreMatrix& a2, const OreMatrix& b2,
                                     Side side, std::uint64_t seed = 0,
                                     int budget = 10000);

}  // namespace diffop

#endif  // DIFFOP_ORE_MATRIX_HPP
