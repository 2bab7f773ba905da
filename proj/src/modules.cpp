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

#include "diffop/modules.hpp"

#include <algorithm>
#include <utility>

#include "diffop/hermite.hpp"
#include "diffop/poly.hpp"

namespace diffop {

namespace {

Poly random_poly(std::mt19937_64& rng, int max_degree, int coeff_bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
  std::vector<Rational> coeffs(deg(rng) + 1);
  for (auto& c : coeffs) c = Rational(coeff(rng));
  return Poly::from_coeffs(std::move(coeffs));
}

}  // namespace

std::vector<RatFunc> NaturalModule::act(const OreMatrix& r,
                                        const std::vector<RatFunc>& x) const {
  if (static_cast<int>(x.size()) != r.size())
    throw PreconditionError("the column does not match the matrix dimension");
  std::vector<RatFunc> out(x.size());
  for (int i = 0; i < r.size(); ++i)
    for (int j = 0; j < r.size(); ++j) out[i] += r.at(i, j).apply(x[j]);
  return out;
}

RatFunc NaturalModule::sample(std::mt19937_64& rng) const {
  Poly num = random_poly(rng, 2, 4);
  std::uniform_int_distribution<int> pick(0, 3);
  if (pick(rng) == 0) {
    std::uniform_int_distribution<long> shift(-3, 3);
    Poly den = Poly::from_coeffs({Rational(shift(rng)), Rational(1)});
    return RatFunc(std::move(num), std::move(den));
  }
  return RatFunc(std::move(num));
}

std::vector<RatFunc> NaturalModule::sample_column(std::mt19937_64& rng,
                                                  int dimension) const {
  std::vector<RatFunc> out(dimension);
  for (auto& f : out) f = sample(rng);
  return out;
}

OrePoly CyclicModule::sample(std::mt19937_64& rng) const {
  int bound = c_.order();
  if (bound == 0) return OrePoly::zero();
  std::vector<RatFunc> coeffs(bound);
  for (auto& f : coeffs) f = RatFunc(random_poly(rng, 1, 3));
  return OrePoly::from_coeffs(std::move(coeffs));
}

WitnessTrace thm33_trace(const OrePoly& a, const OrePoly& b) {
  if (b.is_zero())
    throw PreconditionError("the witness needs a regular second operator");
  if (!gcd_parts(a, b, Side::left).d.is_unit())
    throw PreconditionError("the operators are not left coprime");

  /* A zero a has no right lcm with b, so run the chain on a + b and undo the
     shift on the certificate afterwards.  Constants are central, which keeps
     every correction a plain ring operation. */
  bool shifted = a.is_zero();
  OrePoly a_work = shifted ? a + b : a;

  LcmCertificate cert = lcm(a_work, b, Side::right);
  WitnessTrace t;
  t.b1 = cert.b1;
  t.a1 = shifted ? cert.a1 - cert.b1 : cert.a1;
  t.m = b * t.a1;
  if (!(t.m == a * t.b1))
    throw InternalError("the lcm certificate does not match the input pair");

  /* The lcm cofactors are right coprime; their Bezout row pulls any common
     preimage back out of the intersection. */
  BezoutCertificate bez = gcd_extended(t.b1, cert.a1, Side::right);
  if (!bez.d.is_one())
    throw InternalError("the lcm cofactors are not right coprime");
  OrePoly u = shifted ? bez.u + bez.v : bez.u;
  OrePoly v = bez.v;

  DivisionResult pdiv = divide(OrePoly::one() - t.a1 * v, b, Side::left);
  if (!pdiv.remainder.is_zero())
    throw InternalError("the p certificate is not divisible by b");
  OrePoly p = std::move(pdiv.quotient);
  if (!(t.a1 * u == p * a))
    throw InternalError("the p certificate does not match a");

  DivisionResult qdiv = divide(t.b1 * v, b, Side::left);
  if (!qdiv.remainder.is_zero())
    throw InternalError("the q certificate is not divisible by b");
  OrePoly q = std::move(qdiv.quotient);
  if (!(OrePoly::one() - t.b1 * u == q * a))
    throw InternalError("the q certificate does not match a");

  /* Shift (u, v) by a central constant until both are nonzero.  Each of the
     two degeneracies rules out at most one constant, so five candidates are
     plenty. */
  for (long lam : {0l, 1l, -1l, 2l, -2l}) {
    OrePoly scale{RatFunc(Rational(lam))};
    OrePoly u_try = u + scale * a;
    OrePoly v_try = v - scale * b;
    if (u_try.is_zero() || v_try.is_zero()) continue;
    t.u = std::move(u_try);
    t.v = std::move(v_try);
    t.p = p + scale * t.a1;
    t.q = q - scale * t.b1;
    break;
  }
  if (t.u.is_zero() || t.v.is_zero())
    throw InternalError("no nonzero Bezout shift was found");
  t.u_regular = true;
  t.v_regular = true;

  if (!(t.u * t.b1 + t.v * t.a1 == OrePoly::one()))
    throw InternalError("the Bezout identity failed verification");
  if (!(OrePoly::one() - t.a1 * t.v == t.p * b) || !(t.a1 * t.u == t.p * a))
    throw InternalError("the p identities failed verification");
  if (!(OrePoly::one() - t.b1 * t.u == t.q * a) || !(t.b1 * t.v == t.q * b))
    throw InternalError("the q identities failed verification");
  return t;
}

bool skew_pair_check(const OrePoly& a, const OrePoly& b) {
  return (adjoint(a) * b + adjoint(b) * a).is_zero();
}

bool skew_acts_as_zero(const OrePoly& a, const OrePoly& b,
                       const CyclicModule& V) {
  OrePoly s = adjoint(a) * b + adjoint(b) * a;
  for (int k = 0; k < V.modulus().order(); ++k) {
    OrePoly basis = OrePoly::monomial(RatFunc(Rational(1)), k);
    if (!V.act(s, basis).is_zero()) return false;
  }
  return true;
}

KModClass pairing_class(const RatFunc& x, const RatFunc& y) {
  return {hermite_reduce(x * y).residue};
}

KModClass pairing_class(const std::vector<RatFunc>& x,
                        const std::vector<RatFunc>& y) {
  if (x.size() != y.size())
    throw PreconditionError("the pairing needs columns of one dimension");
  RatFunc sum;
  for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * y[i];
  return {hermite_reduce(sum).residue};
}

std::vector<Poly> kernel_polynomial(const OrePoly& b, int degree_bound) {
  if (b.is_zero())
    throw PreconditionError("the kernel search needs a regular operator");
  if (degree_bound < 0)
    throw PreconditionError("the degree bound must be nonnegative");

  /* Images of the monomial ansatz, brought over a common denominator so the
     constraints become one polynomial identity per x power. */
  int n = degree_bound + 1;
  std::vector<RatFunc> image(n);
  Poly common = Poly::one();
  for (int k = 0; k < n; ++k) {
    image[k] = b.apply(RatFunc(Poly::monomial(Rational(1), k)));
    if (!image[k].is_zero())
      common = divexact(common * image[k].den(), gcd(common, image[k].den()));
  }
  int max_deg = -1;
  std::vector<Poly> cleared(n);
  for (int k = 0; k < n; ++k) {
    if (image[k].is_zero()) continue;
    cleared[k] = image[k].num() * divexact(common, image[k].den());
    max_deg = std::max(max_deg, cleared[k].degree());
  }

  int rows = max_deg + 1;
  std::vector<std::vector<Rational>> mat(rows,
                                         std::vector<Rational>(n, Rational(0)));
  for (int k = 0; k < n; ++k)
    for (int power = 0; power <= cleared[k].degree(); ++power)
      mat[power][k] = cleared[k].coeff(power);

  /* Reduced row echelon form over Q, then one basis vector per free column. */
  std::vector<int> pivot_of_row;
  int rank = 0;
  for (int col = 0; col < n && rank < rows; ++col) {
    int lead = -1;
    for (int r = rank; r < rows; ++r)
      if (mat[r][col] != 0) {
        lead = r;
        break;
      }
    if (lead < 0) continue;
    std::swap(mat[rank], mat[lead]);
    Rational inv = 1 / mat[rank][col];
    for (int c = col; c < n; ++c) mat[rank][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || mat[r][col] == 0) continue;
      Rational factor = mat[r][col];
      for (int c = col; c < n; ++c) mat[r][c] -= factor * mat[rank][c];
    }
    pivot_of_row.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(n, false);
  for (int col : pivot_of_row) is_pivot[col] = true;
  std::vector<Poly> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> coeffs(n, Rational(0));
    coeffs[free] = 1;
    for (int r = 0; r < rank; ++r) coeffs[pivot_of_row[r]] = -mat[r][free];
    basis.push_back(Poly::from_coeffs(std::move(coeffs)));
  }
  return basis;
}

}  // namespace diffop
