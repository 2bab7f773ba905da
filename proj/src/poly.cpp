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

#include "diffop/poly.hpp"

#include <algorithm>

namespace diffop {

Poly::Poly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Poly Poly::variable() { return monomial(Rational(1), 1); }

Poly Poly::monomial(const Rational& coeff, int power) {
  Poly p;
  if (coeff != 0) {
    p.coeffs_.assign(static_cast<std::size_t>(power) + 1, Rational(0));
    p.coeffs_.back() = coeff;
  }
  return p;
}

Poly Poly::from_coeffs(std::vector<Rational> coeffs) {
  Poly p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

const Poly& Poly::zero() {
  static const Poly z;
  return z;
}

const Poly& Poly::one() {
  static const Poly o{Rational(1)};
  return o;
}

Rational Poly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

const Rational& Poly::leading() const { return coeffs_.back(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Poly();
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1,
                            Rational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Poly::from_coeffs(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Poly::from_coeffs(std::move(out));
}

Poly Poly::antiderivative() const {
  if (coeffs_.empty()) return Poly();
  std::vector<Rational> out(coeffs_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
  return Poly::from_coeffs(std::move(out));
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  Poly out = *this;
  Rational inv = 1 / leading();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

Rational Poly::eval(const Rational& point) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * point + *it;
  return acc;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rational> quot(
      static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
  const auto& bc = b.coeffs();
  int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    Rational c = rem[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    c /= bc.back();
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] -=
          c * bc[static_cast<std::size_t>(j)];
  }
  return {Poly::from_coeffs(std::move(quot)), Poly::from_coeffs(std::move(rem))};
}

Poly divexact(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero())
    throw InternalError("polynomial division expected to be exact");
  return q;
}

namespace {

/* Integer polynomial helpers for the primitive PRS gcd.  Keeping the
   remainder sequence over Z with content stripped at each step avoids the
   coefficient blowup of naive rational Euclid. */
using ZPoly = std::vector<Integer>;

void z_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer z_content(const ZPoly& p) {
  Integer g(0);
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void z_make_primitive(ZPoly& p) {
  Integer g = z_content(p);
  if (g == 0) return;
  if (!p.empty() && p.back() < 0) g = -g;
  if (g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/* Converts to a primitive integer polynomial with positive leading
   coefficient; the rational scale factor is irrelevant for gcd purposes. */
ZPoly z_from_poly(const Poly& p) {
  Integer den_lcm(1);
  for (const auto& c : p.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.get_den().get_mpz_t());
  ZPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs())
    out.push_back(Integer(c.get_num() * (den_lcm / c.get_den())));
  z_trim(out);
  z_make_primitive(out);
  return out;
}

/* Pseudo-remainder with minimal scaling: each step uses the smallest
   integer multiple of a whose leading term the leading term of b divides,
   and strips content again right away.  Without the per-step strip the
   intermediate coefficients grow exponentially in the degree gap. */
ZPoly z_pseudo_rem(ZPoly a, const ZPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    const Integer scale_a(b.back() / g);
    const Integer scale_b(a.back() / g);
    std::size_t shift = a.size() - b.size();
    if (scale_a != 1)
      for (auto& c : a) c *= scale_a;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= scale_b * b[j];
    z_trim(a);
    z_make_primitive(a);
  }
  return a;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly::one();
  ZPoly u = z_from_poly(a);
  ZPoly v = z_from_poly(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    ZPoly r = z_pseudo_rem(u, v);
    z_make_primitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(u.size());
  for (const auto& c : u) coeffs.emplace_back(c);
  return Poly::from_coeffs(std::move(coeffs)).monic();
}

Rational coefficient_content(const Poly& p) {
  if (p.is_zero()) return Rational(0);
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational& c = p.coeff(i);
    if (c == 0) continue;
    num_gcd = gcd(num_gcd, c.get_num());
    den_lcm = lcm(den_lcm, c.get_den());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  return content;
}

PolyXgcd xgcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(), s1;
  Poly t0, t1 = Poly::one();
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Poly(), Poly(), Poly()};
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::pair<Poly, Poly> solve_diophantine(const Poly& a, const Poly& b,
                                        const Poly& c) {
  PolyXgcd e = xgcd(a, b);
  if (e.g.is_zero()) {
    if (c.is_zero()) return {Poly(), Poly()};
    throw PreconditionError("diophantine system a*s + b*t = c is unsolvable");
  }
  auto [scale, rem] = divrem(c, e.g);
  if (!rem.is_zero())
    throw PreconditionError("diophantine system a*s + b*t = c is unsolvable");
  Poly s = e.s * scale;
  Poly b_red = divexact(b, e.g);
  if (!b_red.is_constant()) s = divrem(s, b_red).second;
  if (b.is_zero()) return {s, Poly()};
  return {s, divexact(c - a * s, b)};
}

}  // namespace diffop
