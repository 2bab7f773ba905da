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

#include "diffop/ore_poly.hpp"

namespace diffop {

OrePoly::OrePoly(RatFunc constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

OrePoly OrePoly::d() { return monomial(RatFunc(Rational(1)), 1); }

OrePoly OrePoly::variable() { return OrePoly(RatFunc::variable()); }

OrePoly OrePoly::monomial(RatFunc coeff, int order) {
  OrePoly p;
  if (!coeff.is_zero()) {
    p.coeffs_.assign(static_cast<std::size_t>(order) + 1, RatFunc());
    p.coeffs_.back() = std::move(coeff);
  }
  return p;
}

OrePoly OrePoly::from_coeffs(std::vector<RatFunc> coeffs) {
  OrePoly p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

const OrePoly& OrePoly::zero() {
  static const OrePoly z;
  return z;
}

const OrePoly& OrePoly::one() {
  static const OrePoly o{RatFunc(Rational(1))};
  return o;
}

RatFunc OrePoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return RatFunc();
  return coeffs_[static_cast<std::size_t>(i)];
}

const RatFunc& OrePoly::leading() const { return coeffs_.back(); }

OrePoly OrePoly::unit_inverse() const {
  if (!is_unit()) throw PreconditionError("inverse of a non-unit operator");
  return OrePoly(coeffs_[0].inverse());
}

void OrePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

OrePoly OrePoly::operator-() const {
  OrePoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

OrePoly& OrePoly::operator+=(const OrePoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

OrePoly& OrePoly::operator-=(const OrePoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

namespace {

/* D composed with t in normalized form: coeff_j = t_{j-1} + t_j'. */
std::vector<RatFunc> d_compose(const std::vector<RatFunc>& t) {
  std::vector<RatFunc> out(t.size() + 1);
  for (std::size_t j = 0; j < t.size(); ++j) {
    out[j + 1] += t[j];
    out[j] += t[j].derivative();
  }
  return out;
}

}  // namespace

OrePoly operator*(const OrePoly& lhs, const OrePoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return OrePoly();
  std::vector<RatFunc> acc(lhs.coeffs().size() + rhs.coeffs().size() - 1);
  std::vector<RatFunc> shifted = rhs.coeffs();  // D^i applied to rhs
  for (std::size_t i = 0; i < lhs.coeffs().size(); ++i) {
    const RatFunc& c = lhs.coeffs()[i];
    if (!c.is_zero())
      for (std::size_t j = 0; j < shifted.size(); ++j)
        if (!shifted[j].is_zero()) acc[j] += c * shifted[j];
    if (i + 1 < lhs.coeffs().size()) shifted = d_compose(shifted);
  }
  return OrePoly::from_coeffs(std::move(acc));
}

RatFunc OrePoly::apply(const RatFunc& f) const {
  RatFunc acc;
  RatFunc der = f;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) acc += coeffs_[i] * der;
    if (i + 1 < coeffs_.size()) der = der.derivative();
  }
  return acc;
}

DivisionResult divide(const OrePoly& a, const OrePoly& b, Side side) {
  if (b.is_zero()) throw PreconditionError("operator division by zero");
  OrePoly q;
  OrePoly r = a;
  /* Leading coefficients multiply commutatively at the top order, so the
     same scale factor works on both sides. */
  while (!r.is_zero() && r.order() >= b.order()) {
    OrePoly t =
        OrePoly::monomial(r.leading() / b.leading(), r.order() - b.order());
    q += t;
    r -= side == Side::left ? t * b : b * t;
  }
  return {std::move(q), std::move(r), side};
}

OrePoly exact_quotient(const OrePoly& a, const OrePoly& b, Side side) {
  DivisionResult d = divide(a, b, side);
  if (!d.remainder.is_zero())
    throw InternalError("operator division expected to be exact");
  return d.quotient;
}

namespace {

struct EuclidRow {
  OrePoly r, u, v;
};

/* True when the joint polynomial content of the given coefficients is
   certainly constant: a common factor evaluated at t divides the integer gcd
   of the numerator values at t.  A miss only costs a redundant gcd below;
   skipping a possible strip never breaks exactness, so the test may be as
   rough as it likes. */
bool content_is_constant(const std::vector<const OrePoly*>& parts) {
  for (long t : {3l, -5l}) {
    Rational point(t);
    Integer acc(0);
    for (const OrePoly* p : parts)
      for (const auto& f : p->coeffs()) {
        if (f.is_zero()) continue;
        Integer value = f.num().eval(point).get_num();
        mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), value.get_mpz_t());
        if (acc == 1) return true;
      }
  }
  return false;
}

/* Scales a chain row so the remainder part becomes a primitive polynomial
   operator, like strip_content in the matrix reducer.  Only the remainder
   drives the growth of the chain, so only its content matters; the cofactors
   follow the same factor and may pick up rational coefficients.  A zero
   remainder row is normalized by the joint content of the cofactors. */
void strip_row(EuclidRow& row) {
  std::vector<const OrePoly*> parts;
  if (row.r.is_zero()) {
    if (!row.u.is_zero()) parts.push_back(&row.u);
    if (!row.v.is_zero()) parts.push_back(&row.v);
  } else {
    parts.push_back(&row.r);
  }
  if (parts.empty()) return;
  Poly den_lcm = Poly::one();
  for (const OrePoly* p : parts)
    for (const auto& f : p->coeffs()) {
      if (f.is_zero() || f.is_polynomial()) continue;
      den_lcm = divexact(den_lcm * f.den(), gcd(den_lcm, f.den()));
    }
  Poly num_gcd = Poly::one();
  if (!content_is_constant(parts)) {
    num_gcd = Poly();
    for (const OrePoly* p : parts)
      for (const auto& f : p->coeffs()) {
        if (f.is_zero() || num_gcd.is_one()) continue;
        num_gcd = gcd(num_gcd, f.num());
      }
    if (num_gcd.is_zero()) num_gcd = Poly::one();
  }
  auto scale_by = [&](const RatFunc& s) {
    OrePoly unit(s);
    row.r = unit * row.r;
    row.u = unit * row.u;
    row.v = unit * row.v;
  };
  RatFunc poly_scale(den_lcm, num_gcd);
  if (!poly_scale.is_one()) scale_by(poly_scale);
  Rational content(0);
  auto merge = [&](const OrePoly& p) {
    for (const auto& f : p.coeffs()) {
      if (f.is_zero() || content == 1) continue;
      if (!f.is_polynomial()) return false;
      Rational piece = coefficient_content(f.num());
      if (content == 0) {
        content = piece;
      } else {
        Rational merged(gcd(content.get_num(), piece.get_num()),
                        lcm(content.get_den(), piece.get_den()));
        merged.canonicalize();
        content = merged;
      }
    }
    return true;
  };
  bool ok = row.r.is_zero() ? merge(row.u) && merge(row.v) : merge(row.r);
  if (!ok) return;
  if (content != 0 && content != 1) scale_by(RatFunc(1 / content));
}

/* Remainder sequence for the right gcd: quotients act on the left, so every
   row keeps the shape r = u*a + v*b.  Elimination is fraction free in the
   style of cancel_top in the matrix reducer: the working row is scaled by
   the other leading coefficient before the top terms cancel, and content is
   stripped after every order drop.  The cofactor rows double the work, so
   callers that only want the remainder drop them at compile time. */
template <bool WithCofactors>
std::pair<EuclidRow, EuclidRow> euclid_right_chain(const OrePoly& a,
                                                   const OrePoly& b) {
  EuclidRow prev{a, OrePoly::zero(), OrePoly::zero()};
  EuclidRow cur{b, OrePoly::zero(), OrePoly::zero()};
  if constexpr (WithCofactors) {
    prev.u = OrePoly::one();
    cur.v = OrePoly::one();
  }
  strip_row(prev);
  strip_row(cur);
  while (!cur.r.is_zero()) {
    while (!prev.r.is_zero() && prev.r.order() >= cur.r.order()) {
      RatFunc alpha = prev.r.leading();
      const RatFunc& beta = cur.r.leading();
      int delta = prev.r.order() - cur.r.order();
      if (!beta.is_one()) {
        OrePoly scale(beta);
        prev.r = scale * prev.r;
        if constexpr (WithCofactors) {
          prev.u = scale * prev.u;
          prev.v = scale * prev.v;
        }
      }
      OrePoly t = OrePoly::monomial(std::move(alpha), delta);
      prev.r -= t * cur.r;
      if constexpr (WithCofactors) {
        prev.u -= t * cur.u;
        prev.v -= t * cur.v;
      }
    }
    strip_row(prev);
    std::swap(prev, cur);
  }
  return {prev, cur};  // gcd row, zero row
}

}  // namespace

BezoutCertificate gcd_extended(const OrePoly& a, const OrePoly& b, Side side) {
  if (a.is_zero() && b.is_zero())
    throw PreconditionError("gcd of two zero operators");
  BezoutCertificate cert;
  cert.side = side;
  if (side == Side::right) {
    EuclidRow row = euclid_right_chain<true>(a, b).first;
    OrePoly scale = OrePoly(row.r.leading().inverse());
    cert.d = scale * row.r;
    cert.u = scale * row.u;
    cert.v = scale * row.v;
    cert.a1 = exact_quotient(a, cert.d, Side::left);
    cert.b1 = exact_quotient(b, cert.d, Side::left);
  } else {
    /* The adjoint swaps the two sides, so the left gcd is the conjugate of
       the right gcd of the adjoints.  Conjugation keeps leading
       coefficients up to sign only. */
    BezoutCertificate mirror =
        gcd_extended(adjoint(a), adjoint(b), Side::right);
    cert.d = adjoint(mirror.d);
    cert.u = adjoint(mirror.u);
    cert.v = adjoint(mirror.v);
    cert.a1 = adjoint(mirror.a1);
    cert.b1 = adjoint(mirror.b1);
    if (!cert.d.is_monic()) {
      cert.d = -cert.d;
      cert.u = -cert.u;
      cert.v = -cert.v;
      cert.a1 = -cert.a1;
      cert.b1 = -cert.b1;
    }
  }
  return cert;
}

GcdParts gcd_parts(const OrePoly& a, const OrePoly& b, Side side) {
  if (a.is_zero() && b.is_zero())
    throw PreconditionError("gcd of two zero operators");
  GcdParts parts;
  parts.side = side;
  if (side == Side::right) {
    EuclidRow row = euclid_right_chain<false>(a, b).first;
    parts.d = OrePoly(row.r.leading().inverse()) * row.r;
    parts.a1 = exact_quotient(a, parts.d, Side::left);
    parts.b1 = exact_quotient(b, parts.d, Side::left);
  } else {
    GcdParts mirror = gcd_parts(adjoint(a), adjoint(b), Side::right);
    parts.d = adjoint(mirror.d);
    parts.a1 = adjoint(mirror.a1);
    parts.b1 = adjoint(mirror.b1);
    if (!parts.d.is_monic()) {
      parts.d = -parts.d;
      parts.a1 = -parts.a1;
      parts.b1 = -parts.b1;
    }
  }
  return parts;
}

LcmCertificate lcm(const OrePoly& a, const OrePoly& b, Side side) {
  if (a.is_zero() || b.is_zero())
    throw PreconditionError("lcm of a zero operator");
  LcmCertificate cert;
  cert.side = side;
  if (side == Side::right) {
    LcmCertificate mirror = lcm(adjoint(a), adjoint(b), Side::left);
    cert.m = adjoint(mirror.m);
    cert.a1 = adjoint(mirror.a1);
    cert.b1 = adjoint(mirror.b1);
    if (!cert.m.is_monic()) {
      cert.m = -cert.m;
      cert.a1 = -cert.a1;
      cert.b1 = -cert.b1;
    }
  } else {
    /* The zero row of the right-gcd recursion has u*a + v*b = 0, so u*a is
       a least common left multiple. */
    EuclidRow zero = euclid_right_chain<true>(a, b).second;
    OrePoly m = zero.u * a;
    if (m.is_zero()) throw InternalError("degenerate lcm witness");
    OrePoly scale = OrePoly(m.leading().inverse());
    cert.m = scale * m;
    cert.b1 = scale * zero.u;
    cert.a1 = -(scale * zero.v);
  }
  return cert;
}

std::pair<OrePoly, OrePoly> ore_witness(const OrePoly& a, const OrePoly& b) {
  if (b.is_zero())
    throw PreconditionError("Ore witness requires a nonzero right factor");
  if (a.is_zero()) return {OrePoly::zero(), OrePoly::one()};
  LcmCertificate cert = lcm(a, b, Side::right);
  return {cert.a1, cert.b1};
}

OrePoly adjoint(const OrePoly& a) {
  std::vector<RatFunc> acc(a.coeffs().size());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    std::vector<RatFunc> term{a.coeffs()[i]};
    for (std::size_t k = 0; k < i; ++k) term = d_compose(term);
    if (i % 2 == 1)
      for (auto& c : term) c = -c;
    if (acc.size() < term.size()) acc.resize(term.size());
    for (std::size_t j = 0; j < term.size(); ++j) acc[j] += term[j];
  }
  return OrePoly::from_coeffs(std::move(acc));
}

}  // namespace diffop
