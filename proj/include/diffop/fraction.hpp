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

#ifndef DIFFOP_FRACTION_HPP
#define DIFFOP_FRACTION_HPP

#include <utility>

#include "diffop/error.hpp"
#include "diffop/ore_matrix.hpp"
#include "diffop/ore_poly.hpp"

namespace diffop {

/*
   One sided fractions of operators.

   A right fraction (num, den) stands for num * den^{-1}, a left fraction
   for den^{-1} * num; den is always regular.  After make_minimal the pair
   is coprime on the matching side and the denominator carries a canonical
   unit normalization (monic in the scalar ring, row Hermite form and its
   adjoint counterpart for matrices), so two minimal fractions represent
   the same value exactly when they are structurally equal.
*/
template <class Ring>
struct Fraction {
  Ring num;
  Ring den;
  Side side = Side::right;
  bool minimal = false;

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.side == b.side && a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Fraction& a, const Fraction& b) {
    return !(a == b);
  }
};

/* What the fraction operations need from a coefficient ring.  The gcd hook
   must return a certificate with fields d, u, v, a1, b1 in the orientation
   of gcd_extended and matrix_gcd. */
template <class Ring>
struct FractionRing;

template <>
struct FractionRing<OrePoly> {
  struct Witness {
    OrePoly a1, b1;
  };

  static OrePoly one(const OrePoly&) { return OrePoly::one(); }
  static void check_compatible(const OrePoly&, const OrePoly&) {}
  static bool is_regular(const OrePoly& r) { return !r.is_zero(); }
  static bool is_unit(const OrePoly& r) { return r.is_unit(); }
  static OrePoly unit_inverse(const OrePoly& r) { return r.unit_inverse(); }
  static int degree(const OrePoly& r) {
    if (r.is_zero()) throw InternalError("degree of a zero denominator");
    return r.order();
  }

  static BezoutCertificate gcd(const OrePoly& a, const OrePoly& b, Side side) {
    return gcd_extended(a, b, side);
  }

  static GcdParts coprime_parts(const OrePoly& a, const OrePoly& b,
                                Side side) {
    return gcd_parts(a, b, side);
  }

  /* q with a == b * q (right) or a == q * b (left); throws PreconditionError
     when the division is not exact. */
  static OrePoly quotient(const OrePoly& a, const OrePoly& b, Side side) {
    DivisionResult div = divide(a, b, side);
    if (!div.remainder.is_zero())
      throw PreconditionError("division leaves a remainder");
    return std::move(div.quotient);
  }

  /* side == right: a * b1 == b * a1,  side == left: b1 * a == a1 * b,
     with b1 != 0 as long as b != 0. */
  static Witness witness(const OrePoly& a, const OrePoly& b, Side side) {
    if (b.is_zero())
      throw PreconditionError("witness needs a regular second operator");
    if (a.is_zero()) return {OrePoly::zero(), OrePoly::one()};
    if (side == Side::right) {
      auto w = ore_witness(a, b);
      return {w.first, w.second};
    }
    LcmCertificate cert = lcm(a, b, Side::left);
    return {cert.a1, cert.b1};
  }

  static void normalize(OrePoly& num, OrePoly& den, Side side) {
    if (den.is_monic()) return;
    OrePoly unit(den.leading().inverse());
    if (side == Side::right) {
      num = num * unit;
      den = den * unit;
    } else {
      num = unit * num;
      den = unit * den;
    }
  }
};

template <>
struct FractionRing<OreMatrix> {
  static OreMatrix one(const OreMatrix& like) {
    return OreMatrix::identity(like.size());
  }
  static void check_compatible(const OreMatrix& a, const OreMatrix& b) {
    if (a.size() != b.size())
      throw PreconditionError("matrix sizes do not match");
  }
  static bool is_regular(const OreMatrix& r) { return diffop::is_regular(r); }
  static bool is_unit(const OreMatrix& r) { return is_unimodular(r); }
  static OreMatrix unit_inverse(const OreMatrix& r) {
    return unimodular_inverse(r);
  }
  static int degree(const OreMatrix& r) {
    auto deg = ddet_degree(r);
    if (!deg) throw InternalError("degree of a singular denominator");
    return *deg;
  }

  static MatrixBezoutCertificate gcd(const OreMatrix& a, const OreMatrix& b,
                                     Side side) {
    return matrix_gcd(a, b, side);
  }

  static MatrixBezoutCertificate coprime_parts(const OreMatrix& a,
                                               const OreMatrix& b, Side side) {
    return matrix_gcd(a, b, side);
  }

  static OreMatrix quotient(const OreMatrix& a, const OreMatrix& b,
                            Side side) {
    return exact_quotient(a, b, side);
  }

  static MatrixOreWitness witness(const OreMatrix& a, const OreMatrix& b,
                                  Side side) {
    return matrix_ore_witness(a, b, side);
  }

  /* Left fractions get a row Hermite denominator; right fractions the
     adjoint of the row Hermite form of the adjoint, so that the unit
     multiplies on the correct side. */
  static void normalize(OreMatrix& num, OreMatrix& den, Side side) {
    if (side == Side::left) {
      MatrixStaircase f = row_staircase(den);
      den = f.h;
      num = f.u * num;
    } else {
      MatrixStaircase f = row_staircase(adjoint(den));
      den = adjoint(f.h);
      num = num * adjoint(f.u);
    }
  }
};

template <class Ring>
Fraction<Ring> make_fraction(Ring num, Ring den, Side side) {
  FractionRing<Ring>::check_compatible(num, den);
  if (!FractionRing<Ring>::is_regular(den))
    throw PreconditionError("fraction denominator must be regular");
  return {std::move(num), std::move(den), side, false};
}

/* Minimal decomposition together with its certificate: the stripped common
   factor d and Bezout cofactors for it, oriented as in the gcd of the
   fraction's side. */
template <class Ring>
struct MinimalDecomposition {
  Fraction<Ring> fraction;
  Ring stripped;
  Ring u, v;
};

/* Strips the gcd of numerator and denominator on the fraction's own side,
   then normalizes the remaining unit freedom.  The result is coprime and
   canonical; running it twice returns the first output unchanged. */
template <class Ring>
MinimalDecomposition<Ring> minimal_decomposition(const Fraction<Ring>& f) {
  using Traits = FractionRing<Ring>;
  if (!Traits::is_regular(f.den))
    throw PreconditionError("fraction denominator must be regular");
  auto cert = Traits::gcd(f.num, f.den, f.side);
  Fraction<Ring> out{cert.a1, cert.b1, f.side, true};
  Traits::normalize(out.num, out.den, f.side);
  return {std::move(out), std::move(cert.d), std::move(cert.u),
          std::move(cert.v)};
}

template <class Ring>
Fraction<Ring> make_minimal(const Fraction<Ring>& f) {
  if (f.minimal) return f;
  using Traits = FractionRing<Ring>;
  if (!Traits::is_regular(f.den))
    throw PreconditionError("fraction denominator must be regular");
  auto parts = Traits::coprime_parts(f.num, f.den, f.side);
  Fraction<Ring> out{std::move(parts.a1), std::move(parts.b1), f.side, true};
  Traits::normalize(out.num, out.den, f.side);
  return out;
}

/* The cofactor relating a fraction to a minimal one with the same value:
   raw.num == min.num * q and raw.den == min.den * q for right fractions,
   with q on the left for left fractions.  Throws PreconditionError when
   min is not coprime or the values differ. */
template <class Ring>
Ring minimal_factor(const Fraction<Ring>& raw, const Fraction<Ring>& min) {
  using Traits = FractionRing<Ring>;
  if (raw.side != min.side)
    throw PreconditionError("fractions must agree on the side");
  Traits::check_compatible(raw.den, min.den);
  if (!Traits::is_regular(raw.den) || !Traits::is_regular(min.den))
    throw PreconditionError("fraction denominator must be regular");
  auto cert = Traits::coprime_parts(min.num, min.den, raw.side);
  if (!Traits::is_unit(cert.d))
    throw PreconditionError("the decomposition is not minimal");
  /* Coprimality forces the factor, and the denominators already determine
     it: raw.den == min.den * q on the right, q * min.den on the left.  The
     numerators then confirm the two fractions carry the same value. */
  Ring q;
  try {
    q = Traits::quotient(raw.den, min.den, raw.side);
  } catch (const PreconditionError&) {
    throw PreconditionError("fractions do not represent the same value");
  }
  bool same = raw.side == Side::right ? raw.num == min.num * q
                                      : raw.num == q * min.num;
  if (!same)
    throw PreconditionError("fractions do not represent the same value");
  if (!Traits::is_regular(q))
    throw InternalError("minimal factor is not regular");
  return q;
}

/* Rewrites the value on the other side via an Ore witness of the pair:
   from num * den^{-1} to den1^{-1} * num1 and back.  Output is minimal. */
template <class Ring>
Fraction<Ring> convert_side(const Fraction<Ring>& f) {
  using Traits = FractionRing<Ring>;
  if (!Traits::is_regular(f.den))
    throw PreconditionError("fraction denominator must be regular");
  Side other = f.side == Side::right ? Side::left : Side::right;
  auto w = Traits::witness(f.num, f.den, other);
  return make_minimal(Fraction<Ring>{w.a1, w.b1, other, false});
}

/* Brings both fractions over the side of the first. */
template <class Ring>
Fraction<Ring> align_side(const Fraction<Ring>& g, Side side) {
  return g.side == side ? g : convert_side(g);
}

template <class Ring>
bool fraction_equal(const Fraction<Ring>& f, const Fraction<Ring>& g_in) {
  using Traits = FractionRing<Ring>;
  Traits::check_compatible(f.den, g_in.den);
  if (!Traits::is_regular(f.den) || !Traits::is_regular(g_in.den))
    throw PreconditionError("fraction denominator must be regular");
  Fraction<Ring> g = align_side(g_in, f.side);
  auto w = Traits::witness(f.den, g.den, f.side);
  return f.side == Side::right ? f.num * w.b1 == g.num * w.a1
                               : w.b1 * f.num == w.a1 * g.num;
}

template <class Ring>
Fraction<Ring> fraction_add(const Fraction<Ring>& f_in,
                            const Fraction<Ring>& g_in) {
  using Traits = FractionRing<Ring>;
  Traits::check_compatible(f_in.den, g_in.den);
  if (!Traits::is_regular(f_in.den) || !Traits::is_regular(g_in.den))
    throw PreconditionError("fraction denominator must be regular");
  const Fraction<Ring>& f = f_in;
  Fraction<Ring> g = align_side(g_in, f.side);
  auto w = Traits::witness(f.den, g.den, f.side);
  if (f.side == Side::right)
    return make_minimal(Fraction<Ring>{f.num * w.b1 + g.num * w.a1,
                                       f.den * w.b1, Side::right, false});
  return make_minimal(Fraction<Ring>{w.b1 * f.num + w.a1 * g.num,
                                     w.b1 * f.den, Side::left, false});
}

template <class Ring>
Fraction<Ring> fraction_mul(const Fraction<Ring>& f_in,
                            const Fraction<Ring>& g_in) {
  using Traits = FractionRing<Ring>;
  Traits::check_compatible(f_in.den, g_in.den);
  if (!Traits::is_regular(f_in.den) || !Traits::is_regular(g_in.den))
    throw PreconditionError("fraction denominator must be regular");
  const Fraction<Ring>& f = f_in;
  Fraction<Ring> g = align_side(g_in, f.side);
  if (f.side == Side::right) {
    /* den^{-1} * num of the middle pair becomes a1 * b1^{-1}. */
    auto w = Traits::witness(g.num, f.den, Side::right);
    return make_minimal(Fraction<Ring>{f.num * w.a1, g.den * w.b1,
                                       Side::right, false});
  }
  auto w = Traits::witness(f.num, g.den, Side::left);
  return make_minimal(Fraction<Ring>{w.a1 * g.num, w.b1 * f.den, Side::left,
                                     false});
}

/* Degrees of the two minimal denominators of one value.  They agree for
   every fraction; a mismatch means the library itself is broken, hence the
   InternalError. */
template <class Ring>
std::pair<int, int> degree_invariant(const Fraction<Ring>& f) {
  using Traits = FractionRing<Ring>;
  Fraction<Ring> native = make_minimal(f);
  Fraction<Ring> other = convert_side(native);
  int native_deg = Traits::degree(native.den);
  int other_deg = Traits::degree(other.den);
  int left = f.side == Side::left ? native_deg : other_deg;
  int right = f.side == Side::left ? other_deg : native_deg;
  if (left != right)
    throw InternalError("minimal denominators disagree in degree");
  return {left, right};
}

}  // namespace diffop

#endif
