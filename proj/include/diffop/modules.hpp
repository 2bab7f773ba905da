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

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "diffop/error.hpp"
#include "diffop/ore_matrix.hpp"
#include "diffop/ore_poly.hpp"
#include "diffop/parser.hpp"
#include "diffop/ratfunc.hpp"

namespace diffop {

/* The field Q(x) as a left module over the operator ring: D acts by d/dx and
   order-0 operators act by multiplication.  Matrices act on columns of the
   matching dimension. */
struct NaturalModule {
  using Element = RatFunc;

  RatFunc act(const OrePoly& r, const RatFunc& x) const { return r.apply(x); }
  std::vector<RatFunc> act(const OreMatrix& r,
                           const std::vector<RatFunc>& x) const;

  /* Random element with small numerator and denominator degrees. */
  RatFunc sample(std::mt19937_64& rng) const;
  std::vector<RatFunc> sample_column(std::mt19937_64& rng,
                                     int dimension) const;
};

/* Quotient R / Rc of the operator ring by the left ideal generated by a
   nonzero modulus c.  Elements are kept canonical as left remainders, so
   their order stays below the order of c and structural equality is equality
   in the quotient. */
class CyclicModule {
 public:
  using Element = OrePoly;

  explicit CyclicModule(OrePoly modulus) : c_(std::move(modulus)) {
    if (c_.is_zero())
      throw PreconditionError("a cyclic module needs a nonzero modulus");
  }

  const OrePoly& modulus() const { return c_; }

  /* Canonical representative of v + Rc. */
  OrePoly reduce(const OrePoly& v) const {
    return divide(v, c_, Side::left).remainder;
  }

  OrePoly act(const OrePoly& r, const OrePoly& x) const {
    return reduce(r * x);
  }

  /* Random canonical element with small coefficients. */
  OrePoly sample(std::mt19937_64& rng) const;

 private:
  OrePoly c_;
};

/* Certificate accompanying an intersection witness for a left coprime pair
   (a, b).  All identities hold exactly in the operator ring:

     m = a * b1 = b * a1            (right least common multiple)
     u * b1 + v * a1 = 1            (u and v both nonzero)
     1 - a1 * v = p * b             a1 * u = p * a
     1 - b1 * u = q * a             b1 * v = q * b
*/
struct WitnessTrace {
  OrePoly a1, b1, m;
  OrePoly u, v;
  OrePoly p, q;
  bool u_regular = false;
  bool v_regular = false;
};

/* Ring-level part of the intersection witness: builds the trace above for a
   left coprime pair with b nonzero.  Throws PreconditionError when b is zero
   or the pair has a nontrivial left gcd, and InternalError when any of the
   certified identities fails to verify. */
WitnessTrace thm33_trace(const OrePoly& a, const OrePoly& b);

/* Basis of the polynomial kernel of b up to the given degree: all monic-free
   Q-linear combinations p of 1, x, ..., x^degree_bound with b(p) = 0.  Exact
   linear algebra over Q; the result is the reduced echelon basis. */
std::vector<Poly> kernel_polynomial(const OrePoly& b, int degree_bound);

/* Does the pair satisfy a* b + b* a = 0 in the ring? */
bool skew_pair_check(const OrePoly& a, const OrePoly& b);

/* Action-level form of the skew condition: a* b + b* a annihilates every
   basis element 1, D, ..., D^(ord c - 1) of the cyclic module.  Implied by
   skew_pair_check but reported separately so callers can compare the two. */
bool skew_acts_as_zero(const OrePoly& a, const OrePoly& b,
                       const CyclicModule& V);

/* Class of a rational function modulo total derivatives, represented by the
   canonical Hermite residue.  The class is zero exactly when the function is
   a derivative. */
struct KModClass {
  RatFunc representative;

  bool is_zero() const { return representative.is_zero(); }

  friend bool operator==(const KModClass& lhs, const KModClass& rhs) {
    return lhs.representative == rhs.representative;
  }
  friend bool operator!=(const KModClass& lhs, const KModClass& rhs) {
    return !(lhs == rhs);
  }
};

/* Pairing (x, y) -> class of x * y, and its column version using the sum
   of componentwise products.  Columns must share a dimension. */
KModClass pairing_class(const RatFunc& x, const RatFunc& y);
KModClass pairing_class(const std::vector<RatFunc>& x,
                        const std::vector<RatFunc>& y);

inline std::string element_text(const RatFunc& x) { return to_string(x); }
inline std::string element_text(const OrePoly& x) { return to_string(x); }

/* Applies a finished trace to one compatible pair: z = u x + v y solves
   b1 z = x and a1 z = y whenever a x = b y.  Verified before returning. */
template <class Module>
typename Module::Element witness_from_trace(const WitnessTrace& t,
                                            const typename Module::Element& x,
                                            const typename Module::Element& y,
                                            const Module& V) {
  typename Module::Element z = V.act(t.u, x) + V.act(t.v, y);
  if (!(V.act(t.b1, z) == x) || !(V.act(t.a1, z) == y))
    throw InternalError("the witness failed its verification");
  return z;
}

/* Intersection witness: given a x = b y for a left coprime pair with b
   nonzero, produces z with b1 z = x and a1 z = y together with the ring
   certificate.  The preimage is unique because u b1 + v a1 = 1. */
template <class Module>
std::pair<typename Module::Element, WitnessTrace> thm33_witness(
    const OrePoly& a, const OrePoly& b, const typename Module::Element& x,
    const typename Module::Element& y, const Module& V) {
  if (!(V.act(a, x) == V.act(b, y)))
    throw PreconditionError("the operators act differently on the input pair");
  WitnessTrace t = thm33_trace(a, b);
  typename Module::Element z = witness_from_trace(t, x, y, V);
  return {std::move(z), std::move(t)};
}

/* Adjoint form of the intersection witness.  For a right coprime pair with
   a* b = eps b* a and a compatible pair a* x = eps b* y, produces z with
   b z = x and a z = y. */
template <class Module>
typename Module::Element cor34_witness(const OrePoly& a, const OrePoly& b,
                                       const typename Module::Element& x,
                                       const typename Module::Element& y,
                                       const Rational& eps, const Module& V) {
  if (b.is_zero())
    throw PreconditionError("the witness needs a regular second operator");
  if (eps == 0)
    throw PreconditionError("the pairing constant must be invertible");
  if (!gcd_parts(a, b, Side::right).d.is_unit())
    throw PreconditionError("the operators are not right coprime");
  OrePoly eps_op{RatFunc(eps)};
  OrePoly astar = adjoint(a);
  OrePoly bstar = adjoint(b);
  if (!(astar * b == eps_op * (bstar * a)))
    throw PreconditionError("the operators are not an adjoint pair");
  typename Module::Element scaled_y = V.act(eps_op, y);
  if (!(V.act(astar, x) == V.act(bstar, scaled_y)))
    throw PreconditionError("the operators act differently on the input pair");

  auto [z0, trace] = thm33_witness(astar, bstar, x, scaled_y, V);
  /* The adjoint certificate folds back through b: the rlcm cofactor of the
     adjoint pair is a right multiple of b, and the complementary cofactor
     picks up exactly the factor eps a w. */
  OrePoly w = exact_quotient(trace.b1, b, Side::right);
  if (!(trace.a1 == eps_op * (a * w)))
    throw InternalError("the adjoint certificate does not match");
  typename Module::Element z = V.act(w, z0);
  if (!(V.act(b, z) == x) || !(V.act(a, z) == y))
    throw InternalError("the witness failed its verification");
  return z;
}

/* Witness for the graph of a skew adjoint pair: given a* y1 + b* y2 = 0,
   produces z with b z = y1 and a z = y2. */
template <class Module>
typename Module::Element maximal_isotropy_witness(
    const OrePoly& a, const OrePoly& b, const typename Module::Element& y1,
    const typename Module::Element& y2, const Module& V) {
  if (!skew_pair_check(a, b))
    throw PreconditionError("the operators are not a skew adjoint pair");
  typename Module::Element balance =
      V.act(adjoint(a), y1) + V.act(adjoint(b), y2);
  if (!balance.is_zero())
    throw PreconditionError("the pair does not satisfy the orthogonality relation");
  return cor34_witness(a, b, y1, y2, Rational(-1), V);
}

struct IntersectionFailure {
  std::uint64_t seed = 0;
  std::string inputs;
};

struct IntersectionReport {
  int trials = 0;
  int passes = 0;
  std::vector<IntersectionFailure> failures;
};

/* Randomized check of the intersection property: each trial samples z0,
   pushes it to the compatible pair x = b1 z0, y = a1 z0 and replays the full
   witness on that pair.  Failures record the trial seed and the offending
   inputs for deterministic replay. */
template <class Module>
IntersectionReport intersection_check(const OrePoly& a, const OrePoly& b,
                                      const Module& V, int trials,
                                      std::uint64_t seed) {
  WitnessTrace base = thm33_trace(a, b);
  IntersectionReport report;
  report.trials = trials;
  for (int i = 0; i < trials; ++i) {
    std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(i);
    std::mt19937_64 rng(trial_seed);
    typename Module::Element z0 = V.sample(rng);
    typename Module::Element x = V.act(base.b1, z0);
    typename Module::Element y = V.act(base.a1, z0);
    try {
      if (!(V.act(a, x) == V.act(b, y)) || !(V.act(a, x) == V.act(base.m, z0)))
        throw InternalError("the sampled point leaves the intersection");
      thm33_witness(a, b, x, y, V);
      ++report.passes;
    } catch (const Error& e) {
      report.failures.push_back(
          {trial_seed, "x = " + element_text(x) + "; y = " + element_text(y) +
                           " (" + e.what() + ")"});
    }
  }
  return report;
}

}  // namespace diffop
