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

#include "diffop/selftest.hpp"

#include <random>

#include "diffop/fraction.hpp"
#include "diffop/hermite.hpp"
#include "diffop/modules.hpp"
#include "diffop/ore_matrix.hpp"
#include "diffop/ore_poly.hpp"
#include "diffop/parser.hpp"

namespace diffop {

namespace {

Poly rand_poly(std::mt19937_64& rng, int max_deg, int max_abs) {
  std::uniform_int_distribution<int> deg_dist(0, max_deg);
  std::uniform_int_distribution<long> coeff_dist(-max_abs, max_abs);
  int deg = deg_dist(rng);
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i) c.emplace_back(coeff_dist(rng));
  return Poly::from_coeffs(std::move(c));
}

Poly rand_nonzero_poly(std::mt19937_64& rng, int max_deg, int max_abs) {
  for (;;) {
    Poly p = rand_poly(rng, max_deg, max_abs);
    if (!p.is_zero()) return p;
  }
}

RatFunc rand_ratfunc(std::mt19937_64& rng, int max_deg = 2, int max_abs = 5) {
  return RatFunc(rand_poly(rng, max_deg, max_abs),
                 rand_nonzero_poly(rng, max_deg, max_abs));
}

RatFunc rand_nonzero_ratfunc(std::mt19937_64& rng, int max_deg = 2,
                             int max_abs = 5) {
  return RatFunc(rand_nonzero_poly(rng, max_deg, max_abs),
                 rand_nonzero_poly(rng, max_deg, max_abs));
}

OrePoly rand_operator(std::mt19937_64& rng, int order, int max_deg = 1,
                      int max_abs = 3) {
  std::vector<RatFunc> c;
  for (int i = 0; i < order; ++i) c.push_back(rand_ratfunc(rng, max_deg, max_abs));
  c.push_back(rand_nonzero_ratfunc(rng, max_deg, max_abs));
  return OrePoly::from_coeffs(std::move(c));
}

OrePoly rand_operator_up_to(std::mt19937_64& rng, int max_order,
                            int max_deg = 1, int max_abs = 3) {
  std::uniform_int_distribution<int> order_dist(0, max_order);
  return rand_operator(rng, order_dist(rng), max_deg, max_abs);
}

OreMatrix rand_matrix(std::mt19937_64& rng, int size, int max_order,
                      int max_deg = 1, int max_abs = 2) {
  OreMatrix m(size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      m.at(i, j) = rand_operator_up_to(rng, max_order, max_deg, max_abs);
  return m;
}

OreMatrix rand_regular_matrix(std::mt19937_64& rng, int size, int max_order) {
  for (;;) {
    OreMatrix m = rand_matrix(rng, size, max_order);
    if (is_regular(m)) return m;
  }
}

Side rand_side(std::mt19937_64& rng) {
  return (rng() & 1) != 0 ? Side::left : Side::right;
}

OrePoly coprime_partner(std::mt19937_64& rng, const OrePoly& b, Side side,
                        int max_order) {
  for (;;) {
    OrePoly a = rand_operator_up_to(rng, max_order);
    if (gcd_parts(a, b, side).d.is_unit()) return a;
  }
}

bool parse_roundtrip_trial(std::mt19937_64& rng) {
  OrePoly p = rand_operator_up_to(rng, 3, 2, 5);
  return parse_operator(to_string(p)) == p;
}

bool euclid_trial(std::mt19937_64& rng) {
  OrePoly a = rand_operator_up_to(rng, 3);
  OrePoly b = rand_operator_up_to(rng, 3);
  if (a.is_zero() && b.is_zero()) return true;
  Side side = rand_side(rng);
  BezoutCertificate c = gcd_extended(a, b, side);
  bool identities =
      side == Side::right
          ? c.d == c.u * a + c.v * b && a == c.a1 * c.d && b == c.b1 * c.d
          : c.d == a * c.u + b * c.v && a == c.d * c.a1 && b == c.d * c.b1;
  return identities && gcd_parts(c.a1, c.b1, side).d.is_unit();
}

bool lcm_trial(std::mt19937_64& rng) {
  OrePoly a = rand_operator(rng, 1 + static_cast<int>(rng() % 3));
  OrePoly b = rand_operator(rng, 1 + static_cast<int>(rng() % 2));
  LcmCertificate c = lcm(a, b, Side::right);
  if (!(c.m == a * c.b1) || !(c.m == b * c.a1)) return false;
  int lgcd_order = gcd_parts(a, b, Side::left).d.order();
  return c.m.order() + lgcd_order == a.order() + b.order();
}

bool minfrac_trial(std::mt19937_64& rng) {
  Side side = rand_side(rng);
  OrePoly b1 = rand_operator(rng, 1);
  OrePoly a1 = coprime_partner(rng, b1, side, 2);
  OrePoly q = rand_operator(rng, static_cast<int>(rng() % 2));
  OrePoly a = side == Side::right ? a1 * q : q * a1;
  OrePoly b = side == Side::right ? b1 * q : q * b1;
  auto raw = make_fraction(a, b, side);
  auto min = make_minimal(raw);
  OrePoly got = minimal_factor(raw, min);
  OrePoly ug{got.leading().inverse()};
  OrePoly uq{q.leading().inverse()};
  return side == Side::right ? ug * got == uq * q : got * ug == q * uq;
}

bool side_degree_trial(std::mt19937_64& rng) {
  auto f = make_fraction(rand_operator_up_to(rng, 2), rand_operator(rng, 1),
                         rand_side(rng));
  auto [left_deg, right_deg] = degree_invariant(f);
  return left_deg == right_deg;
}

bool witness_natural_trial(std::mt19937_64& rng) {
  NaturalModule V;
  OrePoly b = rand_operator(rng, 1 + static_cast<int>(rng() % 2));
  OrePoly a = coprime_partner(rng, b, Side::left, 2);
  WitnessTrace t = thm33_trace(a, b);
  RatFunc z0 = V.sample(rng);
  auto [z, trace] = thm33_witness(a, b, V.act(t.b1, z0), V.act(t.a1, z0), V);
  return z == z0;
}

bool witness_cyclic_trial(std::mt19937_64& rng) {
  CyclicModule W(rand_operator(rng, 1 + static_cast<int>(rng() % 3)));
  OrePoly b = rand_operator(rng, 1 + static_cast<int>(rng() % 2));
  OrePoly a = coprime_partner(rng, b, Side::left, 2);
  WitnessTrace t = thm33_trace(a, b);
  OrePoly z0 = W.sample(rng);
  auto [z, trace] = thm33_witness(a, b, W.act(t.b1, z0), W.act(t.a1, z0), W);
  return z == z0;
}

bool integration_by_parts_trial(std::mt19937_64& rng) {
  OrePoly a = rand_operator_up_to(rng, 3);
  RatFunc f = rand_ratfunc(rng, 2, 4);
  RatFunc g = rand_ratfunc(rng, 2, 4);
  return is_total_derivative(a.apply(f) * g - f * adjoint(a).apply(g));
}

bool isotropy_trial(std::mt19937_64& rng) {
  NaturalModule V;
  RatFunc f = rand_nonzero_ratfunc(rng, 1, 3);
  OrePoly b{f};
  OrePoly a = OrePoly::d() * b;
  if (!skew_pair_check(a, b)) return false;
  RatFunc y1 = rand_ratfunc(rng, 2, 4);
  RatFunc z = maximal_isotropy_witness(a, b, y1, y1.derivative(), V);
  if (V.act(b, z) != y1 || V.act(a, z) != y1.derivative()) return false;
  RatFunc w = rand_ratfunc(rng, 2, 4);
  RatFunc wp = rand_ratfunc(rng, 2, 4);
  std::vector<RatFunc> row{V.act(a, w), V.act(b, w)};
  std::vector<RatFunc> col{V.act(b, wp), V.act(a, wp)};
  return pairing_class(row, col).is_zero();
}

bool hermite_matrix_trial(std::mt19937_64& rng) {
  OreMatrix m = rand_matrix(rng, 2, 1);
  MatrixHermiteForm form = row_hermite(m);
  if (!(form.u * m == form.h) || !is_unimodular(form.u)) return false;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < i; ++j)
      if (!form.h.at(i, j).is_zero()) return false;
  return form.u * form.uinv == OreMatrix::identity(m.size());
}

bool regularize_trial(std::mt19937_64& rng) {
  OreMatrix a = rand_matrix(rng, 2, 0, 0, 2);
  OreMatrix b = rand_regular_matrix(rng, 2, 1);
  Side side = rand_side(rng);
  RegularizeResult res = regularize(a, b, side, rng());
  OreMatrix value = side == Side::left ? a + res.q * b : a + b * res.q;
  return is_regular(res.value) && res.value == value;
}

bool kernel_trial(std::mt19937_64&) {
  std::vector<Poly> one_and_x{Poly::one(), Poly::variable()};
  if (kernel_polynomial(parse_operator("D^2"), 5) != one_and_x) return false;
  if (kernel_polynomial(parse_operator("x*D - 1"), 5) !=
      std::vector<Poly>{Poly::variable()})
    return false;
  return kernel_polynomial(parse_operator("x^2*D^2 - 2*x*D + 2"), 5) ==
         std::vector<Poly>{Poly::variable(), Poly::monomial(Rational(1), 2)};
}

struct Suite {
  const char* name;
  bool (*trial)(std::mt19937_64&);
};

constexpr Suite kSuites[] = {
    {"parse-roundtrip", parse_roundtrip_trial},
    {"euclid-bezout", euclid_trial},
    {"lcm-orders", lcm_trial},
    {"minfrac-roundtrip", minfrac_trial},
    {"side-degree", side_degree_trial},
    {"witness-natural", witness_natural_trial},
    {"witness-cyclic", witness_cyclic_trial},
    {"integration-by-parts", integration_by_parts_trial},
    {"isotropy", isotropy_trial},
    {"hermite-matrix", hermite_matrix_trial},
    {"regularize", regularize_trial},
    {"kernel-frozen", kernel_trial},
};

}  // namespace

SelftestReport run_selftest(std::uint64_t seed, int trials) {
  SelftestReport report;
  report.seed = seed;
  report.trials = trials;
  report.ok = true;
  std::uint64_t stream = 0;
  for (const Suite& suite : kSuites) {
    ++stream;
    std::mt19937_64 rng(seed + stream * 0x9e3779b97f4a7c15ull);
    SuiteResult result{suite.name, trials, 0};
    for (int i = 0; i < trials; ++i) {
      bool pass = false;
      try {
        pass = suite.trial(rng);
      } catch (...) {
        pass = false;
      }
      if (pass) ++result.passes;
    }
    if (result.passes != result.trials) report.ok = false;
    report.suites.push_back(std::move(result));
  }
  return report;
}

}  // namespace diffop
