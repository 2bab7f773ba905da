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

#include <random>
#include <vector>

#include "diffop/hermite.hpp"
#include "diffop/parser.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace diffop;
using namespace diffop::testutil;

namespace {

void check_trace(const OrePoly& a, const OrePoly& b, const WitnessTrace& t) {
  CHECK(t.m == a * t.b1);
  CHECK(t.m == b * t.a1);
  CHECK(t.u * t.b1 + t.v * t.a1 == OrePoly::one());
  CHECK(OrePoly::one() - t.a1 * t.v == t.p * b);
  CHECK(t.a1 * t.u == t.p * a);
  CHECK(OrePoly::one() - t.b1 * t.u == t.q * a);
  CHECK(t.b1 * t.v == t.q * b);
  CHECK(t.u_regular);
  CHECK(t.v_regular);
  CHECK_FALSE(t.u.is_zero());
  CHECK_FALSE(t.v.is_zero());
}

OrePoly left_coprime_partner(std::mt19937_64& rng, const OrePoly& b,
                             int max_order) {
  for (;;) {
    OrePoly a = rand_operator_up_to(rng, max_order);
    if (gcd_parts(a, b, Side::left).d.is_unit()) return a;
  }
}

}  // namespace

TEST_CASE("module actions on frozen examples") {
  NaturalModule V;
  CHECK(V.act(OrePoly::one(), RatFunc::variable()) == RatFunc::variable());
  CHECK(V.act(OrePoly::d(), parse_ratfunc("x^2")) == parse_ratfunc("2*x"));
  CHECK(V.act(parse_operator("x*D"), parse_ratfunc("1/x")) ==
        parse_ratfunc("-1/x"));

  CyclicModule W(parse_operator("D^2"));
  CHECK(W.act(OrePoly::d(), OrePoly::d()).is_zero());
  CHECK(W.act(OrePoly::d(), OrePoly::one()) == OrePoly::d());
  CHECK(W.reduce(parse_operator("D^2 + D + 1")) == parse_operator("D + 1"));
  CHECK_THROWS_AS(CyclicModule(OrePoly::zero()), PreconditionError);

  OreMatrix diag(2);
  diag.at(0, 0) = OrePoly::d();
  diag.at(1, 1) = OrePoly::d() * OrePoly::d();
  std::vector<RatFunc> column{parse_ratfunc("x^2"), parse_ratfunc("x^3")};
  std::vector<RatFunc> image = V.act(diag, column);
  CHECK(image[0] == parse_ratfunc("2*x"));
  CHECK(image[1] == parse_ratfunc("6*x"));
  CHECK_THROWS_AS(V.act(diag, std::vector<RatFunc>{RatFunc(1)}),
                  PreconditionError);
}

TEST_CASE("module axioms hold on random elements") {
  std::mt19937_64 rng(81);
  NaturalModule V;
  CyclicModule W(parse_operator("D^3 - x*D + 2"));
  for (int trial = 0; trial < 12; ++trial) {
    OrePoly r = rand_operator_up_to(rng, 2);
    OrePoly s = rand_operator_up_to(rng, 2);

    RatFunc f = V.sample(rng);
    CHECK(V.act(r + s, f) == V.act(r, f) + V.act(s, f));
    CHECK(V.act(r * s, f) == V.act(r, V.act(s, f)));
    CHECK(V.act(OrePoly::one(), f) == f);

    OrePoly g = W.sample(rng);
    CHECK(W.act(r + s, g) == W.act(r, g) + W.act(s, g));
    CHECK(W.act(r * s, g) == W.act(r, W.act(s, g)));
    CHECK(W.act(OrePoly::one(), g) == g);
  }
  for (int trial = 0; trial < 4; ++trial) {
    OreMatrix r = rand_matrix(rng, 2, 1);
    OreMatrix s = rand_matrix(rng, 2, 1);
    std::vector<RatFunc> f = V.sample_column(rng, 2);
    std::vector<RatFunc> sum = V.act(r, f);
    std::vector<RatFunc> other = V.act(s, f);
    for (int i = 0; i < 2; ++i) sum[i] += other[i];
    CHECK(V.act(r + s, f) == sum);
    CHECK(V.act(r * s, f) == V.act(r, V.act(s, f)));
  }
}

TEST_CASE("intersection witness on frozen pairs") {
  NaturalModule V;
  OrePoly a = parse_operator("x");
  OrePoly b = OrePoly::d();
  WitnessTrace t = thm33_trace(a, b);
  check_trace(a, b, t);
  CHECK(t.m == OrePoly::d());
  CHECK(t.a1 == OrePoly::one());

  RatFunc z0 = parse_ratfunc("x^2 + 1/(x-2)");
  auto [z, trace] = thm33_witness(a, b, V.act(t.b1, z0), V.act(t.a1, z0), V);
  CHECK(z == z0);
  check_trace(a, b, trace);

  /* A pair of units: the only solution of 1 z = x is z = x itself. */
  auto [w, wt] = thm33_witness(OrePoly::one(), OrePoly::one(),
                               parse_ratfunc("x^3"), parse_ratfunc("x^3"), V);
  CHECK(w == parse_ratfunc("x^3"));
  check_trace(OrePoly::one(), OrePoly::one(), wt);

  /* Degenerate first operator: y is forced to zero and z reproduces x. */
  auto [u, ut] = thm33_witness(OrePoly::zero(), OrePoly::one(),
                               parse_ratfunc("1/x"), RatFunc(), V);
  CHECK(u == parse_ratfunc("1/x"));
  check_trace(OrePoly::zero(), OrePoly::one(), ut);

  CHECK_THROWS_AS(thm33_trace(OrePoly::d(), OrePoly::zero()),
                  PreconditionError);
  CHECK_THROWS_AS(thm33_trace(OrePoly::d(), OrePoly::d()), PreconditionError);
  CHECK_THROWS_AS(thm33_witness(OrePoly::one(), OrePoly::one(), RatFunc(1),
                                RatFunc::variable(), V),
                  PreconditionError);
}

TEST_CASE("intersection witness roundtrips on random pairs") {
  std::mt19937_64 rng(82);
  NaturalModule V;
  for (int trial = 0; trial < 10; ++trial) {
    OrePoly b = rand_operator(rng, 1 + static_cast<int>(rng() % 2));
    OrePoly a = left_coprime_partner(rng, b, 2);
    WitnessTrace t = thm33_trace(a, b);
    check_trace(a, b, t);

    RatFunc z0 = V.sample(rng);
    RatFunc x = V.act(t.b1, z0);
    RatFunc y = V.act(t.a1, z0);
    auto [z, trace] = thm33_witness(a, b, x, y, V);
    CHECK(z == z0);
    CHECK(V.act(t.b1, z) == x);
    CHECK(V.act(t.a1, z) == y);
  }
}

TEST_CASE("intersection witness on cyclic modules") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 8; ++trial) {
    CyclicModule W(rand_operator(rng, 1 + static_cast<int>(rng() % 3)));
    OrePoly b = rand_operator(rng, 1 + static_cast<int>(rng() % 2));
    OrePoly a = left_coprime_partner(rng, b, 2);
    WitnessTrace t = thm33_trace(a, b);

    OrePoly z0 = W.sample(rng);
    OrePoly x = W.act(t.b1, z0);
    OrePoly y = W.act(t.a1, z0);
    auto [z, trace] = thm33_witness(a, b, x, y, W);
    check_trace(a, b, trace);
    /* Inside the module the preimage is again unique: u x + v y recovers z0
       because u b1 + v a1 = 1 already holds in the ring. */
    CHECK(z == z0);
  }
}

TEST_CASE("adjoint witness on frozen and random pairs") {
  NaturalModule V;
  RatFunc f = parse_ratfunc("x^2 + 3/(x+1)");
  RatFunc z = cor34_witness(OrePoly::d(), OrePoly::one(), f, f.derivative(),
                            Rational(-1), V);
  CHECK(z == f);

  CHECK_THROWS_AS(cor34_witness(OrePoly::d(), OrePoly::zero(), f, f,
                                Rational(-1), V),
                  PreconditionError);
  CHECK_THROWS_AS(cor34_witness(OrePoly::d(), OrePoly::d(), f, f, Rational(-1),
                                V),
                  PreconditionError);
  CHECK_THROWS_AS(cor34_witness(OrePoly::d(), OrePoly::one(), f, f,
                                Rational(0), V),
                  PreconditionError);
  /* x is self adjoint, so (x, 1) pairs with eps = +1 and not with -1. */
  RatFunc g = parse_ratfunc("x^3");
  CHECK(cor34_witness(parse_operator("x"), OrePoly::one(), g,
                      parse_ratfunc("x^4"), Rational(1), V) == g);
  CHECK_THROWS_AS(cor34_witness(parse_operator("x"), OrePoly::one(), g, g,
                                Rational(-1), V),
                  PreconditionError);

  std::mt19937_64 rng(84);
  for (int trial = 0; trial < 8; ++trial) {
    RatFunc h = V.sample(rng);
    RatFunc zr = cor34_witness(OrePoly::d(), OrePoly::one(), h, h.derivative(),
                               Rational(-1), V);
    CHECK(zr == h);
  }
}

TEST_CASE("skew pairs and their action level check") {
  CHECK(skew_pair_check(OrePoly::d(), OrePoly::one()));
  CHECK_FALSE(skew_pair_check(OrePoly::one(), OrePoly::one()));
  CHECK_FALSE(skew_pair_check(OrePoly::d(), parse_operator("x")));

  std::mt19937_64 rng(85);
  for (int trial = 0; trial < 10; ++trial) {
    RatFunc f = rand_nonzero_ratfunc(rng, 1, 3);
    OrePoly b{f};
    OrePoly a = OrePoly::d() * b;
    CHECK(skew_pair_check(a, b));
    CyclicModule W(rand_operator(rng, 1 + static_cast<int>(rng() % 2)));
    CHECK(skew_acts_as_zero(a, b, W));
  }

  /* The two levels can disagree: D^2 x + x D^2 is nonzero in the ring but
     lands in the left ideal generated by D, so it acts as zero on R/RD. */
  OrePoly a2 = parse_operator("D^2");
  OrePoly x = parse_operator("x");
  CHECK_FALSE(skew_pair_check(a2, x));
  CHECK(skew_acts_as_zero(a2, x, CyclicModule(OrePoly::d())));
  CHECK_FALSE(skew_acts_as_zero(OrePoly::one(), OrePoly::one(),
                                CyclicModule(OrePoly::d())));
}

TEST_CASE("maximal isotropy witnesses") {
  NaturalModule V;
  CHECK(maximal_isotropy_witness(OrePoly::d(), OrePoly::one(), RatFunc(),
                                 RatFunc(), V)
            .is_zero());

  std::mt19937_64 rng(86);
  for (int trial = 0; trial < 10; ++trial) {
    RatFunc f = rand_nonzero_ratfunc(rng, 1, 3);
    OrePoly b{f};
    OrePoly a = OrePoly::d() * b;
    RatFunc y1 = V.sample(rng);
    RatFunc y2 = y1.derivative();
    RatFunc z = maximal_isotropy_witness(a, b, y1, y2, V);
    CHECK(V.act(b, z) == y1);
    CHECK(V.act(a, z) == y2);
    CHECK(z == y1 * f.inverse());
  }

  CHECK_THROWS_AS(maximal_isotropy_witness(OrePoly::one(), OrePoly::one(),
                                           RatFunc(1), RatFunc(1), V),
                  PreconditionError);
  CHECK_THROWS_AS(maximal_isotropy_witness(OrePoly::d(), OrePoly::one(),
                                           RatFunc(1), RatFunc(1), V),
                  PreconditionError);
}

TEST_CASE("graphs of skew pairs are isotropic for the residue pairing") {
  std::mt19937_64 rng(87);
  NaturalModule V;
  for (int trial = 0; trial < 10; ++trial) {
    RatFunc f = rand_nonzero_ratfunc(rng, 1, 3);
    OrePoly b{f};
    OrePoly a = OrePoly::d() * b;
    RatFunc z = V.sample(rng);
    RatFunc zp = V.sample(rng);
    std::vector<RatFunc> left{V.act(a, z), V.act(b, z)};
    std::vector<RatFunc> right{V.act(b, zp), V.act(a, zp)};
    CHECK(pairing_class(left, right).is_zero());
  }
}

TEST_CASE("pairing classes modulo total derivatives") {
  CHECK_FALSE(pairing_class(parse_ratfunc("1/x"), RatFunc(1)).is_zero());
  CHECK(pairing_class(parse_ratfunc("1/x"), RatFunc()).is_zero());
  CHECK(pairing_class(parse_ratfunc("(x^2+2*x)/(x^2+2*x+1)"), RatFunc(1))
            .is_zero());

  std::vector<RatFunc> u{parse_ratfunc("1/x"), RatFunc::variable()};
  std::vector<RatFunc> v{RatFunc(1), parse_ratfunc("1/x")};
  CHECK_FALSE(pairing_class(u, v).is_zero());
  CHECK_THROWS_AS(pairing_class(u, std::vector<RatFunc>{RatFunc(1)}),
                  PreconditionError);

  std::mt19937_64 rng(88);
  for (int trial = 0; trial < 10; ++trial) {
    RatFunc f = rand_ratfunc(rng);
    RatFunc g = rand_ratfunc(rng);
    RatFunc h = rand_ratfunc(rng);
    CHECK(pairing_class(f, g) == pairing_class(g, f));
    CHECK(pairing_class(f + g, h).representative ==
          pairing_class(f, h).representative +
              pairing_class(g, h).representative);
    CHECK(pairing_class(f, RatFunc(1)).is_zero() == is_total_derivative(f));
  }
}

TEST_CASE("integration by parts against the adjoint") {
  std::mt19937_64 rng(89);
  NaturalModule V;
  for (int trial = 0; trial < 12; ++trial) {
    OrePoly a = rand_operator_up_to(rng, 2);
    RatFunc f = V.sample(rng);
    RatFunc g = V.sample(rng);
    RatFunc difference = V.act(a, f) * g - f * V.act(adjoint(a), g);
    CHECK(is_total_derivative(difference));
  }
}

TEST_CASE("polynomial kernels of frozen operators") {
  std::vector<Poly> one_and_x{Poly::one(), Poly::variable()};
  CHECK(kernel_polynomial(parse_operator("D^2"), 5) == one_and_x);
  CHECK(kernel_polynomial(parse_operator("x*D - 1"), 5) ==
        std::vector<Poly>{Poly::variable()});
  CHECK(kernel_polynomial(parse_operator("x^2*D^2 - 2*x*D + 2"), 5) ==
        std::vector<Poly>{Poly::variable(),
                          Poly::monomial(Rational(1), 2)});
  CHECK(kernel_polynomial(OrePoly::d(), 0) == std::vector<Poly>{Poly::one()});
  CHECK(kernel_polynomial(parse_operator("D - 1"), 5).empty());
  CHECK_THROWS_AS(kernel_polynomial(OrePoly::zero(), 3), PreconditionError);
  CHECK_THROWS_AS(kernel_polynomial(OrePoly::d(), -1), PreconditionError);

  std::mt19937_64 rng(90);
  for (int trial = 0; trial < 10; ++trial) {
    OrePoly b = rand_operator(rng, 1 + static_cast<int>(rng() % 3));
    std::vector<Poly> kernel = kernel_polynomial(b, 6);
    CHECK(static_cast<int>(kernel.size()) <= b.order());
    for (const Poly& p : kernel) CHECK(b.apply(RatFunc(p)).is_zero());
  }
}

TEST_CASE("kernels locate the gcd of a crafted pair") {
  OrePoly a = parse_operator("x*D^2");
  OrePoly b = parse_operator("x*D^2 + x*D - 1");
  std::vector<Poly> ka = kernel_polynomial(a, 5);
  std::vector<Poly> kb = kernel_polynomial(b, 5);
  CHECK(same_span(ka, {Poly::one(), Poly::variable()}));
  CHECK(same_span(kb, {Poly::variable()}));

  GcdParts parts = gcd_parts(a, b, Side::right);
  CHECK(parts.d == parse_operator("D - 1/x"));
  std::vector<Poly> kd = kernel_polynomial(parts.d, 5);
  CHECK(same_span(kd, {Poly::variable()}));

  /* The kernel of the gcd is the intersection of the two kernels; the rank
     identity pins its dimension. */
  std::vector<Poly> joined = ka;
  joined.insert(joined.end(), kb.begin(), kb.end());
  int meet = span_rank(ka) + span_rank(kb) - span_rank(joined);
  CHECK(static_cast<int>(kd.size()) == meet);
  for (const Poly& p : kd) {
    CHECK(a.apply(RatFunc(p)).is_zero());
    CHECK(b.apply(RatFunc(p)).is_zero());
  }
}

TEST_CASE("lcm cofactors carry kernels onto kernels") {
  OrePoly a = parse_operator("x*D + 1");
  OrePoly b = parse_operator("x*D - 1");
  LcmCertificate cert = lcm(a, b, Side::right);
  CHECK(cert.m.order() == 2);
  CHECK(cert.m == a * cert.b1);
  CHECK(cert.m == b * cert.a1);
  /* Right coprime pair, so each cofactor keeps the order of its partner. */
  CHECK(cert.b1.order() == b.order());
  CHECK(cert.a1.order() == a.order());

  std::vector<Poly> kb = kernel_polynomial(b, 5);
  std::vector<Poly> kb1 = kernel_polynomial(cert.b1, 5);
  REQUIRE(kb.size() == 1);
  REQUIRE(kb1.size() == 1);
  RatFunc image = cert.a1.apply(RatFunc(kb1[0]));
  REQUIRE(image.is_polynomial());
  CHECK(b.apply(image).is_zero());
  CHECK(same_span({image.num()}, kb));
}

TEST_CASE("intersection check reports") {
  NaturalModule V;
  IntersectionReport trivial =
      intersection_check(OrePoly::one(), OrePoly::one(), V, 8, 11);
  CHECK(trivial.trials == 8);
  CHECK(trivial.passes == 8);
  CHECK(trivial.failures.empty());

  IntersectionReport natural =
      intersection_check(parse_operator("x"), OrePoly::d(), V, 10, 12);
  CHECK(natural.passes == 10);

  CyclicModule W(parse_operator("D^2 - x"));
  IntersectionReport cyclic =
      intersection_check(parse_operator("x"), OrePoly::d(), W, 10, 13);
  CHECK(cyclic.passes == 10);

  IntersectionReport replay =
      intersection_check(parse_operator("x"), OrePoly::d(), V, 10, 12);
  CHECK(replay.passes == natural.passes);

  CHECK_THROWS_AS(intersection_check(OrePoly::d(), OrePoly::d(), V, 5, 14),
                  PreconditionError);
}
