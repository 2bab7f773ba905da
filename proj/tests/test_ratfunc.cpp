#include <random>

#include "diffop/hermite.hpp"
#include "diffop/ratfunc.hpp"
#include "doctest.h"

using namespace diffop;

namespace {

Poly P(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Poly::from_coeffs(std::move(c));
}

RatFunc rf(std::initializer_list<long> num, std::initializer_list<long> den) {
  return RatFunc(P(num), P(den));
}

Poly random_poly(std::mt19937_64& rng, int max_deg, int max_abs) {
  std::uniform_int_distribution<int> deg_dist(0, max_deg);
  std::uniform_int_distribution<long> coeff_dist(-max_abs, max_abs);
  int deg = deg_dist(rng);
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i) c.emplace_back(coeff_dist(rng));
  return Poly::from_coeffs(std::move(c));
}

Poly random_nonzero_poly(std::mt19937_64& rng, int max_deg, int max_abs) {
  for (;;) {
    Poly p = random_poly(rng, max_deg, max_abs);
    if (!p.is_zero()) return p;
  }
}

RatFunc random_ratfunc(std::mt19937_64& rng, int max_deg = 2, int max_abs = 5) {
  return RatFunc(random_poly(rng, max_deg, max_abs),
                 random_nonzero_poly(rng, max_deg, max_abs));
}

}  // namespace

TEST_CASE("poly division and gcd") {
  Poly a = P({-1, 0, 1});  // x^2 - 1
  Poly b = P({1, 1});      // x + 1
  auto [q, r] = divrem(a, b);
  CHECK(q == P({-1, 1}));
  CHECK(r.is_zero());

  CHECK(gcd(a, b) == b);
  CHECK(gcd(P({0}), P({2, 2})) == P({1, 1}));
  CHECK(gcd(Poly(), Poly()).is_zero());

  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    Poly u = random_poly(rng, 4, 6);
    Poly v = random_nonzero_poly(rng, 3, 6);
    auto [qq, rr] = divrem(u, v);
    CHECK(qq * v + rr == u);
    CHECK(rr.degree() < v.degree());
    Poly g = gcd(u, v);
    if (!u.is_zero()) CHECK(divrem(u, g).second.is_zero());
    CHECK(divrem(v, g).second.is_zero());
  }
}

TEST_CASE("poly xgcd identity") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Poly a = random_poly(rng, 4, 5);
    Poly b = random_poly(rng, 4, 5);
    PolyXgcd e = xgcd(a, b);
    CHECK(e.s * a + e.t * b == e.g);
    if (!a.is_zero() || !b.is_zero()) CHECK(e.g.is_monic());
  }
}

TEST_CASE("ratfunc canonical form") {
  RatFunc f = rf({-1, 0, 1}, {1, 1});  // (x^2-1)/(x+1)
  CHECK(f.num() == P({-1, 1}));
  CHECK(f.den().is_one());
  CHECK(f + RatFunc() == f);

  // denominators normalized monic
  RatFunc g = rf({1}, {0, 2});
  CHECK(g.num() == Poly(Rational(1, 2)));
  CHECK(g.den() == P({0, 1}));

  RatFunc inv_x = rf({1}, {0, 1});
  CHECK(inv_x * RatFunc::variable() == RatFunc(Rational(1)));

  CHECK_THROWS_AS(rf({1}, {0}), PreconditionError);
  CHECK_THROWS_AS(RatFunc(Rational(1)) / RatFunc(), PreconditionError);
}

TEST_CASE("ratfunc field axioms on random values") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    RatFunc a = random_ratfunc(rng);
    RatFunc b = random_ratfunc(rng);
    RatFunc c = random_ratfunc(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    if (!b.is_zero()) CHECK(a / b * b == a);
    // operations keep results canonical
    RatFunc s = a * b + c;
    CHECK(RatFunc(s.num(), s.den()) == s);
  }
}

TEST_CASE("derivation examples and Leibniz rule") {
  CHECK(RatFunc::variable().derivative() == RatFunc(Rational(1)));
  CHECK(rf({1}, {0, 1}).derivative() == rf({-1}, {0, 0, 1}));
  CHECK(rf({0, 1}, {1, 1}).derivative() == rf({1}, {1, 2, 1}));
  CHECK(RatFunc(Rational(5)).derivative().is_zero());

  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    RatFunc a = random_ratfunc(rng);
    RatFunc b = random_ratfunc(rng);
    CHECK((a + b).derivative() == a.derivative() + b.derivative());
    CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
  }
}

TEST_CASE("hermite reduction examples") {
  // 1/x^2 + 1/x
  RatFunc g = rf({1}, {0, 0, 1}) + rf({1}, {0, 1});
  HermiteDecomposition h = hermite_reduce(g);
  CHECK(h.integrated == rf({-1}, {0, 1}));
  CHECK(h.residue == rf({1}, {0, 1}));

  // polynomial input antidifferentiates completely
  HermiteDecomposition hp = hermite_reduce(RatFunc(P({1, 0, 3})));
  CHECK(hp.residue.is_zero());
  CHECK(hp.integrated == RatFunc(P({0, 1, 0, 1})));

  // proper fraction over a squarefree denominator is already reduced
  RatFunc simple = rf({1, 2}, {-1, 0, 1});
  HermiteDecomposition hs = hermite_reduce(simple);
  CHECK(hs.integrated.is_zero());
  CHECK(hs.residue == simple);
}

TEST_CASE("hermite reduction properties") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 60; ++i) {
    RatFunc g = random_ratfunc(rng, 4, 5);
    HermiteDecomposition h = hermite_reduce(g);
    CHECK(h.integrated.derivative() + h.residue == g);
    CHECK(h.residue.num().degree() < h.residue.den().degree());
    Poly d = h.residue.den();
    CHECK(gcd(d, d.derivative()).is_constant());
  }
}

TEST_CASE("total derivative membership") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 40; ++i) {
    RatFunc f = random_ratfunc(rng, 3, 4);
    CHECK(is_total_derivative(f.derivative()));
  }
  CHECK_FALSE(is_total_derivative(rf({1}, {0, 1})));
  // (3x^2+1)/(x^3+x) has simple poles, so it is not a derivative
  CHECK_FALSE(is_total_derivative(rf({1, 0, 3}, {0, 1, 0, 1})));
  CHECK(is_total_derivative(RatFunc()));
}
