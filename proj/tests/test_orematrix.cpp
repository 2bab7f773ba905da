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

#include "diffop/ore_matrix.hpp"

#include <random>

#include "diffop/parser.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace diffop;
using namespace diffop::testutil;

namespace {

OreMatrix mat2(const char* a, const char* b, const char* c, const char* d) {
  return OreMatrix::from_entries(
      2, {parse_operator(a), parse_operator(b), parse_operator(c),
          parse_operator(d)});
}

/* Random invertible matrix built from elementary operations. */
OreMatrix rand_unimodular(std::mt19937_64& rng, int size, int ops) {
  OreMatrix m = OreMatrix::identity(size);
  std::uniform_int_distribution<int> row(0, size - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int k = 0; k < ops; ++k) {
    int i = row(rng);
    int j = row(rng);
    switch (kind(rng)) {
      case 0: {
        if (i == j) break;
        OrePoly q = rand_operator_up_to(rng, 1);
        for (int c = 0; c < size; ++c) m.at(i, c) += q * m.at(j, c);
        break;
      }
      case 1:
        for (int c = 0; c < size; ++c)
          std::swap(m.at(i, c), m.at(j, c));
        break;
      default: {
        OrePoly u(rand_nonzero_ratfunc(rng, 1, 2));
        for (int c = 0; c < size; ++c) m.at(i, c) = u * m.at(i, c);
        break;
      }
    }
  }
  return m;
}

}  // namespace

TEST_CASE("matrix arithmetic and action") {
  OreMatrix a = mat2("D", "x", "1", "D");
  OreMatrix b = mat2("1", "0", "D", "x^2");

  CHECK(a * OreMatrix::identity(2) == a);
  CHECK((a + b) - b == a);
  CHECK(a * (b + b) == a * b + a * b);

  std::vector<RatFunc> f{parse_ratfunc("x^2"), parse_ratfunc("1/x")};
  std::vector<RatFunc> af = a.apply(f);
  CHECK(af[0] == parse_ratfunc("2*x + 1"));
  CHECK(af[1] == parse_ratfunc("x^2 - 1/x^2"));

  std::mt19937_64 rng(20260401);
  for (int trial = 0; trial < 20; ++trial) {
    OreMatrix p = rand_matrix(rng, 2, 2);
    OreMatrix q = rand_matrix(rng, 2, 2);
    std::vector<RatFunc> g{rand_ratfunc(rng), rand_ratfunc(rng)};
    CHECK((p * q).apply(g) == p.apply(q.apply(g)));
  }
}

TEST_CASE("matrix adjoint is an anti-involution") {
  std::mt19937_64 rng(20260402);
  for (int trial = 0; trial < 20; ++trial) {
    OreMatrix a = rand_matrix(rng, 2, 2);
    OreMatrix b = rand_matrix(rng, 2, 2);
    CHECK(adjoint(adjoint(a)) == a);
    CHECK(adjoint(a * b) == adjoint(b) * adjoint(a));
  }
}

TEST_CASE("row reduction of a worked example") {
  OreMatrix m = mat2("D", "x", "1", "D");
  MatrixHermiteForm f = row_hermite(m);
  CHECK(f.h == mat2("1", "D", "0", "D^2 - x"));
  CHECK(f.u * m == f.h);
  CHECK(f.uinv * f.h == m);
  CHECK(f.u * f.uinv == OreMatrix::identity(2));
  CHECK(ddet_degree(m) == 2);
}

TEST_CASE("degree of the determinant") {
  CHECK(ddet_degree(mat2("D", "0", "0", "D^2")) == 3);
  CHECK(ddet_degree(mat2("0", "1", "1", "0")) == 0);
  CHECK(ddet_degree(mat2("D", "D", "D", "D")) == std::nullopt);
  CHECK_FALSE(is_regular(OreMatrix(2)));
  CHECK(is_regular(OreMatrix::identity(3)));
}

TEST_CASE("row reduction invariants") {
  std::mt19937_64 rng(20260403);
  for (int trial = 0; trial < 30; ++trial) {
    int size = 2 + trial % 2;
    int max_order = size == 2 || trial % 6 == 1 ? 2 : 1;
    OreMatrix m = rand_matrix(rng, size, max_order);
    if (trial % 5 == 0)
      for (int c = 0; c < size; ++c) m.at(size - 1, c) = m.at(0, c);

    MatrixHermiteForm f = row_hermite(m);
    CHECK(f.u * m == f.h);
    CHECK(f.uinv * f.h == m);
    CHECK(f.u * f.uinv == OreMatrix::identity(size));
    CHECK(is_unimodular(f.u));
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < i; ++j) CHECK(f.h.at(i, j).is_zero());
    for (int i = 0; i < size; ++i) {
      const OrePoly& pivot = f.h.at(i, i);
      if (pivot.is_zero()) continue;
      CHECK(pivot.is_monic());
      for (int k = 0; k < i; ++k)
        CHECK(f.h.at(k, i).order() < pivot.order());
    }
  }
}

TEST_CASE("determinant degree is additive on regular products") {
  std::mt19937_64 rng(20260404);
  for (int trial = 0; trial < 25; ++trial) {
    int size = trial % 5 == 2 ? 3 : 2;
    OreMatrix a = rand_regular_matrix(rng, size, 1);
    OreMatrix b = rand_regular_matrix(rng, size, 1);
    std::optional<int> da = ddet_degree(a);
    std::optional<int> db = ddet_degree(b);
    std::optional<int> dab = ddet_degree(a * b);
    REQUIRE(dab.has_value());
    CHECK(*dab == *da + *db);
  }
}

TEST_CASE("unimodular inverse") {
  OreMatrix swap = mat2("0", "1", "1", "0");
  CHECK(is_unimodular(swap));
  CHECK(unimodular_inverse(swap) == swap);

  std::mt19937_64 rng(20260405);
  for (int trial = 0; trial < 15; ++trial) {
    OreMatrix e = rand_unimodular(rng, 2 + trial % 2, 4);
    CHECK(is_unimodular(e));
    CHECK(ddet_degree(e) == 0);
    OreMatrix inv = unimodular_inverse(e);
    CHECK(inv * e == OreMatrix::identity(e.size()));
    CHECK(e * inv == OreMatrix::identity(e.size()));
  }

  CHECK_FALSE(is_unimodular(mat2("D", "0", "0", "1")));
  CHECK_THROWS_AS(unimodular_inverse(mat2("D", "0", "0", "1")),
                  PreconditionError);
}

TEST_CASE("matrix gcd certificates") {
  std::mt19937_64 rng(20260406);
  for (int trial = 0; trial < 20; ++trial) {
    OreMatrix a = rand_matrix(rng, 2, 1);
    OreMatrix b = rand_matrix(rng, 2, 1);

    MatrixBezoutCertificate r = matrix_gcd(a, b, Side::right);
    CHECK(r.u * a + r.v * b == r.d);
    CHECK(r.a1 * r.d == a);
    CHECK(r.b1 * r.d == b);

    MatrixBezoutCertificate l = matrix_gcd(a, b, Side::left);
    CHECK(a * l.u + b * l.v == l.d);
    CHECK(l.d * l.a1 == a);
    CHECK(l.d * l.b1 == b);
  }
}

TEST_CASE("matrix gcd sees a planted factor") {
  std::mt19937_64 rng(20260407);
  for (int trial = 0; trial < 10; ++trial) {
    OreMatrix g = rand_regular_matrix(rng, 2, 1);
    OreMatrix s = rand_regular_matrix(rng, 2, 1);
    OreMatrix t = rand_regular_matrix(rng, 2, 1);
    MatrixBezoutCertificate cert = matrix_gcd(s * g, t * g, Side::right);
    REQUIRE(is_regular(cert.d));
    CHECK(*ddet_degree(cert.d) >= *ddet_degree(g));
    CHECK(cert.a1 * cert.d == s * g);
    CHECK(cert.b1 * cert.d == t * g);
  }
}

TEST_CASE("matrix lcm certificates and degree formula") {
  std::mt19937_64 rng(20260408);
  for (int trial = 0; trial < 15; ++trial) {
    OreMatrix a = rand_regular_matrix(rng, 2, 1);
    OreMatrix b = rand_regular_matrix(rng, 2, 1);

    MatrixLcmCertificate left = matrix_lcm(a, b, Side::left);
    CHECK(left.b1 * a == left.m);
    CHECK(left.a1 * b == left.m);
    REQUIRE(is_regular(left.m));

    MatrixBezoutCertificate rgcd = matrix_gcd(a, b, Side::right);
    REQUIRE(is_regular(rgcd.d));
    CHECK(*ddet_degree(left.m) + *ddet_degree(rgcd.d) ==
          *ddet_degree(a) + *ddet_degree(b));

    MatrixLcmCertificate right = matrix_lcm(a, b, Side::right);
    CHECK(a * right.b1 == right.m);
    CHECK(b * right.a1 == right.m);
    REQUIRE(is_regular(right.m));
    MatrixBezoutCertificate lgcd = matrix_gcd(a, b, Side::left);
    CHECK(*ddet_degree(right.m) + *ddet_degree(lgcd.d) ==
          *ddet_degree(a) + *ddet_degree(b));
  }
  CHECK_THROWS_AS(
      matrix_lcm(OreMatrix(2), OreMatrix::identity(2), Side::left),
      PreconditionError);
}

TEST_CASE("matrix lcm matches the scalar one on diagonal input") {
  std::mt19937_64 rng(20260409);
  for (int trial = 0; trial < 10; ++trial) {
    OrePoly a0 = rand_operator(rng, 1);
    OrePoly a1 = rand_operator(rng, 1 + trial % 2);
    OrePoly b0 = rand_operator(rng, 1);
    OrePoly b1 = rand_operator(rng, 1);
    OreMatrix a(2), b(2);
    a.at(0, 0) = a0;
    a.at(1, 1) = a1;
    b.at(0, 0) = b0;
    b.at(1, 1) = b1;
    MatrixLcmCertificate cert = matrix_lcm(a, b, Side::left);
    int expected = lcm(a0, b0, Side::left).m.order() +
                   lcm(a1, b1, Side::left).m.order();
    CHECK(*ddet_degree(cert.m) == expected);
  }
}

TEST_CASE("ore witness with a singular left argument") {
  OreMatrix singular = mat2("D", "D", "D", "D");
  OreMatrix zero(2);
  std::mt19937_64 rng(20260411);
  for (int trial = 0; trial < 8; ++trial) {
    OreMatrix a = trial == 0 ? zero : trial == 1 ? singular
                                                 : rand_matrix(rng, 2, 1);
    OreMatrix b = rand_regular_matrix(rng, 2, 1);

    MatrixOreWitness right = matrix_ore_witness(a, b, Side::right);
    CHECK(a * right.b1 == b * right.a1);
    CHECK(is_regular(right.b1));

    MatrixOreWitness left = matrix_ore_witness(a, b, Side::left);
    CHECK(left.b1 * a == left.a1 * b);
    CHECK(is_regular(left.b1));
  }
  CHECK_THROWS_AS(matrix_ore_witness(zero, singular, Side::right),
                  PreconditionError);
}

TEST_CASE("exact matrix quotients") {
  std::mt19937_64 rng(20260412);
  for (int trial = 0; trial < 8; ++trial) {
    OreMatrix q = rand_matrix(rng, 2, 1);
    OreMatrix b = rand_regular_matrix(rng, 2, 1);
    CHECK(exact_quotient(q * b, b, Side::left) == q);
    CHECK(exact_quotient(b * q, b, Side::right) == q);
  }
  OreMatrix b = mat2("D", "x", "1", "D");
  OreMatrix off = b * b + OreMatrix::identity(2);
  CHECK_THROWS_AS(exact_quotient(off, b, Side::left), PreconditionError);
  CHECK_THROWS_AS(exact_quotient(b, mat2("D", "D", "D", "D"), Side::left),
                  PreconditionError);
}

TEST_CASE("regularizing shifts") {
  OreMatrix a = mat2("D", "0", "0", "0");
  RegularizeResult res = regularize(a, OreMatrix::identity(2), Side::right);
  CHECK(is_regular(res.value));
  CHECK(a + OreMatrix::identity(2) * res.q == res.value);
  CHECK(res.attempts >= 1);

  CHECK(regularize(mat2("D", "0", "0", "D"), OreMatrix::identity(2),
                   Side::left)
            .q.is_zero());

  CHECK_THROWS_AS(regularize(a, mat2("D", "D", "D", "D"), Side::left),
                  PreconditionError);
  CHECK_THROWS_AS(regularize(a, OreMatrix::identity(2), Side::left, 0, 0),
                  SearchError);

  std::mt19937_64 rng(20260410);
  for (int trial = 0; trial < 10; ++trial) {
    OreMatrix u = rand_matrix(rng, 2, 1);
    OreMatrix bb = rand_regular_matrix(rng, 2, 1);
    OreMatrix v = rand_matrix(rng, 2, 1);
    OreMatrix aa = rand_regular_matrix(rng, 2, 1);
    Side side = trial % 2 ? Side::left : Side::right;
    RegularizePairResult pair =
        regularize_pair(u, aa, v, bb, side, trial);
    CHECK(is_regular(pair.value1));
    CHECK(is_regular(pair.value2));
    if (side == Side::left) {
      CHECK(pair.value1 == u + pair.q * aa);
      CHECK(pair.value2 == v + pair.q * bb);
    } else {
      CHECK(pair.value1 == u + aa * pair.q);
      CHECK(pair.value2 == v + bb * pair.q);
    }
  }
}
