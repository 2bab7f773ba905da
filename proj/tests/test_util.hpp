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

#ifndef DIFFOP_TESTS_TEST_UTIL_HPP
#define DIFFOP_TESTS_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "diffop/ore_matrix.hpp"
#include "diffop/ore_poly.hpp"

namespace diffop::testutil {

inline Poly rand_poly(std::mt19937_64& rng, int max_deg, int max_abs) {
  std::uniform_int_distribution<int> deg_dist(0, max_deg);
  std::uniform_int_distribution<long> coeff_dist(-max_abs, max_abs);
  int deg = deg_dist(rng);
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i) c.emplace_back(coeff_dist(rng));
  return Poly::from_coeffs(std::move(c));
}

inline Poly rand_nonzero_poly(std::mt19937_64& rng, int max_deg, int max_abs) {
  for (;;) {
    Poly p = rand_poly(rng, max_deg, max_abs);
    if (!p.is_zero()) return p;
  }
}

inline RatFunc rand_ratfunc(std::mt19937_64& rng, int max_deg = 2,
                            int max_abs = 5) {
  return RatFunc(rand_poly(rng, max_deg, max_abs),
                 rand_nonzero_poly(rng, max_deg, max_abs));
}

inline RatFunc rand_nonzero_ratfunc(std::mt19937_64& rng, int max_deg = 2,
                                    int max_abs = 5) {
  return RatFunc(rand_nonzero_poly(rng, max_deg, max_abs),
                 rand_nonzero_poly(rng, max_deg, max_abs));
}

/* Operator of exactly the requested order, with small coefficients to keep
   the Euclidean chains cheap. */
inline OrePoly rand_operator(std::mt19937_64& rng, int order, int max_deg = 1,
                             int max_abs = 3) {
  std::vector<RatFunc> c;
  for (int i = 0; i < order; ++i)
    c.push_back(rand_ratfunc(rng, max_deg, max_abs));
  c.push_back(rand_nonzero_ratfunc(rng, max_deg, max_abs));
  return OrePoly::from_coeffs(std::move(c));
}

inline OrePoly rand_operator_up_to(std::mt19937_64& rng, int max_order,
                                   int max_deg = 1, int max_abs = 3) {
  std::uniform_int_distribution<int> order_dist(0, max_order);
  return rand_operator(rng, order_dist(rng), max_deg, max_abs);
}

inline OreMatrix rand_matrix(std::mt19937_64& rng, int size, int max_order,
                             int max_deg = 1, int max_abs = 2) {
  OreMatrix m(size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      m.at(i, j) = rand_operator_up_to(rng, max_order, max_deg, max_abs);
  return m;
}

inline OreMatrix rand_regular_matrix(std::mt19937_64& rng, int size,
                                     int max_order, int max_deg = 1,
                                     int max_abs = 2) {
  for (;;) {
    OreMatrix m = rand_matrix(rng, size, max_order, max_deg, max_abs);
    if (is_regular(m)) return m;
  }
}

/* Reduced echelon coefficient rows of the Q-span of the given polynomials.
   The form is unique, so two lists span the same subspace exactly when their
   canonical rows agree. */
inline std::vector<std::vector<Rational>> canonical_span(
    const std::vector<Poly>& polys) {
  int width = 0;
  for (const Poly& p : polys) width = std::max(width, p.degree() + 1);
  std::vector<std::vector<Rational>> rows;
  for (const Poly& p : polys) {
    if (p.is_zero()) continue;
    std::vector<Rational> row(width, Rational(0));
    for (int i = 0; i <= p.degree(); ++i) row[i] = p.coeff(i);
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < width && rank < static_cast<int>(rows.size());
       ++col) {
    int lead = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        lead = r;
        break;
      }
    if (lead < 0) continue;
    std::swap(rows[rank], rows[lead]);
    Rational inv = 1 / rows[rank][col];
    for (int c = 0; c < width; ++c) rows[rank][c] *= inv;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational factor = rows[r][col];
      for (int c = 0; c < width; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

inline bool same_span(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  return canonical_span(a) == canonical_span(b);
}

inline int span_rank(const std::vector<Poly>& a) {
  return static_cast<int>(canonical_span(a).size());
}

}  // namespace diffop::testutil

#endif  // DIFFOP_TESTS_TEST_UTIL_HPP
