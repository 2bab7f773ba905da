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
#include <utility>

namespace diffop {

OreMatrix::OreMatrix(int size) : size_(size) {
  if (size < 0) throw PreconditionError("matrix size must be non-negative");
  entries_.assign(static_cast<std::size_t>(size) * size, OrePoly());
}

OreMatrix OreMatrix::identity(int size) {
  return scalar(size, OrePoly::one());
}

OreMatrix OreMatrix::scalar(int size, const OrePoly& p) {
  OreMatrix m(size);
  for (int i = 0; i < size; ++i) m.at(i, i) = p;
  return m;
}

OreMatrix OreMatrix::from_entries(int size, std::vector<OrePoly> entries) {
  OreMatrix m(size);
  if (entries.size() != m.entries_.size())
    throw PreconditionError("entry count does not match matrix size");
  m.entries_ = std::move(entries);
  return m;
}

const OrePoly& OreMatrix::at(int row, int col) const {
  return entries_[static_cast<std::size_t>(row) * size_ + col];
}

OrePoly& OreMatrix::at(int row, int col) {
  return entries_[static_cast<std::size_t>(row) * size_ + col];
}

bool OreMatrix::is_zero() const {
  for (const OrePoly& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool OreMatrix::is_identity() const {
  return *this == identity(size_);
}

OreMatrix OreMatrix::operator-() const {
  OreMatrix out = *this;
  for (OrePoly& e : out.entries_) e = -e;
  return out;
}

OreMatrix& OreMatrix::operator+=(const OreMatrix& rhs) {
  if (size_ != rhs.size_) throw PreconditionError("matrix size mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] += rhs.entries_[i];
  return *this;
}

OreMatrix& OreMatrix::operator-=(const OreMatrix& rhs) {
  if (size_ != rhs.size_) throw PreconditionError("matrix size mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] -= rhs.entries_[i];
  return *this;
}

OreMatrix operator*(const OreMatrix& lhs, const OreMatrix& rhs) {
  if (lhs.size_ != rhs.size_) throw PreconditionError("matrix size mismatch");
  OreMatrix out(lhs.size_);
  for (int i = 0; i < lhs.size_; ++i)
    for (int k = 0; k < lhs.size_; ++k) {
      if (lhs.at(i, k).is_zero()) continue;
      for (int j = 0; j < lhs.size_; ++j)
        out.at(i, j) += lhs.at(i, k) * rhs.at(k, j);
    }
  return out;
}

std::vector<RatFunc> OreMatrix::apply(const std::vector<RatFunc>& f) const {
  if (static_cast<int>(f.size()) != size_)
    throw PreconditionError("vector length does not match matrix size");
  std::vector<RatFunc> out(f.size());
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j)
      if (!at(i, j).is_zero()) out[i] += at(i, j).apply(f[j]);
  return out;
}

OreMatrix adjoint(const OreMatrix& m) {
  OreMatrix out(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) out.at(j, i) = adjoint(m.at(i, j));
  return out;
}

namespace {

/* Rectangular staircase reduction.  Every elementary operation E updates the
   transform w to E*w, so w * original = r throughout.  The inverse transform
   is not tracked here; it falls out of reducing w itself (see
   invert_transform below), which is much cheaper than dragging inverse
   updates through every step. */
class RowReducer {
 public:
  RowReducer(std::vector<std::vector<OrePoly>> rows, int cols)
      : rows_(static_cast<int>(rows.size())), cols_(cols), r_(std::move(rows)) {
    w_.assign(rows_, std::vector<OrePoly>(rows_));
    for (int i = 0; i < rows_; ++i) {
      w_[i][i] = OrePoly::one();
      strip_content(i);
    }
  }

  void run() {
    std::vector<int> pivot_cols;
    int pivot_row = 0;
    for (int c = 0; c < cols_ && pivot_row < rows_; ++c) {
      if (!settle_column(c, pivot_row)) continue;
      reduce_above(pivot_row, c);
      pivot_cols.push_back(c);
      ++pivot_row;
    }
    /* Monic pivots last: everything before this point works on rows with
       polynomial coefficients, which keeps the field operations cheap. */
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      const OrePoly& pivot = r_[i][pivot_cols[i]];
      if (!pivot.is_monic())
        scale_row(static_cast<int>(i), OrePoly(pivot.leading().inverse()));
    }
  }

  const std::vector<std::vector<OrePoly>>& reduced() const { return r_; }
  const std::vector<std::vector<OrePoly>>& transform() const { return w_; }

 private:
  /* Euclid across the rows at and below pivot_row until only the pivot is
     nonzero in column c.  Returns false when the whole column is zero. */
  bool settle_column(int c, int pivot_row) {
    for (;;) {
      int best = -1;
      for (int i = pivot_row; i < rows_; ++i) {
        if (r_[i][c].is_zero()) continue;
        if (best < 0 || r_[i][c].order() < r_[best][c].order()) best = i;
      }
      if (best < 0) return false;
      if (best != pivot_row) swap_rows(pivot_row, best);
      bool touched = false;
      for (int i = pivot_row + 1; i < rows_; ++i) {
        if (r_[i][c].is_zero()) continue;
        eliminate_entry(i, pivot_row, c);
        touched = true;
      }
      if (!touched) return true;
    }
  }

  void reduce_above(int pivot_row, int c) {
    for (int i = 0; i < pivot_row; ++i)
      if (r_[i][c].order() >= r_[pivot_row][c].order())
        eliminate_entry(i, pivot_row, c);
  }

  /* Brings the order of entry (i, c) below the order of the pivot. */
  void eliminate_entry(int i, int pivot_row, int c) {
    while (!r_[i][c].is_zero() &&
           r_[i][c].order() >= r_[pivot_row][c].order())
      cancel_top(i, pivot_row, c);
    strip_content(i);
  }

  /* Fraction free step: row_i is scaled so that a monomial multiple of the
     pivot row cancels the top term of entry (i, c) without leaving the
     polynomial coefficient domain. */
  void cancel_top(int i, int pivot_row, int c) {
    RatFunc alpha = r_[i][c].leading();
    RatFunc beta = r_[pivot_row][c].leading();
    int delta = r_[i][c].order() - r_[pivot_row][c].order();
    if (!beta.is_one()) scale_row(i, OrePoly(beta));
    add_multiple(i, pivot_row, OrePoly::monomial(-alpha, delta));
  }

  /* Coefficient growth control: pull the common rational function content
     out of a row.  This is an elementary scaling, so it is recorded in the
     transforms like any other operation. */
  void strip_content(int i) {
    Poly num_gcd;
    Poly den_lcm = Poly::one();
    for (int c = 0; c < cols_; ++c)
      for (int k = 0; k <= r_[i][c].order(); ++k) {
        const RatFunc& f = r_[i][c].coeff(k);
        if (f.is_zero()) continue;
        num_gcd = gcd(num_gcd, f.num());
        den_lcm = divexact(den_lcm * f.den(), gcd(den_lcm, f.den()));
      }
    if (num_gcd.is_zero()) return;
    RatFunc poly_scale(den_lcm, num_gcd);
    if (!poly_scale.is_one()) scale_row(i, OrePoly(poly_scale));
    Rational content(0);
    for (int c = 0; c < cols_ && content != 1; ++c)
      for (int k = 0; k <= r_[i][c].order(); ++k) {
        const RatFunc& f = r_[i][c].coeff(k);
        if (f.is_zero()) continue;
        if (!f.den().is_one()) return;
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
    if (content != 0 && content != 1)
      scale_row(i, OrePoly(RatFunc(1 / content)));
  }

  void swap_rows(int i, int j) {
    r_[i].swap(r_[j]);
    w_[i].swap(w_[j]);
  }

  void scale_row(int i, const OrePoly& unit) {
    for (int c = 0; c < cols_; ++c) r_[i][c] = unit * r_[i][c];
    for (int k = 0; k < rows_; ++k) w_[i][k] = unit * w_[i][k];
  }

  /* row_i += q * row_j */
  void add_multiple(int i, int j, const OrePoly& q) {
    for (int c = 0; c < cols_; ++c)
      if (!r_[j][c].is_zero()) r_[i][c] += q * r_[j][c];
    for (int k = 0; k < rows_; ++k)
      if (!w_[j][k].is_zero()) w_[i][k] += q * w_[j][k];
  }

  int rows_;
  int cols_;
  std::vector<std::vector<OrePoly>> r_;
  std::vector<std::vector<OrePoly>> w_;
};

std::vector<std::vector<OrePoly>> matrix_rows(const OreMatrix& m) {
  std::vector<std::vector<OrePoly>> rows(m.size());
  for (int i = 0; i < m.size(); ++i) {
    rows[i].reserve(m.size());
    for (int j = 0; j < m.size(); ++j) rows[i].push_back(m.at(i, j));
  }
  return rows;
}

OreMatrix block(const std::vector<std::vector<OrePoly>>& rows, int row0,
                int col0, int size) {
  OreMatrix out(size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) out.at(i, j) = rows[row0 + i][col0 + j];
  return out;
}

/* The transform of a reduction is invertible by construction, so reducing
   it again must end at the identity; the second transform is the inverse of
   the first. */
std::vector<std::vector<OrePoly>> invert_transform(
    const std::vector<std::vector<OrePoly>>& w) {
  RowReducer red(w, static_cast<int>(w.size()));
  red.run();
  const auto& h = red.reduced();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      if (i == j ? !h[i][j].is_one() : !h[i][j].is_zero())
        throw InternalError("reduction transform is not invertible");
  return red.transform();
}

/* Reduced form only, skipping the inverse transform. */
OreMatrix staircase_of(const OreMatrix& m) {
  RowReducer red(matrix_rows(m), m.size());
  red.run();
  return block(red.reduced(), 0, 0, m.size());
}

/* Solves m = q*h for an upper triangular h with a full monic diagonal by
   back substitution along each row. */
OreMatrix solve_triangular(const OreMatrix& m, const OreMatrix& h) {
  int n = m.size();
  OreMatrix q(n);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < n; ++c) {
      OrePoly rest = m.at(i, c);
      for (int k = 0; k < c; ++k) rest -= q.at(i, k) * h.at(k, c);
      DivisionResult div = divide(rest, h.at(c, c), Side::left);
      if (!div.remainder.is_zero())
        throw PreconditionError("matrix division leaves a remainder");
      q.at(i, c) = std::move(div.quotient);
    }
  return q;
}

}  // namespace

MatrixHermiteForm row_hermite(const OreMatrix& m) {
  RowReducer red(matrix_rows(m), m.size());
  red.run();
  return {block(red.reduced(), 0, 0, m.size()),
          block(red.transform(), 0, 0, m.size()),
          block(invert_transform(red.transform()), 0, 0, m.size())};
}

MatrixStaircase row_staircase(const OreMatrix& m) {
  RowReducer red(matrix_rows(m), m.size());
  red.run();
  return {block(red.reduced(), 0, 0, m.size()),
          block(red.transform(), 0, 0, m.size())};
}

bool is_regular(const OreMatrix& m) { return ddet_degree(m).has_value(); }

std::optional<int> ddet_degree(const OreMatrix& m) {
  OreMatrix h = staircase_of(m);
  int total = 0;
  for (int i = 0; i < m.size(); ++i) {
    if (h.at(i, i).is_zero()) return std::nullopt;
    total += h.at(i, i).order();
  }
  return total;
}

bool is_unimodular(const OreMatrix& m) {
  return staircase_of(m).is_identity();
}

OreMatrix unimodular_inverse(const OreMatrix& m) {
  RowReducer red(matrix_rows(m), m.size());
  red.run();
  if (!block(red.reduced(), 0, 0, m.size()).is_identity())
    throw PreconditionError("matrix is not invertible over the operator ring");
  return block(red.transform(), 0, 0, m.size());
}

MatrixBezoutCertificate matrix_gcd(const OreMatrix& a, const OreMatrix& b,
                                   Side side) {
  if (a.size() != b.size()) throw PreconditionError("matrix size mismatch");
  if (side == Side::left) {
    MatrixBezoutCertificate mirror =
        matrix_gcd(adjoint(a), adjoint(b), Side::right);
    return {adjoint(mirror.d),  adjoint(mirror.u),  adjoint(mirror.v),
            adjoint(mirror.a1), adjoint(mirror.b1), side};
  }
  int n = a.size();
  std::vector<std::vector<OrePoly>> stack = matrix_rows(a);
  for (auto& row : matrix_rows(b)) stack.push_back(std::move(row));
  RowReducer red(std::move(stack), n);
  red.run();
  MatrixBezoutCertificate cert;
  cert.side = side;
  cert.d = block(red.reduced(), 0, 0, n);
  cert.u = block(red.transform(), 0, 0, n);
  cert.v = block(red.transform(), 0, n, n);
  bool d_regular = true;
  for (int i = 0; i < n; ++i)
    if (cert.d.at(i, i).is_zero()) d_regular = false;
  if (d_regular) {
    /* The staircase is already triangular with monic pivots. */
    cert.a1 = solve_triangular(a, cert.d);
    cert.b1 = solve_triangular(b, cert.d);
  } else {
    std::vector<std::vector<OrePoly>> winv = invert_transform(red.transform());
    cert.a1 = block(winv, 0, 0, n);
    cert.b1 = block(winv, n, 0, n);
  }
  return cert;
}

MatrixLcmCertificate matrix_lcm(const OreMatrix& a, const OreMatrix& b,
                                Side side) {
  if (a.size() != b.size()) throw PreconditionError("matrix size mismatch");
  if (!is_regular(a) || !is_regular(b))
    throw PreconditionError("lcm requires regular matrices");
  if (side == Side::right) {
    MatrixLcmCertificate mirror =
        matrix_lcm(adjoint(a), adjoint(b), Side::left);
    return {adjoint(mirror.m), adjoint(mirror.a1), adjoint(mirror.b1), side};
  }
  int n = a.size();
  std::vector<std::vector<OrePoly>> stack = matrix_rows(a);
  for (auto& row : matrix_rows(b)) stack.push_back(std::move(row));
  RowReducer red(std::move(stack), n);
  red.run();
  /* Both inputs are regular, so the staircase has exactly n pivots and the
     bottom n rows of the transform are a basis of the syzygies. */
  for (int i = 0; i < n; ++i)
    if (red.reduced()[i][i].is_zero())
      throw InternalError("regular stack lost rank during reduction");
  MatrixLcmCertificate cert;
  cert.side = side;
  cert.b1 = block(red.transform(), n, 0, n);
  cert.a1 = -block(red.transform(), n, n, n);
  cert.m = cert.b1 * a;
  return cert;
}

MatrixOreWitness matrix_ore_witness(const OreMatrix& a, const OreMatrix& b,
                                    Side side) {
  if (a.size() != b.size()) throw PreconditionError("matrix size mismatch");
  if (!is_regular(b))
    throw PreconditionError("ore witness requires a regular second argument");
  if (side == Side::right) {
    MatrixOreWitness mirror =
        matrix_ore_witness(adjoint(a), adjoint(b), Side::left);
    return {adjoint(mirror.a1), adjoint(mirror.b1), side};
  }
  int n = a.size();
  std::vector<std::vector<OrePoly>> stack = matrix_rows(a);
  for (auto& row : matrix_rows(b)) stack.push_back(std::move(row));
  RowReducer red(std::move(stack), n);
  red.run();
  /* b regular forces full column rank, so the bottom n transform rows are
     syzygies: b1*a + y*b = 0 with (b1 | y) part of a unimodular matrix.
     Any row annihilator of b1 then annihilates y as well, so b1 is regular
     no matter whether a is. */
  for (int i = n; i < 2 * n; ++i)
    for (int c = 0; c < n; ++c)
      if (!red.reduced()[i][c].is_zero())
        throw InternalError("stack with a regular block lost rank");
  MatrixOreWitness wit;
  wit.side = side;
  wit.b1 = block(red.transform(), n, 0, n);
  wit.a1 = -block(red.transform(), n, n, n);
  return wit;
}

OreMatrix exact_quotient(const OreMatrix& m, const OreMatrix& b, Side side) {
  if (m.size() != b.size()) throw PreconditionError("matrix size mismatch");
  if (side == Side::right)
    return adjoint(exact_quotient(adjoint(m), adjoint(b), Side::left));
  /* Solve m = q*b through the triangular form of b: with u*b = h and
     q' = q*uinv, back-substitute q'*h = m, then q = q'*u. */
  RowReducer red(matrix_rows(b), b.size());
  red.run();
  OreMatrix h = block(red.reduced(), 0, 0, b.size());
  for (int i = 0; i < b.size(); ++i)
    if (h.at(i, i).is_zero())
      throw PreconditionError("exact quotient requires a regular divisor");
  return solve_triangular(m, h) * block(red.transform(), 0, 0, b.size());
}

namespace {

Rational random_small_rational(std::mt19937_64& rng, int max_abs) {
  std::uniform_int_distribution<long> dist(-max_abs, max_abs);
  return Rational(dist(rng));
}

/* Deterministic ramp first, then seeded random constant matrices, then
   random first-order matrices.  The stream is a function of the index and
   the rng state only. */
OreMatrix shift_candidate(int size, int index, std::mt19937_64& rng) {
  static const long ramp[] = {0, 1, -1, 2, -2};
  const int ramp_len = static_cast<int>(sizeof(ramp) / sizeof(ramp[0]));
  if (index < ramp_len)
    return OreMatrix::scalar(size, OrePoly(Rational(ramp[index])));
  index -= ramp_len;
  long patterns = size <= 6 ? 1l << size : 0;
  if (index < patterns) {
    OreMatrix q(size);
    for (int i = 0; i < size; ++i)
      q.at(i, i) = OrePoly(Rational((index >> i) & 1 ? -1 : 1));
    return q;
  }
  index -= static_cast<int>(patterns);
  const int constant_phase = 64;
  OreMatrix q(size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      std::vector<RatFunc> coeffs;
      coeffs.emplace_back(random_small_rational(rng, 3));
      if (index >= constant_phase)
        coeffs.emplace_back(random_small_rational(rng, 3));
      q.at(i, j) = OrePoly::from_coeffs(std::move(coeffs));
    }
  return q;
}

OreMatrix shifted(const OreMatrix& a, const OreMatrix& q, const OreMatrix& b,
                  Side side) {
  return side == Side::left ? a + q * b : a + b * q;
}

}  // namespace

RegularizeResult regularize(const OreMatrix& a, const OreMatrix& b, Side side,
                            std::uint64_t seed, int budget) {
  if (a.size() != b.size()) throw PreconditionError("matrix size mismatch");
  if (!is_regular(b))
    throw PreconditionError("regularize requires a regular second argument");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (int idx = 0; idx < budget; ++idx) {
    OreMatrix q = shift_candidate(a.size(), idx, rng);
    OreMatrix value = shifted(a, q, b, side);
    if (is_regular(value)) return {std::move(q), std::move(value), idx + 1};
  }
  throw SearchError("no regularizing shift found within the budget");
}

RegularizePairResult regularize_pair(const OreMatrix& a1, const OreMatrix& b1,
                                     const OreMatrix& a2, const OreMatrix& b2,
                                     Side side, std::uint64_t seed,
                                     int budget) {
  if (a1.size() != b1.size() || a2.size() != b2.size() ||
      a1.size() != a2.size())
    throw PreconditionError("matrix size mismatch");
  if (!is_regular(b1) || !is_regular(b2))
    throw PreconditionError("regularize requires regular second arguments");
  std::mt19937_64 rng(seed ^ 0xda942042e4dd58b5ull);
  for (int idx = 0; idx < budget; ++idx) {
    OreMatrix q = shift_candidate(a1.size(), idx, rng);
    OreMatrix v1 = shifted(a1, q, b1, side);
    if (!is_regular(v1)) continue;
    OreMatrix v2 = shifted(a2, q, b2, side);
    if (!is_regular(v2)) continue;
    return {std::move(q), std::move(v1), std::move(v2), idx + 1};
  }
  throw SearchError("no regularizing shift found within the budget");
}

}  // namespace diffop
