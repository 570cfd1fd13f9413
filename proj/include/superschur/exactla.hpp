/* Copyright 2026 The superschur Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Exact linear algebra over the rationals: row reduction, nullspaces and
// canonical subspaces. Every dimension reported elsewhere in the library is
// computed here.

#ifndef SUPERSCHUR_EXACTLA_HPP
#define SUPERSCHUR_EXACTLA_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superschur/error.hpp"

namespace superschur::la {

/// Arbitrary-precision rational; GMP keeps it in lowest terms with a
/// positive denominator after every arithmetic operation.
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

inline Scalar make_scalar(long num, long den = 1) {
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Scalar(0));
  v[i] = 1;
  return v;
}

/// y += a * x
inline void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (sgn(a) == 0) return;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (sgn(x[k]) != 0) y[k] += a * x[k];
}

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      for (long x : r) data_.emplace_back(x);
    }
  }

  static Matrix from_rows(std::span<const Vec> rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(std::span<const Vec> cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw DimensionMismatch("column length differs from row count");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_), data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)); }
  Vec col_vec(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Vec apply(const Vec& x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    Vec y = zero_vec(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn(x[c]) == 0) continue;
      for (std::size_t r = 0; r < rows_; ++r)
        if (sgn((*this)(r, c)) != 0) y[r] += (*this)(r, c) * x[c];
    }
    return y;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; the reduced form has unit pivots and zeros
/// above and below every pivot.
inline RrefResult rref(Matrix m) {
  RrefResult out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
    const Scalar inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      const Scalar f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (sgn(m(lead_row, k)) != 0) m(r, k) -= f * m(lead_row, k);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.rank = lead_row;
  out.reduced = std::move(m);
  return out;
}

class Subspace;

/// Incremental row-echelon basis. Vectors are reduced against the stored
/// rows in ascending pivot order; each stored row is zero left of its pivot.
/// With tracking enabled every row remembers which combination of accepted
/// vectors produced it, so coordinates with respect to the accepted vectors
/// can be recovered.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient, bool track = false)
      : ambient_(ambient), track_(track), row_at_col_(ambient, npos) {}

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true when v was independent of the current rows (and is now
  /// part of the span).
  bool insert(Vec v) {
    check(v);
    Vec combo;
    if (track_) combo = zero_vec(accepted_);
    reduce(v, track_ ? &combo : nullptr);
    std::size_t pivot = 0;
    while (pivot < ambient_ && sgn(v[pivot]) == 0) ++pivot;
    if (pivot == ambient_) return false;
    Row row;
    row.pivot = pivot;
    for (std::size_t k = pivot; k < ambient_; ++k)
      if (sgn(v[k]) != 0) row.support.push_back(k);
    row.v = std::move(v);
    if (track_) {
      for (auto& r : rows_) r.combo.emplace_back(0);
      for (auto& x : combo) x = -x;
      combo.emplace_back(1);
      row.combo = std::move(combo);
      ++accepted_;
    }
    row_at_col_[pivot] = rows_.size();
    rows_.push_back(std::move(row));
    return true;
  }

  bool contains(Vec v) const {
    check(v);
    reduce(v, nullptr);
    return is_zero(v);
  }

  /// Coefficients of v in terms of the accepted vectors, in acceptance
  /// order, or nothing if v is outside the span. Requires tracking.
  std::optional<Vec> coordinates(Vec v) const {
    if (!track_) throw PreconditionError("EchelonBasis: coordinates() needs tracking");
    check(v);
    Vec combo = zero_vec(accepted_);
    reduce(v, &combo);
    if (!is_zero(v)) return std::nullopt;
    return combo;
  }

  Subspace to_subspace() const;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct Row {
    Vec v;
    std::vector<std::size_t> support;
    std::size_t pivot = 0;
    Vec combo;
  };

  void check(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("EchelonBasis: vector has wrong length");
  }

  // After the call v has zeros at every pivot column. combo accumulates the
  // coefficients c with v_in = v_out + sum c_j accepted_j.
  void reduce(Vec& v, Vec* combo) const {
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (row_at_col_[c] == npos || sgn(v[c]) == 0) continue;
      const Row& r = rows_[row_at_col_[c]];
      const Scalar f = v[c] / r.v[c];
      for (std::size_t k : r.support) v[k] -= f * r.v[k];
      if (combo)
        for (std::size_t j = 0; j < r.combo.size(); ++j)
          if (sgn(r.combo[j]) != 0) (*combo)[j] += f * r.combo[j];
    }
  }

  std::size_t ambient_;
  bool track_;
  std::size_t accepted_ = 0;
  std::vector<Row> rows_;
  std::vector<std::size_t> row_at_col_;
};

/// A linear subspace of Q^n stored by its reduced row-echelon basis, so two
/// equal subspaces compare equal structurally.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
      s.basis_.push_back(unit_vec(ambient, i));
      s.pivots_.push_back(i);
    }
    return s;
  }

  static Subspace span(std::size_t ambient, std::span<const Vec> vectors) {
    EchelonBasis e(ambient);
    for (const auto& v : vectors) e.insert(v);
    return e.to_subspace();
  }

  /// Row space of a matrix.
  static Subspace row_space(const Matrix& m) {
    RrefResult r = rref(m);
    Subspace s(m.cols());
    for (std::size_t i = 0; i < r.rank; ++i) s.basis_.push_back(r.reduced.row_vec(i));
    s.pivots_ = std::move(r.pivots);
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Coordinates that are not pivots of the basis; the corresponding unit
  /// vectors span a complement.
  std::vector<std::size_t> non_pivots() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (p < pivots_.size() && pivots_[p] == c) {
        ++p;
        continue;
      }
      out.push_back(c);
    }
    return out;
  }

  /// Canonical representative of v modulo this subspace: zero at every pivot.
  Vec reduce(Vec v) const {
    if (v.size() != ambient_) throw DimensionMismatch("Subspace::reduce: wrong vector length");
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      const Scalar f = v[pivots_[r]];
      if (sgn(f) == 0) continue;
      axpy(v, -f, basis_[r]);
    }
    return v;
  }

  bool contains(const Vec& v) const { return is_zero(reduce(v)); }

  bool contains(const Subspace& w) const {
    if (w.ambient_ != ambient_) throw DimensionMismatch("Subspace::contains: ambient mismatch");
    return std::all_of(w.basis_.begin(), w.basis_.end(), [&](const Vec& v) { return contains(v); });
  }

  /// Coordinates of v with respect to basis(); nothing if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const {
    if (!contains(v)) return std::nullopt;
    Vec c(basis_.size());
    for (std::size_t r = 0; r < basis_.size(); ++r) c[r] = v[pivots_[r]];
    return c;
  }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend class EchelonBasis;
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace EchelonBasis::to_subspace() const {
  std::vector<const Row*> order;
  for (const auto& r : rows_) order.push_back(&r);
  std::sort(order.begin(), order.end(), [](const Row* a, const Row* b) { return a->pivot < b->pivot; });
  std::vector<Vec> basis;
  std::vector<std::size_t> pivots;
  for (const Row* r : order) {
    Vec v = r->v;
    const Scalar inv = 1 / v[r->pivot];
    for (auto& x : v) x *= inv;
    basis.push_back(std::move(v));
    pivots.push_back(r->pivot);
  }
  // Back substitution, bottom-up: clear each pivot column in the rows above.
  for (std::size_t i = basis.size(); i-- > 0;) {
    for (std::size_t j = 0; j < i; ++j) {
      const Scalar f = basis[j][pivots[i]];
      if (sgn(f) != 0) axpy(basis[j], -f, basis[i]);
    }
  }
  Subspace s(ambient_);
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(pivots);
  return s;
}

/// {v : m v = 0}
inline Subspace nullspace(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), basis);
}

inline std::size_t rank(const Matrix& m) {
  EchelonBasis e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row_vec(r));
  return e.rank();
}

inline Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("subspace_sum: ambient dimensions differ");
  EchelonBasis e(u.ambient_dim());
  for (const auto& v : u.basis()) e.insert(v);
  for (const auto& v : w.basis()) e.insert(v);
  return e.to_subspace();
}

/// Intersection via the nullspace of [U^T | -W^T]: every null vector (a, b)
/// gives the common element a U = b W.
inline Subspace subspace_intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("subspace_intersect: ambient dimensions differ");
  const std::size_t n = u.ambient_dim();
  if (u.dim() == 0 || w.dim() == 0) return Subspace::zero(n);
  Matrix stacked(n, u.dim() + w.dim());
  for (std::size_t j = 0; j < u.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) stacked(r, j) = u.basis()[j][r];
  for (std::size_t j = 0; j < w.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) stacked(r, u.dim() + j) = -w.basis()[j][r];
  Subspace coeffs = nullspace(stacked);
  std::vector<Vec> common;
  for (const auto& c : coeffs.basis()) {
    Vec v = zero_vec(n);
    for (std::size_t j = 0; j < u.dim(); ++j) axpy(v, c[j], u.basis()[j]);
    common.push_back(std::move(v));
  }
  return Subspace::span(n, common);
}

/// Raised by quotient_dim when the denominator is not contained in the
/// numerator.
class ContainmentError : public Error {
 public:
  ContainmentError(const std::string& what, Vec witness) : Error(what), witness_(std::move(witness)) {}
  const Vec& witness() const { return witness_; }

 private:
  Vec witness_;
};

/// dim(u / w); w must lie inside u.
inline std::size_t quotient_dim(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("quotient_dim: ambient dimensions differ");
  for (const auto& v : w.basis())
    if (!u.contains(v)) throw ContainmentError("quotient_dim: denominator not contained in numerator", v);
  return u.dim() - w.dim();
}

/// Vectors from u's basis that together with w span u + w, i.e. lifts of a
/// basis of (u + w) / w.
inline std::vector<Vec> complement_basis(const Subspace& u, const Subspace& w) {
  EchelonBasis e(u.ambient_dim());
  for (const auto& v : w.basis()) e.insert(v);
  std::vector<Vec> out;
  for (const auto& v : u.basis())
    if (e.insert(v)) out.push_back(v);
  return out;
}

inline std::string to_string(const Scalar& q) { return q.get_str(); }

}  // namespace superschur::la

#endif  // SUPERSCHUR_EXACTLA_HPP
