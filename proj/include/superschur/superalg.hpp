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
// Finite-dimensional Lie superalgebras given by structure constants, and the
// structural invariants built on them: graded subspaces, products of
// subspaces, the lower central series, the center and quotients.

#ifndef SUPERSCHUR_SUPERALG_HPP
#define SUPERSCHUR_SUPERALG_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superschur/error.hpp"
#include "superschur/exactla.hpp"

namespace superschur {

using la::Scalar;
using la::Vec;

enum class Parity : unsigned char { even = 0, odd = 1 };

constexpr int bit(Parity p) { return static_cast<int>(p); }
constexpr Parity operator+(Parity a, Parity b) { return static_cast<Parity>(bit(a) ^ bit(b)); }
constexpr Parity& operator+=(Parity& a, Parity b) { return a = a + b; }

/// (-1)^{|a||b|}
constexpr int koszul_sign(Parity a, Parity b) { return (bit(a) & bit(b)) ? -1 : 1; }

inline Parity total_parity(std::span<const Parity> ps) {
  Parity acc = Parity::even;
  for (Parity p : ps) acc += p;
  return acc;
}

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

/// Superdimension (even | odd).
struct SuperDim {
  std::size_t even = 0;
  std::size_t odd = 0;

  constexpr std::size_t total() const { return even + odd; }
  constexpr std::size_t operator[](Parity p) const { return p == Parity::even ? even : odd; }
  friend constexpr bool operator==(const SuperDim&, const SuperDim&) = default;
};

inline std::string to_string(const SuperDim& d) {
  return "(" + std::to_string(d.even) + "|" + std::to_string(d.odd) + ")";
}

/// Sparse linear combination sum_k c_k b_k, sorted by k, without zero terms.
using Combination = std::vector<std::pair<std::size_t, Scalar>>;

inline Combination normalized(Combination c) {
  std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Combination out;
  for (auto& [k, x] : c) {
    if (!out.empty() && out.back().first == k)
      out.back().second += x;
    else
      out.emplace_back(k, std::move(x));
  }
  std::erase_if(out, [](const auto& t) { return sgn(t.second) == 0; });
  return out;
}

/// A vector of the algebra in basis coordinates.
class Element {
 public:
  Element() = default;
  explicit Element(Vec coords) : coords_(std::move(coords)) {}

  static Element zero(std::size_t n) { return Element(la::zero_vec(n)); }
  static Element basis(std::size_t n, std::size_t i) { return Element(la::unit_vec(n, i)); }

  const Vec& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const { return la::is_zero(coords_); }

  Element& operator+=(const Element& o) {
    check(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Element& operator-=(const Element& o) {
    check(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) {
    for (auto& x : a.coords_) x = -x;
    return a;
  }
  friend Element operator*(const Scalar& s, Element a) {
    for (auto& x : a.coords_) x *= s;
    return a;
  }
  friend bool operator==(const Element&, const Element&) = default;

 private:
  void check(const Element& o) const {
    if (o.coords_.size() != coords_.size()) throw DimensionMismatch("Element: size mismatch");
  }
  Vec coords_;
};

/// Finite-dimensional superalgebra with a bracket given by structure
/// constants. Even basis vectors come first. The table holds [b_i, b_j] for
/// i <= j; the remaining products are completed by graded skew-symmetry.
/// Entries with i > j may be present (user-supplied redundancy); they do not
/// feed the bracket and are only checked by validate().
class LieSuperalgebra {
 public:
  using Key = std::pair<std::size_t, std::size_t>;
  using Table = std::map<Key, Combination>;

  LieSuperalgebra() = default;
  LieSuperalgebra(std::string name, std::vector<std::string> even_labels, std::vector<std::string> odd_labels,
                  Table table = {})
      : name_(std::move(name)), even_dim_(even_labels.size()) {
    labels_ = std::move(even_labels);
    labels_.insert(labels_.end(), odd_labels.begin(), odd_labels.end());
    for (auto& [key, comb] : table) {
      Combination c = normalized(std::move(comb));
      if (!c.empty()) table_.emplace(key, std::move(c));
    }
    complete();
  }

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  std::size_t even_dim() const { return even_dim_; }
  SuperDim super_dim() const { return {even_dim_, dim() - even_dim_}; }
  Parity parity(std::size_t i) const { return i < even_dim_ ? Parity::even : Parity::odd; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const Table& table() const { return table_; }

  std::optional<std::size_t> index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  /// [b_i, b_j] from the completed table.
  const Combination& structure(std::size_t i, std::size_t j) const { return full_[i * dim() + j]; }

  Element basis_element(std::size_t i) const { return Element::basis(dim(), i); }
  Element zero() const { return Element::zero(dim()); }

  Vec bracket(const Vec& x, const Vec& y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket: coordinates sized for another algebra");
    Vec out = la::zero_vec(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(y[j]) == 0) continue;
        const Combination& c = full_[i * n + j];
        if (c.empty()) continue;
        const Scalar f = x[i] * y[j];
        for (const auto& [k, v] : c) out[k] += f * v;
      }
    }
    return out;
  }

  Element bracket(const Element& x, const Element& y) const { return Element(bracket(x.coords(), y.coords())); }

  /// Parity of a nonzero element supported on one block; nothing otherwise.
  std::optional<Parity> homogeneous_parity(const Vec& v) const {
    bool has_even = false, has_odd = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) == 0) continue;
      (i < even_dim_ ? has_even : has_odd) = true;
    }
    if (has_even == has_odd) return std::nullopt;
    return has_even ? Parity::even : Parity::odd;
  }

  /// True for zero or block-supported vectors.
  bool is_homogeneous(const Vec& v) const { return la::is_zero(v) || homogeneous_parity(v).has_value(); }

  LieSuperalgebra renamed(std::string name) const {
    LieSuperalgebra out = *this;
    out.name_ = std::move(name);
    return out;
  }

  friend bool operator==(const LieSuperalgebra& a, const LieSuperalgebra& b) {
    return a.name_ == b.name_ && a.labels_ == b.labels_ && a.even_dim_ == b.even_dim_ && a.table_ == b.table_;
  }

 private:
  void complete() {
    const std::size_t n = dim();
    full_.assign(n * n, {});
    for (const auto& [key, comb] : table_) {
      const auto [i, j] = key;
      if (i > j || j >= n) continue;
      Combination c;
      for (const auto& t : comb)
        if (t.first < n) c.push_back(t);
      full_[i * n + j] = c;
      if (i != j) {
        const int s = -koszul_sign(parity(i), parity(j));
        for (auto& t : c) t.second *= s;
        full_[j * n + i] = std::move(c);
      }
    }
  }

  std::string name_;
  std::vector<std::string> labels_;
  std::size_t even_dim_ = 0;
  Table table_;
  std::vector<Combination> full_;
};

// ---------------------------------------------------------------------------
// validation

struct Violation {
  enum class Kind { index_out_of_range, wrong_parity_target, skew_symmetry, jacobi };
  Kind kind;
  std::vector<std::size_t> basis;  // offending pair or triple, 0-based
  std::string message;

  bool malformed() const { return kind == Kind::index_out_of_range || kind == Kind::wrong_parity_target; }
};

inline const char* to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::index_out_of_range: return "index out of range";
    case Violation::Kind::wrong_parity_target: return "wrong-parity target";
    case Violation::Kind::skew_symmetry: return "graded skew-symmetry";
    case Violation::Kind::jacobi: return "graded Jacobi identity";
  }
  return "?";
}

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool malformed() const {
    return std::any_of(violations.begin(), violations.end(), [](const Violation& v) { return v.malformed(); });
  }
};

namespace detail {

inline std::string tuple_label(const LieSuperalgebra& a, std::span<const std::size_t> idx) {
  std::string s = "(";
  for (std::size_t t = 0; t < idx.size(); ++t) {
    if (t) s += ",";
    s += idx[t] < a.dim() ? a.label(idx[t]) : "#" + std::to_string(idx[t] + 1);
  }
  return s + ")";
}

}  // namespace detail

/// Checks the grading, graded skew-symmetry and the graded Jacobi identity
/// (I) (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0
/// on basis triples. Malformed tables are reported without a Jacobi pass.
inline ValidationReport validate(const LieSuperalgebra& a) {
  using Kind = Violation::Kind;
  ValidationReport rep;
  const std::size_t n = a.dim();
  auto add = [&](Kind k, std::vector<std::size_t> idx, std::string detail) {
    std::string msg = std::string(to_string(k)) + " violated at " + detail::tuple_label(a, idx);
    if (!detail.empty()) msg += ": " + detail;
    rep.violations.push_back({k, std::move(idx), std::move(msg)});
  };

  for (const auto& [key, comb] : a.table()) {
    const auto [i, j] = key;
    if (i >= n || j >= n) {
      add(Kind::index_out_of_range, {i, j}, "bracket operand outside the basis");
      continue;
    }
    for (const auto& [k, c] : comb) {
      if (k >= n)
        add(Kind::index_out_of_range, {i, j}, "target #" + std::to_string(k + 1) + " outside the basis");
      else if (a.parity(k) != a.parity(i) + a.parity(j))
        add(Kind::wrong_parity_target, {i, j}, "target " + a.label(k) + " has parity " + to_string(a.parity(k)));
    }
  }
  if (rep.malformed()) return rep;

  for (const auto& [key, comb] : a.table()) {
    const auto [i, j] = key;
    if (i == j && a.parity(i) == Parity::even) {
      add(Kind::skew_symmetry, {i, i}, "bracket of an even vector with itself must vanish");
    } else if (i > j) {
      // Redundant entry [b_i, b_j] must equal -(-1)^{|b_i||b_j|}[b_j, b_i].
      Combination expect = a.structure(i, j);
      if (normalized(comb) != expect) add(Kind::skew_symmetry, {j, i}, "redundant entry inconsistent");
    }
  }

  // r += f [b_i, sum_k comb_k b_k], touching only nonzero structure constants
  auto add_bracket = [&](Vec& r, int f, std::size_t i, const Combination& comb) {
    for (const auto& [k, c] : comb)
      for (const auto& [t, d] : a.structure(i, k)) r[t] += f * c * d;
  };
  Vec r = la::zero_vec(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        const Parity pi = a.parity(i), pj = a.parity(j), pk = a.parity(k);
        add_bracket(r, koszul_sign(pi, pk), i, a.structure(j, k));
        add_bracket(r, koszul_sign(pj, pi), j, a.structure(k, i));
        add_bracket(r, koszul_sign(pk, pj), k, a.structure(i, j));
        if (!la::is_zero(r)) {
          add(Kind::jacobi, {i, j, k}, "nonzero residual");
          std::fill(r.begin(), r.end(), Scalar(0));
        }
      }
  return rep;
}

// ---------------------------------------------------------------------------
// graded subspaces

/// A Z2-graded subspace of an algebra's coordinate space. Stored as one
/// canonical subspace of the full space; because even coordinates precede
/// odd ones, its reduced basis of a graded subspace consists of homogeneous
/// rows, the even ones first.
class GradedSubspace {
 public:
  GradedSubspace() = default;
  GradedSubspace(SuperDim ambient, la::Subspace full) : ambient_(ambient), full_(std::move(full)) {
    if (full_.ambient_dim() != ambient_.total()) throw DimensionMismatch("GradedSubspace: ambient mismatch");
    for (const auto& v : full_.basis()) {
      bool has_even = false, has_odd = false;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) (i < ambient_.even ? has_even : has_odd) = true;
      if (has_even && has_odd) throw PreconditionError("GradedSubspace: subspace is not graded");
      (has_even ? dims_.even : dims_.odd) += 1;
    }
  }

  static GradedSubspace zero(SuperDim ambient) { return {ambient, la::Subspace::zero(ambient.total())}; }
  static GradedSubspace full(SuperDim ambient) { return {ambient, la::Subspace::full(ambient.total())}; }

  /// Span of homogeneous vectors.
  static GradedSubspace span(SuperDim ambient, std::span<const Vec> vectors) {
    return {ambient, la::Subspace::span(ambient.total(), vectors)};
  }

  /// Smallest graded subspace containing the vectors (spans their even and
  /// odd projections).
  static GradedSubspace graded_hull(SuperDim ambient, std::span<const Vec> vectors) {
    la::EchelonBasis e(ambient.total());
    for (const auto& v : vectors) {
      Vec ev = v, od = v;
      for (std::size_t i = 0; i < v.size(); ++i) (i < ambient.even ? od : ev)[i] = 0;
      e.insert(std::move(ev));
      e.insert(std::move(od));
    }
    return {ambient, e.to_subspace()};
  }

  SuperDim ambient() const { return ambient_; }
  SuperDim dims() const { return dims_; }
  std::size_t dim() const { return full_.dim(); }
  const la::Subspace& full() const { return full_; }
  /// Homogeneous basis vectors, even ones first.
  const std::vector<Vec>& basis() const { return full_.basis(); }

  la::Subspace even_part() const { return block(Parity::even); }
  la::Subspace odd_part() const { return block(Parity::odd); }

  bool contains(const Vec& v) const { return full_.contains(v); }
  bool contains(const GradedSubspace& w) const { return full_.contains(w.full_); }
  Vec reduce(const Vec& v) const { return full_.reduce(v); }

  friend bool operator==(const GradedSubspace&, const GradedSubspace&) = default;

 private:
  la::Subspace block(Parity p) const {
    const std::size_t off = p == Parity::even ? 0 : ambient_.even;
    const std::size_t len = ambient_[p];
    std::vector<Vec> vs;
    for (const auto& v : full_.basis()) {
      Vec w(v.begin() + static_cast<std::ptrdiff_t>(off), v.begin() + static_cast<std::ptrdiff_t>(off + len));
      if (!la::is_zero(w)) vs.push_back(std::move(w));
    }
    return la::Subspace::span(len, vs);
  }

  SuperDim ambient_;
  la::Subspace full_;
  SuperDim dims_;
};

inline GradedSubspace graded_sum(const GradedSubspace& u, const GradedSubspace& w) {
  if (u.ambient() != w.ambient()) throw DimensionMismatch("graded_sum: ambient mismatch");
  return {u.ambient(), la::subspace_sum(u.full(), w.full())};
}

inline GradedSubspace graded_intersect(const GradedSubspace& u, const GradedSubspace& w) {
  if (u.ambient() != w.ambient()) throw DimensionMismatch("graded_intersect: ambient mismatch");
  return {u.ambient(), la::subspace_intersect(u.full(), w.full())};
}

/// Superdimension of u / w (w inside u, checked).
inline SuperDim quotient_dims(const GradedSubspace& u, const GradedSubspace& w) {
  la::quotient_dim(u.full(), w.full());
  return {u.dims().even - w.dims().even, u.dims().odd - w.dims().odd};
}

inline GradedSubspace whole(const LieSuperalgebra& a) { return GradedSubspace::full(a.super_dim()); }

/// [U, W]: span of brackets of homogeneous basis vectors.
inline GradedSubspace product_space(const LieSuperalgebra& a, const GradedSubspace& u, const GradedSubspace& w) {
  if (u.ambient() != a.super_dim() || w.ambient() != a.super_dim())
    throw DimensionMismatch("product_space: subspaces belong to another algebra");
  la::EchelonBasis e(a.dim());
  for (const auto& x : u.basis())
    for (const auto& y : w.basis()) e.insert(a.bracket(x, y));
  return {a.super_dim(), e.to_subspace()};
}

// ---------------------------------------------------------------------------
// series, center, quotients

struct CentralSeries {
  /// gamma_1 = L, gamma_{k+1} = [gamma_k, L]. For nilpotent algebras the
  /// list ends with the zero subspace; otherwise with the stable term.
  std::vector<GradedSubspace> terms;
  bool nilpotent = false;
  std::size_t nilpotency_class = 0;

  /// gamma_i, 1-based; zero beyond the computed terms of a nilpotent chain.
  GradedSubspace gamma(std::size_t i) const {
    if (i == 0) throw RangeError("gamma index is 1-based");
    if (i <= terms.size()) return terms[i - 1];
    if (!nilpotent) return terms.back();
    return GradedSubspace::zero(terms.front().ambient());
  }
};

inline CentralSeries lower_central_series(const LieSuperalgebra& a) {
  CentralSeries s;
  s.terms.push_back(whole(a));
  while (s.terms.back().dim() != 0) {
    GradedSubspace next = product_space(a, s.terms.back(), s.terms.front());
    if (next == s.terms.back()) return s;
    s.terms.push_back(std::move(next));
  }
  s.nilpotent = true;
  s.nilpotency_class = s.terms.size() - 1;
  return s;
}

inline void require_nilpotent(const LieSuperalgebra& a, const CentralSeries& s) {
  if (!s.nilpotent) throw NotNilpotent(a.name() + ": lower central series stabilizes at a nonzero term");
}

/// Z(L) = {z : [z, b_j] = 0 for every basis vector b_j}.
inline GradedSubspace center(const LieSuperalgebra& a) {
  const std::size_t n = a.dim();
  la::Matrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : a.structure(i, j)) m(j * n + k, i) = c;
  return {a.super_dim(), la::nullspace(m)};
}

/// Raised when a subspace handed to quotient() is not an ideal.
class NotAnIdeal : public Error {
 public:
  NotAnIdeal(const std::string& what, Vec witness) : Error(what), witness_(std::move(witness)) {}
  const Vec& witness() const { return witness_; }

 private:
  Vec witness_;
};

struct QuotientResult {
  LieSuperalgebra algebra;
  la::Matrix projection;                // dim(L/I) x dim(L)
  std::vector<std::size_t> complement;  // basis vectors of L lifting the quotient basis
};

/// L / I on the complement spanned by the non-pivot coordinates of I.
inline QuotientResult quotient(const LieSuperalgebra& a, const GradedSubspace& ideal, std::string name = {}) {
  if (ideal.ambient() != a.super_dim()) throw DimensionMismatch("quotient: ideal belongs to another algebra");
  const std::size_t n = a.dim();
  for (const auto& v : ideal.basis())
    for (std::size_t j = 0; j < n; ++j) {
      Vec w = a.bracket(v, la::unit_vec(n, j));
      if (!ideal.contains(w)) throw NotAnIdeal("quotient: [I, L] escapes I", std::move(w));
    }

  QuotientResult q;
  q.complement = ideal.full().non_pivots();
  const std::size_t d = q.complement.size();
  std::vector<std::size_t> pos(n, d);
  std::vector<std::string> even_labels, odd_labels;
  for (std::size_t t = 0; t < d; ++t) {
    pos[q.complement[t]] = t;
    (a.parity(q.complement[t]) == Parity::even ? even_labels : odd_labels).push_back(a.label(q.complement[t]));
  }
  auto project = [&](const Vec& v) {
    Vec r = ideal.reduce(v);
    Vec out(d);
    for (std::size_t t = 0; t < d; ++t) out[t] = r[q.complement[t]];
    return out;
  };

  q.projection = la::Matrix(d, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec col = project(la::unit_vec(n, j));
    for (std::size_t t = 0; t < d; ++t) q.projection(t, j) = col[t];
  }

  LieSuperalgebra::Table table;
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = s; t < d; ++t) {
      Vec v = project(a.bracket(la::unit_vec(n, q.complement[s]), la::unit_vec(n, q.complement[t])));
      Combination c;
      for (std::size_t k = 0; k < d; ++k)
        if (sgn(v[k]) != 0) c.emplace_back(k, v[k]);
      if (!c.empty()) table.emplace(LieSuperalgebra::Key{s, t}, std::move(c));
    }
  if (name.empty()) name = a.name() + "/I";
  q.algebra = LieSuperalgebra(std::move(name), std::move(even_labels), std::move(odd_labels), std::move(table));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = q.projection.apply(a.bracket(la::unit_vec(n, i), la::unit_vec(n, j)));
      Vec rhs = q.algebra.bracket(q.projection.col_vec(i), q.projection.col_vec(j));
      if (lhs != rhs) throw AssertionFailure("quotient: projection is not a homomorphism");
    }
  return q;
}

/// Smallest ideal containing the given homogeneous vectors.
inline GradedSubspace ideal_generated(const LieSuperalgebra& a, std::span<const Vec> vectors) {
  for (const auto& v : vectors)
    if (!a.is_homogeneous(v)) throw PreconditionError("ideal_generated: generators must be homogeneous");
  GradedSubspace ideal = GradedSubspace::span(a.super_dim(), vectors);
  for (;;) {
    GradedSubspace next = graded_sum(ideal, product_space(a, ideal, whole(a)));
    if (next == ideal) return ideal;
    ideal = std::move(next);
  }
}

/// Basis indices whose unit vectors lift the standard basis of L / gamma_2(L):
/// the non-pivot coordinates of gamma_2, even ones first.
inline std::vector<std::size_t> generator_lifts(const LieSuperalgebra& a, const CentralSeries& s) {
  require_nilpotent(a, s);
  return s.gamma(2).full().non_pivots();
}

inline std::vector<std::size_t> generator_lifts(const LieSuperalgebra& a) {
  return generator_lifts(a, lower_central_series(a));
}

/// (m - r | n - s): superdimension of L / gamma_2(L).
inline SuperDim minimal_generator_dims(const LieSuperalgebra& a) {
  CentralSeries s = lower_central_series(a);
  require_nilpotent(a, s);
  return quotient_dims(s.gamma(1), s.gamma(2));
}

/// Span of all iterated brackets of the given elements.
inline GradedSubspace generated_subalgebra(const LieSuperalgebra& a, std::span<const Vec> gens) {
  GradedSubspace first = GradedSubspace::graded_hull(a.super_dim(), gens);
  GradedSubspace layer = first, total = first;
  for (;;) {
    layer = product_space(a, layer, first);
    GradedSubspace next = graded_sum(total, layer);
    if (next == total) return total;
    total = std::move(next);
  }
}

inline bool generates(const LieSuperalgebra& a, std::span<const Vec> gens) {
  return generated_subalgebra(a, gens).dim() == a.dim();
}

/// Block-diagonal sum; b's labels get a trailing prime when they collide.
inline LieSuperalgebra direct_sum(const LieSuperalgebra& a, const LieSuperalgebra& b, std::string name = {}) {
  const std::size_t ae = a.even_dim(), be = b.even_dim();
  const std::size_t ao = a.dim() - ae;
  auto map_a = [&](std::size_t i) { return i < ae ? i : i + be; };
  auto map_b = [&](std::size_t i) { return i < be ? ae + i : ae + be + ao + (i - be); };

  auto fresh = [&](std::string l) {
    while (a.index_of(l)) l += "'";
    return l;
  };
  std::vector<std::string> even, odd;
  for (std::size_t i = 0; i < ae; ++i) even.push_back(a.label(i));
  for (std::size_t i = 0; i < be; ++i) even.push_back(fresh(b.label(i)));
  for (std::size_t i = ae; i < a.dim(); ++i) odd.push_back(a.label(i));
  for (std::size_t i = be; i < b.dim(); ++i) odd.push_back(fresh(b.label(i)));

  LieSuperalgebra::Table table;
  auto copy = [&](const LieSuperalgebra& src, auto&& map) {
    for (std::size_t i = 0; i < src.dim(); ++i)
      for (std::size_t j = i; j < src.dim(); ++j) {
        Combination c;
        for (const auto& [k, x] : src.structure(i, j)) c.emplace_back(map(k), x);
        if (c.empty()) continue;
        std::size_t u = map(i), v = map(j);
        if (u > v) {
          std::swap(u, v);
          const int s = -koszul_sign(src.parity(i), src.parity(j));
          for (auto& t : c) t.second *= s;
        }
        table.emplace(LieSuperalgebra::Key{u, v}, std::move(c));
      }
  };
  copy(a, map_a);
  copy(b, map_b);
  if (name.empty()) name = a.name() + "+" + b.name();
  return LieSuperalgebra(std::move(name), std::move(even), std::move(odd), std::move(table));
}

}  // namespace superschur

#endif  // SUPERSCHUR_SUPERALG_HPP
