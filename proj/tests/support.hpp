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
// Random generators shared by the test binaries. Every generator takes the
// engine explicitly; callers seed it with a fixed value.

#ifndef SUPERSCHUR_TESTS_SUPPORT_HPP
#define SUPERSCHUR_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "superschur/catalog.hpp"
#include "superschur/exactla.hpp"
#include "superschur/freenilp.hpp"
#include "superschur/superalg.hpp"

namespace superschur::gen {

inline long uniform(std::mt19937& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Small integer vector, zero with probability about zero_bias.
inline la::Vec random_vec(std::mt19937& rng, std::size_t n, long range = 3, double zero_bias = 0.3) {
  std::bernoulli_distribution zero(zero_bias);
  la::Vec v(n);
  for (auto& x : v) x = zero(rng) ? 0 : uniform(rng, -range, range);
  return v;
}

inline la::Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long range = 3,
                                double zero_bias = 0.4) {
  la::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    la::Vec v = random_vec(rng, cols, range, zero_bias);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[c];
  }
  return m;
}

/// Random subspace spanned by k random vectors, sometimes made dependent.
inline la::Subspace random_subspace(std::mt19937& rng, std::size_t n, std::size_t k) {
  std::vector<la::Vec> vs;
  for (std::size_t t = 0; t < k; ++t) vs.push_back(random_vec(rng, n));
  if (k >= 2 && uniform(rng, 0, 2) == 0) {
    la::Vec w = vs[0];
    la::axpy(w, la::Scalar(uniform(rng, -2, 2)), vs[1]);
    vs.push_back(w);
  }
  return la::Subspace::span(n, vs);
}

/// Random element supported on one parity block.
inline Element random_homogeneous(std::mt19937& rng, const LieSuperalgebra& a, Parity p) {
  la::Vec v = la::zero_vec(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.parity(i) == p) v[i] = uniform(rng, -2, 2);
  return Element(v);
}

/// Basis change b'_t = scale_t * b_{perm(t)}, with perm preserving blocks.
inline LieSuperalgebra transformed(const LieSuperalgebra& a, const std::vector<std::size_t>& perm,
                                   const std::vector<la::Scalar>& scale, std::string name = {}) {
  const std::size_t n = a.dim();
  std::vector<std::size_t> inv(n);
  for (std::size_t t = 0; t < n; ++t) inv[perm[t]] = t;
  std::vector<std::string> even, odd;
  for (std::size_t t = 0; t < n; ++t) (t < a.even_dim() ? even : odd).push_back(a.label(perm[t]));
  LieSuperalgebra::Table table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Combination c;
      for (const auto& [k, x] : a.structure(perm[i], perm[j])) c.emplace_back(inv[k], scale[i] * scale[j] * x / scale[inv[k]]);
      if (!c.empty()) table.emplace(LieSuperalgebra::Key{i, j}, std::move(c));
    }
  return LieSuperalgebra(name.empty() ? a.name() + "'" : std::move(name), even, odd, table);
}

inline LieSuperalgebra random_transform(std::mt19937& rng, const LieSuperalgebra& a) {
  std::vector<std::size_t> perm(a.dim());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(a.even_dim()), rng);
  std::shuffle(perm.begin() + static_cast<std::ptrdiff_t>(a.even_dim()), perm.end(), rng);
  std::vector<la::Scalar> scale;
  for (std::size_t t = 0; t < a.dim(); ++t) {
    long num = uniform(rng, 1, 3) * (uniform(rng, 0, 1) ? 1 : -1);
    scale.push_back(la::make_scalar(num, uniform(rng, 1, 2)));
  }
  return transformed(a, perm, scale);
}

/// Quotient of a random free nilpotent superalgebra with p+q <= max_gens
/// generators and class bound in [2, max_class] by up to two relators, each a
/// random combination of basis words of one degree and one parity.
inline LieSuperalgebra random_free_quotient(std::mt19937& rng, std::size_t max_gens, std::size_t max_class,
                                            const std::string& name) {
  const std::size_t g = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_gens)));
  const std::size_t p = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(g)));
  const std::size_t k = static_cast<std::size_t>(uniform(rng, 2, static_cast<long>(max_class)));
  FreeNilpotentSuperalgebra f = build_free_nilpotent({p, g - p, k});
  const LieSuperalgebra& a = f.algebra();
  std::vector<la::Vec> relators;
  const long count = uniform(rng, 0, 2);
  for (long t = 0; t < count; ++t) {
    const std::size_t d = static_cast<std::size_t>(uniform(rng, 2, static_cast<long>(k)));
    const Parity par = uniform(rng, 0, 1) ? Parity::odd : Parity::even;
    la::Vec v = la::zero_vec(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (f.degree(i) == d && a.parity(i) == par) v[i] = uniform(rng, -2, 2);
    if (!la::is_zero(v)) relators.push_back(v);
  }
  QuotientResult q = quotient(a, ideal_generated(a, relators), name);
  return with_compact_labels(q.algebra, name);
}

}  // namespace superschur::gen

#endif  // SUPERSCHUR_TESTS_SUPPORT_HPP
