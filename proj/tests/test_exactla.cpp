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
#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "superschur/exactla.hpp"
#include "support.hpp"

namespace {

using namespace superschur;
using la::Matrix;
using la::Scalar;
using la::Subspace;
using la::Vec;

Vec v(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Subspace span(std::size_t n, std::vector<Vec> vs) { return Subspace::span(n, vs); }

TEST(Scalar, CanonicalForm) {
  Scalar a = la::make_scalar(2, 4);
  EXPECT_EQ(a.get_num(), 1);
  EXPECT_EQ(a.get_den(), 2);
  Scalar b = la::make_scalar(3, -6);
  EXPECT_EQ(b.get_num(), -1);
  EXPECT_EQ(b.get_den(), 2);
  EXPECT_EQ(la::to_string(b), "-1/2");
  EXPECT_EQ(la::to_string(la::make_scalar(6, 3)), "2");
}

TEST(Scalar, ExactFieldArithmetic) {
  Scalar third = la::make_scalar(1, 3);
  EXPECT_EQ(third + third + third, 1);
  EXPECT_EQ(third * 3, 1);
  Scalar big = 1;
  for (int t = 0; t < 200; ++t) big *= 10;
  EXPECT_EQ((big + third) - big, third);
}

TEST(Rref, Identity) {
  auto r = la::rref(Matrix::identity(3));
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.reduced, Matrix::identity(3));
}

TEST(Rref, Zero) {
  auto r = la::rref(Matrix(2, 2));
  EXPECT_EQ(r.rank, 0u);
  EXPECT_EQ(r.reduced, Matrix(2, 2));
}

TEST(Rref, DependentRows) {
  auto r = la::rref(Matrix{{1, 2}, {2, 4}});
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.reduced, (Matrix{{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});
}

TEST(Rref, FractionalPivots) {
  auto r = la::rref(Matrix{{2, 1}, {4, 3}});
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.reduced, Matrix::identity(2));
}

TEST(Nullspace, Identity) { EXPECT_EQ(la::nullspace(Matrix::identity(2)).dim(), 0u); }

TEST(Nullspace, SingleRow) {
  Subspace k = la::nullspace(Matrix{{1, -1}});
  EXPECT_EQ(k, span(2, {v({1, 1})}));
}

TEST(Nullspace, RankOne) {
  Subspace k = la::nullspace(Matrix{{1, 2}, {2, 4}});
  EXPECT_EQ(k.dim(), 1u);
  EXPECT_EQ(k, span(2, {v({-2, 1})}));
}

TEST(Sum, Examples) {
  Subspace e1 = span(3, {v({1, 0, 0})});
  Subspace e2 = span(3, {v({0, 1, 0})});
  EXPECT_EQ(la::subspace_sum(e1, e2).dim(), 2u);
  EXPECT_EQ(la::subspace_sum(e1, e1), e1);
  Subspace u = span(3, {v({1, 0, 0}), v({0, 1, 0})});
  Subspace w = span(3, {v({0, 1, 0}), v({0, 0, 1})});
  EXPECT_EQ(la::subspace_sum(u, w), Subspace::full(3));
}

TEST(Sum, AmbientMismatch) {
  EXPECT_THROW(la::subspace_sum(Subspace::full(2), Subspace::full(3)), DimensionMismatch);
  EXPECT_THROW(la::subspace_intersect(Subspace::full(2), Subspace::zero(3)), DimensionMismatch);
}

TEST(Intersect, Examples) {
  Subspace u = span(3, {v({1, 0, 0}), v({0, 1, 0})});
  Subspace w = span(3, {v({0, 1, 0}), v({0, 0, 1})});
  EXPECT_EQ(la::subspace_intersect(u, w), span(3, {v({0, 1, 0})}));
  EXPECT_EQ(la::subspace_intersect(u, Subspace::full(3)), u);
  EXPECT_EQ(la::subspace_intersect(u, Subspace::zero(3)), Subspace::zero(3));
}

TEST(QuotientDim, Examples) {
  EXPECT_EQ(la::quotient_dim(Subspace::full(3), span(3, {v({0, 0, 1})})), 2u);
  Subspace u = span(3, {v({1, 1, 0})});
  EXPECT_EQ(la::quotient_dim(u, u), 0u);
  EXPECT_EQ(la::quotient_dim(Subspace::full(5), Subspace::zero(5)), 5u);
}

TEST(QuotientDim, ContainmentWitness) {
  Subspace u = span(3, {v({1, 0, 0})});
  Subspace w = span(3, {v({0, 1, 0})});
  try {
    la::quotient_dim(u, w);
    FAIL() << "expected ContainmentError";
  } catch (const la::ContainmentError& e) {
    EXPECT_TRUE(w.contains(e.witness()));
    EXPECT_FALSE(u.contains(e.witness()));
  }
}

TEST(Subspace, ReduceGivesCanonicalCosetRepresentative) {
  Subspace u = span(3, {v({1, 1, 0})});
  EXPECT_EQ(u.reduce(v({2, 0, 5})), u.reduce(v({0, -2, 5})));
  EXPECT_TRUE(u.contains(v({3, 3, 0})));
  EXPECT_FALSE(u.contains(v({1, 0, 0})));
}

TEST(Subspace, CoordinatesReconstruct) {
  Subspace u = span(4, {v({1, 2, 0, 1}), v({0, 1, 1, 1})});
  Vec x = v({2, 5, 1, 3});
  auto c = u.coordinates(x);
  ASSERT_TRUE(c.has_value());
  Vec back = la::zero_vec(4);
  for (std::size_t t = 0; t < u.dim(); ++t) la::axpy(back, (*c)[t], u.basis()[t]);
  EXPECT_EQ(back, x);
  EXPECT_FALSE(u.coordinates(v({1, 0, 0, 0})).has_value());
}

TEST(EchelonBasis, TracksCoordinatesInAcceptanceOrder) {
  la::EchelonBasis e(3, true);
  EXPECT_TRUE(e.insert(v({0, 1, 1})));
  EXPECT_TRUE(e.insert(v({1, 1, 0})));
  EXPECT_FALSE(e.insert(v({1, 2, 1})));
  auto c = e.coordinates(v({2, 3, 1}));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ((*c)[0], 1);
  EXPECT_EQ((*c)[1], 2);
  EXPECT_EQ(e.to_subspace(), span(3, {v({0, 1, 1}), v({1, 1, 0})}));
}

TEST(Properties, RankNullity) {
  std::mt19937 rng(1001);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = gen::uniform(rng, 1, 6), cols = gen::uniform(rng, 1, 6);
    Matrix m = gen::random_matrix(rng, rows, cols);
    Subspace k = la::nullspace(m);
    EXPECT_EQ(la::rank(m) + k.dim(), cols);
    for (const auto& b : k.basis()) EXPECT_TRUE(la::is_zero(m.apply(b)));
    auto r = la::rref(m);
    for (std::size_t t = 1; t < r.pivots.size(); ++t) EXPECT_LT(r.pivots[t - 1], r.pivots[t]);
    EXPECT_EQ(la::rref(r.reduced).reduced, r.reduced);
  }
}

TEST(Properties, ModularLaw) {
  std::mt19937 rng(1002);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 6);
    Subspace u = gen::random_subspace(rng, n, gen::uniform(rng, 0, n));
    Subspace w = gen::random_subspace(rng, n, gen::uniform(rng, 0, n));
    Subspace s = la::subspace_sum(u, w), i = la::subspace_intersect(u, w);
    EXPECT_EQ(s.dim() + i.dim(), u.dim() + w.dim());
    for (const auto& b : i.basis()) {
      EXPECT_TRUE(u.contains(b));
      EXPECT_TRUE(w.contains(b));
    }
    EXPECT_TRUE(s.contains(u));
    EXPECT_TRUE(s.contains(w));
  }
}

TEST(Properties, Canonicalization) {
  std::mt19937 rng(1003);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 6);
    Subspace u = gen::random_subspace(rng, n, gen::uniform(rng, 0, n));
    // another spanning set: random combinations plus the originals in reverse
    std::vector<Vec> other;
    for (int t = 0; t < 3; ++t) {
      Vec x = la::zero_vec(n);
      for (const auto& b : u.basis()) la::axpy(x, Scalar(gen::uniform(rng, -3, 3)), b);
      other.push_back(x);
    }
    for (auto it = u.basis().rbegin(); it != u.basis().rend(); ++it) {
      Vec x = *it;
      const Scalar k = la::make_scalar(gen::uniform(rng, 1, 4), gen::uniform(rng, 1, 4));
      for (auto& c : x) c *= k;
      other.push_back(x);
    }
    Subspace w = Subspace::span(n, other);
    EXPECT_EQ(w.basis(), u.basis());
    EXPECT_EQ(w.pivots(), u.pivots());
  }
}

}  // namespace
