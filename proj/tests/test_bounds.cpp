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
#include <string>

#include "superschur/bounds.hpp"
#include "superschur/catalog.hpp"
#include "support.hpp"

namespace {

using namespace superschur;
using namespace superschur::bounds;
using la::Scalar;

// Independent evaluation of the main bound from its final rewritten form
// with rational arithmetic.
Scalar rewritten_main(Int m, Int n, Int r, Int s, Int c) {
  const Int g = m + n - r - s;
  Scalar v = Scalar(static_cast<long>((g - 1) * (m + n + r + s))) / 2 + static_cast<long>(n - s);
  for (Int i = 2; i <= std::min(c, g); ++i) v -= static_cast<long>(g - i);
  return v;
}

TEST(MainBound, Examples) {
  EXPECT_EQ(main_bound({3, 0, 1, 0, 2}), 2);
  EXPECT_EQ(main_bound({1, 1, 1, 0, 2}), 1);
  EXPECT_EQ(main_bound({2, 2, 1, 1, 2}), 4);
  EXPECT_EQ(main_bound({4, 0, 1, 0, 2}), 4);
  EXPECT_EQ(main_bound({4, 0, 2, 0, 3}), 3);
}

TEST(MainBound, Preconditions) {
  EXPECT_THROW(main_bound({2, 0, 0, 0, 2}), PreconditionError);
  EXPECT_THROW(main_bound({1, 0, 1, 0, 2}), PreconditionError);
  EXPECT_THROW(main_bound({3, 0, 1, 0, 1}), PreconditionError);
  EXPECT_THROW(main_bound({-1, 0, 1, 0, 2}), PreconditionError);
}

TEST(NayakBound, Examples) {
  EXPECT_EQ(nayak_bound(3, 0, 1, 0), Scalar(2));
  EXPECT_EQ(nayak_bound(2, 2, 1, 1), Scalar(5));
  EXPECT_EQ(nayak_bound(4, 0, 2, 0), Scalar(3));
  EXPECT_EQ(nayak_bound(1, 1, 1, 0), Scalar(2));
  EXPECT_THROW(nayak_bound(2, 0, 0, 0), PreconditionError);
}

TEST(RaiBound, Examples) {
  EXPECT_EQ(rai_bound(3, 1, 2), 2);
  EXPECT_EQ(rai_bound(4, 1, 2), 4);
  EXPECT_EQ(rai_bound(4, 2, 3), 3);
  EXPECT_THROW(rai_bound(3, 0, 2), PreconditionError);
  EXPECT_THROW(rai_bound(3, 3, 2), PreconditionError);
  EXPECT_THROW(rai_bound(3, 1, 1), PreconditionError);
}

TEST(AbelianDims, Examples) {
  EXPECT_EQ(abelian_multiplier_dims(0, 0), (SuperDim{0, 0}));
  EXPECT_EQ(abelian_multiplier_dims(2, 0), (SuperDim{1, 0}));
  EXPECT_EQ(abelian_multiplier_dims(0, 1), (SuperDim{1, 0}));
  EXPECT_EQ(abelian_multiplier_dims(2, 1), (SuperDim{2, 2}));
  EXPECT_EQ(abelian_multiplier_dims(3, 3), (SuperDim{9, 9}));
}

TEST(AbelianDims, MatchesHopf) {
  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; n <= 4; ++n)
      EXPECT_EQ(abelian_multiplier_dims(m, n), schur_multiplier_hopf(abelian(m, n)).dims) << m << "|" << n;
}

TEST(Extract, Examples) {
  ExtractedInput h = extract_input(heisenberg3());
  EXPECT_EQ(h.input, (BoundInput{3, 0, 1, 0, 2}));
  EXPECT_TRUE(h.in_hypotheses);
  ExtractedInput s = extract_input(special_heisenberg(1));
  EXPECT_EQ(s.input, (BoundInput{1, 1, 1, 0, 2}));
  ExtractedInput f = extract_input(filiform4());
  EXPECT_EQ(f.input, (BoundInput{4, 0, 2, 0, 3}));
  ExtractedInput a = extract_input(abelian(2, 1));
  EXPECT_FALSE(a.in_hypotheses);
  EXPECT_EQ(a.input.c, 1);
  LieSuperalgebra aff("aff", {"a", "b"}, {}, {{{0, 1}, {{1, Scalar(1)}}}});
  EXPECT_THROW(extract_input(aff), NotNilpotent);
}

TEST(CheckBound, Examples) {
  BoundReport h = check_bound(heisenberg3());
  EXPECT_EQ(h.actual(), 2);
  EXPECT_EQ(h.main, 2);
  EXPECT_TRUE(h.main_tight());
  ASSERT_TRUE(h.rai.has_value());
  EXPECT_EQ(*h.rai, 2);
  BoundReport s = check_bound(special_heisenberg(1));
  EXPECT_EQ(s.actual(), 0);
  EXPECT_EQ(s.main, 1);
  EXPECT_EQ(s.main_slack(), 1);
  EXPECT_FALSE(s.rai.has_value());
  BoundReport p = check_bound(*standard_catalog().find("heis3+A(1|0)"));
  EXPECT_EQ(p.actual(), 4);
  EXPECT_TRUE(p.main_tight());
  EXPECT_THROW(check_bound(abelian(2, 1)), HypothesesNotMet);
}

TEST(Sweep, FormEquivalence) {
  for (Int m = 0; m <= 6; ++m)
    for (Int n = 0; n <= 6; ++n)
      for (Int r = 0; r <= m; ++r)
        for (Int s = 0; s <= n; ++s) {
          if (r + s < 1 || m + n - r - s < 1) continue;
          Scalar lhs = Scalar(static_cast<long>((m + n - r - s) * (m + n + r + s) + (n - m - r - 3 * s))) / 2;
          Scalar rhs = Scalar(static_cast<long>((m + n - r - s - 1) * (m + n + r + s))) / 2 + static_cast<long>(n - s);
          EXPECT_EQ(lhs, rhs);
          for (Int c = 2; c <= r + s + 1; ++c)
            EXPECT_EQ(Scalar(static_cast<long>(main_bound({m, n, r, s, c}))), rewritten_main(m, n, r, s, c));
        }
}

TEST(Sweep, SpecializesToLieBound) {
  for (Int m = 2; m <= 8; ++m)
    for (Int r = 1; r < m; ++r)
      for (Int c = 2; c <= m - r + 1; ++c) EXPECT_EQ(main_bound({m, 0, r, 0, c}), rai_bound(m, r, c));
}

TEST(Sweep, DominatesNayak) {
  for (Int m = 0; m <= 6; ++m)
    for (Int n = 0; n <= 6; ++n)
      for (Int r = 0; r <= m; ++r)
        for (Int s = 0; s <= n; ++s) {
          if (r + s < 1 || m + n - r - s < 2) continue;
          const Scalar nb = nayak_bound(m, n, r, s);
          for (Int c = 2; c <= r + s + 1; ++c)
            EXPECT_LE(Scalar(static_cast<long>(main_bound({m, n, r, s, c}))), nb)
                << m << " " << n << " " << r << " " << s << " " << c;
        }
}

TEST(Soundness, CatalogAndRandomQuotients) {
  std::mt19937 rng(5001);
  std::vector<LieSuperalgebra> algs = standard_catalog().algebras;
  for (int t = 0; t < 20; ++t) algs.push_back(gen::random_free_quotient(rng, 3, 4, "rq" + std::to_string(t)));
  for (const auto& a : algs) {
    ASSERT_TRUE(validate(a).ok());
    ExtractedInput e = extract_input(a);
    if (!e.in_hypotheses) {
      EXPECT_THROW(check_bound(a), HypothesesNotMet);
      continue;
    }
    BoundReport r = check_bound(a);
    EXPECT_FALSE(r.violated()) << a.name();
    EXPECT_LE(r.actual(), r.main) << a.name();
  }
}

}  // namespace
