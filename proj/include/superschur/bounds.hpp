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
// Closed-form upper bounds on dim M(L) and their comparison with computed
// multipliers. Throughout, dim L = (m|n), dim gamma_2(L) = (r|s) and c is the
// nilpotency class.

#ifndef SUPERSCHUR_BOUNDS_HPP
#define SUPERSCHUR_BOUNDS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "superschur/error.hpp"
#include "superschur/exactla.hpp"
#include "superschur/multiplier.hpp"
#include "superschur/superalg.hpp"

namespace superschur::bounds {

using Int = std::int64_t;

struct BoundInput {
  Int m = 0, n = 0;  // dim L
  Int r = 0, s = 0;  // dim gamma_2(L)
  Int c = 0;         // nilpotency class

  Int generators() const { return m + n - r - s; }
  friend bool operator==(const BoundInput&, const BoundInput&) = default;
};

/// Multiplier of the abelian superalgebra A(m|n): ((m^2 + n^2 + n - m)/2 | mn).
inline SuperDim abelian_multiplier_dims(std::size_t m, std::size_t n) {
  return {(m * m + n * n + n - m) / 2, m * n};
}

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError("bound precondition violated: " + what);
}

// sum_{i=2}^{l} (g - i), empty when l < 2
inline Int tail_sum(Int g, Int l) {
  Int s = 0;
  for (Int i = 2; i <= l; ++i) s += g - i;
  return s;
}

}  // namespace detail

/// 1/2 [(m+n-r-s)(m+n+r+s) + (n-m-r-3s)] - sum_{i=2}^{l} (m+n-r-s-i),
/// l = min(c, m+n-r-s). The bracket is always even, so the value is an
/// integer; it is also checked against the rewritten form
/// 1/2 (m+n-r-s-1)(m+n+r+s) + (n-s) - sum.
inline Int main_bound(const BoundInput& b) {
  detail::require(b.m >= 0 && b.n >= 0 && b.r >= 0 && b.s >= 0, "dimensions must be non-negative");
  detail::require(b.r + b.s >= 1, "r+s >= 1");
  detail::require(b.generators() >= 1, "m+n-r-s >= 1");
  detail::require(b.c >= 2, "c >= 2");
  const Int g = b.generators();
  const Int total = b.m + b.n + b.r + b.s;
  const Int bracket = g * total + (b.n - b.m - b.r - 3 * b.s);
  if (bracket % 2 != 0) throw AssertionFailure("main_bound: odd bracket");
  const Int l = std::min(b.c, g);
  const Int value = bracket / 2 - detail::tail_sum(g, l);
  const Int rewritten = (g - 1) * total / 2 + (b.n - b.s) - detail::tail_sum(g, l);
  if ((g - 1) * total % 2 != 0 || rewritten != value) throw AssertionFailure("main_bound: rewritten form disagrees");
  return value;
}

/// 1/2 (m+n+r+s-2)(m+n-r-s-1) + n + 1, kept exact.
inline la::Scalar nayak_bound(Int m, Int n, Int r, Int s) {
  detail::require(r + s >= 1, "r+s >= 1");
  la::Scalar v(static_cast<long>((m + n + r + s - 2) * (m + n - r - s - 1)), 2L);
  v.canonicalize();
  return v + static_cast<long>(n + 1);
}

/// Lie algebra bound with dim L = N, dim L^2 = M:
/// 1/2 (N+M)(N-M-1) - sum_{i=2}^{min(c, N-M)} (N-M-i).
inline Int rai_bound(Int N, Int M, Int c) {
  detail::require(M >= 1, "M >= 1");
  detail::require(N - M >= 1, "N-M >= 1");
  detail::require(c >= 2, "c >= 2");
  const Int prod = (N + M) * (N - M - 1);
  if (prod % 2 != 0) throw AssertionFailure("rai_bound: odd product");
  return prod / 2 - detail::tail_sum(N - M, std::min(c, N - M));
}

struct ExtractedInput {
  BoundInput input;
  bool in_hypotheses = false;  // nilpotent with r + s >= 1
  std::string reason;
};

inline ExtractedInput extract_input(const LieSuperalgebra& L) {
  CentralSeries s = lower_central_series(L);
  require_nilpotent(L, s);
  ExtractedInput e;
  const SuperDim d = L.super_dim();
  const SuperDim d2 = s.gamma(2).dims();
  e.input = {static_cast<Int>(d.even), static_cast<Int>(d.odd), static_cast<Int>(d2.even), static_cast<Int>(d2.odd),
             static_cast<Int>(s.nilpotency_class)};
  e.in_hypotheses = d2.total() >= 1;
  if (!e.in_hypotheses) e.reason = "hypotheses not met (r+s=0)";
  return e;
}

/// Raised when a bound is requested for an algebra outside the bound's
/// hypotheses.
class HypothesesNotMet : public Error {
 public:
  using Error::Error;
};

struct BoundReport {
  std::string algebra;
  BoundInput input;
  SuperDim multiplier;
  Int main = 0;
  la::Scalar nayak;
  std::optional<Int> rai;  // only for Lie algebras (n = s = 0)

  Int actual() const { return static_cast<Int>(multiplier.total()); }
  bool main_tight() const { return actual() == main; }
  Int main_slack() const { return main - actual(); }
  bool violated() const {
    return actual() > main || la::Scalar(static_cast<long>(actual())) > nayak || (rai && actual() > *rai);
  }
};

/// Computes dim M(L) by the Hopf route and compares it with every
/// applicable bound; a violation is raised as AssertionFailure.
inline BoundReport check_bound(const LieSuperalgebra& L) {
  ExtractedInput e = extract_input(L);
  if (!e.in_hypotheses) throw HypothesesNotMet(L.name() + ": bound hypotheses not met (r+s=0)");
  BoundReport r;
  r.algebra = L.name();
  r.input = e.input;
  r.multiplier = schur_multiplier_hopf(L).dims;
  r.main = main_bound(e.input);
  r.nayak = nayak_bound(e.input.m, e.input.n, e.input.r, e.input.s);
  if (e.input.n == 0 && e.input.s == 0) r.rai = rai_bound(e.input.m, e.input.r, e.input.c);
  if (r.violated())
    throw AssertionFailure(L.name() + ": dim M = " + std::to_string(r.actual()) + " exceeds a bound (main " +
                           std::to_string(r.main) + ", nayak " + r.nayak.get_str() + ")");
  return r;
}

}  // namespace superschur::bounds

#endif  // SUPERSCHUR_BOUNDS_HPP
