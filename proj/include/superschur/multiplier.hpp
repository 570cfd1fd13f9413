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
// Schur multipliers of nilpotent Lie superalgebras.
//
// A class-c algebra L is presented as a quotient of the free nilpotent
// superalgebra Fbar = F / gamma_{c+2}(F) on homogeneous lifts of a basis of
// L / gamma_2(L). Since gamma_{c+1}(F) lies in R, gamma_{c+2}(F) lies in
// [R, F], so (R cap F^2) / [R, F] and every bracket quotient
// [gamma_i(F) + R, F] / [gamma_{i+1}(F) + R, F] are unchanged by the
// truncation.
//
// The second Chevalley-Eilenberg cohomology with trivial coefficients gives
// an independent route to the same dimensions.

#ifndef SUPERSCHUR_MULTIPLIER_HPP
#define SUPERSCHUR_MULTIPLIER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superschur/error.hpp"
#include "superschur/exactla.hpp"
#include "superschur/freenilp.hpp"
#include "superschur/superalg.hpp"

namespace superschur {

struct FreePresentation {
  LieSuperalgebra target;
  CentralSeries series;           // of the target
  std::vector<Element> lifts;     // images of the free generators, even first
  FreeNilpotentSuperalgebra fbar;  // class bound c + 1
  la::Matrix pi;                  // dim L x dim Fbar
  GradedSubspace kernel;          // R

  std::size_t target_class() const { return series.nilpotency_class; }
  const LieSuperalgebra& free_algebra() const { return fbar.algebra(); }
  GradedSubspace free_whole() const { return whole(fbar.algebra()); }
};

/// Presentation through the given homogeneous lifts (even lifts first). They
/// must be as many as dim L / gamma_2(L) and generate L.
inline FreePresentation present(const LieSuperalgebra& L, std::vector<Element> lifts) {
  FreePresentation p;
  p.series = lower_central_series(L);
  require_nilpotent(L, p.series);
  const SuperDim gens = quotient_dims(p.series.gamma(1), p.series.gamma(2));
  if (lifts.size() != gens.total()) throw PreconditionError("present: need one lift per generator of L/gamma_2(L)");
  for (std::size_t g = 0; g < lifts.size(); ++g) {
    const Parity want = g < gens.even ? Parity::even : Parity::odd;
    auto have = L.homogeneous_parity(lifts[g].coords());
    if (!have || *have != want) throw PreconditionError("present: lifts must be homogeneous, even ones first");
  }
  const std::size_t c = p.series.nilpotency_class;
  p.fbar = build_free_nilpotent_unchecked({gens.even, gens.odd, c + 1});
  p.pi = eval_hom(p.fbar, L, lifts);
  if (la::rank(p.pi) != L.dim()) throw PreconditionError("present: lifts do not generate L");
  p.kernel = GradedSubspace(p.fbar.algebra().super_dim(), la::nullspace(p.pi));
  if (!p.kernel.contains(p.fbar.gamma(c + 1))) throw AssertionFailure("present: gamma_{c+1}(Fbar) not inside R");
  p.target = L;
  p.lifts = std::move(lifts);
  return p;
}

/// Presentation through the unit vectors at the non-pivot coordinates of
/// gamma_2(L).
inline FreePresentation present(const LieSuperalgebra& L) {
  std::vector<Element> lifts;
  for (auto j : generator_lifts(L)) lifts.push_back(L.basis_element(j));
  return present(L, std::move(lifts));
}

enum class Method { hopf, cohomology };

inline const char* to_string(Method m) { return m == Method::hopf ? "hopf" : "cohomology"; }

struct MultiplierResult {
  SuperDim dims;
  Method method = Method::hopf;
  /// Hopf route only: elements of R cap Fbar^2 lifting a basis of the
  /// multiplier.
  std::vector<Vec> witnesses;
};

/// (R cap gamma_2(Fbar)) / [R, Fbar]
inline MultiplierResult schur_multiplier_hopf(const FreePresentation& p) {
  const LieSuperalgebra& F = p.free_algebra();
  GradedSubspace numerator = graded_intersect(p.kernel, p.fbar.gamma(2));
  GradedSubspace denominator = product_space(F, p.kernel, p.free_whole());
  MultiplierResult r;
  r.method = Method::hopf;
  r.dims = quotient_dims(numerator, denominator);
  r.witnesses = la::complement_basis(numerator.full(), denominator.full());
  return r;
}

inline MultiplierResult schur_multiplier_hopf(const LieSuperalgebra& L) { return schur_multiplier_hopf(present(L)); }

/// dim H^2(L; F) split by cochain parity. A 2-cochain c is graded
/// skew-symmetric, c(y, x) = -(-1)^{|x||y|} c(x, y), and a cocycle when
///   c(x, [y, z]) = c([x, y], z) + (-1)^{|x||y|} c(y, [x, z])
/// for all basis triples. Coboundaries are the cochains f([x, y]).
inline MultiplierResult schur_multiplier_cohomology(const LieSuperalgebra& L) {
  require_nilpotent(L, lower_central_series(L));
  const std::size_t n = L.dim();
  constexpr std::size_t none = static_cast<std::size_t>(-1);

  // variable index of the pair (a, b), a <= b, inside its parity sector
  std::vector<std::size_t> var(n * n, none);
  std::size_t count[2] = {0, 0};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      if (a == b && L.parity(a) == Parity::even) continue;
      var[a * n + b] = count[bit(L.parity(a) + L.parity(b))]++;
    }
  // c(b_a, b_b) as (variable, sign); even diagonal pairs vanish
  auto lookup = [&](std::size_t a, std::size_t b) -> std::pair<std::size_t, int> {
    if (a <= b) return {var[a * n + b], 1};
    return {var[b * n + a], -koszul_sign(L.parity(a), L.parity(b))};
  };
  // row += f * c(b_a, sum_k comb_k b_k)   or   c(sum_k comb_k b_k, b_a)
  auto accumulate = [&](Vec& row, const Scalar& f, std::size_t a, const Combination& comb, bool comb_first) {
    for (const auto& [k, x] : comb) {
      auto [v, s] = comb_first ? lookup(k, a) : lookup(a, k);
      if (v == none) continue;
      row[v] += f * x * s;
    }
  };

  std::vector<la::EchelonBasis> cocycle_rel;
  cocycle_rel.emplace_back(count[0]);
  cocycle_rel.emplace_back(count[1]);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y)
      for (std::size_t z = y; z < n; ++z) {
        const int sector = bit(L.parity(x) + L.parity(y) + L.parity(z));
        Vec row = la::zero_vec(count[sector]);
        accumulate(row, Scalar(1), x, L.structure(y, z), false);
        accumulate(row, Scalar(-1), z, L.structure(x, y), true);
        accumulate(row, Scalar(-koszul_sign(L.parity(x), L.parity(y))), y, L.structure(x, z), false);
        if (!la::is_zero(row)) cocycle_rel[sector].insert(std::move(row));
      }

  // coboundaries of the dual basis functionals
  std::vector<la::EchelonBasis> coboundary;
  coboundary.emplace_back(count[0]);
  coboundary.emplace_back(count[1]);
  for (std::size_t k = 0; k < n; ++k) {
    const int sector = bit(L.parity(k));
    Vec row = la::zero_vec(count[sector]);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        if (var[a * n + b] == none) continue;
        for (const auto& [t, x] : L.structure(a, b))
          if (t == k) row[var[a * n + b]] += x;
      }
    coboundary[sector].insert(std::move(row));
  }

  MultiplierResult r;
  r.method = Method::cohomology;
  for (int sector = 0; sector < 2; ++sector) {
    const std::size_t cocycles = count[sector] - cocycle_rel[sector].rank();
    const std::size_t boundaries = coboundary[sector].rank();
    if (boundaries > cocycles) throw AssertionFailure("cohomology: coboundaries exceed cocycles");
    (sector == 0 ? r.dims.even : r.dims.odd) = cocycles - boundaries;
  }
  return r;
}

/// Raised when the Hopf and cohomology routes disagree.
class MethodDisagreement : public AssertionFailure {
 public:
  MethodDisagreement(const std::string& algebra, SuperDim hopf, SuperDim cohomology)
      : AssertionFailure(algebra + ": hopf " + to_string(hopf) + " != cohomology " + to_string(cohomology)),
        hopf_(hopf),
        cohomology_(cohomology) {}
  SuperDim hopf() const { return hopf_; }
  SuperDim cohomology() const { return cohomology_; }

 private:
  SuperDim hopf_, cohomology_;
};

/// Both routes; throws MethodDisagreement when they differ.
inline MultiplierResult schur_multiplier_checked(const LieSuperalgebra& L) {
  MultiplierResult h = schur_multiplier_hopf(L);
  MultiplierResult c = schur_multiplier_cohomology(L);
  if (h.dims != c.dims) throw MethodDisagreement(L.name(), h.dims, c.dims);
  return h;
}

// ---------------------------------------------------------------------------
// the maps lambda_i

namespace detail {

inline void check_lambda_index(const FreePresentation& p, std::size_t i) {
  const std::size_t c = p.target_class();
  if (i < 2 || i > c)
    throw RangeError(p.target.name() + ": lambda index " + std::to_string(i) + " outside [2, " + std::to_string(c) +
                     "]");
}

}  // namespace detail

/// [gamma_i(Fbar) + R, Fbar]
inline GradedSubspace lambda_numerator(const FreePresentation& p, std::size_t i) {
  detail::check_lambda_index(p, i);
  return product_space(p.free_algebra(), graded_sum(p.fbar.gamma(i), p.kernel), p.free_whole());
}

/// [R, Fbar] for i = c, else [gamma_{i+1}(Fbar) + R, Fbar]
inline GradedSubspace lambda_denominator(const FreePresentation& p, std::size_t i) {
  detail::check_lambda_index(p, i);
  if (i == p.target_class()) return product_space(p.free_algebra(), p.kernel, p.free_whole());
  return product_space(p.free_algebra(), graded_sum(p.fbar.gamma(i + 1), p.kernel), p.free_whole());
}

inline std::size_t bracket_quotient_dim(const FreePresentation& p, std::size_t i) {
  return la::quotient_dim(lambda_numerator(p, i).full(), lambda_denominator(p, i).full());
}

/// dim of the domain of lambda_i: gamma_c(L) (x) L/gamma_2(L) for i = c and
/// gamma_i(L)/gamma_{i+1}(L) (x) L/gamma_2(L) below.
inline std::size_t lambda_domain_dim(const FreePresentation& p, std::size_t i) {
  detail::check_lambda_index(p, i);
  const CentralSeries& s = p.series;
  const std::size_t gens = s.gamma(1).dim() - s.gamma(2).dim();
  const std::size_t first = i == p.target_class() ? s.gamma(i).dim() : s.gamma(i).dim() - s.gamma(i + 1).dim();
  return first * gens;
}

inline std::size_t lambda_kernel_dim(const FreePresentation& p, std::size_t i) {
  const std::size_t domain = lambda_domain_dim(p, i);
  const std::size_t image = bracket_quotient_dim(p, i);
  if (image > domain) throw AssertionFailure("lambda_kernel_dim: image larger than domain");
  return domain - image;
}

inline std::size_t lambda_kernel_dim(const LieSuperalgebra& L, std::size_t i) {
  return lambda_kernel_dim(present(L), i);
}

// ---------------------------------------------------------------------------
// the tensors phi_i

struct PhiWitness {
  std::size_t i = 0;
  std::vector<std::size_t> tuple;  // indices into the presentation's lifts
  /// Flattened (dim L)^2 coordinates of sum_j sign_j inner_j (x) x_j, with
  /// inner_j reduced modulo gamma_{i+1}(L) and x_j modulo gamma_2(L).
  Vec tensor;
  bool nonzero = false;
  /// sum_j sign_j [lift(inner_j), lift(x_j)] in Fbar
  Vec lambda_image;
  /// lambda_image lies in the denominator of lambda_i
  bool in_kernel = false;
};

inline PhiWitness phi_witness(const FreePresentation& p, std::size_t i, std::span<const std::size_t> tuple,
                              const GradedSubspace& denominator) {
  detail::check_lambda_index(p, i);
  if (tuple.size() != i + 1) throw PreconditionError("phi_witness: tuple must have i+1 entries");
  for (auto t : tuple)
    if (t >= p.lifts.size()) throw PreconditionError("phi_witness: tuple entry is not a generating lift");

  const LieSuperalgebra& L = p.target;
  const LieSuperalgebra& F = p.free_algebra();
  std::vector<Element> xs, gs;
  std::vector<Parity> ps;
  for (auto t : tuple) {
    xs.push_back(p.lifts[t]);
    gs.push_back(F.basis_element(p.fbar.generator_index(t)));
    ps.push_back(p.fbar.spec().parity(t));
  }
  auto br_L = [&](const Element& a, const Element& b) { return L.bracket(a, b); };
  auto br_F = [&](const Element& a, const Element& b) { return F.bracket(a, b); };

  const GradedSubspace upper = p.series.gamma(i + 1);
  const GradedSubspace derived = p.series.gamma(2);
  const std::size_t n = L.dim();
  PhiWitness w;
  w.i = i;
  w.tuple.assign(tuple.begin(), tuple.end());
  w.tensor = la::zero_vec(n * n);
  for (const auto& term : phi_terms<Element>(xs, ps, br_L)) {
    Vec left = upper.reduce(term.inner.coords());
    Vec right = derived.reduce(xs[term.slot].coords());
    for (std::size_t a = 0; a < n; ++a) {
      if (sgn(left[a]) == 0) continue;
      for (std::size_t b = 0; b < n; ++b)
        if (sgn(right[b]) != 0) w.tensor[a * n + b] += term.sign * left[a] * right[b];
    }
  }
  w.nonzero = !la::is_zero(w.tensor);

  Element image = F.zero();
  for (const auto& term : phi_terms<Element>(gs, ps, br_F))
    image += Scalar(term.sign) * F.bracket(term.inner, gs[term.slot]);
  w.lambda_image = image.coords();
  w.in_kernel = denominator.contains(w.lambda_image);
  return w;
}

inline PhiWitness phi_witness(const FreePresentation& p, std::size_t i, std::span<const std::size_t> tuple) {
  return phi_witness(p, i, tuple, lambda_denominator(p, i));
}

/// Tuple given by elements of L; each must be one of the presentation's lifts.
inline PhiWitness phi_witness(const FreePresentation& p, std::size_t i, std::span<const Element> tuple) {
  std::vector<std::size_t> idx;
  for (const auto& x : tuple) {
    if (!x.is_zero() && !p.target.homogeneous_parity(x.coords()))
      throw PreconditionError("phi_witness: tuple entry is not homogeneous");
    std::size_t t = 0;
    while (t < p.lifts.size() && !(p.lifts[t] == x)) ++t;
    if (t == p.lifts.size()) throw PreconditionError("phi_witness: tuple entry is not a generating lift");
    idx.push_back(t);
  }
  return phi_witness(p, i, idx);
}

/// Witnesses phi_i(z_1, ..., z_i, y_k) for a tuple z whose left-normed
/// bracket lies outside gamma_{i+1}(L), over the generators y_k not among
/// the z's.
struct ProofWitnessSet {
  std::size_t i = 0;
  std::vector<std::size_t> z;
  std::vector<std::size_t> y;
  std::vector<PhiWitness> witnesses;
  std::size_t required = 0;  // m + n - r - s - i
  std::size_t rank = 0;      // rank of the witness tensors
  bool found_z = false;
  bool all_in_kernel = true;
  bool all_nonzero = true;
  bool independent() const { return rank == witnesses.size(); }
  /// Everything the argument asserts: a tuple z exists and the witnesses are
  /// at least m + n - r - s - i nonzero, independent kernel elements.
  bool holds() const {
    return found_z && all_in_kernel && all_nonzero && independent() && witnesses.size() >= required;
  }
};

inline ProofWitnessSet proof_witnesses(const FreePresentation& p, std::size_t i) {
  detail::check_lambda_index(p, i);
  const LieSuperalgebra& L = p.target;
  const std::size_t g = p.lifts.size();
  const GradedSubspace upper = p.series.gamma(i + 1);
  auto br = [&](const Element& a, const Element& b) { return L.bracket(a, b); };

  ProofWitnessSet out;
  out.i = i;
  out.required = g >= i ? g - i : 0;
  std::vector<std::size_t> tuple(i, 0);
  std::size_t best_rest = 0;
  for (;;) {
    std::vector<Element> xs;
    for (auto t : tuple) xs.push_back(p.lifts[t]);
    if (!upper.contains(left_normed<Element>(xs, br).coords())) {
      std::vector<bool> used(g, false);
      for (auto t : tuple) used[t] = true;
      std::size_t rest = 0;
      for (std::size_t t = 0; t < g; ++t) rest += !used[t];
      if (!out.found_z || rest > best_rest) {
        out.found_z = true;
        best_rest = rest;
        out.z = tuple;
      }
    }
    std::size_t pos = i;
    while (pos > 0 && ++tuple[pos - 1] == g) tuple[--pos] = 0;
    if (pos == 0) break;
  }
  if (!out.found_z) return out;

  std::vector<bool> used(g, false);
  for (auto t : out.z) used[t] = true;
  for (std::size_t t = 0; t < g; ++t)
    if (!used[t]) out.y.push_back(t);

  const GradedSubspace denominator = lambda_denominator(p, i);
  la::EchelonBasis span(L.dim() * L.dim());
  for (auto yk : out.y) {
    std::vector<std::size_t> t = out.z;
    t.push_back(yk);
    PhiWitness w = phi_witness(p, i, t, denominator);
    out.all_in_kernel = out.all_in_kernel && w.in_kernel;
    out.all_nonzero = out.all_nonzero && w.nonzero;
    span.insert(w.tensor);
    out.witnesses.push_back(std::move(w));
  }
  out.rank = span.rank();
  return out;
}

// ---------------------------------------------------------------------------
// dimension identities

struct Eq21Report {
  std::size_t gamma_c_dim = 0;
  std::size_t multiplier = 0;
  std::size_t quotient_multiplier = 0;  // M(L / gamma_c(L))
  std::size_t bracket_quotient = 0;     // dim [gamma_c(F) + R, F] / [R, F]
  std::size_t lhs() const { return gamma_c_dim + multiplier; }
  std::size_t rhs() const { return quotient_multiplier + bracket_quotient; }
  bool holds() const { return lhs() == rhs(); }
};

namespace detail {

inline void require_class_two(const FreePresentation& p) {
  if (p.target_class() < 2) throw PreconditionError(p.target.name() + ": identity needs nilpotency class >= 2");
}

}  // namespace detail

/// dim gamma_c(L) + dim M(L) = dim M(L / gamma_c(L)) + dim [gamma_c(F) + R, F] / [R, F]
inline Eq21Report verify_eq21(const FreePresentation& p) {
  detail::require_class_two(p);
  const std::size_t c = p.target_class();
  Eq21Report r;
  r.gamma_c_dim = p.series.gamma(c).dim();
  r.multiplier = schur_multiplier_hopf(p).dims.total();
  QuotientResult q = quotient(p.target, p.series.gamma(c), p.target.name() + "/gamma_c");
  r.quotient_multiplier = schur_multiplier_hopf(q.algebra).dims.total();
  r.bracket_quotient = bracket_quotient_dim(p, c);
  return r;
}

inline Eq21Report verify_eq21(const LieSuperalgebra& L) { return verify_eq21(present(L)); }

struct Eq24Report {
  std::size_t multiplier = 0;
  std::size_t abelian_multiplier = 0;  // M(L / gamma_2(L))
  std::size_t gamma2_dim = 0;
  std::size_t generators = 0;          // dim L / gamma_2(L)
  std::vector<std::size_t> kernel_dims;  // dim ker lambda_i, i = 2..c
  long rhs() const {
    long sum = 0;
    for (auto k : kernel_dims) sum += static_cast<long>(k);
    return static_cast<long>(abelian_multiplier) +
           static_cast<long>(gamma2_dim) * (static_cast<long>(generators) - 1) - sum;
  }
  bool holds() const { return static_cast<long>(multiplier) == rhs(); }
};

/// dim M(L) = dim M(L/gamma_2) + dim gamma_2 (dim L/gamma_2 - 1) - sum_{i=2}^c dim ker lambda_i
inline Eq24Report verify_eq24(const FreePresentation& p) {
  detail::require_class_two(p);
  Eq24Report r;
  r.multiplier = schur_multiplier_hopf(p).dims.total();
  QuotientResult q = quotient(p.target, p.series.gamma(2), p.target.name() + "/gamma_2");
  r.abelian_multiplier = schur_multiplier_hopf(q.algebra).dims.total();
  r.gamma2_dim = p.series.gamma(2).dim();
  r.generators = p.lifts.size();
  for (std::size_t i = 2; i <= p.target_class(); ++i) r.kernel_dims.push_back(lambda_kernel_dim(p, i));
  return r;
}

inline Eq24Report verify_eq24(const LieSuperalgebra& L) { return verify_eq24(present(L)); }

struct Eq31Entry {
  std::size_t i = 0;
  std::size_t kernel_dim = 0;
  std::size_t lower_bound = 0;  // m + n - r - s - i
  bool holds() const { return kernel_dim >= lower_bound; }
};

/// dim ker lambda_i >= m + n - r - s - i for 2 <= i <= min(c, m + n - r - s).
inline std::vector<Eq31Entry> verify_eq31(const FreePresentation& p) {
  const std::size_t g = p.lifts.size();
  const std::size_t l = std::min(p.target_class(), g);
  std::vector<Eq31Entry> out;
  for (std::size_t i = 2; i <= l; ++i) out.push_back({i, lambda_kernel_dim(p, i), g - i});
  return out;
}

}  // namespace superschur

#endif  // SUPERSCHUR_MULTIPLIER_HPP
