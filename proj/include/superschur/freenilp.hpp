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
// Free nilpotent Lie superalgebras. Lie elements are handled through their
// image in the free associative superalgebra, where the bracket is the super
// commutator ab - (-1)^{|a||b|} ba. In characteristic zero this embedding is
// injective, so linear relations between Lie words can be decided on their
// associative expansions.

#ifndef SUPERSCHUR_FREENILP_HPP
#define SUPERSCHUR_FREENILP_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superschur/error.hpp"
#include "superschur/exactla.hpp"
#include "superschur/superalg.hpp"

namespace superschur {

/// p even and q odd free generators, truncated above bracket degree k.
struct GeneratorSpec {
  std::size_t even_count = 0;
  std::size_t odd_count = 0;
  std::size_t class_bound = 1;

  std::size_t generators() const { return even_count + odd_count; }
  Parity parity(std::size_t g) const { return g < even_count ? Parity::even : Parity::odd; }
  std::vector<Parity> parities() const {
    std::vector<Parity> ps;
    for (std::size_t g = 0; g < generators(); ++g) ps.push_back(parity(g));
    return ps;
  }

  void validate() const {
    if (generators() == 0) throw PreconditionError("GeneratorSpec: need at least one generator");
    if (class_bound == 0) throw PreconditionError("GeneratorSpec: class bound must be >= 1");
  }
};

using Word = std::vector<std::size_t>;

/// Noncommutative polynomial with exact coefficients; terms are kept in
/// lexicographic word order and never carry a zero coefficient.
class AssocPoly {
 public:
  using Terms = std::map<Word, Scalar>;

  AssocPoly() = default;
  static AssocPoly letter(std::size_t g) {
    AssocPoly p;
    p.terms_.emplace(Word{g}, Scalar(1));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& w, const Scalar& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  AssocPoly& operator+=(const AssocPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  AssocPoly& operator-=(const AssocPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend AssocPoly operator+(AssocPoly a, const AssocPoly& b) { return a += b; }
  friend AssocPoly operator-(AssocPoly a, const AssocPoly& b) { return a -= b; }
  friend AssocPoly operator*(const Scalar& s, AssocPoly a) {
    if (sgn(s) == 0) return {};
    for (auto& [w, c] : a.terms_) c *= s;
    return a;
  }
  friend AssocPoly operator*(const AssocPoly& a, const AssocPoly& b) {
    AssocPoly out;
    for (const auto& [u, x] : a.terms_)
      for (const auto& [v, y] : b.terms_) {
        Word w = u;
        w.insert(w.end(), v.begin(), v.end());
        out.add_term(w, x * y);
      }
    return out;
  }
  friend bool operator==(const AssocPoly&, const AssocPoly&) = default;

 private:
  Terms terms_;
};

/// A homogeneous Lie element of the free superalgebra, represented by its
/// associative expansion.
struct FreeElement {
  AssocPoly poly;
  Parity parity = Parity::even;

  bool is_zero() const { return poly.is_zero(); }
  friend FreeElement operator+(FreeElement a, const FreeElement& b) {
    a.poly += b.poly;
    return a;
  }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) {
    a.poly -= b.poly;
    return a;
  }
  friend FreeElement operator*(const Scalar& s, FreeElement a) {
    a.poly = s * std::move(a.poly);
    return a;
  }
};

inline FreeElement super_commutator(const FreeElement& a, const FreeElement& b) {
  AssocPoly ab = a.poly * b.poly;
  AssocPoly ba = b.poly * a.poly;
  return {ab - Scalar(koszul_sign(a.parity, b.parity)) * ba, a.parity + b.parity};
}

/// [x_1, ..., x_n]_l = [...[[x_1, x_2], x_3], ..., x_n]
template <class T, class BracketFn>
T left_normed(std::span<const T> xs, BracketFn&& br) {
  if (xs.empty()) throw PreconditionError("left_normed: empty list");
  T acc = xs[0];
  for (std::size_t k = 1; k < xs.size(); ++k) acc = br(acc, xs[k]);
  return acc;
}

/// [x_1, ..., x_n]_r = [x_1, [..., [x_{n-1}, x_n]...]]
template <class T, class BracketFn>
T right_normed(std::span<const T> xs, BracketFn&& br) {
  if (xs.empty()) throw PreconditionError("right_normed: empty list");
  T acc = xs.back();
  for (std::size_t k = xs.size() - 1; k-- > 0;) acc = br(xs[k], acc);
  return acc;
}

/// Full binary bracketing of generator indices.
class BracketWord {
 public:
  static BracketWord leaf(std::size_t g) {
    BracketWord w;
    w.node_ = std::make_shared<const Node>(Node{g, {}, {}, 1});
    return w;
  }
  static BracketWord bracket(const BracketWord& l, const BracketWord& r) {
    BracketWord w;
    w.node_ = std::make_shared<const Node>(Node{0, l.node_, r.node_, l.degree() + r.degree()});
    return w;
  }
  static BracketWord left_normed(std::span<const std::size_t> leaves) {
    std::vector<BracketWord> ws;
    for (auto g : leaves) ws.push_back(leaf(g));
    return superschur::left_normed<BracketWord>(ws, &BracketWord::bracket);
  }
  static BracketWord right_normed(std::span<const std::size_t> leaves) {
    std::vector<BracketWord> ws;
    for (auto g : leaves) ws.push_back(leaf(g));
    return superschur::right_normed<BracketWord>(ws, &BracketWord::bracket);
  }

  bool is_leaf() const { return !node_->left; }
  std::size_t generator() const { return node_->gen; }
  BracketWord left() const { return BracketWord(node_->left); }
  BracketWord right() const { return BracketWord(node_->right); }
  std::size_t degree() const { return node_->degree; }

  std::vector<std::size_t> leaves() const {
    std::vector<std::size_t> out;
    collect(*node_, out);
    return out;
  }

  Parity parity(std::span<const Parity> gen_parity) const {
    Parity p = Parity::even;
    for (auto g : leaves()) p += gen_parity[g];
    return p;
  }

  /// Evaluates the tree in any algebra given generator images and a bracket.
  template <class T, class BracketFn>
  T evaluate(std::span<const T> images, BracketFn&& br) const {
    return eval(*node_, images, br);
  }

  std::string to_string(std::span<const std::string> gen_labels) const { return str(*node_, gen_labels); }

 private:
  struct Node {
    std::size_t gen;
    std::shared_ptr<const Node> left, right;
    std::size_t degree;
  };
  BracketWord() = default;
  explicit BracketWord(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static void collect(const Node& n, std::vector<std::size_t>& out) {
    if (!n.left) {
      out.push_back(n.gen);
      return;
    }
    collect(*n.left, out);
    collect(*n.right, out);
  }
  template <class T, class BracketFn>
  static T eval(const Node& n, std::span<const T> images, BracketFn& br) {
    if (!n.left) return images[n.gen];
    return br(eval(*n.left, images, br), eval(*n.right, images, br));
  }
  static std::string str(const Node& n, std::span<const std::string> labels) {
    if (!n.left) return labels[n.gen];
    return "[" + str(*n.left, labels) + "," + str(*n.right, labels) + "]";
  }

  std::shared_ptr<const Node> node_;
};

/// Associative expansion of a bracket word.
inline AssocPoly expand(const BracketWord& w, std::span<const Parity> gen_parity) {
  std::vector<FreeElement> letters;
  for (std::size_t g = 0; g < gen_parity.size(); ++g) letters.push_back({AssocPoly::letter(g), gen_parity[g]});
  return w.evaluate<FreeElement>(letters, super_commutator).poly;
}

// ---------------------------------------------------------------------------
// the signed sums attached to i+1 homogeneous elements

template <class T>
struct SignedTerm {
  int sign;
  T inner;           // element of gamma_i
  std::size_t slot;  // 0-based position of the second factor x_j
};

namespace detail {

struct ParitySums {
  std::span<const Parity> ps;
  // 1-based inclusive range sum, zero when empty
  int S(std::size_t a, std::size_t b) const {
    int s = 0;
    for (std::size_t k = a; k <= b && k >= 1 && k <= ps.size(); ++k) s += bit(ps[k - 1]);
    return s;
  }
  int p(std::size_t k) const { return bit(ps[k - 1]); }
};

inline int sign_of(int exponent) { return (exponent & 1) ? -1 : 1; }

}  // namespace detail

/// The terms  (sign_j, inner_j, x_j), j = i+1, i, ..., 1,  of the tensor
/// sum_j sign_j inner_j (x) x_j over i+1 homogeneous elements (i >= 2):
///   inner_{i+1} = [x_1..x_i]_l
///   inner_j     = [[x_{j+1}..x_{i+1}]_r, [x_1..x_{j-1}]_l]   (j >= 2)
///   inner_1     = [x_2..x_{i+1}]_r
/// with exponents
///   j = i+1:        (|x_1|+..+|x_{i-1}|)|x_{i+1}|
///   j = i:          |x_{i+1}||x_i|
///   j = i-1:        (|x_{i+1}|+|x_i|)|x_{i-1}|
///   j <= i-2:       (|x_1|+..+|x_j|)(|x_{j+1}|+..+|x_{i-1}|)
///                   + (|x_i|+|x_{i+1}|)(|x_{j+1}|+..+|x_{i-2}|)
template <class T, class BracketFn>
std::vector<SignedTerm<T>> phi_terms(std::span<const T> xs, std::span<const Parity> ps, BracketFn&& br) {
  if (xs.size() < 3 || ps.size() != xs.size()) throw PreconditionError("phi_terms: need i+1 >= 3 homogeneous elements");
  const std::size_t i = xs.size() - 1;
  const detail::ParitySums P{ps};
  auto range = [&](std::size_t a, std::size_t b) { return xs.subspan(a - 1, b - a + 1); };

  std::vector<SignedTerm<T>> out;
  out.push_back({detail::sign_of(P.S(1, i - 1) * P.p(i + 1)), left_normed<T>(range(1, i), br), i});
  for (std::size_t j = i; j >= 1; --j) {
    int e;
    if (j == i)
      e = P.p(i + 1) * P.p(i);
    else if (j == i - 1)
      e = (P.p(i + 1) + P.p(i)) * P.p(i - 1);
    else
      e = P.S(1, j) * P.S(j + 1, i - 1) + (P.p(i) + P.p(i + 1)) * P.S(j + 1, i - 2);
    T inner = right_normed<T>(range(j + 1, i + 1), br);
    if (j >= 2) inner = br(inner, left_normed<T>(range(1, j - 1), br));
    out.push_back({detail::sign_of(e), std::move(inner), j - 1});
  }
  return out;
}

/// Left side of the bracket identity on i+1 homogeneous elements (i >= 3):
///   sum_j sign_j [inner_j, x_j]
///   + {(-1)^{(|x_1|+..+|x_{i-2}|)|x_i|} - (-1)^{|x_{i-1}||x_{i+1}|}}
///     (-1)^{(|x_1|+..+|x_{i-2}|)|x_{i+1}|} [[x_1..x_{i-1}]_l, [x_i, x_{i+1}]]
/// which vanishes in every Lie superalgebra.
template <class T, class BracketFn>
T lemma31_sum(std::span<const T> xs, std::span<const Parity> ps, BracketFn&& br) {
  if (xs.size() < 4) throw PreconditionError("lemma31_sum: need i >= 3");
  const std::size_t i = xs.size() - 1;
  const detail::ParitySums P{ps};
  auto terms = phi_terms(xs, ps, br);
  T acc = Scalar(terms[0].sign) * br(terms[0].inner, xs[terms[0].slot]);
  for (std::size_t t = 1; t < terms.size(); ++t) acc = acc + Scalar(terms[t].sign) * br(terms[t].inner, xs[terms[t].slot]);
  const int c = detail::sign_of(P.S(1, i - 2) * P.p(i)) - detail::sign_of(P.p(i - 1) * P.p(i + 1));
  if (c != 0) {
    const int s = c * detail::sign_of(P.S(1, i - 2) * P.p(i + 1));
    T last = br(left_normed<T>(xs.subspan(0, i - 1), br), br(xs[i - 1], xs[i]));
    acc = acc + Scalar(s) * last;
  }
  return acc;
}

/// Evaluates the bracket identity on free generators x_1..x_{i+1} with the
/// given parities and returns the residual (zero when the identity holds).
inline FreeElement verify_lemma31(std::size_t i, std::span<const Parity> parities) {
  if (i < 3) throw RangeError("verify_lemma31: i must be >= 3");
  if (parities.size() != i + 1) throw PreconditionError("verify_lemma31: need i+1 parities");
  std::vector<FreeElement> gens;
  for (std::size_t g = 0; g <= i; ++g) gens.push_back({AssocPoly::letter(g), parities[g]});
  return lemma31_sum<FreeElement>(gens, parities, super_commutator);
}

// ---------------------------------------------------------------------------
// the truncated free algebra

class FreeNilpotentSuperalgebra {
 public:
  const GeneratorSpec& spec() const { return spec_; }
  const LieSuperalgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_.dim(); }

  /// Bracket word of each basis vector, in the algebra's basis order.
  const std::vector<BracketWord>& words() const { return words_; }
  std::size_t degree(std::size_t i) const { return degree_[i]; }
  std::size_t odd_letters(std::size_t i) const { return odd_letters_[i]; }
  const AssocPoly& expansion(std::size_t i) const { return expansion_[i]; }

  /// Basis index of free generator g.
  std::size_t generator_index(std::size_t g) const { return generator_index_[g]; }

  /// (even|odd) dimension of each homogeneous degree 1..k.
  std::vector<SuperDim> degree_dims() const {
    std::vector<SuperDim> d(spec_.class_bound);
    for (std::size_t i = 0; i < dim(); ++i)
      (algebra_.parity(i) == Parity::even ? d[degree_[i] - 1].even : d[degree_[i] - 1].odd) += 1;
    return d;
  }

  /// gamma_d: span of the basis vectors of degree >= d.
  GradedSubspace gamma(std::size_t d) const {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < dim(); ++i)
      if (degree_[i] >= d) vs.push_back(la::unit_vec(dim(), i));
    return GradedSubspace::span(algebra_.super_dim(), vs);
  }

 private:
  friend FreeNilpotentSuperalgebra build_free_nilpotent_unchecked(const GeneratorSpec&);
  GeneratorSpec spec_;
  LieSuperalgebra algebra_;
  std::vector<BracketWord> words_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> odd_letters_;
  std::vector<AssocPoly> expansion_;
  std::vector<std::size_t> generator_index_;
};

inline std::vector<std::string> generator_labels(const GeneratorSpec& spec) {
  std::vector<std::string> out;
  for (std::size_t g = 0; g < spec.even_count; ++g) out.push_back("x" + std::to_string(g + 1));
  for (std::size_t g = 0; g < spec.odd_count; ++g) out.push_back("y" + std::to_string(g + 1));
  return out;
}

/// Also accepts zero generators (yielding the zero algebra).
inline FreeNilpotentSuperalgebra build_free_nilpotent_unchecked(const GeneratorSpec& spec) {
  const std::size_t g = spec.generators();
  const std::size_t k = spec.class_bound;
  const std::vector<Parity> par = spec.parities();

  std::vector<std::size_t> powers(k + 1, 1);
  for (std::size_t d = 1; d <= k; ++d) powers[d] = powers[d - 1] * g;
  auto dense = [&](const AssocPoly& p, std::size_t d) {
    Vec v = la::zero_vec(powers[d]);
    for (const auto& [w, c] : p.terms()) {
      std::size_t idx = 0;
      for (auto letter : w) idx = idx * g + letter;
      v[idx] = c;
    }
    return v;
  };

  struct Local {
    BracketWord word;
    AssocPoly poly;
    std::size_t odd_letters;
    Parity parity;
  };
  std::vector<std::vector<Local>> by_degree(k + 1);
  std::vector<la::EchelonBasis> echelon;
  echelon.emplace_back(1, true);
  std::vector<FreeElement> letters;
  for (std::size_t t = 0; t < g; ++t) letters.push_back({AssocPoly::letter(t), par[t]});

  for (std::size_t d = 1; d <= k; ++d) {
    echelon.emplace_back(powers[d], true);
    if (g == 0) continue;
    std::vector<std::size_t> tuple(d, 0);
    for (;;) {
      std::vector<FreeElement> xs;
      for (auto t : tuple) xs.push_back(letters[t]);
      FreeElement e = left_normed<FreeElement>(xs, super_commutator);
      if (!e.is_zero() && echelon[d].insert(dense(e.poly, d))) {
        std::size_t odd = 0;
        for (auto t : tuple) odd += bit(par[t]);
        by_degree[d].push_back({BracketWord::left_normed(tuple), std::move(e.poly), odd, e.parity});
      }
      std::size_t pos = d;
      while (pos > 0 && ++tuple[pos - 1] == g) tuple[--pos] = 0;
      if (pos == 0) break;
    }
  }

  // global order: even vectors by degree, then odd vectors by degree
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (Parity want : {Parity::even, Parity::odd})
    for (std::size_t d = 1; d <= k; ++d)
      for (std::size_t t = 0; t < by_degree[d].size(); ++t)
        if (by_degree[d][t].parity == want) order.emplace_back(d, t);
  std::vector<std::vector<std::size_t>> global(k + 1);
  for (std::size_t d = 1; d <= k; ++d) global[d].resize(by_degree[d].size());
  for (std::size_t i = 0; i < order.size(); ++i) global[order[i].first][order[i].second] = i;

  FreeNilpotentSuperalgebra f;
  f.spec_ = spec;
  const std::vector<std::string> gen_labels = generator_labels(spec);
  std::vector<std::string> even_labels, odd_labels;
  for (auto [d, t] : order) {
    const Local& l = by_degree[d][t];
    (l.parity == Parity::even ? even_labels : odd_labels).push_back(l.word.to_string(gen_labels));
    f.words_.push_back(l.word);
    f.degree_.push_back(d);
    f.odd_letters_.push_back(l.odd_letters);
    f.expansion_.push_back(l.poly);
  }
  f.generator_index_.assign(g, 0);
  for (std::size_t t = 0; t < by_degree[1].size(); ++t)
    f.generator_index_[by_degree[1][t].word.generator()] = global[1][t];

  LieSuperalgebra::Table table;
  const std::size_t n = order.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const std::size_t d = f.degree_[a] + f.degree_[b];
      if (d > k) continue;
      const Local& la_ = by_degree[order[a].first][order[a].second];
      const Local& lb = by_degree[order[b].first][order[b].second];
      FreeElement prod = super_commutator({la_.poly, la_.parity}, {lb.poly, lb.parity});
      if (prod.is_zero()) continue;
      auto coords = echelon[d].coordinates(dense(prod.poly, d));
      if (!coords) throw AssertionFailure("build_free_nilpotent: bracket outside the span of its degree");
      Combination c;
      for (std::size_t t = 0; t < coords->size(); ++t)
        if (sgn((*coords)[t]) != 0) c.emplace_back(global[d][t], (*coords)[t]);
      table.emplace(LieSuperalgebra::Key{a, b}, std::move(c));
    }
  std::string name = "free(" + std::to_string(spec.even_count) + "|" + std::to_string(spec.odd_count) +
                     ";" + std::to_string(k) + ")";
  f.algebra_ = LieSuperalgebra(std::move(name), std::move(even_labels), std::move(odd_labels), std::move(table));
  return f;
}

/// Basis of each degree d <= k chosen greedily among left-normed words in
/// lexicographic order of their generator tuples; structure constants by
/// solving for bracket expansions in the basis of the target degree.
inline FreeNilpotentSuperalgebra build_free_nilpotent(const GeneratorSpec& spec) {
  spec.validate();
  return build_free_nilpotent_unchecked(spec);
}

// ---------------------------------------------------------------------------
// dimension oracle

/// Per-degree (even|odd) dimensions of the free Lie superalgebra on the spec's
/// generators, obtained from the PBW factorization of the tensor algebra
///   prod_{(a,b)} (1 + x^a y^b)^{dim_{a,b}}      (b odd)
///   prod_{(a,b)} (1 - x^a y^b)^{-dim_{a,b}}     (b even)
///   = 1 / (1 - p x - q y)
/// where a, b count even and odd letters. Pure integer series arithmetic.
inline std::vector<SuperDim> pbw_degree_dims(const GeneratorSpec& spec) {
  const std::size_t k = spec.class_bound;
  const long p = static_cast<long>(spec.even_count), q = static_cast<long>(spec.odd_count);
  // coeff[a][b], a + b <= k
  using Series = std::vector<std::vector<mpz_class>>;
  auto empty = [&] {
    Series s(k + 1);
    for (std::size_t a = 0; a <= k; ++a) s[a].assign(k + 1 - a, 0);
    return s;
  };
  Series tensor = empty();
  for (std::size_t a = 0; a <= k; ++a)
    for (std::size_t b = 0; a + b <= k; ++b) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), a + b, a);
      mpz_class pa, qb;
      mpz_ui_pow_ui(pa.get_mpz_t(), static_cast<unsigned long>(p), a);
      mpz_ui_pow_ui(qb.get_mpz_t(), static_cast<unsigned long>(q), b);
      tensor[a][b] = binom * pa * qb;
    }

  Series prod = empty();
  prod[0][0] = 1;
  std::vector<SuperDim> out(k);
  for (std::size_t deg = 1; deg <= k; ++deg) {
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, mpz_class>> found;
    for (std::size_t a = 0; a <= deg; ++a) {
      const std::size_t b = deg - a;
      mpz_class d = tensor[a][b] - prod[a][b];
      if (d < 0) throw AssertionFailure("pbw_degree_dims: negative dimension");
      (b % 2 ? out[deg - 1].odd : out[deg - 1].even) += d.get_ui();
      found.push_back({{a, b}, d});
    }
    for (const auto& [ab, d] : found) {
      const auto [a, b] = ab;
      for (unsigned long rep = 0; rep < d.get_ui(); ++rep) {
        if (b % 2) {
          // multiply by (1 + x^a y^b), high coefficients first
          for (std::size_t u = k + 1; u-- > 0;)
            for (std::size_t v = k - u + 1; v-- > 0;)
              if (u >= a && v >= b) prod[u][v] += prod[u - a][v - b];
        } else {
          // multiply by 1 / (1 - x^a y^b)
          for (std::size_t u = a; u <= k; ++u)
            for (std::size_t v = b; u + v <= k; ++v) prod[u][v] += prod[u - a][v - b];
        }
      }
    }
  }
  return out;
}

struct HilbertReport {
  std::vector<SuperDim> expected;
  std::vector<SuperDim> actual;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

inline HilbertReport hilbert_check(const FreeNilpotentSuperalgebra& f) {
  HilbertReport r;
  r.expected = pbw_degree_dims(f.spec());
  r.actual = f.degree_dims();
  for (std::size_t d = 0; d < r.expected.size(); ++d)
    if (r.expected[d] != r.actual[d])
      r.mismatches.push_back("degree " + std::to_string(d + 1) + ": expected " + to_string(r.expected[d]) +
                             ", built " + to_string(r.actual[d]));
  return r;
}

// ---------------------------------------------------------------------------
// homomorphisms out of the free algebra

/// Matrix (dim target x dim f) of the homomorphism sending free generator g
/// to images[g]. Checked to be a homomorphism on every basis pair.
inline la::Matrix eval_hom(const FreeNilpotentSuperalgebra& f, const LieSuperalgebra& target,
                           std::span<const Element> images) {
  const GeneratorSpec& spec = f.spec();
  if (images.size() != spec.generators()) throw PreconditionError("eval_hom: one image per generator required");
  for (std::size_t g = 0; g < images.size(); ++g) {
    if (images[g].size() != target.dim()) throw DimensionMismatch("eval_hom: image sized for another algebra");
    if (images[g].is_zero()) continue;
    auto p = target.homogeneous_parity(images[g].coords());
    if (!p || *p != spec.parity(g))
      throw PreconditionError("eval_hom: image of generator " + std::to_string(g + 1) + " has the wrong parity");
  }
  auto br = [&](const Element& a, const Element& b) { return target.bracket(a, b); };
  la::Matrix m(target.dim(), f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) {
    Element v = f.words()[i].evaluate<Element>(images, br);
    for (std::size_t r = 0; r < target.dim(); ++r) m(r, i) = v[r];
  }
  const LieSuperalgebra& src = f.algebra();
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = i; j < f.dim(); ++j) {
      Vec lhs = m.apply(src.bracket(la::unit_vec(f.dim(), i), la::unit_vec(f.dim(), j)));
      Vec rhs = target.bracket(m.col_vec(i), m.col_vec(j));
      if (lhs != rhs) {
        if (f.degree(i) + f.degree(j) > spec.class_bound)
          throw PreconditionError("eval_hom: target has nilpotency class above the truncation bound");
        throw AssertionFailure("eval_hom: extension is not a homomorphism");
      }
    }
  return m;
}

}  // namespace superschur

#endif  // SUPERSCHUR_FREENILP_HPP
