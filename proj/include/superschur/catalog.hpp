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
// Text format for collections of Lie superalgebras:
//
//   algebra <name>
//   even <label> <label> ...
//   odd  <label> <label> ...
//   [<label>,<label>] = <coeff>*<label> (+|-) <coeff>*<label> ...
//   end
//
// Coefficients are integers or p/q and "1*" may be dropped. Text after '#'
// is ignored. Brackets not listed are zero.

#ifndef SUPERSCHUR_CATALOG_HPP
#define SUPERSCHUR_CATALOG_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superschur/error.hpp"
#include "superschur/exactla.hpp"
#include "superschur/freenilp.hpp"
#include "superschur/superalg.hpp"

namespace superschur {

/// Syntax or semantic error in catalog text, with a 1-based position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

struct CatalogFile {
  std::vector<LieSuperalgebra> algebras;

  const LieSuperalgebra* find(std::string_view name) const {
    for (const auto& a : algebras)
      if (a.name() == name) return &a;
    return nullptr;
  }
  friend bool operator==(const CatalogFile&, const CatalogFile&) = default;
};

inline bool is_catalog_label(std::string_view s) {
  if (s.empty()) return false;
  const unsigned char c0 = static_cast<unsigned char>(s[0]);
  if (!std::isalpha(c0) && c0 != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    const unsigned char c = static_cast<unsigned char>(ch);
    return std::isalnum(c) || c == '_' || c == '\'' || c == '.';
  });
}

inline bool is_catalog_name(std::string_view s) {
  return !s.empty() && std::none_of(s.begin(), s.end(), [](char ch) {
    const unsigned char c = static_cast<unsigned char>(ch);
    return std::isspace(c) || c == '#';
  });
}

namespace detail {

class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t column() const { return pos_ + 1; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column(), what); }
  [[noreturn]] void fail_at(std::size_t column, const std::string& what) const { throw ParseError(line_, column, what); }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }
  std::string_view label() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const unsigned char c = static_cast<unsigned char>(text_[pos_]);
      if (!(std::isalnum(c) || c == '_' || c == '\'' || c == '.')) break;
      ++pos_;
    }
    std::string_view s = text_.substr(start, pos_ - start);
    if (!is_catalog_label(s)) fail_at(start + 1, "expected a label");
    return s;
  }
  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

struct PendingRecord {
  std::string name;
  std::size_t line = 0;
  bool have_even = false, have_odd = false, have_brackets = false;
  std::vector<std::string> even, odd;
  std::map<std::string, std::size_t> index;
  LieSuperalgebra::Table table;
  std::map<LieSuperalgebra::Key, std::size_t> entry_line;

  Parity parity(std::size_t i) const { return i < even.size() ? Parity::even : Parity::odd; }
  const std::string& label(std::size_t i) const { return i < even.size() ? even[i] : odd[i - even.size()]; }
};

inline void declare(PendingRecord& rec, LineCursor& cur, Parity p) {
  bool& seen = p == Parity::even ? rec.have_even : rec.have_odd;
  if (seen) cur.fail(std::string("second '") + to_string(p) + "' line in algebra " + rec.name);
  if (rec.have_brackets) cur.fail("label declarations must precede bracket entries");
  if (p == Parity::even && rec.have_odd) cur.fail("'even' line must precede the 'odd' line");
  seen = true;
  auto& labels = p == Parity::even ? rec.even : rec.odd;
  while (!cur.done()) {
    const std::size_t col = cur.column();
    std::string_view l = cur.label();
    std::string s(l);
    if (rec.index.count(s)) cur.fail_at(col, "duplicate label " + s);
    labels.push_back(s);
    rec.index.emplace(s, 0);
  }
}

inline void finalize_indices(PendingRecord& rec) {
  rec.index.clear();
  for (std::size_t i = 0; i < rec.even.size(); ++i) rec.index[rec.even[i]] = i;
  for (std::size_t i = 0; i < rec.odd.size(); ++i) rec.index[rec.odd[i]] = rec.even.size() + i;
}

inline std::size_t lookup(const PendingRecord& rec, LineCursor& cur, std::size_t col, std::string_view l) {
  auto it = rec.index.find(std::string(l));
  if (it == rec.index.end()) cur.fail_at(col, "unknown label " + std::string(l) + " in algebra " + rec.name);
  return it->second;
}

inline la::Scalar coefficient(LineCursor& cur) {
  const std::size_t col = cur.column();
  std::string num(cur.digits());
  if (cur.accept('/')) {
    cur.skip_space();
    std::string den(cur.digits());
    if (den.empty()) cur.fail("expected a denominator");
    const mpz_class d(den);
    if (d == 0) cur.fail_at(col, "zero denominator");
    la::Scalar q{mpz_class(num), d};
    q.canonicalize();
    return q;
  }
  return la::Scalar(mpz_class(num));
}

inline void bracket_entry(PendingRecord& rec, LineCursor& cur, std::size_t line) {
  if (!rec.have_brackets) finalize_indices(rec);
  rec.have_brackets = true;
  const std::size_t entry_col = cur.column();
  cur.expect('[');
  cur.skip_space();
  std::size_t col = cur.column();
  const std::string la_(cur.label());
  const std::size_t i = lookup(rec, cur, col, la_);
  cur.expect(',');
  cur.skip_space();
  col = cur.column();
  const std::string lb(cur.label());
  const std::size_t j = lookup(rec, cur, col, lb);
  cur.expect(']');
  cur.expect('=');
  const std::string entry = "[" + la_ + "," + lb + "]";
  const Parity want = rec.parity(i) + rec.parity(j);

  Combination comb;
  if (cur.peek() == '0') {
    cur.skip_space();
    const std::size_t zcol = cur.column();
    std::string z(cur.digits());
    if (z.find_first_not_of('0') != std::string::npos || !cur.done()) cur.fail_at(zcol, "expected a term");
  } else {
    bool first = true;
    while (!cur.done()) {
      int sign = 1;
      if (cur.accept('+')) {
      } else if (cur.accept('-')) {
        sign = -1;
      } else if (!first) {
        cur.fail("expected '+' or '-'");
      }
      first = false;
      la::Scalar c(1);
      if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        cur.skip_space();
        c = coefficient(cur);
        cur.expect('*');
      }
      cur.skip_space();
      const std::size_t tcol = cur.column();
      const std::string target(cur.label());
      const std::size_t k = lookup(rec, cur, tcol, target);
      if (rec.parity(k) != want)
        cur.fail_at(tcol, "grading error in " + entry + ": target " + target + " is " + to_string(rec.parity(k)) +
                              ", expected " + to_string(want));
      comb.emplace_back(k, sign * c);
    }
    if (first) cur.fail("expected a term");
  }

  LieSuperalgebra::Key key{std::min(i, j), std::max(i, j)};
  if (i > j) {
    const int f = -koszul_sign(rec.parity(i), rec.parity(j));
    for (auto& t : comb) t.second *= f;
  }
  if (auto it = rec.entry_line.find(key); it != rec.entry_line.end())
    cur.fail_at(entry_col, "duplicate bracket entry " + entry + " (already given on line " +
                               std::to_string(it->second) + ")");
  rec.entry_line.emplace(key, line);
  rec.table.emplace(key, std::move(comb));
}

inline LieSuperalgebra close_record(PendingRecord& rec) {
  finalize_indices(rec);
  LieSuperalgebra a(rec.name, rec.even, rec.odd, std::move(rec.table));
  ValidationReport v = validate(a);
  if (!v.ok()) {
    std::string what = "algebra " + rec.name + " is not a Lie superalgebra: " + v.violations.front().message;
    if (v.violations.size() > 1) what += " (and " + std::to_string(v.violations.size() - 1) + " more)";
    throw ParseError(rec.line, 1, what);
  }
  return a;
}

}  // namespace detail

/// Parses catalog text; every record must validate.
inline CatalogFile parse_catalog(std::string_view text) {
  CatalogFile out;
  std::set<std::string> names;
  std::optional<detail::PendingRecord> rec;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    start = stop + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);

    detail::LineCursor cur(line, line_no);
    if (cur.done()) {
      if (stop == text.size()) break;
      continue;
    }
    if (cur.peek() == '[') {
      if (!rec) cur.fail("bracket entry outside an algebra record");
      detail::bracket_entry(*rec, cur, line_no);
      continue;
    }
    const std::size_t kw_col = cur.column();
    const std::string_view kw = cur.word();
    if (kw == "algebra") {
      if (rec) cur.fail_at(kw_col, "missing 'end' for algebra " + rec->name);
      const std::size_t ncol = cur.column() + 1;
      std::string name(cur.word());
      if (name.empty()) cur.fail("expected an algebra name");
      if (!is_catalog_name(name)) cur.fail_at(ncol, "invalid algebra name");
      if (!cur.done()) cur.fail("unexpected text after the algebra name");
      if (names.count(name)) cur.fail_at(ncol, "duplicate algebra name " + name);
      names.insert(name);
      rec.emplace();
      rec->name = std::move(name);
      rec->line = line_no;
    } else if (kw == "even" || kw == "odd") {
      if (!rec) cur.fail_at(kw_col, "declaration outside an algebra record");
      detail::declare(*rec, cur, kw == "even" ? Parity::even : Parity::odd);
    } else if (kw == "end") {
      if (!rec) cur.fail_at(kw_col, "'end' outside an algebra record");
      if (!cur.done()) cur.fail("unexpected text after 'end'");
      out.algebras.push_back(detail::close_record(*rec));
      rec.reset();
    } else {
      cur.fail_at(kw_col, "expected 'algebra', 'even', 'odd', '[' or 'end'");
    }
    if (stop == text.size()) break;
  }
  if (rec) throw ParseError(line_no, 1, "missing 'end' for algebra " + rec->name);
  return out;
}

inline std::string format_scalar(const la::Scalar& q) { return la::to_string(q); }

/// Renders one record; labels and name must be representable in the format.
inline std::string serialize(const LieSuperalgebra& a) {
  if (!is_catalog_name(a.name())) throw PreconditionError("serialize: algebra name '" + a.name() + "' is not writable");
  for (const auto& l : a.labels())
    if (!is_catalog_label(l)) throw PreconditionError("serialize: label '" + l + "' is not writable");
  std::ostringstream os;
  os << "algebra " << a.name() << "\n";
  os << "even";
  for (std::size_t i = 0; i < a.even_dim(); ++i) os << ' ' << a.label(i);
  os << "\nodd";
  for (std::size_t i = a.even_dim(); i < a.dim(); ++i) os << ' ' << a.label(i);
  os << "\n";
  for (const auto& [key, comb] : a.table()) {
    os << '[' << a.label(key.first) << ',' << a.label(key.second) << "] =";
    bool first = true;
    for (const auto& [k, c] : comb) {
      const bool neg = sgn(c) < 0;
      if (first)
        os << (neg ? " -" : " ");
      else
        os << (neg ? " - " : " + ");
      const la::Scalar mag = neg ? la::Scalar(-c) : c;
      if (mag != 1) os << format_scalar(mag) << '*';
      os << a.label(k);
      first = false;
    }
    os << "\n";
  }
  os << "end\n";
  return os.str();
}

inline std::string serialize(const CatalogFile& cat) {
  std::string out;
  for (std::size_t t = 0; t < cat.algebras.size(); ++t) {
    if (t) out += "\n";
    out += serialize(cat.algebras[t]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// builders

/// Same table with new labels (even labels first, as in the basis).
inline LieSuperalgebra with_labels(const LieSuperalgebra& a, std::string name, const std::vector<std::string>& labels) {
  if (labels.size() != a.dim()) throw DimensionMismatch("with_labels: label count differs from dim");
  std::vector<std::string> even(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(a.even_dim()));
  std::vector<std::string> odd(labels.begin() + static_cast<std::ptrdiff_t>(a.even_dim()), labels.end());
  return LieSuperalgebra(std::move(name), std::move(even), std::move(odd), a.table());
}

/// Bracket-word label with brackets and commas removed: [[x1,x2],y1] -> x1x2y1.
inline std::string compact_label(std::string_view word) {
  std::string out;
  for (char ch : word)
    if (ch != '[' && ch != ']' && ch != ',') out += ch;
  return out;
}

inline LieSuperalgebra with_compact_labels(const LieSuperalgebra& a, std::string name) {
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(compact_label(l));
  return with_labels(a, std::move(name), labels);
}

inline LieSuperalgebra abelian(std::size_t m, std::size_t n) {
  std::vector<std::string> even, odd;
  for (std::size_t i = 0; i < m; ++i) even.push_back("e" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) odd.push_back("f" + std::to_string(i + 1));
  return LieSuperalgebra("A(" + std::to_string(m) + "|" + std::to_string(n) + ")", even, odd);
}

inline LieSuperalgebra heisenberg3() {
  return LieSuperalgebra("heis3", {"e1", "e2", "e3"}, {}, {{{0, 1}, {{2, la::Scalar(1)}}}});
}

inline LieSuperalgebra filiform4() {
  return LieSuperalgebra("filiform4", {"e1", "e2", "e3", "e4"}, {},
                         {{{0, 1}, {{2, la::Scalar(1)}}}, {{0, 2}, {{3, la::Scalar(1)}}}});
}

/// sh(0|n): even z, odd f_1..f_n, [f_i,f_j] = delta_ij z.
inline LieSuperalgebra special_heisenberg(std::size_t n) {
  std::vector<std::string> odd;
  LieSuperalgebra::Table t;
  for (std::size_t i = 0; i < n; ++i) {
    odd.push_back("f" + std::to_string(i + 1));
    t[{i + 1, i + 1}] = {{0, la::Scalar(1)}};
  }
  return LieSuperalgebra("sh(0|" + std::to_string(n) + ")", {"z"}, odd, t);
}

/// Quotient of free(p|q;k) by the ideal generated by the named basis words.
inline LieSuperalgebra free_quotient(const GeneratorSpec& spec, const std::vector<std::string>& relators,
                                     std::string name) {
  FreeNilpotentSuperalgebra f = build_free_nilpotent(spec);
  const LieSuperalgebra& a = f.algebra();
  std::vector<Vec> gens;
  for (const auto& r : relators) {
    auto idx = a.index_of(r);
    if (!idx) throw PreconditionError("free_quotient: " + r + " is not a basis word of " + a.name());
    gens.push_back(la::unit_vec(a.dim(), *idx));
  }
  QuotientResult q = quotient(a, ideal_generated(a, gens), name);
  return with_compact_labels(q.algebra, std::move(name));
}

/// The catalog shipped with the tools.
inline CatalogFile standard_catalog() {
  CatalogFile c;
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t n = 0; n <= 3; ++n) c.algebras.push_back(abelian(m, n));
  c.algebras.push_back(heisenberg3());
  c.algebras.push_back(filiform4());
  c.algebras.push_back(special_heisenberg(1));
  c.algebras.push_back(special_heisenberg(2));
  c.algebras.push_back(with_labels(direct_sum(heisenberg3(), abelian(1, 0)), "heis3+A(1|0)", {"e1", "e2", "e3", "e4"}));
  const GeneratorSpec s2{2, 1, 2}, s3{2, 1, 3};
  c.algebras.push_back(with_compact_labels(build_free_nilpotent(s2).algebra(), "free(2|1;2)"));
  c.algebras.push_back(with_compact_labels(build_free_nilpotent(s3).algebra(), "free(2|1;3)"));
  c.algebras.push_back(free_quotient(s3, {"[y1,y1]"}, "free(2|1;3)/<y1y1>"));
  c.algebras.push_back(free_quotient(s3, {"[x1,x2]"}, "free(2|1;3)/<x1x2>"));
  return c;
}

}  // namespace superschur

#endif  // SUPERSCHUR_CATALOG_HPP
