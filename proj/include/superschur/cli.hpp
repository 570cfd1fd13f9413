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
// Command dispatch and report rendering for the superschur tool.
//
// Exit codes: 0 success, 1 usage or parse error, 2 a checked identity or
// bound failed.

#ifndef SUPERSCHUR_CLI_HPP
#define SUPERSCHUR_CLI_HPP

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "superschur/bounds.hpp"
#include "superschur/catalog.hpp"
#include "superschur/error.hpp"
#include "superschur/freenilp.hpp"
#include "superschur/multiplier.hpp"
#include "superschur/superalg.hpp"

namespace superschur::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

struct Report {
  std::string command;
  Json options = Json::object();
  std::vector<Json> records;
  bool failed = false;
};

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_failure = 2;

// ---------------------------------------------------------------------------
// rendering

namespace detail {

inline Json scalar_json(const la::Scalar& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(la::to_string(q));
}

inline std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (std::size_t t = 0; t < v.size(); ++t) out += (t ? " " : "") + cell(v[t]);
    return out;
  }
  return v.dump();
}

inline std::string csv_cell(const Json& v) {
  std::string s = cell(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

inline void render_text(const Report& r, std::ostream& out) {
  for (const auto& rec : r.records) {
    bool first = true;
    for (const auto& [k, v] : rec.items()) {
      if (first)
        out << k << ' ' << cell(v) << "\n";
      else
        out << "  " << k << ": " << cell(v) << "\n";
      first = false;
    }
  }
  out << "status: " << (r.failed ? "failed" : "ok") << "\n";
}

inline void render_json(const Report& r, std::ostream& out) {
  Json doc;
  doc["command"] = r.command;
  doc["options"] = r.options;
  doc["results"] = Json::array();
  for (const auto& rec : r.records) doc["results"].push_back(rec);
  doc["status"] = r.failed ? "failed" : "ok";
  out << doc.dump(2) << "\n";
}

inline void render_csv(const Report& r, std::ostream& out) {
  std::vector<std::string> cols;
  for (const auto& rec : r.records)
    for (const auto& [k, v] : rec.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  for (std::size_t t = 0; t < cols.size(); ++t) out << (t ? "," : "") << cols[t];
  out << "\n";
  for (const auto& rec : r.records) {
    for (std::size_t t = 0; t < cols.size(); ++t) {
      if (t) out << ',';
      if (rec.contains(cols[t])) out << csv_cell(rec[cols[t]]);
    }
    out << "\n";
  }
}

}  // namespace detail

inline void render(const Report& r, Format f, std::ostream& out) {
  switch (f) {
    case Format::text: detail::render_text(r, out); break;
    case Format::json: detail::render_json(r, out); break;
    case Format::csv: detail::render_csv(r, out); break;
  }
}

// ---------------------------------------------------------------------------
// per-command record builders

inline Json dims_json(const SuperDim& d) { return to_string(d); }

inline Json series_json(const CentralSeries& s) {
  Json a = Json::array();
  for (const auto& t : s.terms) a.push_back(dims_json(t.dims()));
  return a;
}

inline Json check_record(const LieSuperalgebra& a) {
  ValidationReport v = validate(a);
  Json r;
  r["algebra"] = a.name();
  r["dims"] = dims_json(a.super_dim());
  r["entries"] = a.table().size();
  r["valid"] = v.ok();
  r["violations"] = v.violations.size();
  return r;
}

inline Json invariants_record(const LieSuperalgebra& a) {
  CentralSeries s = lower_central_series(a);
  Json r;
  r["algebra"] = a.name();
  r["dims"] = dims_json(a.super_dim());
  r["nilpotent"] = s.nilpotent;
  r["class"] = s.nilpotent ? Json(s.nilpotency_class) : Json();
  r["series"] = series_json(s);
  r["center"] = dims_json(center(a).dims());
  if (s.nilpotent) {
    r["generators"] = dims_json(minimal_generator_dims(a));
    std::vector<Vec> lifts;
    for (auto j : generator_lifts(a, s)) lifts.push_back(la::unit_vec(a.dim(), j));
    r["lifts_generate"] = generates(a, lifts);
  } else {
    r["generators"] = Json();
    r["lifts_generate"] = Json();
  }
  return r;
}

inline Json skipped(const LieSuperalgebra& a, const std::string& reason) {
  Json r;
  r["algebra"] = a.name();
  r["dims"] = dims_json(a.super_dim());
  r["status"] = "skipped";
  r["reason"] = reason;
  return r;
}

inline bool is_nilpotent(const LieSuperalgebra& a) { return lower_central_series(a).nilpotent; }

inline Json multiplier_record(const LieSuperalgebra& a, const std::string& method, bool& failed, std::ostream& err) {
  if (!is_nilpotent(a)) return skipped(a, "not nilpotent");
  Json r;
  r["algebra"] = a.name();
  r["dims"] = dims_json(a.super_dim());
  std::optional<SuperDim> h, c;
  if (method != "cohomology") h = schur_multiplier_hopf(a).dims;
  if (method != "hopf") c = schur_multiplier_cohomology(a).dims;
  if (h) r["hopf"] = dims_json(*h);
  if (c) r["cohomology"] = dims_json(*c);
  if (h && c) {
    r["agree"] = *h == *c;
    if (*h != *c) {
      failed = true;
      err << MethodDisagreement(a.name(), *h, *c).what() << "\n";
    }
  }
  r["status"] = (h && c && *h != *c) ? "disagreement" : "ok";
  return r;
}

inline Json bounds_record(const LieSuperalgebra& a, bool& failed, std::ostream& err) {
  if (!is_nilpotent(a)) return skipped(a, "not nilpotent");
  bounds::ExtractedInput e = bounds::extract_input(a);
  if (!e.in_hypotheses) return skipped(a, e.reason);
  Json r;
  r["algebra"] = a.name();
  r["dims"] = dims_json(a.super_dim());
  r["m"] = e.input.m;
  r["n"] = e.input.n;
  r["r"] = e.input.r;
  r["s"] = e.input.s;
  r["c"] = e.input.c;
  try {
    bounds::BoundReport b = bounds::check_bound(a);
    r["multiplier"] = dims_json(b.multiplier);
    r["dim_multiplier"] = b.actual();
    r["main"] = b.main;
    r["nayak"] = detail::scalar_json(b.nayak);
    r["rai"] = b.rai ? Json(*b.rai) : Json();
    r["tight"] = b.main_tight();
    r["slack"] = b.main_slack();
    r["status"] = "ok";
  } catch (const AssertionFailure& ex) {
    failed = true;
    err << ex.what() << "\n";
    r["status"] = "violated";
    r["reason"] = ex.what();
  }
  return r;
}

inline const std::vector<std::string>& verify_checks() {
  static const std::vector<std::string> all = {"eq21", "eq24", "eq31", "phi"};
  return all;
}

inline void verify_records(const LieSuperalgebra& a, const std::vector<std::string>& checks, std::vector<Json>& out,
                           bool& failed, std::ostream& err) {
  CentralSeries s = lower_central_series(a);
  if (!s.nilpotent) {
    out.push_back(skipped(a, "not nilpotent"));
    return;
  }
  if (s.nilpotency_class < 2) {
    out.push_back(skipped(a, "class < 2"));
    return;
  }
  FreePresentation p = present(a);
  const std::vector<std::size_t> lift_index = generator_lifts(a, s);
  auto head = [&](const std::string& check) {
    Json r;
    r["algebra"] = a.name();
    r["check"] = check;
    return r;
  };
  auto note = [&](Json& r, bool holds) {
    r["holds"] = holds;
    if (!holds) {
      failed = true;
      err << a.name() << ": " << r["check"].get<std::string>() << " failed\n";
    }
    out.push_back(std::move(r));
  };
  for (const auto& check : checks) {
    if (check == "eq21") {
      Eq21Report e = verify_eq21(p);
      Json r = head(check);
      r["gamma_c"] = e.gamma_c_dim;
      r["multiplier"] = e.multiplier;
      r["quotient_multiplier"] = e.quotient_multiplier;
      r["bracket_quotient"] = e.bracket_quotient;
      r["lhs"] = e.lhs();
      r["rhs"] = e.rhs();
      note(r, e.holds());
    } else if (check == "eq24") {
      Eq24Report e = verify_eq24(p);
      Json r = head(check);
      r["multiplier"] = e.multiplier;
      r["abelian_multiplier"] = e.abelian_multiplier;
      r["gamma2"] = e.gamma2_dim;
      r["generators"] = e.generators;
      r["kernels"] = e.kernel_dims;
      r["rhs"] = e.rhs();
      note(r, e.holds());
    } else if (check == "eq31") {
      for (const Eq31Entry& e : verify_eq31(p)) {
        Json r = head(check);
        r["i"] = e.i;
        r["kernel"] = e.kernel_dim;
        r["lower_bound"] = e.lower_bound;
        note(r, e.holds());
      }
    } else if (check == "phi") {
      for (std::size_t i = 2; i <= s.nilpotency_class; ++i) {
        ProofWitnessSet w = proof_witnesses(p, i);
        Json r = head(check);
        r["i"] = i;
        Json z = Json::array();
        for (auto t : w.z) z.push_back(a.label(lift_index[t]));
        r["z"] = z;
        r["witnesses"] = w.witnesses.size();
        r["required"] = w.required;
        r["rank"] = w.rank;
        r["in_kernel"] = w.all_in_kernel;
        r["nonzero"] = w.all_nonzero;
        r["independent"] = w.independent();
        r["kernel"] = lambda_kernel_dim(p, i);
        note(r, w.holds());
      }
    }
  }
}

inline std::vector<Json> identity_records(std::size_t arity_max, bool& failed) {
  std::vector<Json> out;
  for (std::size_t i = 3; i <= arity_max; ++i) {
    const std::size_t cases = std::size_t{1} << (i + 1);
    std::size_t zero = 0;
    for (std::size_t mask = 0; mask < cases; ++mask) {
      std::vector<Parity> ps;
      for (std::size_t k = 0; k <= i; ++k) ps.push_back((mask >> k) & 1 ? Parity::odd : Parity::even);
      if (verify_lemma31(i, ps).is_zero()) ++zero;
    }
    Json r;
    r["arity"] = i;
    r["cases"] = cases;
    r["zero_residuals"] = zero;
    r["holds"] = zero == cases;
    if (zero != cases) failed = true;
    out.push_back(std::move(r));
  }
  return out;
}

inline Json free_record(const GeneratorSpec& spec, bool hilbert, bool& failed) {
  FreeNilpotentSuperalgebra f = build_free_nilpotent(spec);
  Json r;
  r["algebra"] = f.algebra().name();
  r["dims"] = dims_json(f.algebra().super_dim());
  Json deg = Json::array();
  for (const auto& d : f.degree_dims()) deg.push_back(dims_json(d));
  r["degrees"] = deg;
  const bool valid = validate(f.algebra()).ok();
  r["valid"] = valid;
  if (!valid) failed = true;
  if (hilbert) {
    HilbertReport h = hilbert_check(f);
    Json exp = Json::array();
    for (const auto& d : h.expected) exp.push_back(dims_json(d));
    r["expected"] = exp;
    r["hilbert"] = h.ok();
    if (!h.ok()) failed = true;
  }
  return r;
}

// ---------------------------------------------------------------------------
// dispatch

namespace detail {

class UsageError : public Error {
 public:
  using Error::Error;
};

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw UsageError("unknown format '" + s + "' (expected text, json or csv)");
}

inline CatalogFile load_catalog(const std::string& path, std::istream& in) {
  if (path.empty()) return standard_catalog();
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  try {
    return parse_catalog(text);
  } catch (const ParseError& e) {
    throw UsageError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

inline std::vector<const LieSuperalgebra*> select(const CatalogFile& cat, const std::vector<std::string>& names) {
  for (const auto& n : names)
    if (!cat.find(n)) throw UsageError("unknown algebra '" + n + "'");
  std::vector<const LieSuperalgebra*> out;
  for (const auto& a : cat.algebras)
    if (names.empty() || std::find(names.begin(), names.end(), a.name()) != names.end()) out.push_back(&a);
  return out;
}

}  // namespace detail

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Schur multipliers and bounds for nilpotent Lie superalgebras", "superschur"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string format_name;
  std::vector<std::string> names;
  std::string method = "both";
  std::vector<std::string> checks;
  std::size_t arity_max = 5;
  std::size_t even = 0, odd = 0, klass = 0;
  bool hilbert = false;

  app.add_option("--format", format_name, "text, json or csv (default from SUPERSCHUR_FORMAT, else text)");
  app.add_option("--algebra", names, "restrict to the named algebras");

  std::map<std::string, std::string> paths;
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("catalog", paths[sub->get_name()], "catalog file, or - for standard input (default: built-in)");
    return sub;
  };
  with_input(app.add_subcommand("check", "validate every algebra"));
  with_input(app.add_subcommand("invariants", "central series, center, class and generator dims"));
  auto* mult = with_input(app.add_subcommand("multiplier", "dim M(L) by the chosen method"));
  mult->add_option("--method", method, "hopf, cohomology or both")
      ->check(CLI::IsMember({"hopf", "cohomology", "both"}));
  with_input(app.add_subcommand("bounds", "compare dim M(L) with the closed-form bounds"));
  auto* ver = with_input(app.add_subcommand("verify", "dimension identities and kernel witnesses"));
  ver->add_option("--check", checks, "eq21, eq24, eq31, phi (default: all)")
      ->check(CLI::IsMember(verify_checks()))
      ->delimiter(',');
  auto* ident = app.add_subcommand("identity", "bracket identity over all parity patterns");
  ident->add_option("--arity-max", arity_max, "largest i (at least 3)")->check(CLI::Range(3, 8));
  auto* fr = app.add_subcommand("free", "truncated free nilpotent superalgebra");
  fr->add_option("--even", even, "even generators")->required();
  fr->add_option("--odd", odd, "odd generators")->required();
  fr->add_option("--class", klass, "class bound")->required()->check(CLI::PositiveNumber);
  fr->add_flag("--hilbert", hilbert, "compare degree dims with the product formula");
  with_input(app.add_subcommand("catalog", "print the catalog in canonical form"));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  CLI::App* sub = app.get_subcommands().front();
  Report report;
  report.command = sub->get_name();
  try {
    if (format_name.empty()) {
      const char* env = std::getenv("SUPERSCHUR_FORMAT");
      format_name = env && *env ? env : "text";
    }
    const Format format = detail::parse_format(format_name);
    report.options["format"] = format_name;
    if (!names.empty()) report.options["algebra"] = names;

    const std::string& cmd = report.command;
    if (cmd == "identity") {
      report.options["arity_max"] = arity_max;
      report.records = identity_records(arity_max, report.failed);
    } else if (cmd == "free") {
      const GeneratorSpec spec{even, odd, klass};
      try {
        spec.validate();
      } catch (const PreconditionError& e) {
        throw detail::UsageError(e.what());
      }
      report.options["even"] = even;
      report.options["odd"] = odd;
      report.options["class"] = klass;
      report.options["hilbert"] = hilbert;
      report.records.push_back(free_record(spec, hilbert, report.failed));
    } else {
      const std::string& path = paths[cmd];
      report.options["catalog"] = path.empty() ? "built-in" : path;
      CatalogFile cat = detail::load_catalog(path, in);
      std::vector<const LieSuperalgebra*> sel = detail::select(cat, names);
      if (cmd == "catalog") {
        if (format == Format::text) {
          CatalogFile picked;
          for (auto* a : sel) picked.algebras.push_back(*a);
          out << serialize(picked);
          return exit_ok;
        }
        for (auto* a : sel) {
          Json r;
          r["algebra"] = a->name();
          r["dims"] = dims_json(a->super_dim());
          r["entries"] = a->table().size();
          report.records.push_back(std::move(r));
        }
      } else if (cmd == "check") {
        for (auto* a : sel) {
          report.records.push_back(check_record(*a));
          if (!report.records.back()["valid"].get<bool>()) report.failed = true;
        }
      } else if (cmd == "invariants") {
        for (auto* a : sel) report.records.push_back(invariants_record(*a));
      } else if (cmd == "multiplier") {
        report.options["method"] = method;
        for (auto* a : sel) report.records.push_back(multiplier_record(*a, method, report.failed, err));
      } else if (cmd == "bounds") {
        for (auto* a : sel) report.records.push_back(bounds_record(*a, report.failed, err));
      } else if (cmd == "verify") {
        if (checks.empty()) checks = verify_checks();
        report.options["check"] = checks;
        for (auto* a : sel) verify_records(*a, checks, report.records, report.failed, err);
      }
    }
    render(report, format, out);
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "failure: " << e.what() << "\n";
    return exit_failure;
  }
  return report.failed ? exit_failure : exit_ok;
}

}  // namespace superschur::cli

#endif  // SUPERSCHUR_CLI_HPP
