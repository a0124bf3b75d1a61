/*
 * Copyright (c) The ringlee authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Command layer behind tools/ringlee: configuration, the four commands, and
// json / csv / human rendering. Kept in a header so tests drive it in-process.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ringlee/charsums.hpp"
#include "ringlee/codes.hpp"
#include "ringlee/error.hpp"
#include "ringlee/sss.hpp"

namespace ringlee::cli {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, human };
enum class Mode { closed, brute, both };

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_budget = 3 };

struct RunConfig {
  std::uint32_t q = 3;
  unsigned m = 3;
  std::uint64_t budget_ops = 1'000'000'000;
  unsigned threads = 0;
  Format format = Format::json;
  std::uint64_t seed = 1;
  Mode mode = Mode::both;
  FormulaVariant variant = FormulaVariant::corrected;
  bool timing = false;
  std::string out;

  EnumOptions enum_options() const { return {threads, Budget{budget_ops}}; }
  Budget budget() const { return Budget{budget_ops}; }
};

inline std::string to_string(Mode m) {
  switch (m) {
    case Mode::closed: return "closed";
    case Mode::brute: return "brute";
    case Mode::both: return "both";
  }
  return "?";
}
inline std::string to_string(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::human: return "human";
  }
  return "?";
}
inline std::string to_string(FormulaVariant v) { return v == FormulaVariant::corrected ? "corrected" : "as_printed"; }

/// Throws Error for parameters no command accepts.
inline void validate(const RunConfig& cfg) {
  if (cfg.q == 2) throw Error(Errc::even_characteristic, "q must be odd");
  if (!is_prime(cfg.q)) throw Error(Errc::non_prime, std::to_string(cfg.q) + " is not prime");
  if (cfg.m == 0) throw Error(Errc::degree_zero, "m must be at least 1");
  if (cfg.budget_ops < 1'000'000) throw Error(Errc::invalid_argument, "budget must be at least 10^6");
}

struct Report {
  std::string command;
  Json doc;
  int exit_code = exit_pass;
  // Flat rows for csv/human, header first.
  std::vector<std::vector<std::string>> rows;
};

namespace detail {

inline Json params_json(const RunConfig& cfg) {
  Json p;
  p["q"] = cfg.q;
  p["m"] = cfg.m;
  p["mode"] = to_string(cfg.mode);
  p["budget"] = cfg.budget_ops;
  p["threads"] = cfg.threads;
  p["seed"] = cfg.seed;
  p["variant"] = to_string(cfg.variant);
  return p;
}

inline Report start(const RunConfig& cfg, std::string command) {
  Report r;
  r.command = command;
  r.doc["params"] = params_json(cfg);
  r.doc["command"] = std::move(command);
  r.doc["results"] = Json::object();
  r.doc["verdicts"] = Json::object();
  r.doc["timing"] = Json::object();
  return r;
}

inline Json spectrum_json(const LeeSpectrum& s) {
  Json a = Json::array();
  for (const auto& [w, f] : s.entries) a.push_back({{"weight", w}, {"multiplicity", f}});
  return a;
}

inline Json cwe_json(const CweSpectrum& s) {
  Json a = Json::array();
  for (const auto& [c, f] : s.entries) a.push_back({{"composition", c}, {"multiplicity", f}});
  return a;
}

inline std::string join(const Composition& c, char sep) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(c[i]);
  }
  return s;
}

inline void spectrum_rows(Report& r, const std::string& source, const LeeSpectrum& s) {
  for (const auto& [w, f] : s.entries) r.rows.push_back({source, std::to_string(w), std::to_string(f)});
}

inline void cwe_rows(Report& r, const std::string& source, const CweSpectrum& s) {
  for (const auto& [c, f] : s.entries) r.rows.push_back({source, join(c, ';'), std::to_string(f)});
}

inline std::uint64_t distinct_nonzero_weights(const LeeSpectrum& s) {
  std::uint64_t k = 0;
  for (const auto& [w, f] : s.entries) k += (w != 0);
  return k;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline void finish_timing(Report& r, const RunConfig& cfg, const Stopwatch& sw, std::uint64_t steps) {
  r.doc["timing"]["steps"] = steps;
  if (cfg.timing) r.doc["timing"]["seconds"] = sw.seconds();
}

inline std::uint64_t enumeration_steps(std::uint32_t q, unsigned m, std::uint64_t n) {
  return sat_mul(sat_pow(q, 2 * m), n);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// verify-lemmas

namespace detail {

struct Suite {
  std::string name;
  std::string status = "PASS";
  std::uint64_t cases = 0;
  Json counterexample;
  std::string note;

  void record(bool ok, const std::function<Json()>& describe) {
    ++cases;
    if (!ok && status == "PASS") {
      status = "FAIL";
      counterexample = describe();
    }
  }
};

inline Json suite_json(const Suite& s) {
  Json j;
  j["status"] = s.status;
  j["cases"] = s.cases;
  if (!s.counterexample.is_null()) j["counterexample"] = s.counterexample;
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

// Runs body; a blown budget turns the suite into SKIPPED, never PASS.
inline Suite run_suite(const std::string& name, const std::function<void(Suite&)>& body) {
  Suite s;
  s.name = name;
  try {
    body(s);
  } catch (const Error& e) {
    if (e.code() != Errc::budget_exceeded) throw;
    s.status = "SKIPPED";
    s.note = e.what();
  }
  return s;
}

inline bool close_rel(std::complex<double> a, std::complex<double> b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(b), 1.0);
}

// (alpha, beta, lambda) tuples: every one when the field is tiny, seeded samples otherwise.
struct Tuple {
  std::uint32_t alpha, beta, lambda;
};

inline std::vector<Tuple> lemma_tuples(const FieldCtx& f, std::uint64_t seed, bool need_alpha, bool need_beta,
                                       std::size_t samples = 100) {
  const std::uint32_t q = f.characteristic(), n = f.size();
  std::vector<Tuple> out;
  if (n <= 27) {
    for (std::uint32_t a = need_alpha ? 1 : 0; a < n; ++a)
      for (std::uint32_t b = need_beta ? 1 : 0; b < n; ++b)
        for (std::uint32_t l = 1; l < q; ++l) out.push_back({a, b, l});
    return out;
  }
  std::mt19937_64 rng(seed);
  const auto draw = [&](bool nonzero) {
    for (;;) {
      const auto v = static_cast<std::uint32_t>(rng() % n);
      if (!nonzero || v != 0) return v;
    }
  };
  for (std::size_t k = 0; k < samples; ++k) {
    const std::uint32_t a = draw(need_alpha), b = draw(need_beta);
    out.push_back({a, b, static_cast<std::uint32_t>(1 + rng() % (q - 1))});
  }
  return out;
}

}  // namespace detail

inline Report cmd_verify_lemmas(const RunConfig& cfg) {
  validate(cfg);
  detail::Stopwatch sw;
  Report r = detail::start(cfg, "verify-lemmas");
  const Field field = make_field(cfg.q, cfg.m);
  const FieldCtx& f = *field;
  const Budget budget = cfg.budget();
  const std::uint32_t q = cfg.q;
  std::vector<detail::Suite> suites;

  suites.push_back(detail::run_suite("gauss_sum", [&](detail::Suite& s) {
    for (SumLevel level : {SumLevel::extension, SumLevel::base}) {
      const GaussSum closed = gauss_sum(f, level, EvalMode::closed, budget);
      const GaussSum oracle = gauss_sum(f, level, EvalMode::oracle, budget);
      const double qe = std::pow(static_cast<double>(q), level == SumLevel::extension ? cfg.m : 1);
      const bool ok = detail::close_rel(oracle.value, closed.value, 1e-6) &&
                      std::abs(std::norm(closed.value) - qe) <= 1e-9 * qe &&
                      std::abs(std::norm(oracle.value) - qe) <= 1e-9 * qe;
      s.record(ok, [&] {
        return Json{{"level", level == SumLevel::extension ? "extension" : "base"},
                    {"closed", {closed.value.real(), closed.value.imag()}},
                    {"oracle", {oracle.value.real(), oracle.value.imag()}}};
      });
    }
  }));

  suites.push_back(detail::run_suite("quadratic_sum", [&](detail::Suite& s) {
    std::mt19937_64 rng(cfg.seed);
    for (int k = 0; k < 50; ++k) {
      const FFElem b2 = f.element(1 + rng() % (f.size() - 1));
      const FFElem b1 = f.element(rng() % f.size());
      const FFElem b0 = f.element(rng() % f.size());
      const auto closed = quadratic_sum(f, b2, b1, b0, EvalMode::closed, budget);
      const auto oracle = quadratic_sum(f, b2, b1, b0, EvalMode::oracle, budget);
      s.record(detail::close_rel(oracle, closed, 1e-6),
               [&] { return Json{{"b2", b2.index}, {"b1", b1.index}, {"b0", b0.index}}; });
    }
  }));

  suites.push_back(detail::run_suite("square_trace_count", [&](detail::Suite& s) {
    for (std::uint32_t v = 0; v < q; ++v) {
      const auto c = count_Ns(f, v, EvalMode::closed, budget);
      const auto o = count_Ns(f, v, EvalMode::oracle, budget);
      s.record(c.value == o.value,
               [&] { return Json{{"s", v}, {"branch", c.branch}, {"closed", c.value}, {"oracle", o.value}}; });
    }
  }));

  suites.push_back(detail::run_suite("square_trace_character_sum", [&](detail::Suite& s) {
    for (std::uint32_t v = 0; v < q; ++v) {
      const auto c = lemma25_sum(f, v, EvalMode::closed, budget);
      const auto o = lemma25_sum(f, v, EvalMode::oracle, budget);
      s.record(c.value == o.value,
               [&] { return Json{{"s", v}, {"branch", c.branch}, {"closed", c.value}, {"oracle", o.value}}; });
    }
  }));

  suites.push_back(detail::run_suite("pair_count", [&](detail::Suite& s) {
    const auto table = count_Nst_table_oracle(f, budget);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto c = count_Nst(f, a, b, EvalMode::closed, budget);
        s.record(c.value == table[a * q + b], [&] {
          return Json{{"s", a}, {"t", b}, {"branch", c.branch}, {"closed", c.value}, {"oracle", table[a * q + b]}};
        });
      }
    }
  }));

  for (ExpSumKind kind : {ExpSumKind::N1, ExpSumKind::N2, ExpSumKind::N3}) {
    const std::string name = "exp_sum_" + std::string(to_string(kind));
    suites.push_back(detail::run_suite(name, [&](detail::Suite& s) {
      const bool need_alpha = kind == ExpSumKind::N3;
      for (const auto& t : detail::lemma_tuples(f, cfg.seed, need_alpha, true)) {
        const std::optional<FFElem> alpha =
            need_alpha ? std::optional<FFElem>(f.element(t.alpha)) : std::nullopt;
        const FFElem beta = f.element(t.beta);
        const auto c = exp_sum(kind, f, alpha, beta, t.lambda, EvalMode::closed, budget);
        const auto o = exp_sum(kind, f, alpha, beta, t.lambda, EvalMode::oracle, budget);
        s.record(c.value == o.value, [&] {
          return Json{{"alpha", need_alpha ? Json(t.alpha) : Json()},
                      {"beta", t.beta},
                      {"lambda", t.lambda},
                      {"branch", c.branch},
                      {"closed", c.value},
                      {"oracle", o.value}};
        });
      }
    }));
  }

  Json deviations = Json::object();
  suites.push_back(detail::run_suite("omega", [&](detail::Suite& s) {
    std::uint64_t printed_checked = 0, printed_wrong = 0;
    for (const auto& t : detail::lemma_tuples(f, cfg.seed, false, false)) {
      const FFElem a = f.element(t.alpha), b = f.element(t.beta);
      const auto c = omega_lambda(f, a, b, t.lambda, EvalMode::closed, cfg.variant, budget);
      const auto o = omega_lambda(f, a, b, t.lambda, EvalMode::oracle, cfg.variant, budget);
      s.record(c.value == o.value, [&] {
        return Json{{"alpha", t.alpha},  {"beta", t.beta},   {"lambda", t.lambda},
                    {"branch", c.branch}, {"closed", c.value}, {"oracle", o.value}};
      });
      if (cfg.m % 2 == 1 && cfg.m >= 3 && (t.alpha == 0) != (t.beta == 0)) {
        const auto p = omega_lambda(f, a, b, t.lambda, EvalMode::closed, FormulaVariant::as_printed, budget);
        ++printed_checked;
        printed_wrong += p.value != o.value;
      }
    }
    if (printed_checked != 0) {
      deviations["omega_single_zero_argument_printed_sign"] = {{"checked", printed_checked},
                                                               {"disagree_with_oracle", printed_wrong}};
    }
  }));

  Json results = Json::object();
  bool any_fail = false, any_skip = false;
  r.rows.push_back({"suite", "status", "cases", "counterexample"});
  for (const auto& s : suites) {
    results[s.name] = detail::suite_json(s);
    r.doc["verdicts"][s.name] = s.status;
    any_fail |= s.status == "FAIL";
    any_skip |= s.status == "SKIPPED";
    r.rows.push_back({s.name, s.status, std::to_string(s.cases),
                      s.counterexample.is_null() ? "" : s.counterexample.dump()});
  }
  results["printed_form_deviations"] = deviations;
  r.doc["results"] = results;
  r.exit_code = any_fail ? exit_fail : (any_skip ? exit_budget : exit_pass);
  std::uint64_t cases = 0;
  for (const auto& s : suites) cases += s.cases;
  detail::finish_timing(r, cfg, sw, cases);
  return r;
}

// ---------------------------------------------------------------------------
// spectrum / cwe

inline Report cmd_spectrum(const RunConfig& cfg) {
  validate(cfg);
  detail::Stopwatch sw;
  Report r = detail::start(cfg, "spectrum");
  r.rows.push_back({"source", "weight", "multiplicity"});
  std::uint64_t steps = 0;
  std::optional<LeeSpectrum> closed, brute;
  if (cfg.mode != Mode::brute) {
    closed = lee_spectrum_closed(cfg.q, cfg.m, cfg.variant);
    r.doc["results"]["length"] = code_length_closed(cfg.q, cfg.m);
    r.doc["results"]["closed"] = detail::spectrum_json(*closed);
    detail::spectrum_rows(r, "closed", *closed);
  }
  if (cfg.mode != Mode::closed) {
    const Field field = make_field(cfg.q, cfg.m);
    const EnumOptions opt = cfg.enum_options();
    const DefiningSet d = build_defining_set(field, opt.budget);
    brute = lee_spectrum_bruteforce(d, opt);
    const DefiningSetCounts counts = defining_set_counts(field, opt.budget);
    Json res;
    res["length"] = d.size();
    res["defining_set"] = {{"nonzero_reading", counts.nonzero_reading}, {"unit_reading", counts.unit_reading}};
    res["gray_length"] = 2 * d.size();
    res["gray_rank"] = gray_rank(d, opt.budget);
    res["module_generators"] = cfg.m;
    if (brute->entries.size() > 1) res["min_distance"] = brute->min_nonzero_weight();
    res["distinct_nonzero_weights"] = detail::distinct_nonzero_weights(*brute);
    res["spectrum"] = detail::spectrum_json(*brute);
    r.doc["results"]["brute"] = res;
    detail::spectrum_rows(r, "brute", *brute);
    steps += detail::enumeration_steps(cfg.q, cfg.m, d.size());
  }
  if (closed && brute) {
    const bool match = *closed == *brute;
    r.doc["verdicts"]["closed_vs_brute"] = match ? "MATCH" : "MISMATCH";
    if (!match) r.exit_code = exit_fail;
  }
  detail::finish_timing(r, cfg, sw, steps);
  return r;
}

inline Report cmd_cwe(const RunConfig& cfg) {
  validate(cfg);
  detail::Stopwatch sw;
  Report r = detail::start(cfg, "cwe");
  r.rows.push_back({"source", "composition", "multiplicity"});
  std::uint64_t steps = 0;
  std::optional<CweSpectrum> closed, brute;
  if (cfg.mode != Mode::brute) {
    closed = cwe_closed(cfg.q, cfg.m, cfg.variant);
    r.doc["results"]["closed"] = detail::cwe_json(*closed);
    detail::cwe_rows(r, "closed", *closed);
  }
  if (cfg.mode != Mode::closed) {
    const EnumOptions opt = cfg.enum_options();
    const DefiningSet d = build_defining_set(make_field(cfg.q, cfg.m), opt.budget);
    brute = cwe_bruteforce(d, opt);
    r.doc["results"]["brute"] = detail::cwe_json(*brute);
    detail::cwe_rows(r, "brute", *brute);
    const bool marginal = brute->collapse() == lee_spectrum_bruteforce(d, opt);
    bool balanced = true;
    for (const auto& [c, f] : brute->entries) {
      for (std::size_t j = 2; j < c.size(); ++j) balanced &= c[j] == c[1];
    }
    r.doc["verdicts"]["marginal_consistency"] = marginal ? "PASS" : "FAIL";
    r.doc["verdicts"]["symbol_balance"] = balanced ? "PASS" : "FAIL";
    if (!marginal || !balanced) r.exit_code = exit_fail;
    steps += 2 * detail::enumeration_steps(cfg.q, cfg.m, d.size());
  }
  if (closed && brute) {
    const bool match = *closed == *brute;
    r.doc["verdicts"]["closed_vs_brute"] = match ? "MATCH" : "MISMATCH";
    if (!match) r.exit_code = exit_fail;
  }
  detail::finish_timing(r, cfg, sw, steps);
  return r;
}

// ---------------------------------------------------------------------------
// minimality

inline Report cmd_minimality(const RunConfig& cfg) {
  validate(cfg);
  detail::Stopwatch sw;
  Report r = detail::start(cfg, "minimality");
  r.rows.push_back({"field", "value"});
  const EnumOptions opt = cfg.enum_options();
  std::uint64_t steps = 0;

  LeeSpectrum spectrum;
  std::optional<DefiningSet> d;
  if (cfg.mode == Mode::closed) {
    spectrum = lee_spectrum_closed(cfg.q, cfg.m, cfg.variant);
  } else {
    d = build_defining_set(make_field(cfg.q, cfg.m), opt.budget);
    spectrum = lee_spectrum_bruteforce(*d, opt);
    steps += detail::enumeration_steps(cfg.q, cfg.m, d->size());
  }
  MinimalityReport rep = ab_check(spectrum, cfg.q);

  std::string scan_status = "NOT_RUN";
  if (d) {
    try {
      const MinimalScan scan = minimal_codewords_exhaustive(*d, opt);
      rep.minimal_count = scan.minimal_count;
      rep.all_minimal = scan.all_minimal();
      r.doc["results"]["support_classes"] = scan.support_classes;
      r.doc["results"]["minimal_support_classes"] = scan.minimal_classes;
      scan_status = "RUN";
    } catch (const Error& e) {
      if (e.code() != Errc::budget_exceeded) throw;
      scan_status = "SKIPPED";
    }
  }

  Json& res = r.doc["results"];
  res["w_min"] = rep.w_min;
  res["w_max"] = rep.w_max;
  res["ab_ratio"] = rep.ab_ratio.str();
  res["ab_threshold"] = rep.ab_threshold.str();
  res["ab_holds"] = rep.ab_holds;
  res["exhaustive_scan"] = scan_status;
  if (rep.minimal_count) res["minimal_count"] = *rep.minimal_count;
  if (rep.all_minimal) res["all_minimal"] = *rep.all_minimal;
  try {
    const PropositionRatio pr = proposition_ratio(cfg.q, cfg.m);
    Json ratios = Json::array();
    for (const auto& x : pr.ratios) ratios.push_back(x.str());
    res["proposition_ratios"] = ratios;
    res["proposition_exceeds_threshold"] = pr.all_exceed();
  } catch (const Error& e) {
    if (e.code() != Errc::unsupported_parameters) throw;
    res["proposition_ratios"] = Json::array();
  }

  if (rep.all_minimal) {
    const bool sound = !rep.ab_holds || *rep.all_minimal;
    r.doc["verdicts"]["ab_soundness"] = sound ? "PASS" : "FAIL";
    if (!sound) r.exit_code = exit_fail;
  } else {
    r.doc["verdicts"]["ab_soundness"] = "SKIPPED";
  }

  for (const auto& [k, v] : res.items()) r.rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
  detail::finish_timing(r, cfg, sw, steps);
  return r;
}

// ---------------------------------------------------------------------------
// rendering and entry point

inline std::string render(const Report& r, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::json:
      out << r.doc.dump(2) << '\n';
      break;
    case Format::csv:
      for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) out << ',';
          const bool quote = row[i].find_first_of(",\"") != std::string::npos;
          if (!quote) {
            out << row[i];
            continue;
          }
          out << '"';
          for (char c : row[i]) out << (c == '"' ? "\"\"" : std::string(1, c));
          out << '"';
        }
        out << '\n';
      }
      break;
    case Format::human: {
      out << r.command << "  q=" << r.doc["params"]["q"] << " m=" << r.doc["params"]["m"] << '\n';
      std::vector<std::size_t> width;
      for (const auto& row : r.rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
      }
      for (std::size_t k = 0; k < r.rows.size(); ++k) {
        const auto& row = r.rows[k];
        for (std::size_t i = 0; i < row.size(); ++i) {
          out << row[i] << std::string(width[i] - row[i].size() + 2, ' ');
        }
        out << '\n';
        if (k == 0) {
          std::size_t total = 0;
          for (auto w : width) total += w + 2;
          out << std::string(total, '-') << '\n';
        }
      }
      for (const auto& [k, v] : r.doc["verdicts"].items()) out << k << ": " << v.get<std::string>() << '\n';
      break;
    }
  }
  return out.str();
}

/// Temp file in the target directory, then rename over the destination.
inline void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(Errc::invalid_argument, "cannot write " + tmp.string());
    f << content;
    f.flush();
    if (!f) throw Error(Errc::invalid_argument, "short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

inline int exit_code_for(Errc code) {
  switch (code) {
    case Errc::budget_exceeded: return exit_budget;
    case Errc::integrality_violation:
    case Errc::non_integral_exponent: return exit_fail;
    default: return exit_usage;
  }
}

/// Full command line. Returns the process exit status.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"ringlee: trace codes over F_q + uF_q, their weight distributions and the sums behind them"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"human", Format::human}};
  const std::map<std::string, Mode> modes{{"closed", Mode::closed}, {"brute", Mode::brute}, {"both", Mode::both}};
  const std::map<std::string, FormulaVariant> variants{{"corrected", FormulaVariant::corrected},
                                                        {"as_printed", FormulaVariant::as_printed}};

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--q", cfg.q, "odd prime q")->envname("RINGLEE_Q")->capture_default_str();
    sub->add_option("--m", cfg.m, "extension degree m")->envname("RINGLEE_M")->capture_default_str();
    sub->add_option("--budget", cfg.budget_ops, "cap on elementary enumeration steps")
        ->envname("RINGLEE_BUDGET")
        ->capture_default_str();
    sub->add_option("--threads", cfg.threads, "worker threads, 0 for all cores")->envname("RINGLEE_THREADS");
    sub->add_option("--format", cfg.format, "json, csv or human")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->option_text("json|csv|human")
        ->envname("RINGLEE_FORMAT");
    sub->add_option("--seed", cfg.seed, "seed for sampled parameter tuples")->envname("RINGLEE_SEED");
    sub->add_option("--mode", cfg.mode, "closed, brute or both")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
        ->option_text("closed|brute|both")
        ->envname("RINGLEE_MODE");
    sub->add_option("--variant", cfg.variant, "closed-form transcription: corrected or as_printed")
        ->transform(CLI::CheckedTransformer(variants, CLI::ignore_case))
        ->option_text("corrected|as_printed")
        ->envname("RINGLEE_VARIANT");
    sub->add_option("--out", cfg.out, "write the report here instead of stdout")->envname("RINGLEE_OUT");
    sub->add_flag("--timing", cfg.timing, "include wall-clock seconds (output is then not reproducible)");
  };

  std::function<Report(const RunConfig&)> command;
  const auto add_command = [&](const char* name, const char* help, Report (*fn)(const RunConfig&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    sub->callback([&command, fn] { command = fn; });
  };
  add_command("verify-lemmas", "closed forms against exhaustive or sampled oracles", cmd_verify_lemmas);
  add_command("spectrum", "Lee weight distribution", cmd_spectrum);
  add_command("cwe", "complete weight enumerator of the Gray image", cmd_cwe);
  add_command("minimality", "minimal codewords and the weight-ratio test", cmd_minimality);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  try {
    const Report r = command(cfg);
    const std::string text = render(r, cfg.format);
    if (cfg.out.empty()) {
      out << text;
    } else {
      write_atomically(cfg.out, text);
    }
    return r.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace ringlee::cli
