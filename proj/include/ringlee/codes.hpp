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

// The trace code over F_q + uF_q cut out by the defining set
// D = { a + ub != 0 : Tr(a^2) = 0, Tr(b^2) = 0 }, its Gray image, and its
// Lee / complete weight distributions, enumerated and predicted.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ringlee/charsums.hpp"
#include "ringlee/error.hpp"
#include "ringlee/exact.hpp"
#include "ringlee/gf.hpp"
#include "ringlee/parallel.hpp"
#include "ringlee/ring.hpp"

namespace ringlee {

struct DefiningSet {
  Field ctx;
  std::vector<RingElem> members;  // sorted by (a.index, b.index)

  std::size_t size() const noexcept { return members.size(); }
};

struct LeeSpectrum {
  std::map<std::uint64_t, std::uint64_t> entries;  // weight -> multiplicity

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& [w, f] : entries) t += f;
    return t;
  }
  std::uint64_t min_nonzero_weight() const {
    for (const auto& [w, f] : entries) {
      if (w != 0 && f != 0) return w;
    }
    throw Error(Errc::degenerate_spectrum, "spectrum has no nonzero weight");
  }
  std::uint64_t max_weight() const {
    if (entries.empty() || entries.rbegin()->first == 0) {
      throw Error(Errc::degenerate_spectrum, "spectrum has no nonzero weight");
    }
    return entries.rbegin()->first;
  }
  friend bool operator==(const LeeSpectrum&, const LeeSpectrum&) = default;
};

using Composition = std::vector<std::uint64_t>;  // (n_0, ..., n_{q-1})

struct CweSpectrum {
  std::map<Composition, std::uint64_t> entries;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& [c, f] : entries) t += f;
    return t;
  }
  /// Weight of each composition is its length minus n_0.
  LeeSpectrum collapse() const {
    LeeSpectrum out;
    for (const auto& [c, f] : entries) {
      std::uint64_t len = 0;
      for (auto k : c) len += k;
      out.entries[len - c.front()] += f;
    }
    return out;
  }
  friend bool operator==(const CweSpectrum&, const CweSpectrum&) = default;
};

inline DefiningSet build_defining_set(const Field& ctx, const Budget& budget = {}) {
  budget.charge(sat_mul(ctx->size(), ctx->size()), "defining set");
  std::vector<std::uint32_t> zero_trace;
  for (std::uint32_t a = 0; a < ctx->size(); ++a) {
    if (ctx->raw_trace(ctx->raw_mul(a, a)) == 0) zero_trace.push_back(a);
  }
  DefiningSet d{ctx, {}};
  d.members.reserve(zero_trace.size() * zero_trace.size());
  for (std::uint32_t a : zero_trace) {
    for (std::uint32_t b : zero_trace) {
      if (a == 0 && b == 0) continue;
      d.members.push_back({ctx->element(a), ctx->element(b)});
    }
  }
  return d;
}

/// (tr(x d_1), ..., tr(x d_n)) computed literally in R_m.
inline RingVector codeword(const Ring& ring, const RingElem& x, const DefiningSet& d) {
  if (ring.field()->tag() != d.ctx->tag()) throw Error(Errc::context_mismatch, "ring and defining set differ");
  const RingElem xc = ring.make(x.a, x.b);
  RingVector out;
  out.elems.reserve(d.size());
  for (const auto& di : d.members) out.elems.push_back(ring.trace(ring.mul(xc, di)));
  return out;
}

/// Message index k = alpha * q^m + beta for x = alpha + u beta.
inline RingElem message(const FieldCtx& ctx, std::uint64_t k) {
  return {ctx.element(k / ctx.size()), ctx.element(k % ctx.size())};
}

/// Tr(y a_i) and Tr(y b_i) for every y in F_{q^m}; the Gray image of x = alpha + u beta
/// at coordinate i is (Tr(alpha a_i) + Tr(beta b_i), Tr(beta a_i) + Tr(alpha b_i)).
class TraceTables {
 public:
  explicit TraceTables(const DefiningSet& d, const Budget& budget = {})
      : q_(d.ctx->characteristic()), n_(d.size()), field_size_(d.ctx->size()) {
    budget.charge(sat_mul(field_size_, n_), "trace tables");
    ta_.resize(static_cast<std::size_t>(field_size_) * n_);
    tb_.resize(ta_.size());
    const FieldCtx& f = *d.ctx;
    for (std::uint32_t y = 0; y < field_size_; ++y) {
      for (std::size_t i = 0; i < n_; ++i) {
        ta_[y * n_ + i] = static_cast<std::uint8_t>(f.raw_trace(f.raw_mul(y, d.members[i].a.index)));
        tb_[y * n_ + i] = static_cast<std::uint8_t>(f.raw_trace(f.raw_mul(y, d.members[i].b.index)));
      }
    }
  }

  std::uint32_t q() const noexcept { return q_; }
  std::size_t length() const noexcept { return n_; }
  std::uint64_t messages() const noexcept { return static_cast<std::uint64_t>(field_size_) * field_size_; }

  /// Writes the 2n Gray coordinates (r_1, s_1, r_2, s_2, ...).
  void gray(std::uint64_t k, std::uint8_t* out) const noexcept {
    const std::uint8_t* aa = row(ta_, k / field_size_);
    const std::uint8_t* ab = row(tb_, k / field_size_);
    const std::uint8_t* ba = row(ta_, k % field_size_);
    const std::uint8_t* bb = row(tb_, k % field_size_);
    for (std::size_t i = 0; i < n_; ++i) {
      out[2 * i] = reduce(aa[i] + bb[i]);
      out[2 * i + 1] = reduce(ba[i] + ab[i]);
    }
  }

  std::uint64_t lee_weight(std::uint64_t k) const noexcept {
    const std::uint8_t* aa = row(ta_, k / field_size_);
    const std::uint8_t* ab = row(tb_, k / field_size_);
    const std::uint8_t* ba = row(ta_, k % field_size_);
    const std::uint8_t* bb = row(tb_, k % field_size_);
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const unsigned r = aa[i] + bb[i];
      const unsigned s = ba[i] + ab[i];
      w += (r != 0 && r != q_) + (s != 0 && s != q_);
    }
    return w;
  }

 private:
  const std::uint8_t* row(const std::vector<std::uint8_t>& t, std::uint64_t y) const noexcept {
    return t.data() + y * n_;
  }
  std::uint8_t reduce(unsigned v) const noexcept { return static_cast<std::uint8_t>(v >= q_ ? v - q_ : v); }

  std::uint32_t q_;
  std::size_t n_;
  std::uint32_t field_size_;
  std::vector<std::uint8_t> ta_, tb_;
};

struct EnumOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  Budget budget{};
};

inline void charge_enumeration(const DefiningSet& d, const Budget& budget, std::string_view what) {
  const std::uint64_t msgs = sat_mul(d.ctx->size(), d.ctx->size());
  budget.charge(sat_mul(msgs, std::max<std::uint64_t>(d.size(), 1)), what);
}

inline LeeSpectrum lee_spectrum_bruteforce(const DefiningSet& d, const EnumOptions& opt = {}) {
  charge_enumeration(d, opt.budget, "Lee spectrum enumeration");
  const TraceTables tables(d, opt.budget);
  const std::uint64_t count = tables.messages();
  std::vector<std::vector<std::uint64_t>> hist(worker_count(count, opt.threads),
                                               std::vector<std::uint64_t>(2 * d.size() + 1, 0));
  parallel_for(count, opt.threads, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    for (std::uint64_t k = begin; k < end; ++k) ++hist[w][tables.lee_weight(k)];
  });
  LeeSpectrum out;
  for (std::size_t wt = 0; wt <= 2 * d.size(); ++wt) {
    std::uint64_t f = 0;
    for (const auto& h : hist) f += h[wt];
    if (f != 0) out.entries[wt] = f;
  }
  return out;
}

inline CweSpectrum cwe_bruteforce(const DefiningSet& d, const EnumOptions& opt = {}) {
  charge_enumeration(d, opt.budget, "CWE enumeration");
  const TraceTables tables(d, opt.budget);
  const std::uint32_t q = tables.q();
  const std::uint64_t count = tables.messages();
  std::vector<CweSpectrum> local(worker_count(count, opt.threads));
  parallel_for(count, opt.threads, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    std::vector<std::uint8_t> buf(2 * tables.length());
    Composition comp(q);
    for (std::uint64_t k = begin; k < end; ++k) {
      tables.gray(k, buf.data());
      std::fill(comp.begin(), comp.end(), 0);
      for (auto c : buf) ++comp[c];
      ++local[w].entries[comp];
    }
  });
  CweSpectrum out;
  for (const auto& l : local) {
    for (const auto& [c, f] : l.entries) out.entries[c] += f;
  }
  return out;
}

/// Codewords whose nonzero symbols do not all occur equally often. Zero means
/// Omega_lambda(alpha, beta) does not depend on lambda anywhere on the code.
inline std::uint64_t lambda_dependence_count(const DefiningSet& d, const EnumOptions& opt = {}) {
  const CweSpectrum cwe = cwe_bruteforce(d, opt);
  std::uint64_t bad = 0;
  for (const auto& [c, f] : cwe.entries) {
    if (!std::all_of(c.begin() + 1, c.end(), [&](std::uint64_t v) { return v == c[1]; })) bad += f;
  }
  return bad;
}

// ---------------------------------------------------------------------------
// Rank of the Gray image over F_q

namespace detail {

// Incremental row basis in echelon form over F_q.
class RowBasis {
 public:
  RowBasis(std::uint32_t q, std::size_t width) : q_(q), width_(width) {}

  /// Reduces v against the basis; keeps it if independent. Returns whether it was kept.
  bool insert(std::vector<std::uint32_t> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::uint32_t c = v[pivots_[r]];
      if (c == 0) continue;
      const std::uint32_t f = q_ - c;  // v -= c * row (row pivot is 1)
      for (std::size_t j = 0; j < width_; ++j) v[j] = (v[j] + f * rows_[r][j]) % q_;
    }
    const auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    if (it == v.end()) return false;
    const std::size_t p = static_cast<std::size_t>(it - v.begin());
    const std::uint32_t inv = inverse(v[p]);
    for (auto& x : v) x = x * inv % q_;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  std::uint32_t inverse(std::uint32_t a) const {
    std::uint64_t r = 1, b = a, e = q_ - 2;
    while (e > 0) {
      if (e & 1u) r = r * b % q_;
      b = b * b % q_;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t q_;
  std::size_t width_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace detail

struct GrayDimension {
  std::uint64_t gray_length = 0;     // 2n
  std::uint64_t gray_rank = 0;       // over F_q
  std::uint64_t module_generators = 0;  // m, the R-module claim
  std::uint64_t min_distance = 0;
};

/// Rank from the images of the 2m F_q-basis messages (the code is F_q-linear in (alpha, beta)).
inline std::uint64_t gray_rank(const DefiningSet& d, const Budget& budget = {}) {
  const FieldCtx& f = *d.ctx;
  const unsigned m = f.degree();
  budget.charge(sat_mul(sat_mul(2 * m, 2 * m), 2 * d.size()), "Gray rank");
  const TraceTables tables(d, budget);
  detail::RowBasis basis(f.characteristic(), 2 * d.size());
  std::vector<std::uint8_t> buf(2 * d.size());
  std::uint64_t e = 1;
  for (unsigned k = 0; k < m; ++k, e *= f.characteristic()) {
    for (std::uint64_t msg : {e * f.size(), e}) {  // alpha = x^k, then beta = x^k
      tables.gray(msg, buf.data());
      basis.insert(std::vector<std::uint32_t>(buf.begin(), buf.end()));
    }
  }
  return basis.rank();
}

/// Rank by row-reducing every codeword; independent of the linearity shortcut.
inline std::uint64_t gray_rank_all(const DefiningSet& d, const Budget& budget = {}) {
  charge_enumeration(d, budget, "Gray rank over all codewords");
  const TraceTables tables(d, budget);
  detail::RowBasis basis(d.ctx->characteristic(), 2 * d.size());
  std::vector<std::uint8_t> buf(2 * d.size());
  for (std::uint64_t k = 0; k < tables.messages(); ++k) {
    tables.gray(k, buf.data());
    basis.insert(std::vector<std::uint32_t>(buf.begin(), buf.end()));
  }
  return basis.rank();
}

inline GrayDimension gray_dimension(const DefiningSet& d, const EnumOptions& opt = {}) {
  GrayDimension g;
  g.gray_length = 2 * d.size();
  g.gray_rank = gray_rank(d, opt.budget);
  g.module_generators = d.ctx->degree();
  g.min_distance = lee_spectrum_bruteforce(d, opt).min_nonzero_weight();
  return g;
}

/// |D| under the nonzero reading of R_m^* and under the unit reading.
struct DefiningSetCounts {
  std::uint64_t nonzero_reading = 0;
  std::uint64_t unit_reading = 0;
};

inline DefiningSetCounts defining_set_counts(const Field& ctx, const Budget& budget = {}) {
  const DefiningSet d = build_defining_set(ctx, budget);
  const Ring ring(ctx);
  DefiningSetCounts c{d.size(), 0};
  for (const auto& e : d.members) c.unit_reading += ring.is_unit(e);
  return c;
}

// ---------------------------------------------------------------------------
// Closed-form predictions

namespace detail {

inline void require_closed_params(std::uint32_t q, unsigned m) {
  if (q == 2) throw Error(Errc::even_characteristic, "q must be odd");
  if (!is_prime(q)) throw Error(Errc::non_prime, std::to_string(q) + " is not prime");
  if (m < 2) throw Error(Errc::unsupported_parameters, "closed forms need m >= 2");
  if (sat_pow(q, 2 * m) >= (std::uint64_t{1} << 62)) throw Error(Errc::unsupported_parameters, "q^(2m) too large");
}

inline std::uint64_t require_count(const Surd& v, std::string_view what) {
  const BigInt i = require_integer(v, what);
  if (i < 0) throw Error(Errc::integrality_violation, std::string(what) + " is negative");
  return static_cast<std::uint64_t>(i);
}

inline std::uint64_t require_exponent(const Surd& v, std::string_view what) {
  if (!v.is_integer() || v.coeff(0) < 0) {
    throw Error(Errc::non_integral_exponent, std::string(what) + " evaluated to " + v.str());
  }
  return static_cast<std::uint64_t>(numerator(v.coeff(0)));
}

struct ClosedRow {
  Surd weight;
  Surd multiplicity;
};

// One row per weight class, m odd or even; weight-0 row included.
inline std::vector<ClosedRow> closed_rows(std::uint32_t q, unsigned m, FormulaVariant variant) {
  const long long M = m;
  const Surd g = gauss_closed(q, m).exact();
  const auto num = [&](std::int64_t v) { return Surd(q, Rational(v)); };
  const auto qp = [&](long long e) { return Surd(q, rational_pow(q, e)); };
  const Surd qm1 = num(q - 1);
  std::vector<ClosedRow> rows;
  rows.push_back({num(0), num(1)});
  if (m % 2 == 1) {
    const Surd base = num(2) * qm1 * qp(2 * M - 3);
    const Surd p_minus = qm1 * (qp(M - 1) - qp((M - 1) / 2));
    const Surd p_plus = qm1 * (qp(M - 1) + qp((M - 1) / 2));
    const bool swap = variant == FormulaVariant::corrected;
    rows.push_back({base, num(2 * q - 1) * qp(2 * M - 2) - num(2) * qm1 * qp(M - 1) - num(1)});
    rows.push_back({num(2) * qm1 * (qp(2 * M - 3) - qp((3 * M - 5) / 2)), swap ? p_plus : p_minus});
    rows.push_back({num(2) * qm1 * (qp(2 * M - 3) + qp((3 * M - 5) / 2)), swap ? p_minus : p_plus});
    const Surd half_sq = Surd(q, Rational((q - 1) * (q - 1)) / 2);
    rows.push_back({num(2) * qm1 * (qp(2 * M - 3) - qp(M - 2)), half_sq * (qp(2 * M - 2) + qp(M - 1))});
    rows.push_back({num(2) * qm1 * (qp(2 * M - 3) + qp(M - 2)), half_sq * (qp(2 * M - 2) - qp(M - 1))});
  } else {
    const Surd base = num(2) * qm1 * qp(2 * M - 3);
    const Surd n0 = qp(M - 1) + qp(-1) * qm1 * g;     // N_0
    const Surd n1 = qp(M - 1) - qp(-1) * g;           // N_s, s != 0
    rows.push_back({base + num(2) * g * qm1 * qm1 * qp(M - 3), num(2) * (n0 - num(1))});
    rows.push_back({base + num(2) * g * qm1 * num(2 * q - 1) * qp(M - 3) + num(2) * qm1 * qm1 * qp(M - 2),
                    num(2) * qm1 * n1});
    rows.push_back({base + num(4) * g * qm1 * qm1 * qp(M - 3), (n0 - num(1)).pow(2)});
    rows.push_back({base + num(4) * g * qm1 * qm1 * qp(M - 3) + num(2) * qm1 * qm1 * qp(M - 2),
                    num(2) * qm1 * n1 * (n0 - num(1))});
    rows.push_back({base + num(4) * g * qm1 * qm1 * qp(M - 3) + num(2) * qm1 * num(q - 2) * qp(M - 2),
                    (qm1 * n1).pow(2)});
  }
  return rows;
}

inline std::uint64_t closed_length(std::uint32_t q, unsigned m) {
  return static_cast<std::uint64_t>(count_Nst_closed(q, m, 0, 0).value) - 1;
}

inline void check_mass(std::uint64_t total, std::uint32_t q, unsigned m, std::string_view what) {
  if (total != sat_pow(q, 2 * m)) {
    throw Error(Errc::integrality_violation,
                std::string(what) + " multiplicities sum to " + std::to_string(total) + ", expected q^(2m)");
  }
}

}  // namespace detail

/// Length n = N(0,0) - 1.
inline std::uint64_t code_length_closed(std::uint32_t q, unsigned m) {
  detail::require_closed_params(q, m);
  return detail::closed_length(q, m);
}

/// Weight classes instantiated exactly. Rows of multiplicity zero are dropped
/// and rows whose weights coincide are merged.
inline LeeSpectrum lee_spectrum_closed(std::uint32_t q, unsigned m,
                                       FormulaVariant variant = FormulaVariant::corrected) {
  detail::require_closed_params(q, m);
  LeeSpectrum out;
  for (const auto& row : detail::closed_rows(q, m, variant)) {
    const std::uint64_t f = detail::require_count(row.multiplicity, "table multiplicity");
    if (f == 0) continue;
    out.entries[detail::require_count(row.weight, "table weight")] += f;
  }
  detail::check_mass(out.total(), q, m, "Lee spectrum");
  return out;
}

/// Spectrum assembled class by class from N_s and the closed Omega values,
/// without going through the tables.
inline LeeSpectrum lee_spectrum_from_lemmas(std::uint32_t q, unsigned m,
                                            FormulaVariant variant = FormulaVariant::corrected) {
  detail::require_closed_params(q, m);
  std::vector<std::uint64_t> nonzero_in_class(q);
  for (std::uint32_t s = 0; s < q; ++s) nonzero_in_class[s] = count_Ns_closed(q, m, s).value - (s == 0 ? 1 : 0);
  const auto weight = [&](bool az, bool bz, std::uint32_t s, std::uint32_t t) {
    return static_cast<std::uint64_t>(2 * (q - 1) * omega_closed(q, m, az, bz, s, t, variant).value);
  };
  LeeSpectrum out;
  out.entries[0] = 1;
  for (std::uint32_t s = 0; s < q; ++s) {
    out.entries[weight(true, false, 0, s)] += nonzero_in_class[s];
    out.entries[weight(false, true, s, 0)] += nonzero_in_class[s];
    for (std::uint32_t t = 0; t < q; ++t) {
      out.entries[weight(false, false, s, t)] += nonzero_in_class[s] * nonzero_in_class[t];
    }
  }
  std::erase_if(out.entries, [](const auto& e) { return e.second == 0; });
  detail::check_mass(out.total(), q, m, "Lee spectrum");
  return out;
}

/// Closed complete weight enumerators instantiated: every term w_0^{e_0} prod_i w_i^{e_1}
/// becomes the composition (e_0, e_1, ..., e_1).
inline CweSpectrum cwe_closed(std::uint32_t q, unsigned m, FormulaVariant variant = FormulaVariant::corrected) {
  detail::require_closed_params(q, m);
  const long long M = m;
  const Surd g = gauss_closed(q, m).exact();
  const auto num = [&](std::int64_t v) { return Surd(q, Rational(v)); };
  const auto qp = [&](long long e) { return Surd(q, rational_pow(q, e)); };
  const Surd qm1 = num(q - 1);
  struct Term {
    Surd coeff, e0, ei;
  };
  std::vector<Term> terms;
  Surd two_n(q);
  if (m % 2 == 1) {
    two_n = num(2) * qp(2 * M - 2) - num(2);
    const Surd q0 = num(2) * qp(2 * M - 3);
    const Surd p0 = num(2 * q - 1) * qp(2 * M - 2) - num(2) * qm1 * qp(M - 1) - num(1);
    Surd p_minus = qm1 * (qp(M - 1) - qp((M - 1) / 2));
    Surd p_plus = qm1 * (qp(M - 1) + qp((M - 1) / 2));
    if (variant == FormulaVariant::corrected) std::swap(p_minus, p_plus);
    const Surd half_sq = Surd(q, Rational((q - 1) * (q - 1)) / 2);
    const Surd q_plus = half_sq * (qp(2 * M - 2) + qp(M - 1));
    const Surd q_minus = half_sq * (qp(2 * M - 2) - qp(M - 1));
    const Surd h = qp((3 * M - 5) / 2);
    const Surd k = qp(M - 2);
    terms.push_back({num(1), two_n, num(0)});
    terms.push_back({p0, q0 - num(2), q0});
    terms.push_back({p_minus, q0 + num(2) * qm1 * h - num(2), q0 - num(2) * h});
    terms.push_back({p_plus, q0 - num(2) * qm1 * h - num(2), q0 + num(2) * h});
    terms.push_back({q_plus, q0 + num(2) * qm1 * k - num(2), q0 - num(2) * k});
    terms.push_back({q_minus, q0 - num(2) * qm1 * k - num(2), q0 + num(2) * k});
  } else {
    // The stray p in the printed constants is read as q.
    const Surd p2 = num(2) * qp(2 * M - 3) + num(4) * g * qm1 * qp(M - 3);
    const Surd q2 = qm1 * (qp(M - 1) - qp(-1) * g);
    const Surd p3 = qp(M - 1) + qp(-1) * qm1 * g;
    const Surd q3 = num(2) * qm1 * qp(M - 2);
    two_n = num(2) * p3 * p3 - num(2);
    terms.push_back({num(1), two_n, num(0)});
    terms.push_back({num(2) * (p3 - num(1)), p2 + q3 * qm1 * (num(q) + g) * qp(-1) - num(2), p2 - q3 * qp(-1) * g});
    terms.push_back({num(2) * q2, p2 - q3 * qp(-1) * g - num(2), p2 + q3 + num(2) * g * qp(M - 3)});
    terms.push_back({(p3 - num(1)).pow(2), p2 + qm1 * q3 - num(2), p2});
    terms.push_back({num(2) * q2 * (p3 - num(1)), p2 - num(2), p2 + q3});
    terms.push_back({q2 * q2, p2 + q3 - num(2), p2 + num(2) * num(q - 2) * qp(M - 2)});
  }
  const std::uint64_t len = detail::require_exponent(two_n, "code length");
  CweSpectrum out;
  for (const auto& t : terms) {
    const std::uint64_t f = detail::require_count(t.coeff, "enumerator coefficient");
    if (f == 0) continue;
    Composition c(q, detail::require_exponent(t.ei, "enumerator exponent"));
    c[0] = detail::require_exponent(t.e0, "enumerator exponent");
    if (c[0] + (q - 1) * c[1] != len) {
      throw Error(Errc::non_integral_exponent, "enumerator term exponents do not sum to 2n");
    }
    out.entries[c] += f;
  }
  detail::check_mass(out.total(), q, m, "complete weight enumerator");
  return out;
}

}  // namespace ringlee
