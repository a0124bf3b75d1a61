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

// Quadratic Gauss sums and the character-sum counting identities built on
// them, each in two independent forms: a closed form evaluated exactly in
// Q(sqrt q, i), and a brute-force oracle that accumulates root-of-unity
// exponents in an integer histogram.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringlee/error.hpp"
#include "ringlee/exact.hpp"
#include "ringlee/gf.hpp"

namespace ringlee {

enum class SumLevel { extension, base };
enum class EvalMode { closed, oracle };

/// Which transcription of a published closed form to evaluate. `corrected`
/// carries the sign fix for Omega(0, beta) with m odd and Tr(beta^2) != 0
/// (and the odd-m weight multiplicities that follow from it).
enum class FormulaVariant { corrected, as_printed };

/// Legendre symbol of a residue mod q, 0 at 0.
constexpr int legendre(std::uint32_t q, std::int64_t s) noexcept {
  const std::uint64_t r = static_cast<std::uint64_t>(((s % q) + q) % q);
  if (r == 0) return 0;
  std::uint64_t acc = 1, b = r, e = (q - 1) / 2;
  while (e > 0) {
    if (e & 1u) acc = acc * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return acc == 1 ? 1 : -1;
}

/// sign * i^i_power * q^(q_half_exp / 2), normalized so i_power is 0 or 1.
struct GaussValue {
  int sign = 1;
  unsigned i_power = 0;
  unsigned q_half_exp = 0;
  std::uint32_t q = 3;

  static GaussValue make(std::uint32_t q, int sign, unsigned i_power, unsigned q_half_exp) {
    i_power %= 4;
    if (i_power >= 2) {
      i_power -= 2;
      sign = -sign;
    }
    return GaussValue{sign, i_power, q_half_exp, q};
  }

  std::complex<double> embeds_to() const {
    const double mag = std::pow(static_cast<double>(q), q_half_exp / 2.0);
    return i_power == 0 ? std::complex<double>(sign * mag, 0.0) : std::complex<double>(0.0, sign * mag);
  }

  Surd exact() const {
    Surd v(q, rational_pow(q, q_half_exp / 2) * sign);
    if (q_half_exp % 2 == 1) v = v * Surd::sqrt_q(q);
    if (i_power == 1) v = v * Surd::imag_unit(q);
    return v;
  }

  friend GaussValue operator*(const GaussValue& a, const GaussValue& b) {
    if (a.q != b.q) throw Error(Errc::context_mismatch, "Gauss values over different primes");
    return make(a.q, a.sign * b.sign, a.i_power + b.i_power, a.q_half_exp + b.q_half_exp);
  }
  friend bool operator==(const GaussValue&, const GaussValue&) = default;
};

/// G(eta, chi_1) over F_{q^m} (m = 1 gives the base-field sum).
inline GaussValue gauss_closed(std::uint32_t q, unsigned m) {
  const std::uint64_t t = static_cast<std::uint64_t>(q - 1) * (q - 1) * m / 4;
  return GaussValue::make(q, (m - 1) % 2 == 0 ? 1 : -1, static_cast<unsigned>(t % 4), m);
}

/// Sum of zeta_q^k weighted by an integer histogram over k.
class RootHistogram {
 public:
  explicit RootHistogram(std::uint32_t q) : counts_(q, 0) {}

  void add(std::uint64_t exponent, std::int64_t weight = 1) { counts_[exponent % counts_.size()] += weight; }
  std::span<const std::int64_t> counts() const noexcept { return counts_; }

  RootHistogram& operator+=(const RootHistogram& o) {
    for (std::size_t k = 0; k < counts_.size(); ++k) counts_[k] += o.counts_[k];
    return *this;
  }

  std::complex<double> embed() const {
    std::complex<double> acc = 0;
    const auto q = static_cast<double>(counts_.size());
    for (std::size_t k = 0; k < counts_.size(); ++k) {
      acc += static_cast<double>(counts_[k]) * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / q);
    }
    return acc;
  }

  /// The sum is rational iff all nonzero exponents carry equal weight, and then
  /// it equals counts[0] - counts[1].
  std::optional<std::int64_t> exact_integer() const {
    for (std::size_t k = 2; k < counts_.size(); ++k) {
      if (counts_[k] != counts_[1]) return std::nullopt;
    }
    return counts_[0] - counts_[1];
  }

 private:
  std::vector<std::int64_t> counts_;
};

struct CountResult {
  std::int64_t value = 0;
  std::string branch;

  friend bool operator==(const CountResult&, const CountResult&) = default;
};

struct GaussSum {
  std::complex<double> value;
  std::optional<GaussValue> symbolic;  // closed mode only
};

namespace detail {

struct GaussPair {
  std::uint32_t q;
  unsigned m;
  Surd g;
  Surd gbar;
  bool odd() const noexcept { return m % 2 == 1; }
  Surd num(std::int64_t v) const { return Surd(q, Rational(v)); }
  Surd qpow(long long e) const { return Surd(q, rational_pow(q, e)); }
};

inline GaussPair gauss_pair(std::uint32_t q, unsigned m) {
  return GaussPair{q, m, gauss_closed(q, m).exact(), gauss_closed(q, 1).exact()};
}

inline std::int64_t oracle_value(const RootHistogram& h, std::string_view what) {
  auto v = h.exact_integer();
  if (!v) throw Error(Errc::integrality_violation, std::string(what) + " oracle sum is not rational");
  return *v;
}

inline std::uint32_t residue(std::uint32_t q, std::int64_t s) noexcept {
  return static_cast<std::uint32_t>(((s % q) + q) % q);
}

inline void require_lambda(std::uint32_t q, std::uint32_t lambda) {
  if (lambda % q == 0) throw Error(Errc::zero_parameter, "lambda must be a nonzero residue");
}

// Tr(a^2) for every a, indexed by element index.
inline std::vector<std::uint32_t> square_traces(const FieldCtx& ctx) {
  std::vector<std::uint32_t> out(ctx.size());
  for (std::uint32_t a = 0; a < ctx.size(); ++a) out[a] = ctx.raw_trace(ctx.raw_mul(a, a));
  return out;
}

// Tr(c a) for every a.
inline std::vector<std::uint32_t> linear_traces(const FieldCtx& ctx, std::uint32_t c) {
  std::vector<std::uint32_t> out(ctx.size());
  for (std::uint32_t a = 0; a < ctx.size(); ++a) out[a] = ctx.raw_trace(ctx.raw_mul(c, a));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Gauss sums

inline GaussSum gauss_sum(const FieldCtx& ctx, SumLevel level, EvalMode mode, const Budget& budget = {}) {
  const std::uint32_t q = ctx.characteristic();
  const unsigned m = level == SumLevel::extension ? ctx.degree() : 1;
  if (mode == EvalMode::closed) {
    const auto g = gauss_closed(q, m);
    return {g.embeds_to(), g};
  }
  RootHistogram h(q);
  if (level == SumLevel::base) {
    for (std::uint32_t r = 1; r < q; ++r) h.add(r, legendre(q, r));
  } else {
    budget.charge(ctx.size(), "Gauss sum oracle");
    for (std::uint32_t r = 1; r < ctx.size(); ++r) h.add(ctx.raw_trace(r), ctx.raw_quad_char(r));
  }
  return {h.embed(), std::nullopt};
}

/// Sum over x of chi_a(x); q^m for a = 0 and 0 otherwise.
inline std::int64_t character_sum(const FieldCtx& ctx, FFElem a, const Budget& budget = {}) {
  budget.charge(ctx.size(), "character sum");
  RootHistogram h(ctx.characteristic());
  for (std::uint32_t x = 0; x < ctx.size(); ++x) h.add(ctx.add_char(a, ctx.element(x)).exponent);
  return detail::oracle_value(h, "character sum");
}

/// Sum over x of chi_1(b2 x^2 + b1 x + b0).
inline std::complex<double> quadratic_sum(const FieldCtx& ctx, FFElem b2, FFElem b1, FFElem b0, EvalMode mode,
                                          const Budget& budget = {}) {
  if (b2 == ctx.zero()) throw Error(Errc::zero_leading_coefficient, "b2 must be nonzero");
  if (mode == EvalMode::closed) {
    const FFElem four_b2 = ctx.scale(4, b2);
    const FFElem shift = ctx.sub(b0, ctx.mul(ctx.mul(b1, b1), ctx.inv(four_b2)));
    const RootOfUnity chi = ctx.add_char(ctx.one(), shift);
    return chi.value() * static_cast<double>(ctx.quad_char(b2)) *
           gauss_closed(ctx.characteristic(), ctx.degree()).embeds_to();
  }
  budget.charge(ctx.size(), "quadratic sum oracle");
  RootHistogram h(ctx.characteristic());
  for (std::uint32_t xi = 0; xi < ctx.size(); ++xi) {
    const FFElem x = ctx.element(xi);
    const FFElem f = ctx.add(ctx.add(ctx.mul(b2, ctx.mul(x, x)), ctx.mul(b1, x)), b0);
    h.add(ctx.trace(f));
  }
  return h.embed();
}

// ---------------------------------------------------------------------------
// N_s = #{alpha : Tr(alpha^2) = s}

inline CountResult count_Ns_closed(std::uint32_t q, unsigned m, std::uint32_t s) {
  const auto gp = detail::gauss_pair(q, m);
  const long long M = m;
  s %= q;
  Surd v(q);
  std::string branch;
  if (s == 0 && !gp.odd()) {
    v = gp.qpow(M - 1) + gp.qpow(-1) * gp.num(q - 1) * gp.g;
    branch = "s=0, m even";
  } else if (s == 0) {
    v = gp.qpow(M - 1);
    branch = "s=0, m odd";
  } else if (gp.odd()) {
    v = gp.qpow(M - 1) + gp.qpow(-1) * gp.num(legendre(q, -static_cast<std::int64_t>(s))) * gp.g * gp.gbar;
    branch = "s!=0, m odd";
  } else {
    v = gp.qpow(M - 1) - gp.qpow(-1) * gp.g;
    branch = "s!=0, m even";
  }
  return {require_int64(v, "N_s " + branch), branch};
}

inline CountResult count_Ns_oracle(const FieldCtx& ctx, std::uint32_t s, const Budget& budget = {}) {
  budget.charge(ctx.size(), "N_s oracle");
  std::int64_t n = 0;
  for (std::uint32_t a = 0; a < ctx.size(); ++a) n += ctx.raw_trace(ctx.raw_mul(a, a)) == s % ctx.characteristic();
  return {n, "oracle"};
}

inline CountResult count_Ns(const FieldCtx& ctx, std::uint32_t s, EvalMode mode = EvalMode::closed,
                            const Budget& budget = {}) {
  return mode == EvalMode::closed ? count_Ns_closed(ctx.characteristic(), ctx.degree(), s)
                                  : count_Ns_oracle(ctx, s, budget);
}

// ---------------------------------------------------------------------------
// sum_{x in F_q*} sum_{a} zeta^{x (Tr(a^2) - s)}

inline CountResult square_trace_char_closed(std::uint32_t q, unsigned m, std::uint32_t s) {
  const auto gp = detail::gauss_pair(q, m);
  s %= q;
  Surd v(q);
  std::string branch;
  if (s == 0 && !gp.odd()) {
    v = gp.num(q - 1) * gp.g;
    branch = "s=0, m even";
  } else if (s == 0) {
    branch = "s=0, m odd";
  } else if (gp.odd()) {
    v = gp.num(legendre(q, -static_cast<std::int64_t>(s))) * gp.g * gp.gbar;
    branch = "s!=0, m odd";
  } else {
    v = -gp.g;
    branch = "s!=0, m even";
  }
  return {require_int64(v, "square-trace sum " + branch), branch};
}

inline CountResult square_trace_char_oracle(const FieldCtx& ctx, std::uint32_t s, const Budget& budget = {}) {
  const std::uint32_t q = ctx.characteristic();
  budget.charge(sat_mul(ctx.size(), q - 1), "square-trace sum oracle");
  RootHistogram h(q);
  for (std::uint32_t x = 1; x < q; ++x) {
    for (std::uint32_t a = 0; a < ctx.size(); ++a) {
      const std::uint32_t t = ctx.raw_trace(ctx.raw_mul(a, a));
      h.add(static_cast<std::uint64_t>(x) * detail::residue(q, static_cast<std::int64_t>(t) - s));
    }
  }
  return {detail::oracle_value(h, "square-trace sum"), "oracle"};
}

inline CountResult lemma25_sum(const FieldCtx& ctx, std::uint32_t s, EvalMode mode = EvalMode::closed,
                               const Budget& budget = {}) {
  return mode == EvalMode::closed ? square_trace_char_closed(ctx.characteristic(), ctx.degree(), s)
                                  : square_trace_char_oracle(ctx, s, budget);
}

// ---------------------------------------------------------------------------
// N(s, t) = #{(alpha, beta) : Tr(alpha^2) = s, Tr(beta^2) = t}

inline CountResult count_Nst_closed(std::uint32_t q, unsigned m, std::uint32_t s, std::uint32_t t) {
  const auto gp = detail::gauss_pair(q, m);
  const long long M = m;
  s %= q;
  t %= q;
  const auto eta_neg = [&](std::uint32_t r) { return gp.num(legendre(q, -static_cast<std::int64_t>(r))); };
  Surd v(q);
  std::string branch;
  if (gp.odd()) {
    const Surd base = gp.qpow(2 * M - 2);
    if (s == 0 && t == 0) {
      v = base;
      branch = "s=0, t=0, m odd";
    } else if (t == 0) {
      v = base + gp.qpow(M - 2) * eta_neg(s) * gp.g * gp.gbar;
      branch = "s!=0, t=0, m odd";
    } else if (s == 0) {
      v = base + gp.qpow(M - 2) * eta_neg(t) * gp.g * gp.gbar;
      branch = "s=0, t!=0, m odd";
    } else {
      v = base + gp.qpow(M - 2) * (eta_neg(s) + eta_neg(t)) * gp.g * gp.gbar +
          gp.qpow(-2) * gp.num(legendre(q, static_cast<std::int64_t>(s) * t)) * gp.g * gp.g * gp.gbar * gp.gbar;
      branch = "s!=0, t!=0, m odd";
    }
  } else {
    if (s == 0 && t == 0) {
      v = (gp.qpow(M - 1) + gp.qpow(-1) * gp.num(q - 1) * gp.g).pow(2);
      branch = "s=0, t=0, m even";
    } else if (s == 0 || t == 0) {
      v = gp.qpow(2 * M - 2) + gp.qpow(M - 2) * gp.num(q - 2) * gp.g - gp.qpow(-2) * gp.num(q - 1) * gp.g * gp.g;
      branch = s == 0 ? "s=0, t!=0, m even" : "s!=0, t=0, m even";
    } else {
      v = (gp.qpow(M - 1) - gp.qpow(-1) * gp.g).pow(2);
      branch = "s!=0, t!=0, m even";
    }
  }
  return {require_int64(v, "N(s,t) " + branch), branch};
}

/// Full q x q table of N(s, t) by one pass over all pairs; row-major in s.
inline std::vector<std::int64_t> count_Nst_table_oracle(const FieldCtx& ctx, const Budget& budget = {}) {
  const std::uint32_t q = ctx.characteristic();
  budget.charge(sat_mul(ctx.size(), ctx.size()), "N(s,t) oracle");
  const auto sq = detail::square_traces(ctx);
  std::vector<std::int64_t> table(static_cast<std::size_t>(q) * q, 0);
  for (std::uint32_t a = 0; a < ctx.size(); ++a) {
    for (std::uint32_t b = 0; b < ctx.size(); ++b) ++table[sq[a] * q + sq[b]];
  }
  return table;
}

inline CountResult count_Nst(const FieldCtx& ctx, std::uint32_t s, std::uint32_t t, EvalMode mode = EvalMode::closed,
                             const Budget& budget = {}) {
  const std::uint32_t q = ctx.characteristic();
  if (mode == EvalMode::closed) return count_Nst_closed(q, ctx.degree(), s, t);
  return {count_Nst_table_oracle(ctx, budget)[(s % q) * q + t % q], "oracle"};
}

// ---------------------------------------------------------------------------
// Exponential sums N1, N2, N3

enum class ExpSumKind { N1, N2, N3 };

constexpr std::string_view to_string(ExpSumKind k) noexcept {
  switch (k) {
    case ExpSumKind::N1: return "N1";
    case ExpSumKind::N2: return "N2";
    case ExpSumKind::N3: return "N3";
  }
  return "?";
}

/// Closed form by class: s = Tr(alpha^2) (N3 only), t = Tr(beta^2).
inline CountResult exp_sum_closed(ExpSumKind kind, std::uint32_t q, unsigned m, std::uint32_t s, std::uint32_t t) {
  const auto gp = detail::gauss_pair(q, m);
  s %= q;
  t %= q;
  const Surd g2 = gp.g * gp.g;
  Surd v(q);
  std::string branch;
  switch (kind) {
    case ExpSumKind::N1:
      if (!gp.odd()) {
        v = t == 0 ? -(gp.g * gp.num(q - 1)) : gp.g;
        branch = t == 0 ? "m even, Tr(b^2)=0" : "m even, Tr(b^2)!=0";
      } else {
        v = t == 0 ? Surd(q) : -(gp.num(legendre(q, -static_cast<std::int64_t>(t))) * gp.g * gp.gbar);
        branch = t == 0 ? "m odd, Tr(b^2)=0" : "m odd, Tr(b^2)!=0";
      }
      break;
    case ExpSumKind::N2:
      if (!gp.odd()) {
        v = t == 0 ? -(g2 * gp.num(static_cast<std::int64_t>(q - 1) * (q - 1))) : g2 * gp.num(q - 1);
        branch = t == 0 ? "m even, Tr(b^2)=0" : "m even, Tr(b^2)!=0";
      } else {
        branch = "m odd";
      }
      break;
    case ExpSumKind::N3:
      if (!gp.odd()) {
        if (s == 0 && t == 0) {
          v = -(g2 * gp.num(static_cast<std::int64_t>(q - 1) * (q - 1)));
          branch = "m even, Tr(a^2)=0, Tr(b^2)=0";
        } else if (s == 0 || t == 0) {
          v = g2 * gp.num(q - 1);
          branch = "m even, exactly one trace zero";
        } else {
          v = -g2;
          branch = "m even, Tr(a^2)!=0, Tr(b^2)!=0";
        }
      } else if (s != 0 && t != 0) {
        v = -(gp.num(legendre(q, static_cast<std::int64_t>(s) * t)) * g2 * gp.gbar * gp.gbar);
        branch = "m odd, Tr(a^2)!=0, Tr(b^2)!=0";
      } else {
        branch = "m odd, a trace is zero";
      }
      break;
  }
  return {require_int64(v, std::string(to_string(kind)) + " " + branch), branch};
}

/// Literal nested enumeration of the defining sums.
inline CountResult exp_sum_oracle(ExpSumKind kind, const FieldCtx& ctx, std::optional<FFElem> alpha, FFElem beta,
                                  std::uint32_t lambda, const Budget& budget = {}) {
  const std::uint32_t q = ctx.characteristic();
  const std::uint32_t n = ctx.size();
  const std::uint64_t neg_lambda = q - lambda % q;
  const auto sq = detail::square_traces(ctx);
  const auto tb = detail::linear_traces(ctx, beta.index);
  RootHistogram h(q);
  if (kind == ExpSumKind::N1) {
    budget.charge(sat_mul(n, sat_mul(q - 1, q - 1)), "N1 oracle");
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint64_t x = 1; x < q; ++x)
        for (std::uint64_t z = 1; z < q; ++z) h.add(x * sq[a] + z * tb[a] + z * neg_lambda);
    return {detail::oracle_value(h, "N1"), "oracle"};
  }
  budget.charge(sat_mul(sat_mul(n, n), sat_pow(q - 1, 3)), std::string(to_string(kind)) + " oracle");
  const auto ta = kind == ExpSumKind::N3 ? detail::linear_traces(ctx, alpha->index) : std::vector<std::uint32_t>(n, 0);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::uint64_t lin = (static_cast<std::uint64_t>(tb[a]) + ta[b]) % q;  // Tr(alpha b + beta a)
      for (std::uint64_t x = 1; x < q; ++x)
        for (std::uint64_t y = 1; y < q; ++y)
          for (std::uint64_t z = 1; z < q; ++z) h.add(x * sq[a] + y * sq[b] + z * lin + z * neg_lambda);
    }
  return {detail::oracle_value(h, to_string(kind)), "oracle"};
}

inline CountResult exp_sum(ExpSumKind kind, const FieldCtx& ctx, std::optional<FFElem> alpha, FFElem beta,
                           std::uint32_t lambda, EvalMode mode = EvalMode::closed, const Budget& budget = {}) {
  detail::require_lambda(ctx.characteristic(), lambda);
  if (ctx.quad_char(beta) == 0) throw Error(Errc::zero_parameter, "beta must be nonzero");
  if (kind == ExpSumKind::N3 && (!alpha || ctx.quad_char(*alpha) == 0)) {
    throw Error(Errc::zero_parameter, "alpha must be nonzero for N3");
  }
  if (mode == EvalMode::oracle) return exp_sum_oracle(kind, ctx, alpha, beta, lambda, budget);
  const std::uint32_t s = kind == ExpSumKind::N3 ? ctx.trace(ctx.mul(*alpha, *alpha)) : 0;
  return exp_sum_closed(kind, ctx.characteristic(), ctx.degree(), s, ctx.trace(ctx.mul(beta, beta)));
}

// ---------------------------------------------------------------------------
// Omega_lambda(alpha, beta) = #{(a, b) : Tr(a^2) = 0, Tr(b^2) = 0, Tr(alpha b + beta a) = lambda}

/// Closed form by class. s = Tr(alpha^2), t = Tr(beta^2); ignored for zero arguments.
inline CountResult omega_closed(std::uint32_t q, unsigned m, bool alpha_zero, bool beta_zero, std::uint32_t s,
                                std::uint32_t t, FormulaVariant variant = FormulaVariant::corrected) {
  const auto gp = detail::gauss_pair(q, m);
  const long long M = m;
  s %= q;
  t %= q;
  if (alpha_zero && beta_zero) return {0, "alpha=0, beta=0"};
  const Surd base = gp.qpow(2 * M - 3);
  const Surd g2 = gp.g * gp.g;
  Surd v(q);
  std::string branch;
  if (alpha_zero || beta_zero) {
    // Omega(alpha, 0) = Omega(0, alpha): only the nonzero argument's class matters.
    const std::uint32_t r = alpha_zero ? t : s;
    const std::string who = alpha_zero ? "alpha=0" : "beta=0";
    if (!gp.odd()) {
      v = r == 0 ? base + gp.g * gp.num(q - 1) * gp.qpow(M - 3)
                 : base + gp.g * gp.num(2 * q - 1) * gp.qpow(M - 3) + g2 * gp.num(q - 1) * gp.qpow(-2);
    } else if (r == 0) {
      v = base;
    } else {
      const int sign = variant == FormulaVariant::corrected ? -1 : 1;
      v = base + gp.num(sign * legendre(q, -static_cast<std::int64_t>(r))) * gp.g * gp.gbar * gp.qpow(M - 3);
    }
    branch = who + (gp.odd() ? ", m odd" : ", m even") + (r == 0 ? ", trace zero" : ", trace nonzero");
  } else if (!gp.odd()) {
    v = base + gp.num(2) * gp.g * gp.num(q - 1) * gp.qpow(M - 3);
    if (s == 0 && t == 0) {
      branch = "both nonzero, m even, both traces zero";
    } else if (s == 0 || t == 0) {
      v += g2 * gp.num(q - 1) * gp.qpow(-2);
      branch = "both nonzero, m even, one trace zero";
    } else {
      v += g2 * gp.num(q - 2) * gp.qpow(-2);
      branch = "both nonzero, m even, no trace zero";
    }
  } else if (s != 0 && t != 0) {
    v = base - gp.num(legendre(q, static_cast<std::int64_t>(s) * t)) * g2 * gp.gbar * gp.gbar * gp.qpow(-3);
    branch = "both nonzero, m odd, no trace zero";
  } else {
    v = base;
    branch = "both nonzero, m odd, a trace zero";
  }
  return {require_int64(v, "Omega " + branch), branch};
}

inline CountResult omega_oracle(const FieldCtx& ctx, FFElem alpha, FFElem beta, std::uint32_t lambda,
                                const Budget& budget = {}) {
  const std::uint32_t q = ctx.characteristic();
  budget.charge(sat_mul(ctx.size(), ctx.size()), "Omega oracle");
  std::vector<std::uint32_t> zero_trace;
  for (std::uint32_t a = 0; a < ctx.size(); ++a) {
    if (ctx.raw_trace(ctx.raw_mul(a, a)) == 0) zero_trace.push_back(a);
  }
  std::int64_t count = 0;
  for (std::uint32_t a : zero_trace) {
    for (std::uint32_t b : zero_trace) {
      const std::uint32_t v = ctx.raw_add(ctx.raw_mul(alpha.index, b), ctx.raw_mul(beta.index, a));
      count += ctx.raw_trace(v) == lambda % q;
    }
  }
  return {count, "oracle"};
}

inline CountResult omega_lambda(const FieldCtx& ctx, FFElem alpha, FFElem beta, std::uint32_t lambda,
                                EvalMode mode = EvalMode::closed, FormulaVariant variant = FormulaVariant::corrected,
                                const Budget& budget = {}) {
  detail::require_lambda(ctx.characteristic(), lambda);
  if (mode == EvalMode::oracle) return omega_oracle(ctx, alpha, beta, lambda, budget);
  return omega_closed(ctx.characteristic(), ctx.degree(), alpha == ctx.zero(), beta == ctx.zero(),
                      ctx.trace(ctx.mul(alpha, alpha)), ctx.trace(ctx.mul(beta, beta)), variant);
}

}  // namespace ringlee
