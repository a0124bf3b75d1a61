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

// Minimal codewords of the Gray image: support cover, exhaustive scan, and the
// Ashikhmin-Barg weight-ratio test.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ringlee/codes.hpp"
#include "ringlee/error.hpp"
#include "ringlee/exact.hpp"
#include "ringlee/parallel.hpp"

namespace ringlee {

/// s(y) is a subset of s(x).
inline bool covers(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) {
  if (x.size() != y.size()) throw Error(Errc::length_mismatch, "vectors differ in length");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] != 0 && x[i] == 0) return false;
  }
  return true;
}

struct MinimalityReport {
  std::uint64_t w_min = 0;
  std::uint64_t w_max = 0;
  Rational ab_ratio;
  Rational ab_threshold;
  bool ab_holds = false;
  std::optional<std::uint64_t> minimal_count;
  std::optional<bool> all_minimal;
};

inline MinimalityReport ab_check(const LeeSpectrum& spectrum, std::uint32_t q) {
  MinimalityReport r;
  r.w_min = spectrum.min_nonzero_weight();
  r.w_max = spectrum.max_weight();
  r.ab_ratio = Rational(r.w_min) / r.w_max;
  r.ab_threshold = Rational(q - 1) / q;
  r.ab_holds = r.ab_ratio > r.ab_threshold;
  return r;
}

struct PropositionRatio {
  std::vector<Rational> ratios;  // one for odd m, the two displayed forms for even m
  Rational threshold;

  bool all_exceed() const {
    for (const auto& r : ratios) {
      if (!(r > threshold)) return false;
    }
    return true;
  }
};

/// Closed-form w_min / w_max for general q.
inline PropositionRatio proposition_ratio(std::uint32_t q, unsigned m) {
  if (q == 2 || !is_prime(q)) throw Error(Errc::non_prime, "q must be an odd prime");
  const long long M = m;
  const auto qp = [&](long long e) { return rational_pow(q, e); };
  PropositionRatio out;
  out.threshold = Rational(q - 1) / q;
  const Rational c = 2 * Rational(q - 1);
  if (m % 2 == 1) {
    if (m < 3) throw Error(Errc::unsupported_parameters, "odd branch needs m >= 3");
    const Rational a = qp(2 * M - 3), b = qp((3 * M - 5) / 2);
    out.ratios.push_back((c * (a - b)) / (c * (a + b)));
  } else {
    if (m < 2) throw Error(Errc::unsupported_parameters, "even branch needs m >= 2");
    const Rational a = qp(2 * M - 3), h = qp((3 * M - 6) / 2), k = qp(M - 2);
    const Rational qm1 = q - 1;
    const Rational den2 = c * a - c * qm1 * h;
    if (den2 <= 0) throw Error(Errc::unsupported_parameters, "second ratio has a nonpositive denominator");
    out.ratios.push_back((c * a + c * qm1 * h) / (c * a + c * (2 * Rational(q) - 1) * h + c * qm1 * k));
    out.ratios.push_back((c * a - c * (2 * Rational(q) - 1) * h + c * qm1 * k) / den2);
  }
  return out;
}

struct MinimalScan {
  std::uint64_t minimal_count = 0;   // nonzero codewords
  std::uint64_t codewords = 0;       // nonzero codewords scanned
  std::uint64_t support_classes = 0;
  std::uint64_t minimal_classes = 0;
  bool all_minimal() const noexcept { return minimal_count == codewords; }
};

/// A nonzero codeword is minimal when no nonzero codeword has a strictly smaller
/// support inside its own. Codewords sharing a support (scalar multiples among
/// them) do not disqualify each other, so the scan runs over support classes.
inline MinimalScan minimal_codewords_exhaustive(const DefiningSet& d, const EnumOptions& opt = {}) {
  const std::uint64_t msgs = sat_mul(d.ctx->size(), d.ctx->size());
  const std::size_t width = 2 * d.size();
  const std::size_t words = (width + 63) / 64;
  opt.budget.charge(sat_mul(sat_mul(msgs, msgs), std::max<std::size_t>(words, 1)), "minimality scan");
  const TraceTables tables(d, opt.budget);

  std::map<std::vector<std::uint64_t>, std::uint64_t> classes;
  std::vector<std::uint8_t> buf(width);
  MinimalScan out;
  for (std::uint64_t k = 1; k < msgs; ++k) {
    tables.gray(k, buf.data());
    std::vector<std::uint64_t> support(words, 0);
    bool nonzero = false;
    for (std::size_t i = 0; i < width; ++i) {
      if (buf[i] != 0) {
        support[i / 64] |= std::uint64_t{1} << (i % 64);
        nonzero = true;
      }
    }
    if (!nonzero) continue;  // x != 0 mapping to the zero word
    ++out.codewords;
    ++classes[std::move(support)];
  }

  std::vector<const std::vector<std::uint64_t>*> sup;
  std::vector<std::uint64_t> mult;
  for (const auto& [s, f] : classes) {
    sup.push_back(&s);
    mult.push_back(f);
  }
  const std::size_t nc = sup.size();
  std::vector<std::uint8_t> minimal(nc, 1);
  parallel_for(nc, opt.threads, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    for (std::uint64_t x = begin; x < end; ++x) {
      for (std::size_t y = 0; y < nc && minimal[x]; ++y) {
        if (y == x) continue;
        bool inside = true;
        for (std::size_t w = 0; w < words && inside; ++w) inside = ((*sup[y])[w] & ~(*sup[x])[w]) == 0;
        if (inside) minimal[x] = 0;  // distinct classes, so the inclusion is proper
      }
    }
  });
  out.support_classes = nc;
  for (std::size_t x = 0; x < nc; ++x) {
    if (minimal[x]) {
      ++out.minimal_classes;
      out.minimal_count += mult[x];
    }
  }
  return out;
}

/// Weight-ratio test, plus the exhaustive scan when requested.
inline MinimalityReport minimality_report(const DefiningSet& d, bool exhaustive, const EnumOptions& opt = {}) {
  MinimalityReport r = ab_check(lee_spectrum_bruteforce(d, opt), d.ctx->characteristic());
  if (exhaustive) {
    const MinimalScan scan = minimal_codewords_exhaustive(d, opt);
    r.minimal_count = scan.minimal_count;
    r.all_minimal = scan.all_minimal();
  }
  return r;
}

}  // namespace ringlee
