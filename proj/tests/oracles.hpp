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

// Reference implementations used only by the tests. Nothing here touches the
// library's tables or trace shortcuts: plain polynomial arithmetic over F_q,
// the Frobenius definition of the trace, and direct complex summation.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

using Poly = std::vector<std::uint32_t>;  // low degree first

inline Poly digits(std::uint64_t index, std::uint32_t q, unsigned m) {
  Poly p(m, 0);
  for (unsigned i = 0; i < m; ++i, index /= q) p[i] = static_cast<std::uint32_t>(index % q);
  return p;
}

inline std::uint64_t undigits(const Poly& p, std::uint32_t q) {
  std::uint64_t idx = 0;
  for (std::size_t i = p.size(); i-- > 0;) idx = idx * q + p[i];
  return idx;
}

// Remainder of a modulo monic mod.
inline Poly reduce(Poly a, const Poly& mod, std::uint32_t q) {
  const std::size_t m = mod.size() - 1;
  for (std::size_t d = a.size(); d-- > m;) {
    const std::uint64_t c = a[d];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= m; ++k) {
      a[d - m + k] = static_cast<std::uint32_t>((a[d - m + k] + (q - c) * mod[k]) % q);
    }
  }
  a.resize(m, 0);
  return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t q) {
  Poly r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % q);
  return reduce(r, mod, q);
}

inline Poly powmod(Poly a, std::uint64_t e, const Poly& mod, std::uint32_t q) {
  Poly r(mod.size() - 1, 0);
  r[0] = 1;
  while (e > 0) {
    if (e & 1u) r = mulmod(r, a, mod, q);
    a = mulmod(a, a, mod, q);
    e >>= 1;
  }
  return r;
}

// Remainder of a by a monic-or-not divisor, both low first; true iff zero.
inline bool divisible(Poly a, Poly d, std::uint32_t q) {
  while (!d.empty() && d.back() == 0) d.pop_back();
  std::uint64_t lead_inv = 1;
  for (std::uint32_t k = 1; k < q; ++k)
    if (std::uint64_t{d.back()} * k % q == 1) lead_inv = k;
  const std::size_t dd = d.size() - 1;
  for (std::size_t i = a.size(); i-- > dd;) {
    const std::uint64_t c = a[i] * lead_inv % q;
    if (c == 0) continue;
    for (std::size_t k = 0; k <= dd; ++k) a[i - dd + k] = static_cast<std::uint32_t>((a[i - dd + k] + (q - c) * d[k]) % q);
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (a[i] != 0) return false;
  return true;
}

// Trial division by every monic polynomial of degree 1 .. deg/2.
inline bool irreducible(const Poly& p, std::uint32_t q) {
  const unsigned deg = static_cast<unsigned>(p.size() - 1);
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (unsigned k = 0; k < d; ++k) count *= q;
    for (std::uint64_t k = 0; k < count; ++k) {
      Poly f = digits(k, q, d);
      f.push_back(1);
      if (divisible(p, f, q)) return false;
    }
  }
  return true;
}

// Monic degree-m polynomials in order of (c_0, c_1, ..., c_{m-1}), c_0 most significant.
inline Poly smallest_irreducible(std::uint32_t q, unsigned m) {
  std::uint64_t count = 1;
  for (unsigned k = 0; k < m; ++k) count *= q;
  for (std::uint64_t k = 0; k < count; ++k) {
    Poly p(m + 1, 0);
    std::uint64_t v = k;
    for (unsigned i = m; i-- > 0; v /= q) p[i] = static_cast<std::uint32_t>(v % q);
    p[m] = 1;
    if (irreducible(p, q)) return p;
  }
  return {};
}

/// A small field model built from the same modulus as the library.
struct Model {
  std::uint32_t q;
  unsigned m;
  Poly mod;
  std::uint64_t size;

  Model(std::uint32_t q_, unsigned m_, Poly mod_) : q(q_), m(m_), mod(std::move(mod_)), size(1) {
    for (unsigned k = 0; k < m; ++k) size *= q;
  }

  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const {
    return undigits(mulmod(digits(x, q, m), digits(y, q, m), mod, q), q);
  }
  std::uint64_t pow(std::uint64_t x, std::uint64_t e) const {
    return undigits(powmod(digits(x, q, m), e, mod, q), q);
  }
  std::uint64_t add(std::uint64_t x, std::uint64_t y) const {
    Poly a = digits(x, q, m), b = digits(y, q, m);
    for (unsigned i = 0; i < m; ++i) a[i] = (a[i] + b[i]) % q;
    return undigits(a, q);
  }
  /// x + x^q + ... + x^{q^{m-1}}; returns -1 if it leaves the prime field.
  long long trace(std::uint64_t x) const {
    std::uint64_t acc = 0, conj = x;
    for (unsigned i = 0; i < m; ++i) {
      acc = add(acc, conj);
      conj = pow(conj, q);
    }
    return acc < q ? static_cast<long long>(acc) : -1;
  }
  int euler(std::uint64_t x) const {
    if (x == 0) return 0;
    return pow(x, (size - 1) / 2) == 1 ? 1 : -1;
  }
  std::complex<double> gauss() const {
    std::complex<double> g = 0;
    for (std::uint64_t r = 1; r < size; ++r) {
      g += static_cast<double>(euler(r)) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(trace(r)) / q);
    }
    return g;
  }
};

inline int legendre(std::uint32_t q, long long s) {
  const std::uint32_t r = static_cast<std::uint32_t>(((s % q) + q) % q);
  if (r == 0) return 0;
  for (std::uint32_t y = 1; y < q; ++y)
    if (std::uint64_t{y} * y % q == r) return 1;
  return -1;
}

}  // namespace oracle
