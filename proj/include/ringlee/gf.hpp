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

// Arithmetic in F_q and F_{q^m} for odd primes q.
//
// Elements are stored as an index: the polynomial-basis coordinates
// (c_0, ..., c_{m-1}) of c_0 + c_1 x + ... + c_{m-1} x^{m-1} read as base-q
// digits with c_0 least significant. The prime subfield therefore occupies
// indices [0, q), and "canonical order" on elements is plain index order.
//
// The modulus is the lexicographically smallest monic irreducible polynomial,
// coefficients compared from the constant term upwards; the generator is the
// smallest index of full multiplicative order. Both are deterministic.

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "ringlee/error.hpp"

namespace ringlee {

inline constexpr unsigned kMaxDegree = 24;

struct FFElem {
  std::uint32_t index = 0;
  std::uint32_t tag = 0;  // identifies the (q, m) the element belongs to

  friend constexpr bool operator==(FFElem, FFElem) = default;
  friend constexpr auto operator<=>(FFElem, FFElem) = default;
};

/// zeta_q^exponent, kept exact; value() is only for comparison boundaries.
struct RootOfUnity {
  std::uint32_t exponent = 0;
  std::uint32_t order = 1;

  std::complex<double> value() const {
    return std::polar(1.0, 2.0 * std::numbers::pi * exponent / order);
  }
  friend constexpr bool operator==(RootOfUnity, RootOfUnity) = default;
};

struct FieldOptions {
  /// Log/antilog tables are built when q^m does not exceed this.
  std::uint64_t table_limit = std::uint64_t{1} << 20;
};

constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Distinct prime factors by trial division.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

constexpr std::uint32_t field_tag(std::uint32_t q, unsigned m) noexcept { return (q << 8) | m; }

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

Field make_field(std::uint32_t q, unsigned m, FieldOptions options = {});

class FieldCtx {
  struct Key {
    explicit Key() = default;
  };
  friend Field make_field(std::uint32_t, unsigned, FieldOptions);

 public:
  using Coeffs = std::array<std::uint32_t, kMaxDegree>;

  FieldCtx(Key, std::uint32_t q, unsigned m, FieldOptions options);

  std::uint32_t characteristic() const noexcept { return q_; }
  unsigned degree() const noexcept { return m_; }
  std::uint32_t size() const noexcept { return size_; }
  std::uint32_t tag() const noexcept { return field_tag(q_, m_); }
  bool has_tables() const noexcept { return !exp_.empty(); }

  /// Monic modulus, coefficients from the constant term up (length m + 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  FFElem generator() const noexcept { return wrap(generator_); }

  FFElem zero() const noexcept { return wrap(0); }
  FFElem one() const noexcept { return wrap(1); }
  /// Embeds a residue of the prime subfield.
  FFElem from_residue(std::uint64_t r) const noexcept { return wrap(static_cast<std::uint32_t>(r % q_)); }
  FFElem element(std::uint64_t index) const {
    if (index >= size_) throw Error(Errc::context_mismatch, "index " + std::to_string(index) + " outside field");
    return wrap(static_cast<std::uint32_t>(index));
  }
  FFElem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FFElem x) const;

  FFElem add(FFElem x, FFElem y) const { return wrap(raw_add(check(x), check(y))); }
  FFElem sub(FFElem x, FFElem y) const { return wrap(raw_sub(check(x), check(y))); }
  FFElem neg(FFElem x) const { return wrap(raw_neg(check(x))); }
  FFElem mul(FFElem x, FFElem y) const { return wrap(raw_mul(check(x), check(y))); }
  FFElem scale(std::uint32_t c, FFElem x) const { return wrap(raw_scale(c % q_, check(x))); }
  FFElem inv(FFElem x) const;
  FFElem pow(FFElem x, std::uint64_t e) const { return wrap(raw_pow(check(x), e)); }

  /// Absolute trace to F_q.
  std::uint32_t trace(FFElem x) const { return raw_trace(check(x)); }
  /// Quadratic character, eta(0) = 0.
  int quad_char(FFElem x) const { return raw_quad_char(check(x)); }
  /// chi_a(x) = zeta_q^{Tr(a x)}.
  RootOfUnity add_char(FFElem a, FFElem x) const {
    return RootOfUnity{raw_trace(raw_mul(check(a), check(x))), q_};
  }
  /// Multiplicative order of a nonzero element.
  std::uint64_t order(FFElem x) const;

  // Unchecked index-level operations for enumeration loops.
  std::uint32_t raw_add(std::uint32_t x, std::uint32_t y) const noexcept;
  std::uint32_t raw_sub(std::uint32_t x, std::uint32_t y) const noexcept { return raw_add(x, raw_neg(y)); }
  std::uint32_t raw_neg(std::uint32_t x) const noexcept;
  std::uint32_t raw_scale(std::uint32_t c, std::uint32_t x) const noexcept;
  std::uint32_t raw_mul(std::uint32_t x, std::uint32_t y) const noexcept {
    if (x == 0 || y == 0) return 0;
    if (has_tables()) return exp_[log_[x] + log_[y]];
    return mul_slow(x, y);
  }
  std::uint32_t raw_pow(std::uint32_t x, std::uint64_t e) const noexcept;
  std::uint32_t raw_trace(std::uint32_t x) const noexcept {
    std::uint64_t t = 0;
    for (unsigned i = 0; i < m_; ++i) {
      t += static_cast<std::uint64_t>(x % q_) * basis_trace_[i];
      x /= q_;
    }
    return static_cast<std::uint32_t>(t % q_);
  }
  int raw_quad_char(std::uint32_t x) const noexcept {
    if (x == 0) return 0;
    if (has_tables()) return (log_[x] & 1u) ? -1 : 1;
    return raw_pow(x, (size_ - 1) / 2) == 1 ? 1 : -1;
  }

 private:
  FFElem wrap(std::uint32_t index) const noexcept { return FFElem{index, tag()}; }
  std::uint32_t check(FFElem x) const {
    if (x.tag != tag() || x.index >= size_) {
      throw Error(Errc::context_mismatch, "element does not belong to F_" + std::to_string(q_) + "^" +
                                              std::to_string(m_));
    }
    return x.index;
  }
  Coeffs split(std::uint32_t x) const noexcept {
    Coeffs c{};
    for (unsigned i = 0; i < m_; ++i) {
      c[i] = x % q_;
      x /= q_;
    }
    return c;
  }
  std::uint32_t join(const Coeffs& c) const noexcept {
    std::uint32_t x = 0;
    for (unsigned i = m_; i-- > 0;) x = x * q_ + c[i];
    return x;
  }
  std::uint32_t mul_slow(std::uint32_t x, std::uint32_t y) const noexcept;
  static std::vector<std::uint32_t> smallest_irreducible(std::uint32_t q, unsigned m);
  std::uint32_t smallest_generator() const;

  std::uint32_t q_;
  unsigned m_;
  std::uint32_t size_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t generator_ = 0;
  std::array<std::uint32_t, kMaxDegree> basis_trace_{};
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;  // doubled so exp_[log x + log y] needs no reduction
};

// --- polynomial helpers over F_q (coefficients low-degree-first) ---

namespace detail {

// Remainder of `num` modulo the monic `den`, in place; returns true when it is zero.
inline bool divides(std::vector<std::uint32_t> num, const std::vector<std::uint32_t>& den, std::uint32_t q) {
  const std::size_t d = den.size() - 1;
  for (std::size_t i = num.size(); i-- > d;) {
    const std::uint32_t c = num[i];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= d; ++k) {
      num[i - d + k] = static_cast<std::uint32_t>((num[i - d + k] + static_cast<std::uint64_t>(q - c) * den[k]) % q);
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (num[i] != 0) return false;
  }
  return true;
}

// Exhaustive search for a monic factor of degree 1..deg/2.
inline bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t q) {
  const unsigned m = static_cast<unsigned>(poly.size() - 1);
  if (m <= 1) return true;
  if (poly[0] == 0) return false;
  for (unsigned d = 1; d <= m / 2; ++d) {
    std::vector<std::uint32_t> cand(d + 1, 0);
    cand[d] = 1;
    const std::uint64_t count = sat_pow(q, d);
    for (std::uint64_t t = 0; t < count; ++t) {
      std::uint64_t r = t;
      for (unsigned i = 0; i < d; ++i) {
        cand[i] = static_cast<std::uint32_t>(r % q);
        r /= q;
      }
      if (divides(poly, cand, q)) return false;
    }
  }
  return true;
}

}  // namespace detail

inline std::vector<std::uint32_t> FieldCtx::smallest_irreducible(std::uint32_t q, unsigned m) {
  std::vector<std::uint32_t> poly(m + 1, 0);
  poly[m] = 1;
  const std::uint64_t count = sat_pow(q, m);
  // Candidate t lists (c_0, ..., c_{m-1}) with c_0 most significant, so t order is
  // the low-degree-first lexicographic order.
  for (std::uint64_t t = 0; t < count; ++t) {
    std::uint64_t r = t;
    for (unsigned i = m; i-- > 0;) {
      poly[i] = static_cast<std::uint32_t>(r % q);
      r /= q;
    }
    if (detail::is_irreducible(poly, q)) return poly;
  }
  throw Error(Errc::invalid_argument, "no irreducible polynomial found");  // unreachable for prime q
}

inline std::uint32_t FieldCtx::mul_slow(std::uint32_t x, std::uint32_t y) const noexcept {
  const Coeffs a = split(x);
  const Coeffs b = split(y);
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (unsigned i = 0; i < m_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) prod[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
  }
  for (unsigned i = 0; i + 1 < 2 * m_; ++i) prod[i] %= q_;
  for (unsigned d = 2 * m_ - 1; d-- > m_;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (unsigned k = 0; k < m_; ++k) prod[d - m_ + k] = (prod[d - m_ + k] + (q_ - c) * modulus_[k]) % q_;
    prod[d] = 0;
  }
  Coeffs out{};
  for (unsigned i = 0; i < m_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return join(out);
}

inline std::uint32_t FieldCtx::raw_add(std::uint32_t x, std::uint32_t y) const noexcept {
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (unsigned i = 0; i < m_; ++i) {
    std::uint32_t d = x % q_ + y % q_;
    if (d >= q_) d -= q_;
    out += d * place;
    place *= q_;
    x /= q_;
    y /= q_;
  }
  return out;
}

inline std::uint32_t FieldCtx::raw_neg(std::uint32_t x) const noexcept { return raw_scale(q_ - 1, x); }

inline std::uint32_t FieldCtx::raw_scale(std::uint32_t c, std::uint32_t x) const noexcept {
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += static_cast<std::uint32_t>((static_cast<std::uint64_t>(x % q_) * c) % q_) * place;
    place *= q_;
    x /= q_;
  }
  return out;
}

inline std::uint32_t FieldCtx::raw_pow(std::uint32_t x, std::uint64_t e) const noexcept {
  if (has_tables() && x != 0) {
    const std::uint64_t k = (static_cast<std::uint64_t>(log_[x]) * (e % (size_ - 1))) % (size_ - 1);
    return exp_[k];
  }
  std::uint32_t result = 1;
  while (e > 0) {
    if (e & 1u) result = raw_mul(result, x);
    x = raw_mul(x, x);
    e >>= 1;
  }
  return result;
}

inline FFElem FieldCtx::inv(FFElem x) const {
  const std::uint32_t i = check(x);
  if (i == 0) throw Error(Errc::zero_inverse, "inverse of zero");
  if (has_tables()) return wrap(exp_[(size_ - 1 - log_[i]) % (size_ - 1)]);
  return wrap(raw_pow(i, size_ - 2));
}

inline std::uint64_t FieldCtx::order(FFElem x) const {
  const std::uint32_t i = check(x);
  if (i == 0) throw Error(Errc::zero_inverse, "order of zero");
  std::uint64_t ord = size_ - 1;
  for (std::uint64_t p : prime_factors(size_ - 1)) {
    while (ord % p == 0 && raw_pow(i, ord / p) == 1) ord /= p;
  }
  return ord;
}

inline std::uint32_t FieldCtx::smallest_generator() const {
  const auto factors = prime_factors(size_ - 1);
  for (std::uint32_t g = 1; g < size_; ++g) {
    bool full = true;
    for (std::uint64_t p : factors) {
      if (raw_pow(g, (size_ - 1) / p) == 1) {
        full = false;
        break;
      }
    }
    if (full) return g;
  }
  throw Error(Errc::invalid_argument, "no generator found");  // unreachable for a field
}

inline FieldCtx::FieldCtx(Key, std::uint32_t q, unsigned m, FieldOptions options)
    : q_(q), m_(m), size_(static_cast<std::uint32_t>(sat_pow(q, m))), modulus_(smallest_irreducible(q, m)) {
  generator_ = smallest_generator();
  if (size_ <= options.table_limit) {
    log_.assign(size_, 0);
    exp_.assign(2 * static_cast<std::size_t>(size_ - 1), 0);
    std::uint32_t v = 1;
    for (std::uint32_t k = 0; k < size_ - 1; ++k) {
      exp_[k] = v;
      exp_[k + size_ - 1] = v;
      log_[v] = k;
      v = mul_slow(v, generator_);
    }
  }
  // Tr(x^i) through the Frobenius sum; everything else uses linearity.
  std::uint32_t xi = 1;
  for (unsigned i = 0; i < m_; ++i) {
    std::uint32_t acc = 0;
    std::uint32_t conj = xi;
    for (unsigned j = 0; j < m_; ++j) {
      acc = raw_add(acc, conj);
      conj = raw_pow(conj, q_);
    }
    if (acc >= q_) throw Error(Errc::invalid_argument, "trace left the prime field; modulus is not irreducible");
    basis_trace_[i] = acc;
    xi = (m_ == 1) ? 0 : raw_mul(xi, static_cast<std::uint32_t>(q_));  // index q is the element x
  }
}

inline FFElem FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != m_) throw Error(Errc::context_mismatch, "coefficient vector has wrong length");
  Coeffs c{};
  for (unsigned i = 0; i < m_; ++i) {
    if (coeffs[i] >= q_) throw Error(Errc::context_mismatch, "coefficient outside [0, q)");
    c[i] = coeffs[i];
  }
  return wrap(join(c));
}

inline std::vector<std::uint32_t> FieldCtx::coeffs(FFElem x) const {
  const Coeffs c = split(check(x));
  return {c.begin(), c.begin() + m_};
}

inline Field make_field(std::uint32_t q, unsigned m, FieldOptions options) {
  if (m == 0) throw Error(Errc::degree_zero, "extension degree must be at least 1");
  if (q == 2) throw Error(Errc::even_characteristic, "characteristic 2 is not supported");
  if (!is_prime(q)) throw Error(Errc::non_prime, std::to_string(q) + " is not prime");
  if (q > 65521 || m > kMaxDegree || sat_pow(q, m) > 0xFFFFFFFFull) {
    throw Error(Errc::unsupported_parameters, "q^m does not fit the 32-bit element index");
  }
  return std::make_shared<const FieldCtx>(FieldCtx::Key{}, q, m, options);
}

}  // namespace ringlee
