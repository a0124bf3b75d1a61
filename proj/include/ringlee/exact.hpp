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

// Exact arithmetic in Q(sqrt(q), i), enough to carry quadratic Gauss sums of
// F_q and F_{q^m} through the counting formulas without rounding.

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include "ringlee/error.hpp"

namespace ringlee {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_pow(std::uint32_t q, long long e) {
  Rational r = 1;
  const Rational base = (e >= 0) ? Rational(q) : Rational(1) / Rational(q);
  for (long long k = 0; k < (e >= 0 ? e : -e); ++k) r *= base;
  return r;
}

/// c0 + c1*s + c2*i + c3*i*s with s = sqrt(q).
class Surd {
 public:
  explicit Surd(std::uint32_t q, Rational value = 0) : q_(q) { c_[0] = std::move(value); }

  static Surd sqrt_q(std::uint32_t q) {
    Surd r(q);
    r.c_[1] = 1;
    return r;
  }
  static Surd imag_unit(std::uint32_t q) {
    Surd r(q);
    r.c_[2] = 1;
    return r;
  }

  std::uint32_t q() const noexcept { return q_; }
  const Rational& coeff(unsigned k) const { return c_.at(k); }

  Surd& operator+=(const Surd& o) {
    for (unsigned k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Surd& operator-=(const Surd& o) {
    for (unsigned k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Surd& operator*=(const Rational& r) {
    for (auto& c : c_) c *= r;
    return *this;
  }
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator-(Surd a) {
    a *= Rational(-1);
    return a;
  }
  friend Surd operator*(Surd a, const Rational& r) { return a *= r; }
  friend Surd operator*(const Rational& r, Surd a) { return a *= r; }

  // Basis index bit 0 carries s, bit 1 carries i; s^2 = q, i^2 = -1.
  friend Surd operator*(const Surd& a, const Surd& b) {
    Surd r(a.q_);
    for (unsigned j = 0; j < 4; ++j) {
      if (a.c_[j] == 0) continue;
      for (unsigned k = 0; k < 4; ++k) {
        if (b.c_[k] == 0) continue;
        Rational f = a.c_[j] * b.c_[k];
        if ((j & k & 1u) != 0) f *= a.q_;
        if ((j & k & 2u) != 0) f = -f;
        r.c_[j ^ k] += f;
      }
    }
    return r;
  }

  Surd pow(unsigned e) const {
    Surd r(q_, 1);
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
  }

  friend bool operator==(const Surd& a, const Surd& b) { return a.q_ == b.q_ && a.c_ == b.c_; }

  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_integer() const { return is_rational() && denominator(c_[0]) == 1; }

  std::complex<double> embed() const {
    const double s = std::sqrt(static_cast<double>(q_));
    const double c0 = static_cast<double>(c_[0]);
    const double c1 = static_cast<double>(c_[1]);
    const double c2 = static_cast<double>(c_[2]);
    const double c3 = static_cast<double>(c_[3]);
    return {c0 + c1 * s, c2 + c3 * s};
  }

  std::string str() const {
    static constexpr std::array<std::string_view, 4> basis{"", "*sqrt(q)", "*i", "*i*sqrt(q)"};
    std::string out;
    for (unsigned k = 0; k < 4; ++k) {
      if (c_[k] == 0) continue;
      if (!out.empty()) out += " + ";
      out += c_[k].str() + std::string(basis[k]);
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::uint32_t q_;
  std::array<Rational, 4> c_{};
};

/// Integer value of an exact expression; anything else means a formula is off.
inline BigInt require_integer(const Surd& v, std::string_view where) {
  if (!v.is_integer()) {
    throw Error(Errc::integrality_violation, std::string(where) + " evaluated to " + v.str());
  }
  return numerator(v.coeff(0));
}

inline std::int64_t require_int64(const Surd& v, std::string_view where) {
  return static_cast<std::int64_t>(require_integer(v, where));
}

}  // namespace ringlee
