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

// R_m = F_{q^m} + u F_{q^m} with u^2 = 1.
//
// Elements stay in the (1, u) basis so the Gray map reads off coordinates
// directly. Multiplication goes through the idempotent split
// e1 = (1+u)/2, e2 = (1-u)/2, which turns R_m into F_{q^m} x F_{q^m}.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ringlee/error.hpp"
#include "ringlee/gf.hpp"

namespace ringlee {

struct RingElem {
  FFElem a;  // coordinate of 1
  FFElem b;  // coordinate of u

  friend constexpr bool operator==(const RingElem&, const RingElem&) = default;
};

struct RingVector {
  std::vector<RingElem> elems;

  std::size_t size() const noexcept { return elems.size(); }
  const RingElem& operator[](std::size_t i) const { return elems[i]; }
  friend bool operator==(const RingVector&, const RingVector&) = default;
};

enum class Ideal {
  u_minus_1,  // <u - 1> = { a + ub : a + b = 0 }
  u_plus_1,   // <u + 1> = { a + ub : a = b }
};

class Ring {
 public:
  explicit Ring(Field field) : field_(std::move(field)), base_(make_field(field_->characteristic(), 1)) {
    half_ = (field_->characteristic() + 1) / 2;
  }

  const Field& field() const noexcept { return field_; }
  const Field& base() const noexcept { return base_; }
  std::uint32_t characteristic() const noexcept { return field_->characteristic(); }

  RingElem make(FFElem a, FFElem b) const {
    check(a);
    check(b);
    return {a, b};
  }
  RingElem zero() const noexcept { return {field_->zero(), field_->zero()}; }
  RingElem one() const noexcept { return {field_->one(), field_->zero()}; }
  RingElem u() const noexcept { return {field_->zero(), field_->one()}; }

  RingElem add(const RingElem& x, const RingElem& y) const {
    return {field_->add(x.a, y.a), field_->add(x.b, y.b)};
  }
  RingElem sub(const RingElem& x, const RingElem& y) const {
    return {field_->sub(x.a, y.a), field_->sub(x.b, y.b)};
  }
  RingElem neg(const RingElem& x) const { return {field_->neg(x.a), field_->neg(x.b)}; }
  RingElem scale(std::uint32_t c, const RingElem& x) const { return {field_->scale(c, x.a), field_->scale(c, x.b)}; }

  /// (a + ub)(c + ud) = (ac + bd) + u(ad + bc), evaluated componentwise in the split.
  RingElem mul(const RingElem& x, const RingElem& y) const {
    const auto [x1, x2] = split(x);
    const auto [y1, y2] = split(y);
    return join(field_->mul(x1, y1), field_->mul(x2, y2));
  }

  /// Components (a + b, a - b) along e1 and e2.
  std::pair<FFElem, FFElem> split(const RingElem& x) const {
    return {field_->add(x.a, x.b), field_->sub(x.a, x.b)};
  }
  RingElem join(FFElem e1, FFElem e2) const {
    return {field_->scale(half_, field_->add(e1, e2)), field_->scale(half_, field_->sub(e1, e2))};
  }

  /// F(r + us) = r^q + u s^q.
  RingElem frobenius(const RingElem& x) const {
    const std::uint32_t q = characteristic();
    return {field_->pow(x.a, q), field_->pow(x.b, q)};
  }

  /// tr(r + us) = Tr(r) + u Tr(s), landing in the base ring F_q + uF_q.
  RingElem trace(const RingElem& x) const {
    return {base_->from_residue(field_->trace(x.a)), base_->from_residue(field_->trace(x.b))};
  }

  bool in_ideal(const RingElem& x, Ideal which) const {
    const auto [e1, e2] = split(x);
    return which == Ideal::u_minus_1 ? e1 == field_->zero() : e2 == field_->zero();
  }
  bool is_unit(const RingElem& x) const {
    return !in_ideal(x, Ideal::u_minus_1) && !in_ideal(x, Ideal::u_plus_1);
  }

  RingVector add(const RingVector& x, const RingVector& y) const {
    require_same_length(x, y);
    RingVector out;
    out.elems.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.elems.push_back(add(x[i], y[i]));
    return out;
  }
  RingVector sub(const RingVector& x, const RingVector& y) const {
    require_same_length(x, y);
    RingVector out;
    out.elems.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.elems.push_back(sub(x[i], y[i]));
    return out;
  }
  RingVector scale(std::uint32_t c, const RingVector& x) const {
    RingVector out;
    out.elems.reserve(x.size());
    for (const auto& e : x.elems) out.elems.push_back(scale(c, e));
    return out;
  }

 private:
  void check(FFElem x) const {
    if (x.tag != field_->tag()) throw Error(Errc::context_mismatch, "ring coordinates from another field");
  }
  static void require_same_length(const RingVector& x, const RingVector& y) {
    if (x.size() != y.size()) throw Error(Errc::length_mismatch, "ring vectors differ in length");
  }

  Field field_;
  Field base_;
  std::uint32_t half_;
};

namespace detail {

inline void require_base_ring(const RingVector& x) {
  if (x.elems.empty()) return;
  const std::uint32_t tag = x.elems.front().a.tag;
  if ((tag & 0xFFu) != 1) throw Error(Errc::extension_context, "Gray map is defined on F_q + uF_q only");
  for (const auto& e : x.elems) {
    if (e.a.tag != tag || e.b.tag != tag) throw Error(Errc::context_mismatch, "mixed contexts in ring vector");
  }
}

}  // namespace detail

/// phi(r + us) = (r, s), applied coordinatewise: length n -> 2n.
inline std::vector<std::uint32_t> gray_map(const RingVector& x) {
  detail::require_base_ring(x);
  std::vector<std::uint32_t> out;
  out.reserve(2 * x.size());
  for (const auto& e : x.elems) {
    out.push_back(e.a.index);
    out.push_back(e.b.index);
  }
  return out;
}

inline std::uint64_t hamming_weight(std::span<const std::uint32_t> v) noexcept {
  std::uint64_t w = 0;
  for (auto c : v) w += (c != 0);
  return w;
}

inline std::uint64_t hamming_distance(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) {
  if (x.size() != y.size()) throw Error(Errc::length_mismatch, "vectors differ in length");
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += (x[i] != y[i]);
  return d;
}

/// w_L(r + us) = w_H(r) + w_H(s).
inline std::uint64_t lee_weight(const RingVector& x) {
  detail::require_base_ring(x);
  std::uint64_t w = 0;
  for (const auto& e : x.elems) w += (e.a.index != 0) + (e.b.index != 0);
  return w;
}

inline std::uint64_t lee_distance(const Ring& base_ring, const RingVector& x, const RingVector& y) {
  return lee_weight(base_ring.sub(x, y));
}

}  // namespace ringlee
