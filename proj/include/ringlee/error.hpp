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

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ringlee {

enum class Errc {
  non_prime,
  even_characteristic,
  degree_zero,
  zero_inverse,
  context_mismatch,
  extension_context,
  budget_exceeded,
  zero_leading_coefficient,
  zero_parameter,
  unsupported_parameters,
  non_integral_exponent,
  length_mismatch,
  degenerate_spectrum,
  integrality_violation,
  invalid_argument,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::non_prime: return "NonPrime";
    case Errc::even_characteristic: return "EvenCharacteristic";
    case Errc::degree_zero: return "DegreeZero";
    case Errc::zero_inverse: return "ZeroInverse";
    case Errc::context_mismatch: return "ContextMismatch";
    case Errc::extension_context: return "ExtensionContext";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::zero_leading_coefficient: return "ZeroLeadingCoefficient";
    case Errc::zero_parameter: return "ZeroParameter";
    case Errc::unsupported_parameters: return "UnsupportedParameters";
    case Errc::non_integral_exponent: return "NonIntegralExponent";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::degenerate_spectrum: return "DegenerateSpectrum";
    case Errc::integrality_violation: return "IntegralityViolation";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Saturating product, used when estimating enumeration sizes.
constexpr std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

constexpr std::uint64_t sat_pow(std::uint64_t base, unsigned exp) noexcept {
  std::uint64_t r = 1;
  while (exp-- > 0) r = sat_mul(r, base);
  return r;
}

/// Cap on elementary enumeration steps. Exceeding it is always an error,
/// never a silent truncation.
struct Budget {
  std::uint64_t max_ops = 1'000'000'000;

  void charge(std::uint64_t ops, std::string_view what) const {
    if (ops > max_ops) {
      throw Error(Errc::budget_exceeded, std::string(what) + " needs " + std::to_string(ops) +
                                             " steps, budget is " + std::to_string(max_ops));
    }
  }
};

}  // namespace ringlee
