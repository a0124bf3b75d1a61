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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ringlee/charsums.hpp"

using namespace ringlee;

namespace {

const std::vector<std::pair<std::uint32_t, unsigned>> kLemmaParams = {{3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}};

oracle::Model model_of(const FieldCtx& f) { return {f.characteristic(), f.degree(), f.modulus()}; }

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::invalid_argument;
}

}  // namespace

TEST(GaussValue, ClosedValues) {
  const GaussValue gbar = gauss_closed(3, 1);
  EXPECT_EQ(gbar.sign, 1);
  EXPECT_EQ(gbar.i_power, 1u);
  EXPECT_EQ(gbar.q_half_exp, 1u);
  const GaussValue g2 = gauss_closed(3, 2);
  EXPECT_EQ(g2.exact(), Surd(3, 3));
  const GaussValue g3 = gauss_closed(3, 3);
  EXPECT_EQ(g3.exact(), Rational(-3) * Surd::sqrt_q(3) * Surd::imag_unit(3));
  EXPECT_EQ(gauss_closed(3, 4).exact(), Surd(3, -9));
  EXPECT_EQ(gauss_closed(5, 2).exact(), Surd(5, -5));
}

TEST(GaussValue, MatchesDirectSummation) {
  for (auto [q, m] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}, {7, 1}, {7, 2}}) {
    const Field f = make_field(q, m);
    const auto direct = model_of(*f).gauss();
    const auto closed = gauss_sum(*f, SumLevel::extension, EvalMode::closed).value;
    const auto oracle = gauss_sum(*f, SumLevel::extension, EvalMode::oracle).value;
    const double qm = std::pow(double(q), m);
    EXPECT_LE(std::abs(direct - closed), 1e-6 * std::abs(closed)) << q << "^" << m;
    EXPECT_LE(std::abs(oracle - closed), 1e-6 * std::abs(closed)) << q << "^" << m;
    EXPECT_LE(std::abs(std::norm(closed) - qm), 1e-9 * qm);
    EXPECT_LE(std::abs(std::norm(oracle) - qm), 1e-9 * qm);
    const auto base = gauss_sum(*f, SumLevel::base, EvalMode::oracle).value;
    EXPECT_LE(std::abs(base - gauss_sum(*f, SumLevel::base, EvalMode::closed).value), 1e-9 * std::sqrt(double(q)));
  }
}

TEST(GaussValue, SymbolicProductMatchesEmbedding) {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 1000; ++k) {
    const std::uint32_t q = (rng() % 2) ? 3 : 5;
    const auto draw = [&] {
      return GaussValue::make(q, (rng() % 2) ? 1 : -1, static_cast<unsigned>(rng() % 4), static_cast<unsigned>(rng() % 5));
    };
    const GaussValue a = draw(), b = draw(), c = draw();
    EXPECT_EQ((a * b) * c, a * (b * c));
    const auto num = a.embeds_to() * b.embeds_to() * c.embeds_to();
    EXPECT_LE(std::abs((a * b * c).embeds_to() - num), 1e-9 * std::max(1.0, std::abs(num)));
    EXPECT_EQ((a * b).exact(), a.exact() * b.exact());
    EXPECT_LE(a.i_power, 1u);
  }
}

TEST(RootHistogram, ExactInteger) {
  RootHistogram h(3);
  h.add(0, 5);
  h.add(1, 2);
  h.add(2, 2);
  EXPECT_EQ(h.exact_integer(), 3);
  h.add(4);
  EXPECT_FALSE(h.exact_integer().has_value());
  EXPECT_NEAR(h.embed().real(), 3.0 - 0.5, 1e-12);
}

TEST(Legendre, MatchesSquares) {
  for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u})
    for (long long s = -20; s < 20; ++s) EXPECT_EQ(legendre(q, s), oracle::legendre(q, s));
}

TEST(CharacterSum, Orthogonality) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    for (unsigned m = 1; std::pow(double(q), m) <= 729; ++m) {
      const Field f = make_field(q, m);
      for (std::uint32_t a = 0; a < f->size(); ++a) {
        ASSERT_EQ(character_sum(*f, f->element(a)), a == 0 ? std::int64_t(f->size()) : 0) << q << "^" << m;
      }
    }
  }
}

TEST(QuadraticSum, Examples) {
  const Field f27 = make_field(3, 3);
  const auto g27 = gauss_closed(3, 3).embeds_to();
  EXPECT_LE(std::abs(quadratic_sum(*f27, f27->one(), f27->zero(), f27->zero(), EvalMode::oracle) - g27), 1e-9);
  const Field f9 = make_field(3, 2);
  const auto v = quadratic_sum(*f9, f9->generator(), f9->zero(), f9->zero(), EvalMode::oracle);
  EXPECT_LE(std::abs(v + gauss_closed(3, 2).embeds_to()), 1e-9);
  EXPECT_EQ(code_of([&] { quadratic_sum(*f9, f9->zero(), f9->one(), f9->one(), EvalMode::closed); }),
            Errc::zero_leading_coefficient);
}

TEST(QuadraticSum, ClosedMatchesOracle) {
  std::mt19937_64 rng(21);
  for (auto [q, m] : kLemmaParams) {
    const Field f = make_field(q, m);
    for (int k = 0; k < 50; ++k) {
      const FFElem b2 = f->element(1 + rng() % (f->size() - 1)), b1 = f->element(rng() % f->size()),
                   b0 = f->element(rng() % f->size());
      const auto c = quadratic_sum(*f, b2, b1, b0, EvalMode::closed);
      const auto o = quadratic_sum(*f, b2, b1, b0, EvalMode::oracle);
      EXPECT_LE(std::abs(c - o), 1e-6 * std::abs(c));
    }
  }
}

TEST(SquareTraceCount, Examples) {
  const Field f = make_field(3, 3);
  EXPECT_EQ(count_Ns(*f, 0).value, 9);
  EXPECT_EQ(count_Ns(*f, 0).branch, "s=0, m odd");
  EXPECT_EQ(count_Ns(*f, 1).value, 6);
  EXPECT_EQ(count_Ns(*f, 0).value + count_Ns(*f, 1).value + count_Ns(*f, 2).value, 27);
}

TEST(SquareTraceCount, ClosedMatchesIndependentCount) {
  for (auto [q, m] : kLemmaParams) {
    const Field f = make_field(q, m);
    const auto model = model_of(*f);
    std::vector<std::int64_t> counts(q, 0);
    for (std::uint64_t a = 0; a < model.size; ++a) ++counts[model.trace(model.mul(a, a))];
    for (std::uint32_t s = 0; s < q; ++s) {
      EXPECT_EQ(count_Ns(*f, s, EvalMode::closed).value, counts[s]) << q << "^" << m << " s=" << s;
      EXPECT_EQ(count_Ns(*f, s, EvalMode::oracle).value, counts[s]);
    }
  }
}

TEST(SquareTraceCharacterSum, Examples) {
  EXPECT_EQ(lemma25_sum(*make_field(3, 3), 0).value, 0);
  EXPECT_EQ(lemma25_sum(*make_field(3, 2), 0).value, 6);
  EXPECT_EQ(lemma25_sum(*make_field(3, 3), 1).value, -9);
}

TEST(SquareTraceCharacterSum, ClosedMatchesOracle) {
  for (auto [q, m] : kLemmaParams) {
    const Field f = make_field(q, m);
    for (std::uint32_t s = 0; s < q; ++s) {
      EXPECT_EQ(lemma25_sum(*f, s, EvalMode::closed).value, lemma25_sum(*f, s, EvalMode::oracle).value);
    }
  }
}

TEST(PairCount, Examples) {
  EXPECT_EQ(count_Nst(*make_field(3, 3), 0, 0).value, 81);
  EXPECT_EQ(count_Nst(*make_field(3, 2), 0, 0).value, 25);
  std::int64_t total = 0;
  const Field f = make_field(3, 3);
  for (std::uint32_t s = 0; s < 3; ++s)
    for (std::uint32_t t = 0; t < 3; ++t) total += count_Nst(*f, s, t).value;
  EXPECT_EQ(total, 729);
}

TEST(PairCount, ClosedMatchesIndependentCount) {
  for (auto [q, m] : kLemmaParams) {
    const Field f = make_field(q, m);
    const auto model = model_of(*f);
    std::vector<std::int64_t> ns(q, 0);
    for (std::uint64_t a = 0; a < model.size; ++a) ++ns[model.trace(model.mul(a, a))];
    const auto table = count_Nst_table_oracle(*f);
    for (std::uint32_t s = 0; s < q; ++s)
      for (std::uint32_t t = 0; t < q; ++t) {
        EXPECT_EQ(count_Nst(*f, s, t).value, ns[s] * ns[t]) << q << "^" << m;
        EXPECT_EQ(table[s * q + t], ns[s] * ns[t]);
      }
  }
}

TEST(ExpSum, Examples) {
  const Field f = make_field(3, 3);
  std::uint32_t zero_class = 0;
  for (std::uint32_t b = 1; b < f->size() && zero_class == 0; ++b)
    if (f->trace(f->mul(f->element(b), f->element(b))) == 0) zero_class = b;
  ASSERT_NE(zero_class, 0u);
  EXPECT_EQ(exp_sum(ExpSumKind::N1, *f, std::nullopt, f->element(zero_class), 1).value, 0);
  EXPECT_EQ(exp_sum(ExpSumKind::N1, *f, std::nullopt, f->element(zero_class), 1, EvalMode::oracle).value, 0);
  for (std::uint32_t b = 1; b < f->size(); ++b) EXPECT_EQ(exp_sum(ExpSumKind::N2, *f, std::nullopt, f->element(b), 2).value, 0);
}

TEST(ExpSum, Errors) {
  const Field f = make_field(3, 2);
  EXPECT_EQ(code_of([&] { exp_sum(ExpSumKind::N1, *f, std::nullopt, f->one(), 0); }), Errc::zero_parameter);
  EXPECT_EQ(code_of([&] { exp_sum(ExpSumKind::N2, *f, std::nullopt, f->zero(), 1); }), Errc::zero_parameter);
  EXPECT_EQ(code_of([&] { exp_sum(ExpSumKind::N3, *f, std::nullopt, f->one(), 1); }), Errc::zero_parameter);
  EXPECT_EQ(code_of([&] { exp_sum(ExpSumKind::N3, *f, f->zero(), f->one(), 1); }), Errc::zero_parameter);
  EXPECT_EQ(code_of([&] { exp_sum(ExpSumKind::N3, *f, f->one(), f->one(), 1, EvalMode::oracle, Budget{10}); }),
            Errc::budget_exceeded);
}

TEST(ExpSum, ClosedMatchesOracleExhaustiveSmall) {
  for (auto [q, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 2}, {3, 3}}) {
    const Field f = make_field(q, m);
    for (std::uint32_t b = 1; b < f->size(); ++b) {
      for (std::uint32_t l = 1; l < q; ++l) {
        for (ExpSumKind k : {ExpSumKind::N1, ExpSumKind::N2}) {
          EXPECT_EQ(exp_sum(k, *f, std::nullopt, f->element(b), l).value,
                    exp_sum(k, *f, std::nullopt, f->element(b), l, EvalMode::oracle).value);
        }
        for (std::uint32_t a = 1; a < f->size(); a += (m == 3 ? 2 : 1)) {
          const auto c = exp_sum(ExpSumKind::N3, *f, f->element(a), f->element(b), l);
          const auto o = exp_sum(ExpSumKind::N3, *f, f->element(a), f->element(b), l, EvalMode::oracle);
          ASSERT_EQ(c.value, o.value) << q << "^" << m << " a=" << a << " b=" << b << " " << c.branch;
        }
      }
    }
  }
}

TEST(ExpSum, ClosedMatchesOracleSampled) {
  for (auto [q, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 4}, {5, 2}, {5, 3}}) {
    const Field f = make_field(q, m);
    std::mt19937_64 rng(q * 31 + m);
    for (int k = 0; k < 30; ++k) {
      const FFElem a = f->element(1 + rng() % (f->size() - 1)), b = f->element(1 + rng() % (f->size() - 1));
      const std::uint32_t l = 1 + rng() % (q - 1);
      for (ExpSumKind kind : {ExpSumKind::N1, ExpSumKind::N2, ExpSumKind::N3}) {
        const std::optional<FFElem> alpha = kind == ExpSumKind::N3 ? std::optional<FFElem>(a) : std::nullopt;
        EXPECT_EQ(exp_sum(kind, *f, alpha, b, l).value, exp_sum(kind, *f, alpha, b, l, EvalMode::oracle).value);
      }
    }
  }
}

TEST(Omega, Examples) {
  const Field f = make_field(3, 3);
  EXPECT_EQ(omega_lambda(*f, f->zero(), f->zero(), 1).value, 0);
  EXPECT_EQ(omega_lambda(*f, f->zero(), f->zero(), 1, EvalMode::oracle).value, 0);
  for (std::uint32_t a = 1; a < f->size(); ++a) {
    const FFElem x = f->element(a);
    EXPECT_EQ(omega_lambda(*f, x, f->zero(), 1).value, omega_lambda(*f, f->zero(), x, 1).value);
    EXPECT_EQ(omega_lambda(*f, x, f->zero(), 2, EvalMode::oracle).value,
              omega_lambda(*f, f->zero(), x, 2, EvalMode::oracle).value);
  }
  // both nonzero, one square trace zero: q^(2m-3)
  std::uint32_t z = 1;
  while (f->trace(f->mul(f->element(z), f->element(z))) != 0) ++z;
  EXPECT_EQ(omega_lambda(*f, f->element(z), f->element(5), 1).value, 27);
  EXPECT_EQ(omega_lambda(*f, f->element(z), f->element(5), 1, EvalMode::oracle).value, 27);
  EXPECT_EQ(code_of([&] { omega_lambda(*f, f->one(), f->one(), 3); }), Errc::zero_parameter);
}

TEST(Omega, ClosedMatchesOracle) {
  for (auto [q, m] : kLemmaParams) {
    const Field f = make_field(q, m);
    const std::uint32_t step = f->size() <= 27 ? 1 : 7;
    for (std::uint32_t a = 0; a < f->size(); a += step)
      for (std::uint32_t b = 0; b < f->size(); b += step)
        for (std::uint32_t l = 1; l < q; ++l) {
          const auto c = omega_lambda(*f, f->element(a), f->element(b), l);
          const auto o = omega_lambda(*f, f->element(a), f->element(b), l, EvalMode::oracle);
          ASSERT_EQ(c.value, o.value) << q << "^" << m << " a=" << a << " b=" << b << " " << c.branch;
        }
  }
}

TEST(Omega, PrintedSignDisagreesWithOracleForOddDegree) {
  for (auto [q, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 3}, {5, 3}}) {
    const Field f = make_field(q, m);
    int disagreements = 0;
    for (std::uint32_t b = 1; b < f->size(); ++b) {
      const FFElem beta = f->element(b);
      const bool nonzero_class = f->trace(f->mul(beta, beta)) != 0;
      const auto printed = omega_lambda(*f, f->zero(), beta, 1, EvalMode::closed, FormulaVariant::as_printed);
      const auto oracle = omega_lambda(*f, f->zero(), beta, 1, EvalMode::oracle);
      if (printed.value != oracle.value) {
        ++disagreements;
        EXPECT_TRUE(nonzero_class);
      }
    }
    EXPECT_GT(disagreements, 0);
  }
}

TEST(Omega, LambdaPartitionIsComplete) {
  for (unsigned m : {2u, 3u}) {
    const Field f = make_field(3, m);
    const auto n00 = count_Nst(*f, 0, 0).value;
    std::vector<std::uint32_t> zero_trace;
    for (std::uint32_t a = 0; a < f->size(); ++a)
      if (f->trace(f->mul(f->element(a), f->element(a))) == 0) zero_trace.push_back(a);
    for (std::uint32_t al = 0; al < f->size(); ++al)
      for (std::uint32_t be = 0; be < f->size(); ++be) {
        std::int64_t at_zero = 0;
        for (auto a : zero_trace)
          for (auto b : zero_trace) {
            const FFElem v = f->add(f->mul(f->element(al), f->element(b)), f->mul(f->element(be), f->element(a)));
            at_zero += f->trace(v) == 0;
          }
        std::int64_t sum = at_zero;
        for (std::uint32_t l = 1; l < 3; ++l) sum += omega_lambda(*f, f->element(al), f->element(be), l).value;
        ASSERT_EQ(sum, n00);
      }
  }
}

TEST(Exactness, IntegralityTripwire) {
  EXPECT_EQ(code_of([] { require_integer(Surd(3, Rational(1) / 3), "x"); }), Errc::integrality_violation);
  EXPECT_EQ(code_of([] { require_integer(Surd::sqrt_q(3), "x"); }), Errc::integrality_violation);
  EXPECT_EQ(require_integer(Surd::sqrt_q(3) * Surd::sqrt_q(3), "x"), 3);
  EXPECT_EQ(require_integer(Surd::imag_unit(5).pow(2), "x"), -1);
}

TEST(Budget, OraclesRefuseOversizedWork) {
  const Field f = make_field(3, 4);
  EXPECT_EQ(code_of([&] { gauss_sum(*f, SumLevel::extension, EvalMode::oracle, Budget{10}); }),
            Errc::budget_exceeded);
  EXPECT_EQ(code_of([&] { omega_lambda(*f, f->one(), f->one(), 1, EvalMode::oracle, FormulaVariant::corrected,
                                       Budget{100}); }),
            Errc::budget_exceeded);
}
