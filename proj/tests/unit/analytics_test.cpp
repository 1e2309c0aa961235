// Copyright 2026 The sparserank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "sparserank/analytics.hpp"
#include "sparserank/errors.hpp"

namespace sparserank::analytics {
namespace {

// Reference values computed independently at 50-digit precision.
constexpr double kEta1 = 0.567143290409784;
constexpr double kC4AlphaLo = 0.105851215005246;
constexpr double kC4AlphaHi = 0.972029227128177;
constexpr double kC4LambdaKs = 3.46471204849172;
constexpr double kC10LambdaKs = 9.99498422447880;
constexpr double kGamma2 = 0.185723727424781;
constexpr double kGammaDagger2 = 0.00120608157660036;
constexpr double kC1GammaB = 0.0273030072164675;
constexpr double kC1Eta4 = 0.103459695079789;
constexpr double kLambda2At2 = 1.59362426004004;
constexpr double kLambda2At3 = 2.82143937212208;
constexpr double kC3Prob = 0.919156902024125;
constexpr double kC3Mu = 0.0842984399435239;
constexpr double kMean3Lambda = 2.14912579990706;
constexpr double kMean3Gamma = 0.161605856815135;
constexpr double kMean3GammaDagger = 0.000811512838530744;
constexpr double kMean10Lambda = 9.99544113381484;
constexpr double kC4GammaB = 0.0436265767253219;
constexpr double kC4GammaADagger = 1.95885312359102e-5;
constexpr double kC4GammaA = 0.0435873996628501;

ErrorKind KindOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kInvalidArgument;
}

TEST(Eta, Values) {
  EXPECT_EQ(solve_eta(0), 0.0);
  const double eta = solve_eta(1);
  EXPECT_NEAR(eta, kEta1, 1e-12);
  EXPECT_LT(std::fabs(eta * std::exp(eta) - 1), 1e-10);
  for (double c : {0.1, 0.5, 1.5, 2.0, 2.7}) {
    const double e = solve_eta(c);
    EXPECT_LT(std::fabs(e * std::exp(e) - c), 1e-10) << c;
  }
  EXPECT_EQ(KindOf([] { solve_eta(std::exp(1.0) - 1e-12); }),
            ErrorKind::kCriticalPoint);
  EXPECT_EQ(KindOf([] { solve_eta(3); }), ErrorKind::kOutOfRange);
  EXPECT_EQ(KindOf([] { solve_eta(-1); }), ErrorKind::kOutOfRange);
}

TEST(FixedPoints, Values) {
  const FixedPoints c4 = ks_fixed_points(4);
  EXPECT_NEAR(c4.alpha_lo, kC4AlphaLo, 1e-12);
  EXPECT_NEAR(c4.alpha_hi, kC4AlphaHi, 1e-12);
  EXPECT_NEAR(c4.lambda_ks, kC4LambdaKs, 1e-11);
  EXPECT_LT(std::fabs(phi(4, c4.alpha_lo) - c4.alpha_lo), 1e-12);
  EXPECT_LT(std::fabs(phi(4, c4.alpha_hi) - c4.alpha_hi), 1e-12);
  EXPECT_LT(c4.alpha_lo, 0.5);
  EXPECT_GT(c4.alpha_hi, 0.5);
  const FixedPoints c10 = ks_fixed_points(10);
  EXPECT_GT(c10.alpha_hi, c10.alpha_lo);
  EXPECT_NEAR(c10.lambda_ks, kC10LambdaKs, 1e-10);
  EXPECT_NE(KindOf([] { ks_fixed_points(2); }), ErrorKind::kNoSeparation);
  EXPECT_EQ(KindOf([] { ks_fixed_points(std::exp(1.0) + 1e-10); }),
            ErrorKind::kCriticalPoint);
}

TEST(Gamma, Values) {
  const GammaPair g = gamma_pair(2);
  EXPECT_NEAR(g.gamma, kGamma2, 1e-14);
  EXPECT_NEAR(g.gamma_dagger, kGammaDagger2, 1e-16);
  EXPECT_EQ(KindOf([] { gamma_pair(0); }), ErrorKind::kNonPositiveLambda);
  EXPECT_EQ(KindOf([] { gamma(-1); }), ErrorKind::kNonPositiveLambda);
  double previous_gamma = gamma(10);
  double previous_dagger = gamma_dagger(10);
  for (double lambda : {20.0, 30.0}) {
    EXPECT_LT(gamma(lambda), previous_gamma);
    EXPECT_LT(gamma_dagger(lambda), previous_dagger);
    previous_gamma = gamma(lambda);
    previous_dagger = gamma_dagger(lambda);
  }
}

TEST(Gamma, ExceedsTwiceDaggerOnGrid) {
  for (double lambda = 0.01; lambda < 40; lambda *= 1.1) {
    const GammaPair g = gamma_pair(lambda);
    EXPECT_GT(g.gamma, 2 * g.gamma_dagger) << lambda;
    EXPECT_GT(g.gamma_dagger, 0);
  }
}

TEST(Gamma, SeriesWhereTheyConvergeFast) {
  EXPECT_NEAR(gamma_series(2, 1, 60), gamma(2), 1e-10);
  for (double lambda : {0.5, 1.0, 2.0}) {
    EXPECT_NEAR(gamma_dagger_series(lambda, 1, 60), gamma_dagger(lambda), 1e-10);
  }
  // The gamma series converges like x^{4k} with x = lambda / (2 sinh(lambda/2)),
  // so small lambda needs many more terms.
  EXPECT_NEAR(gamma_series(0.5, 1, 4000), gamma(0.5), 1e-10);
}

TEST(PoissonParams, Subcritical) {
  const PoissonParams c1 = corank_distribution_params(1);
  EXPECT_EQ(c1.regime, Regime::kSubcritical);
  EXPECT_NEAR(*c1.eta, kEta1, 1e-12);
  EXPECT_NEAR(std::pow(*c1.eta, 4), kC1Eta4, 1e-12);
  EXPECT_NEAR(c1.gamma_b, kC1GammaB, 1e-13);
  EXPECT_EQ(c1.gamma_a, 0.0);
  EXPECT_NEAR(c1.gamma_a_dagger, c1.gamma_b / 2, 1e-15);
  const PoissonParams c0 = corank_distribution_params(0);
  EXPECT_EQ(c0.gamma_b, 0.0);
  EXPECT_EQ(c0.gamma_a, 0.0);
  EXPECT_EQ(c0.gamma_a_dagger, 0.0);
}

TEST(PoissonParams, Supercritical) {
  const PoissonParams c4 = corank_distribution_params(4);
  EXPECT_EQ(c4.regime, Regime::kSupercritical);
  EXPECT_NEAR(c4.gamma_b, kC4GammaB, 1e-12);
  EXPECT_NEAR(c4.gamma_a_dagger, kC4GammaADagger, 1e-15);
  EXPECT_NEAR(c4.gamma_a, kC4GammaA, 1e-12);
  EXPECT_NEAR(c4.gamma_a + 2 * c4.gamma_a_dagger, c4.gamma_b, 1e-12);
  EXPECT_GE(c4.gamma_a, 0);
  EXPECT_EQ(KindOf([] { corank_distribution_params(std::exp(1.0)); }),
            ErrorKind::kCriticalPoint);
}

TEST(PoissonParams, GrowNearCriticality) {
  const double e = std::exp(1.0);
  EXPECT_GT(corank_distribution_params(e - 1e-3).gamma_b,
            corank_distribution_params(e - 1e-1).gamma_b);
  EXPECT_GT(corank_distribution_params(e + 1e-3).gamma_b,
            corank_distribution_params(e + 1e-1).gamma_b);
}

TEST(TwoCore, Values) {
  const TwoCoreParams c2 = two_core_params(2);
  EXPECT_NEAR(c2.lambda2, kLambda2At2, 1e-11);
  EXPECT_LT(std::fabs(c2.lambda2 / (1 - std::exp(-c2.lambda2)) - 2), 1e-10);
  const TwoCoreParams c3 = two_core_params(3);
  EXPECT_NEAR(c3.lambda2, kLambda2At3, 1e-11);
  EXPECT_NEAR(c3.nonsingular_prob, kC3Prob, 1e-12);
  EXPECT_NEAR(c3.mu, kC3Mu, 1e-12);
  EXPECT_NEAR(c3.mu, -std::log(c3.nonsingular_prob), 1e-15);
  EXPECT_EQ(KindOf([] { two_core_params(1); }), ErrorKind::kOutOfRange);
}

TEST(TruncatedPoisson, FromMean) {
  const TruncatedPoissonStats three = truncated_poisson_from_mean(3);
  EXPECT_NEAR(three.lambda, kMean3Lambda, 1e-11);
  EXPECT_LT(std::fabs(three.mean - 3), 1e-10);
  const GammaPair g = gamma_pair(three.lambda);
  EXPECT_NEAR(g.gamma, kMean3Gamma, 1e-12);
  EXPECT_NEAR(g.gamma_dagger, kMean3GammaDagger, 1e-14);
  const TruncatedPoissonStats ten = truncated_poisson_from_mean(10);
  EXPECT_NEAR(ten.lambda, kMean10Lambda, 1e-10);
  EXPECT_LT(std::fabs(ten.lambda - 10) / 10, 0.01);
  EXPECT_EQ(KindOf([] { truncated_poisson_from_mean(2 + 1e-15); }),
            ErrorKind::kOutOfRange);
  EXPECT_EQ(KindOf([] { truncated_poisson_from_mean(1.5); }),
            ErrorKind::kOutOfRange);
}

TEST(TruncatedPoisson, Stats) {
  const TruncatedPoissonStats s = truncated_poisson_stats(2.5);
  double mass = 0;
  double mean = 0;
  double e2 = 0;
  for (std::size_t t = 0; t < s.rho.size(); ++t) {
    mass += s.rho[t];
    mean += t * s.rho[t];
    e2 += t * (t - 1) / 2.0 * s.rho[t];
  }
  EXPECT_EQ(s.rho[0], 0.0);
  EXPECT_EQ(s.rho[1], 0.0);
  EXPECT_NEAR(mass + s.tail_mass, 1, 1e-14);
  EXPECT_NEAR(mean, s.mean, 1e-12);
  EXPECT_NEAR(e2, s.e2, 1e-12);
  EXPECT_NEAR(s.factorial2, 2 * s.e2, 1e-12);
  EXPECT_GT(truncated_poisson_mean(1e-6), 2);
  EXPECT_NEAR(truncated_poisson_mean(1e-6), 2, 1e-5);
}

TEST(SubcriticalCycles, Means) {
  const auto graph = subcritical_cycle_means(1, 10, CycleMode::kGraph);
  EXPECT_NEAR(graph.at(4), kC1Eta4 / 8, 1e-13);
  EXPECT_EQ(graph.count(2), 0u);
  EXPECT_EQ(graph.count(3), 1u);
  const auto bip = subcritical_cycle_means(1, 10, CycleMode::kBipartite);
  EXPECT_NEAR(bip.at(4), kC1Eta4 / 4, 1e-13);
  EXPECT_EQ(bip.count(5), 0u);
  for (auto [len, mean] : subcritical_cycle_means(0, 12, CycleMode::kGraph)) {
    EXPECT_EQ(mean, 0.0);
  }
  EXPECT_EQ(KindOf([] { subcritical_cycle_means(std::exp(1.0), 8, CycleMode::kGraph); }),
            ErrorKind::kCriticalPoint);
}

}  // namespace
}  // namespace sparserank::analytics
