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

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace sparserank::analytics {

/// Half-width of the band around c = e inside which the constants are not
/// defined and every entry point throws Error{kCriticalPoint}.
inline constexpr double kCriticalBand = 1e-9;

/// Bisection settings shared by every scalar solver.
inline constexpr int kBisectionIterations = 200;
inline constexpr double kBisectionTolerance = 1e-12;

/// Root of c = eta * exp(eta) on [0, 1], for 0 <= c < e.
double solve_eta(double c);

/// The warning-propagation map alpha -> 1 - exp(-c exp(-c (1 - alpha))).
double phi(double c, double alpha);

struct FixedPoints {
  double alpha_lo = 0;  // smallest fixed point of phi(c, .)
  double alpha_hi = 0;  // largest fixed point of phi(c, .)
  double lambda_ks = 0;  // c * (alpha_hi - alpha_lo)
};

/// Extreme fixed points of phi for c > e, by monotone iteration from 0 and
/// from 1.
FixedPoints ks_fixed_points(double c);

/// gamma(lambda) = -1/4 log(1 - (lambda / (e^{lambda/2} - e^{-lambda/2}))^4)
double gamma(double lambda);
/// gamma_dagger(lambda) = -1/8 log(1 - (lambda / (e^lambda - 1))^4)
double gamma_dagger(double lambda);

struct GammaPair {
  double gamma = 0;
  double gamma_dagger = 0;
};
GammaPair gamma_pair(double lambda);

enum class Regime { kSubcritical, kSupercritical };

struct PoissonParams {
  double c = 0;
  Regime regime = Regime::kSubcritical;
  std::optional<double> eta;
  std::optional<double> alpha_lo;
  std::optional<double> alpha_hi;
  std::optional<double> lambda_ks;
  double gamma_b = 0;
  double gamma_a = 0;
  double gamma_a_dagger = 0;
};

/// Poisson means of the Karp-Sipser defect for G(n, c/n) and G(n, n, c/n).
PoissonParams corank_distribution_params(double c);

struct TwoCoreParams {
  double c = 0;
  double lambda2 = 0;          // lambda / (1 - e^{-lambda}) = c
  double nonsingular_prob = 0;  // limiting P[2-core of giant is nonsingular]
  double mu = 0;               // -log(nonsingular_prob)
};
TwoCoreParams two_core_params(double c);

/// Statistics of Z ~ Poisson(lambda) conditioned on Z >= 2.
struct TruncatedPoissonStats {
  double lambda = 0;
  double mean = 0;               // E[Z | Z >= 2]
  std::vector<double> rho;       // rho[t] = P[Z = t | Z >= 2], t = 0..t_max
  double tail_mass = 0;          // P[Z > t_max | Z >= 2]
  double e2 = 0;                 // E[C(Z, 2) | Z >= 2]
  double factorial2 = 0;         // E[Z (Z - 1) | Z >= 2]

  double rho_at(std::size_t t) const { return t < rho.size() ? rho[t] : 0.0; }
};

inline constexpr std::size_t kRhoTableMax = 64;

/// E[Z | Z >= 2] as a function of lambda; increases from 2 to infinity.
double truncated_poisson_mean(double lambda);

/// Fills every field for the given lambda > 0.
TruncatedPoissonStats truncated_poisson_stats(double lambda);

/// Solves E[Z | Z >= 2] = target_mean for lambda, then fills the stats.
TruncatedPoissonStats truncated_poisson_from_mean(double target_mean);

enum class CycleMode { kGraph, kBipartite };

/// Limiting mean number of isolated Karp-Sipser-core cycles of each length
/// below criticality: eta^l / (2l) for l >= 3 in graph mode, and
/// eta^{2k} / (2k) for even lengths 2k >= 4 in bipartite mode.
std::map<std::size_t, double> subcritical_cycle_means(double c,
                                                      std::size_t max_length,
                                                      CycleMode mode);

/// Partial sums of the two series whose limits are gamma and gamma_dagger
/// (with scaling Q).
double gamma_series(double lambda, double q, std::size_t terms);
double gamma_dagger_series(double lambda, double q, std::size_t terms);

}  // namespace sparserank::analytics
