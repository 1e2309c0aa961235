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

#include "sparserank/analytics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sparserank/errors.hpp"

namespace sparserank::analytics {

namespace {

constexpr double kE = std::numbers::e;
constexpr int kFixedPointSteps = 100000;
constexpr double kFixedPointStop = 1e-13;
constexpr double kSeparationFloor = 1e-9;
// Below this excess over 2 the truncated-Poisson mean cannot be inverted
// reliably in double precision.
constexpr double kMeanGuard = 1e-9;

void guard_critical(double c) {
  if (std::abs(c - kE) < kCriticalBand) {
    throw Error(ErrorKind::kCriticalPoint,
                "c = " + std::to_string(c) + " is inside the critical band");
  }
}

// Bisection for an increasing f on [lo, hi] with f(lo) <= 0 <= f(hi).
template <typename F>
double bisect_increasing(F f, double lo, double hi) {
  for (int it = 0; it < kBisectionIterations && hi - lo > kBisectionTolerance;
       ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// e^x - 1 - x without cancellation for small x.
double expm1_minus_x(double x) {
  if (std::abs(x) < 0.5) {
    double term = x * x / 2;
    double sum = 0;
    for (int k = 3; k < 40 && std::abs(term) > 1e-300; ++k) {
      sum += term;
      term *= x / k;
    }
    return sum;
  }
  return std::expm1(x) - x;
}

// P[Z >= 2] for Z ~ Poisson(lambda).
double p_at_least_two(double lambda) {
  return std::exp(-lambda) * expm1_minus_x(lambda);
}

double sinh_ratio(double lambda) {
  return lambda / (2.0 * std::sinh(lambda / 2.0));
}

double expm1_ratio(double lambda) { return lambda / std::expm1(lambda); }

void require_positive(double lambda) {
  if (!(lambda > 0)) {
    throw Error(ErrorKind::kNonPositiveLambda,
                "lambda must be positive, got " + std::to_string(lambda));
  }
}

}  // namespace

double solve_eta(double c) {
  guard_critical(c);
  if (c < 0 || c > kE) {
    throw Error(ErrorKind::kOutOfRange,
                "eta(c) needs 0 <= c < e, got " + std::to_string(c));
  }
  if (c == 0) return 0;
  return bisect_increasing(
      [c](double eta) { return eta * std::exp(eta) - c; }, 0.0, 1.0);
}

double phi(double c, double alpha) {
  return -std::expm1(-c * std::exp(-c * (1.0 - alpha)));
}

FixedPoints ks_fixed_points(double c) {
  guard_critical(c);
  if (c < kE) {
    throw Error(ErrorKind::kOutOfRange,
                "fixed points need c > e, got " + std::to_string(c));
  }
  auto iterate = [c](double alpha) {
    for (int step = 0; step < kFixedPointSteps; ++step) {
      const double next = phi(c, alpha);
      const bool done = std::abs(next - alpha) < kFixedPointStop;
      alpha = next;
      if (done) break;
    }
    return alpha;
  };
  FixedPoints fp;
  fp.alpha_lo = iterate(0.0);
  fp.alpha_hi = iterate(1.0);
  if (fp.alpha_hi - fp.alpha_lo < kSeparationFloor) {
    throw Error(ErrorKind::kNoSeparation,
                "fixed points of phi collapse at c = " + std::to_string(c));
  }
  fp.lambda_ks = c * (fp.alpha_hi - fp.alpha_lo);
  return fp;
}

double gamma(double lambda) {
  require_positive(lambda);
  return -0.25 * std::log1p(-std::pow(sinh_ratio(lambda), 4));
}

double gamma_dagger(double lambda) {
  require_positive(lambda);
  return -0.125 * std::log1p(-std::pow(expm1_ratio(lambda), 4));
}

GammaPair gamma_pair(double lambda) {
  return {gamma(lambda), gamma_dagger(lambda)};
}

PoissonParams corank_distribution_params(double c) {
  guard_critical(c);
  if (c < 0) {
    throw Error(ErrorKind::kOutOfRange, "c must be nonnegative");
  }
  PoissonParams p;
  p.c = c;
  if (c < kE) {
    p.regime = Regime::kSubcritical;
    const double eta = solve_eta(c);
    p.eta = eta;
    p.gamma_b = -0.25 * std::log1p(-std::pow(eta, 4));
    p.gamma_a_dagger = p.gamma_b / 2;
    p.gamma_a = 0;
    return p;
  }
  p.regime = Regime::kSupercritical;
  const FixedPoints fp = ks_fixed_points(c);
  p.alpha_lo = fp.alpha_lo;
  p.alpha_hi = fp.alpha_hi;
  p.lambda_ks = fp.lambda_ks;
  p.gamma_b = gamma(fp.lambda_ks);
  p.gamma_a_dagger = gamma_dagger(fp.lambda_ks);
  p.gamma_a = p.gamma_b - 2 * p.gamma_a_dagger;
  if (p.gamma_a < 0) {
    throw Error(ErrorKind::kOutOfRange,
                "gamma_b - 2 gamma_a_dagger is negative at c = " +
                    std::to_string(c));
  }
  return p;
}

TwoCoreParams two_core_params(double c) {
  if (!(c > 1)) {
    throw Error(ErrorKind::kOutOfRange,
                "2-core constants need c > 1, got " + std::to_string(c));
  }
  TwoCoreParams t;
  t.c = c;
  t.lambda2 = bisect_increasing(
      [c](double l) { return l / -std::expm1(-l) - c; }, 0.0, c);
  const double x4 = std::pow(sinh_ratio(t.lambda2), 4);
  const double y4 = std::pow(expm1_ratio(t.lambda2), 4);
  t.nonsingular_prob = std::pow((1 - x4) / (1 - y4), 0.25);
  t.mu = -std::log(t.nonsingular_prob);
  return t;
}

double truncated_poisson_mean(double lambda) {
  require_positive(lambda);
  return lambda * -std::expm1(-lambda) / p_at_least_two(lambda);
}

TruncatedPoissonStats truncated_poisson_stats(double lambda) {
  require_positive(lambda);
  TruncatedPoissonStats s;
  s.lambda = lambda;
  const double tail2 = p_at_least_two(lambda);
  s.mean = truncated_poisson_mean(lambda);
  s.factorial2 = lambda * lambda / tail2;
  s.e2 = s.factorial2 / 2;
  s.rho.assign(kRhoTableMax + 1, 0.0);
  double total = 0;
  for (std::size_t t = 2; t <= kRhoTableMax; ++t) {
    const double log_pmf = static_cast<double>(t) * std::log(lambda) -
                           std::lgamma(static_cast<double>(t) + 1) - lambda;
    s.rho[t] = std::exp(log_pmf) / tail2;
    total += s.rho[t];
  }
  s.tail_mass = std::max(0.0, 1.0 - total);
  return s;
}

TruncatedPoissonStats truncated_poisson_from_mean(double target_mean) {
  if (!(target_mean > 2 + kMeanGuard)) {
    throw Error(ErrorKind::kOutOfRange,
                "truncated mean must exceed 2, got " +
                    std::to_string(target_mean));
  }
  const double lambda = bisect_increasing(
      [target_mean](double l) {
        return l <= 0 ? -1.0 : truncated_poisson_mean(l) - target_mean;
      },
      0.0, target_mean);
  return truncated_poisson_stats(lambda);
}

std::map<std::size_t, double> subcritical_cycle_means(double c,
                                                      std::size_t max_length,
                                                      CycleMode mode) {
  const double eta = solve_eta(c);
  std::map<std::size_t, double> means;
  if (mode == CycleMode::kGraph) {
    for (std::size_t l = 3; l <= max_length; ++l) {
      means[l] = std::pow(eta, static_cast<double>(l)) / (2.0 * l);
    }
  } else {
    for (std::size_t l = 4; l <= max_length; l += 2) {
      means[l] = std::pow(eta, static_cast<double>(l)) / static_cast<double>(l);
    }
  }
  return means;
}

double gamma_series(double lambda, double q, std::size_t terms) {
  const TruncatedPoissonStats s = truncated_poisson_stats(lambda);
  const double base =
      2 * q * q * s.rho_at(2) * s.factorial2 / (s.mean * s.mean);
  double sum = 0;
  double power = 1;
  for (std::size_t k = 1; k <= terms; ++k) {
    power *= base * base;
    sum += power / (4.0 * k);
  }
  return sum;
}

double gamma_dagger_series(double lambda, double q, std::size_t terms) {
  const TruncatedPoissonStats s = truncated_poisson_stats(lambda);
  const double base = std::pow(2 * q * s.rho_at(2) / s.mean, 4);
  double sum = 0;
  double power = 1;
  for (std::size_t k = 1; k <= terms; ++k) {
    power *= base;
    sum += power / (8.0 * k);
  }
  return sum;
}

}  // namespace sparserank::analytics
