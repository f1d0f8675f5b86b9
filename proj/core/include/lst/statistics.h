// Copyright 2026 The LST Authors
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
#include <cstdint>
#include <span>

namespace lst {

/// Sample means, variances (n - 1 normalization) and covariance of paired samples.
struct PairedMoments {
    std::size_t count = 0;
    double mean_p = 0.0;
    double mean_q = 0.0;
    double var_p = 0.0;
    double var_q = 0.0;
    double cov = 0.0;
};

PairedMoments paired_moments(std::span<const double> p, std::span<const double> q);

/// Spread of the paired resampling distribution.
struct BootstrapSummary {
    double ratio_std = 0.0;        // std of mean(P*)/mean(Q*)
    double numerator_std = 0.0;    // std of mean(P*)
    double denominator_std = 0.0;  // std of mean(Q*)
};

/// Resamples indices with replacement `resamples` times; P and Q stay paired. Deterministic
/// for a fixed seed. Throws std::invalid_argument on empty or unequal inputs.
BootstrapSummary bootstrap_ratio(std::span<const double> numerator, std::span<const double> denominator,
                                 std::size_t resamples, std::uint64_t seed);

inline double bootstrap_std(std::span<const double> numerator, std::span<const double> denominator,
                            std::size_t resamples, std::uint64_t seed) {
    return bootstrap_ratio(numerator, denominator, resamples, seed).ratio_std;
}

/// First-order (delta method) variance of P/Q:
/// (mu_P/mu_Q)^2 [Var P/mu_P^2 + Var Q/mu_Q^2 - 2 Cov/(mu_P mu_Q)].
/// Throws ZeroDenominatorMean when mu_Q == 0.
double ratio_variance_approx(double mu_p, double mu_q, double var_p, double var_q, double cov_pq);

/// Ordinary least-squares fit y = intercept + slope * x.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Weighted least squares with weights 1/sigma^2; slope_stderr from the weights alone.
LineFit fit_line_weighted(std::span<const double> x, std::span<const double> y, std::span<const double> sigma);

}  // namespace lst
