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

#include "lst/statistics.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "lst/errors.h"

namespace lst {
namespace {

TEST(Statistics, RatioVarianceExamples) {
    EXPECT_DOUBLE_EQ(ratio_variance_approx(1.0, 2.0, 0.0, 0.0, 0.0), 0.0);
    EXPECT_NEAR(ratio_variance_approx(1.5, 1.5, 0.3, 0.3, 0.3), 0.0, 1e-15);
    EXPECT_NEAR(ratio_variance_approx(1.0, 2.0, 0.01, 0.04, 0.0), 0.005, 1e-15);
    EXPECT_THROW(ratio_variance_approx(1.0, 0.0, 0.1, 0.1, 0.0), ZeroDenominatorMean);
}

TEST(Statistics, RatioVarianceIsFiniteForZeroNumeratorMean) {
    EXPECT_NEAR(ratio_variance_approx(0.0, 2.0, 0.04, 0.01, 0.0), 0.01, 1e-15);
}

TEST(Statistics, PairedMoments) {
    std::vector<double> p{1, 2, 3, 4}, q{2, 4, 6, 8};
    PairedMoments m = paired_moments(p, q);
    EXPECT_EQ(m.count, 4u);
    EXPECT_DOUBLE_EQ(m.mean_p, 2.5);
    EXPECT_DOUBLE_EQ(m.var_p, 5.0 / 3.0);
    EXPECT_DOUBLE_EQ(m.cov, 10.0 / 3.0);
}

TEST(Statistics, BootstrapOfConstantSamplesIsZero) {
    std::vector<double> p(50, 0.7), q(50, 1.3);
    EXPECT_DOUBLE_EQ(bootstrap_std(p, q, 200, 1), 0.0);
}

TEST(Statistics, BootstrapIsDeterministic) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    std::vector<double> p(100), q(100);
    for (std::size_t i = 0; i < 100; ++i) {
        p[i] = 1 + g(rng);
        q[i] = 3 + g(rng);
    }
    EXPECT_EQ(bootstrap_std(p, q, 300, 9), bootstrap_std(p, q, 300, 9));
    EXPECT_THROW(bootstrap_std({}, {}, 10, 1), std::invalid_argument);
    std::vector<double> shorter(99, 1.0);
    EXPECT_THROW(bootstrap_std(p, shorter, 10, 1), std::invalid_argument);
}

TEST(Statistics, BootstrapMatchesDeltaMethodOnGaussians) {
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    const std::size_t n = 4000;
    std::vector<double> p(n), q(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double shared = g(rng);
        p[i] = 1.0 + 0.5 * g(rng) + 0.2 * shared;
        q[i] = 2.0 + 0.4 * g(rng) + 0.3 * shared;
    }
    PairedMoments m = paired_moments(p, q);
    const double analytic = std::sqrt(ratio_variance_approx(m.mean_p, m.mean_q, m.var_p, m.var_q, m.cov) / n);
    const double boot = bootstrap_std(p, q, 1000, 3);
    EXPECT_NEAR(boot / analytic, 1.0, 0.15);
}

TEST(Statistics, LineFits) {
    std::vector<double> x{0, 1, 2, 3, 4}, y{1, 3, 5, 7, 9};
    LineFit f = fit_line(x, y);
    EXPECT_NEAR(f.slope, 2.0, 1e-12);
    EXPECT_NEAR(f.intercept, 1.0, 1e-12);
    EXPECT_NEAR(f.slope_stderr, 0.0, 1e-12);
    std::vector<double> sigma{1, 1, 1, 1, 100};
    std::vector<double> y2{1, 3, 5, 7, 50};
    LineFit w = fit_line_weighted(x, y2, sigma);
    EXPECT_NEAR(w.slope, 2.0, 0.05);
}

}  // namespace
}  // namespace lst
