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
#include <stdexcept>
#include <vector>

#include "lst/errors.h"

namespace lst {

PairedMoments paired_moments(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw std::invalid_argument("paired_moments: sample lists differ in length");
    if (p.empty()) throw std::invalid_argument("paired_moments: empty sample list");
    PairedMoments m;
    m.count = p.size();
    for (std::size_t i = 0; i < p.size(); ++i) {
        m.mean_p += p[i];
        m.mean_q += q[i];
    }
    m.mean_p /= static_cast<double>(m.count);
    m.mean_q /= static_cast<double>(m.count);
    if (m.count < 2) return m;
    for (std::size_t i = 0; i < p.size(); ++i) {
        double dp = p[i] - m.mean_p;
        double dq = q[i] - m.mean_q;
        m.var_p += dp * dp;
        m.var_q += dq * dq;
        m.cov += dp * dq;
    }
    const double denom = static_cast<double>(m.count - 1);
    m.var_p /= denom;
    m.var_q /= denom;
    m.cov /= denom;
    return m;
}

BootstrapSummary bootstrap_ratio(std::span<const double> numerator, std::span<const double> denominator,
                                 std::size_t resamples, std::uint64_t seed) {
    if (numerator.size() != denominator.size()) throw std::invalid_argument("bootstrap: sample lists differ in length");
    if (numerator.empty()) throw std::invalid_argument("bootstrap: empty sample list");
    if (resamples < 2) throw std::invalid_argument("bootstrap: need at least two resamples");

    const std::size_t n = numerator.size();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<double> ratios(resamples), means_p(resamples), means_q(resamples);
    for (std::size_t b = 0; b < resamples; ++b) {
        double sp = 0.0, sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t j = pick(rng);
            sp += numerator[j];
            sq += denominator[j];
        }
        means_p[b] = sp / static_cast<double>(n);
        means_q[b] = sq / static_cast<double>(n);
        ratios[b] = means_p[b] / means_q[b];
    }
    // Shifted by the first value so identical resamples give exactly zero.
    auto stddev = [&](const std::vector<double>& v) {
        double mean = 0.0;
        for (double x : v) mean += x - v.front();
        mean /= static_cast<double>(v.size());
        double acc = 0.0;
        for (double x : v) acc += (x - v.front() - mean) * (x - v.front() - mean);
        return std::sqrt(acc / static_cast<double>(v.size() - 1));
    };
    return {stddev(ratios), stddev(means_p), stddev(means_q)};
}

double ratio_variance_approx(double mu_p, double mu_q, double var_p, double var_q, double cov_pq) {
    if (mu_q == 0.0) throw ZeroDenominatorMean("ratio_variance_approx: denominator mean is zero");
    // Expanded so that mu_p = 0 is allowed.
    const double r = mu_p / mu_q;
    return var_p / (mu_q * mu_q) + r * r * var_q / (mu_q * mu_q) - 2.0 * r * cov_pq / (mu_q * mu_q);
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    std::vector<double> ones(x.size(), 1.0);
    LineFit fit = fit_line_weighted(x, y, ones);
    if (x.size() > 2) {
        double rss = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            double e = y[i] - fit.intercept - fit.slope * x[i];
            rss += e * e;
        }
        fit.slope_stderr *= std::sqrt(rss / static_cast<double>(x.size() - 2));
    }
    return fit;
}

LineFit fit_line_weighted(std::span<const double> x, std::span<const double> y, std::span<const double> sigma) {
    if (x.size() != y.size() || x.size() != sigma.size()) throw std::invalid_argument("fit_line: size mismatch");
    if (x.size() < 2) throw std::invalid_argument("fit_line: need at least two points");
    double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double w = 1.0 / (sigma[i] * sigma[i]);
        sw += w;
        sx += w * x[i];
        sy += w * y[i];
        sxx += w * x[i] * x[i];
        sxy += w * x[i] * y[i];
    }
    double det = sw * sxx - sx * sx;
    if (det == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
    LineFit fit;
    fit.slope = (sw * sxy - sx * sy) / det;
    fit.intercept = (sxx * sy - sx * sxy) / det;
    fit.slope_stderr = std::sqrt(sw / det);
    return fit;
}

}  // namespace lst
