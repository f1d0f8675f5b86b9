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

// End-to-end acceptance run. Prints one PASS or FAIL line per criterion and exits
// nonzero if any criterion fails.
//
//     acceptance --data-dir <dir> [--only 1,4] [--threads N] [--skip-n60]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lst/affine_trace.h"
#include "lst/clifford.h"
#include "lst/code.h"
#include "lst/dense.h"
#include "lst/estimator.h"
#include "lst/shadow.h"
#include "lst/statistics.h"
#include "lst/variance_operator.h"

namespace {

using namespace lst;
using Clock = std::chrono::steady_clock;

struct Options {
    std::string data_dir = "data";
    std::vector<int> only;
    std::size_t threads = 0;
    bool skip_n60 = false;
};

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok) { passed = passed && ok; }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

EstimatorConfig estimator_config(std::vector<double> coefficients, std::size_t threads, std::uint64_t seed) {
    EstimatorConfig cfg;
    cfg.coefficients = std::move(coefficients);
    cfg.threads = threads;
    cfg.bootstrap_seed = seed;
    return cfg;
}

double dense_fidelity(const Tableau& encoded, const StabilizerCode& code, const PauliSum& logical,
                      const std::vector<double>& coefficients, double p) {
    const auto rho = exact_noisy_state<double>(encoded, p);
    return exact_lst_value<double>(rho, code.generators, lift_observable(code, logical), coefficients).ratio;
}

// 1. Sampled estimates agree with the exact value.
void oracle_equivalence(const Options& opt, Outcome& out) {
    const StabilizerCode code = five_qubit_code();
    const PauliSum fidelity = fidelity_observable(zero_prep(1));
    const std::vector<std::vector<double>> polys{{1.0}, {0.0, 1.0}};
    std::uint64_t seed = 101;
    for (double p : {0.05, 0.1, 0.3}) {
        ShadowAcquirer acq(code, 1, zero_prep(1), {p, seed++});
        const auto snaps = acq.acquire_range(0, 100000, opt.threads);
        for (const auto& f : polys) {
            const EstimateReport r = lst_expectation(snaps, code, fidelity, estimator_config(f, opt.threads, seed));
            const double exact = dense_fidelity(acq.encoded_state(), code, fidelity, f, p);
            const double z = std::abs(r.ratio - exact) / r.bootstrap_std;
            out.require(z <= 3.0);
            out.detail << " p=" << p << ",m=" << f.size() << ":" << std::setprecision(3) << z << "sd";
        }
    }
}

// 2. The exact f=rho infidelity crosses the unencoded infidelity near p = 0.5.
void pseudo_threshold(const Options& opt, Outcome& out) {
    const StabilizerCode code = five_qubit_code();
    const PauliSum fidelity = fidelity_observable(zero_prep(1));
    const Tableau encoded = prepare_logical_state(std::span(&code, 1), zero_prep(1));
    const std::vector<double> f{1.0};
    auto gap = [&](double p) { return (1.0 - dense_fidelity(encoded, code, fidelity, f, p)) - 2.0 * p / 3.0; };

    // First sign change above p = 0, then bisection.
    double lo = 0.01, hi = 0.0;
    while (lo < 0.99 && (gap(lo) < 0) == (gap(lo + 0.01) < 0)) lo += 0.01;
    hi = lo + 0.01;
    if (lo >= 0.99) {
        out.require(false);
        out.detail << " no crossing below p=1";
        return;
    }
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        ((gap(mid) < 0) == (gap(lo) < 0) ? lo : hi) = mid;
    }
    const double crossing = 0.5 * (lo + hi);
    out.require(std::abs(crossing - 0.5) <= 0.05);
    out.detail << " crossing p=" << std::setprecision(4) << crossing;

    // Sampled curve on the default grid at 3000 shots.
    std::vector<double> grid;
    for (int i = 0; i < 20; ++i) grid.push_back(1e-3 * std::pow(900.0, i / 19.0));
    std::size_t outside = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        ShadowAcquirer acq(code, 1, zero_prep(1), {grid[i], 200 + i});
        const auto snaps = acq.acquire_range(0, 3000, opt.threads);
        const EstimateReport r = lst_expectation(snaps, code, fidelity, estimator_config(f, opt.threads, 7 + i));
        const double z = std::abs(r.ratio - dense_fidelity(encoded, code, fidelity, f, grid[i])) / r.bootstrap_std;
        worst = std::max(worst, z);
        if (!(z <= 3.0)) ++outside;
    }
    out.require(outside == 0);
    out.detail << "; sampled points outside 3sd: " << outside << "/" << grid.size() << " (worst " << worst << "sd)";
}

// 3. Low-noise infidelity exponents, computed in quad precision.
void suppression_exponents(const Options&, Outcome& out) {
    const StabilizerCode code = five_qubit_code();
    std::vector<double> ps, log_p;
    for (int i = 0; i < 9; ++i) {
        ps.push_back(1e-3 * std::pow(10.0, i / 8.0));
        log_p.push_back(std::log(ps.back()));
    }
    Rng rng(314);
    std::normal_distribution<double> normal;
    std::vector<double> slopes1, slopes2;
    for (int state = 0; state < 5; ++state) {
        double v[3];
        double norm = 0.0;
        for (double& c : v) {
            c = normal(rng);
            norm += c * c;
        }
        for (double& c : v) c /= std::sqrt(norm);
        // Unit length and the observable built in quad precision, so the pure-state
        // infidelity floor sits far below p^6.
        QuadReal vq[3] = {v[0], v[1], v[2]};
        const QuadReal sq = vq[0] * vq[0] + vq[1] * vq[1] + vq[2] * vq[2];
        QuadReal length = std::sqrt(static_cast<double>(sq));
        for (int it = 0; it < 2; ++it) length = (length + sq / length) / 2;
        for (QuadReal& c : vq) c /= length;
        const DenseMatrix<QuadReal> pure = encoded_bloch_state<QuadReal>(code, vq);
        // Infidelity observable (1 - v.sigma)/2 on the logical qubit.
        DenseMatrix<QuadReal> orthogonal = DenseMatrix<QuadReal>::identity(pure.dim());
        const char* logical[] = {"X", "Y", "Z"};
        for (int a = 0; a < 3; ++a) {
            DenseMatrix<QuadReal> term = pauli_matrix<QuadReal>(lift_logical(code, PauliOp::from_string(logical[a])));
            term *= -vq[a];
            orthogonal += term;
        }
        orthogonal *= QuadReal(0.5);
        std::vector<double> log_i1, log_i2;
        for (double p : ps) {
            DenseMatrix<QuadReal> rho = pure;
            for (std::size_t q = 0; q < code.n; ++q) rho = depolarize(rho, code.n, q, QuadReal(p));
            const std::vector<double> f1{1.0}, f2{0.0, 1.0};
            log_i1.push_back(std::log(static_cast<double>(exact_lst_value(rho, code.generators, orthogonal, f1).ratio)));
            log_i2.push_back(std::log(static_cast<double>(exact_lst_value(rho, code.generators, orthogonal, f2).ratio)));
        }
        slopes1.push_back(fit_line(log_p, log_i1).slope);
        slopes2.push_back(fit_line(log_p, log_i2).slope);
    }
    out.detail << std::setprecision(4) << " f=rho slopes";
    for (double s : slopes1) {
        out.require(std::abs(s - 3.0) <= 0.3);
        out.detail << " " << s;
    }
    out.detail << "; f=rho^2 slopes";
    for (double s : slopes2) {
        out.require(std::abs(s - 6.0) <= 0.6);
        out.detail << " " << s;
    }
}

// 4. Fidelity converges to one for larger codes; the error bar does not trend with n.
void code_size_convergence(const Options& opt, Outcome& out) {
    std::vector<std::string> names{"five_qubit", "steane", "random_11", "random_17"};
    if (!opt.skip_n60) names.push_back("random_60");
    constexpr std::size_t kShots = 100000;
    constexpr std::size_t kBatches = 20;
    std::vector<double> ns, stds, std_errs;
    for (std::size_t c = 0; c < names.size(); ++c) {
        const auto start = Clock::now();
        const StabilizerCode code = load_code_file(opt.data_dir + "/codes/" + names[c] + ".code");
        ShadowAcquirer acq(code, 1, zero_prep(1), {0.01, 400 + c});
        const PauliSum fidelity = fidelity_observable(zero_prep(1));
        const EstimatorConfig cfg = estimator_config({1.0}, opt.threads, 41 + c);
        const SampleSet all = stream_samples(acq, code, lift_observable(code, fidelity), cfg, kShots);
        const EstimateReport r = summarize(all, cfg);
        const double z = std::abs(r.ratio - 1.0) / r.bootstrap_std;
        out.require(z <= 3.0);

        // Spread of the error bar from equal batches, rescaled to the full run.
        std::vector<double> batch_std;
        const std::size_t per = all.numerator.size() / kBatches;
        for (std::size_t b = 0; b < kBatches; ++b) {
            SampleSet part;
            part.numerator.assign(all.numerator.begin() + b * per, all.numerator.begin() + (b + 1) * per);
            part.denominator.assign(all.denominator.begin() + b * per, all.denominator.begin() + (b + 1) * per);
            batch_std.push_back(summarize(part, cfg).bootstrap_std);
        }
        const double scale = 1.0 / std::sqrt(static_cast<double>(kBatches));
        const double mean = std::accumulate(batch_std.begin(), batch_std.end(), 0.0) / kBatches;
        double var = 0.0;
        for (double s : batch_std) var += (s - mean) * (s - mean);
        var /= kBatches - 1;
        ns.push_back(static_cast<double>(code.n));
        stds.push_back(r.bootstrap_std);
        std_errs.push_back(std::sqrt(var / kBatches) * scale);
        out.detail << " n=" << code.n << ": F=" << std::setprecision(5) << r.ratio << "+-" << std::setprecision(3)
                   << r.bootstrap_std << " (" << z << "sd, " << std::setprecision(3) << seconds_since(start) << "s);";
    }
    const LineFit fit = fit_line_weighted(ns, stds, std_errs);
    const bool flat = std::abs(fit.slope) <= 2.0 * fit.slope_stderr;
    out.require(flat);
    out.detail << " std slope in n " << std::setprecision(3) << fit.slope << "+-" << fit.slope_stderr
               << (flat ? " (not significant)" : " (significant at 2sd)");
}

// 5. Error bar of the k-qubit GHZ parity grows by a factor two per logical qubit.
void logical_scaling(const Options& opt, Outcome& out) {
    const StabilizerCode sector = five_qubit_code();
    std::vector<double> ks, log_std;
    for (std::size_t k = 1; k <= 4; ++k) {
        std::vector<StabilizerCode> parts(k, sector);
        const StabilizerCode code = combine_sectors(parts);
        ShadowAcquirer acq(sector, k, ghz_prep(k), {0.01, 500 + k});
        const PauliSum parity{{1.0, PauliOp::from_string(std::string(k, 'X'))}};
        const EstimatorConfig cfg = estimator_config({1.0}, opt.threads, 60 + k);
        const EstimateReport r =
            summarize(stream_samples(acq, code, lift_observable(code, parity), cfg, 20000), cfg);
        ks.push_back(static_cast<double>(k));
        log_std.push_back(std::log(r.bootstrap_std));
        out.detail << " k=" << k << ": " << std::setprecision(4) << r.ratio << "+-" << r.bootstrap_std << ";";
    }
    const LineFit fit = fit_line(ks, log_std);
    out.require(std::abs(fit.slope - std::log(2.0)) <= 0.3 * std::log(2.0));
    out.detail << " slope " << std::setprecision(4) << fit.slope << " vs ln2=" << std::log(2.0);
}

// 6. Clifford-averaged variance operator against the closed forms.
void variance_closed_forms(const Options&, Outcome& out) {
    auto pauli = [](const char* s) { return pauli_matrix<double>(PauliOp::from_string(s)); };
    struct Case {
        std::size_t n;
        DenseMatrix<double> projector;
        std::vector<const char*> observables;
    };
    std::vector<Case> cases;
    cases.push_back({1, DenseMatrix<double>::identity(2), {"X", "Y", "Z"}});
    cases.push_back({2, (DenseMatrix<double>::identity(4) + pauli("ZZ")) * 0.5, {"XX", "ZI", "YY"}});
    cases.push_back({2, (DenseMatrix<double>::identity(4) + pauli("XY")) * 0.5, {"ZZ", "XI", "YZ"}});
    double worst = 0.0;
    for (const Case& c : cases) {
        const auto id = DenseMatrix<double>::identity(c.projector.dim());
        worst = std::max(worst, empirical_variance_operator(c.n, c.projector, id)
                                    .max_sq_distance(variance_operator_closed_form(c.n, c.projector, false)));
        for (const char* o : c.observables) {
            worst = std::max(worst, empirical_variance_operator(c.n, c.projector, pauli(o))
                                        .max_sq_distance(variance_operator_closed_form(c.n, c.projector, true)));
        }
    }
    const double max_abs = std::sqrt(worst);
    out.require(max_abs <= 1e-10);
    out.detail << " max entry error " << max_abs;
}

// 7. Fast m=1 path against the general path, and the affine trace against dense matrices.
void algorithmic_equivalence(const Options&, Outcome& out) {
    const StabilizerCode code = five_qubit_code();
    Rng rng(77);
    double worst_fast = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const double p = uniform01(rng) * 0.5;
        const LogicalStatePrep prep = (i % 3 == 0) ? zero_prep(1) : (i % 3 == 1) ? plus_prep(1) : parse_prep("-Y", 1);
        ShadowAcquirer acq(code, 1, prep, {p, 900 + i});
        const Snapshot s = acq.acquire(i);
        const PauliSum obs = lift_observable(
            code, {{0.5, PauliOp::from_string("I")}, {0.3, PauliOp::from_string("Z")}, {-0.2, PauliOp::from_string("X")}});
        const double general = tuple_projected_trace(std::span<const Snapshot>(&s, 1), code, obs);
        worst_fast = std::max(worst_fast, std::abs(fast_projected_trace(s, code, obs) - general));
    }

    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    double worst_affine = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 1 + rng() % 5;
        std::vector<AffinePauliFactor> factors(1 + rng() % 9);
        const std::size_t d = std::size_t{1} << n;
        auto product = DenseMatrix<double>::identity(d);
        for (auto& f : factors) {
            PauliOp op(n);
            for (std::size_t q = 0; q < n; ++q) op.set_pauli(q, "IXYZ"[rng() % 4]);
            op.set_phase_exp(2 * static_cast<int>(rng() % 2));
            f = {coef(rng), coef(rng), op};
            product = product * (DenseMatrix<double>::identity(d) * f.a + pauli_matrix<double>(op) * f.b);
        }
        const auto exact = product.trace();
        const auto fast = affine_product_trace_complex(n, factors);
        const double scale = std::max(1.0, std::hypot(exact.re, exact.im));
        worst_affine = std::max(worst_affine, std::hypot(fast.real() - exact.re, fast.imag() - exact.im) / scale);
    }
    out.require(worst_fast <= 1e-10 && worst_affine <= 1e-10);
    out.detail << " fast vs general " << worst_fast << "; affine vs dense (relative) " << worst_affine;
}

// 8. Runtime of the tableau projection against the register size.
void projection_runtime(const Options&, Outcome& out) {
    Rng rng(88);
    std::vector<double> log_n, log_t;
    for (std::size_t n : {15u, 30u, 60u}) {
        // Random [[n, 1]] stabilizer group and random pure input state.
        const CliffordElement encoder = sample_uniform_clifford(n, rng);
        std::vector<PauliOp> generators;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            PauliOp z(n);
            z.set_pauli(j, 'Z');
            generators.push_back(encoder.conjugate(z));
        }
        Tableau state = Tableau::zero_state(n);
        apply_clifford(state, sample_uniform_clifford(n, rng), 0);

        const std::size_t reps = std::max<std::size_t>(20, 400000 / (n * n * n));
        double best = 1e300;
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Tableau> copies(reps, state);
            double sink = 0.0;
            const auto start = Clock::now();
            for (Tableau& t : copies) sink += t.project(generators);
            const double per_call = seconds_since(start) / reps;
            if (sink < 0) std::abort();
            best = std::min(best, per_call);
        }
        log_n.push_back(std::log(static_cast<double>(n)));
        log_t.push_back(std::log(best));
        out.detail << " N=" << n << ": " << std::setprecision(3) << best * 1e6 << "us;";
    }
    const LineFit fit = fit_line(log_n, log_t);
    out.require(fit.slope <= 3.3);
    out.detail << " log-log slope " << std::setprecision(3) << fit.slope;
}

std::vector<int> parse_list(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stoi(item));
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        auto value = [&]() -> std::string {
            if (i + 1 >= argc) {
                std::cerr << "missing value for " << arg << "\n";
                std::exit(1);
            }
            return argv[++i];
        };
        if (arg == "--data-dir") {
            opt.data_dir = value();
        } else if (arg == "--only") {
            opt.only = parse_list(value());
        } else if (arg == "--threads") {
            opt.threads = std::stoul(value());
        } else if (arg == "--skip-n60") {
            opt.skip_n60 = true;
        } else {
            std::cerr << "usage: acceptance --data-dir DIR [--only 1,2] [--threads N] [--skip-n60]\n";
            return 1;
        }
    }

    const std::vector<std::pair<const char*, std::function<void(const Options&, Outcome&)>>> criteria{
        {"oracle_equivalence", oracle_equivalence},
        {"pseudo_threshold", pseudo_threshold},
        {"suppression_exponents", suppression_exponents},
        {"code_size_convergence", code_size_convergence},
        {"logical_scaling", logical_scaling},
        {"variance_closed_forms", variance_closed_forms},
        {"algorithmic_equivalence", algorithmic_equivalence},
        {"projection_runtime", projection_runtime},
    };

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
        Outcome out;
        const auto start = Clock::now();
        try {
            criteria[i].second(opt, out);
        } catch (const std::exception& e) {
            out.passed = false;
            out.detail << " error: " << e.what();
        }
        all = all && out.passed;
        std::cout << (out.passed ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first << " ["
                  << std::setprecision(3) << seconds_since(start) << "s]" << out.detail.str() << std::endl;
    }
    return all ? 0 : 1;
}
