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

#include "lst/oracle_check.h"

#include <cmath>
#include <exception>
#include <sstream>

#include "lst/affine_trace.h"
#include "lst/clifford.h"
#include "lst/code.h"
#include "lst/dense.h"
#include "lst/estimator.h"
#include "lst/noise.h"
#include "lst/shadow.h"

namespace lst {
namespace {

constexpr std::size_t kMaxQubits = 6;

PauliOp random_pauli(std::size_t n, Rng& rng, bool hermitian) {
    PauliOp p(n);
    for (std::size_t q = 0; q < n; ++q) p.set_pauli(q, "IXYZ"[rng() % 4]);
    p.set_phase_exp(hermitian ? 2 * static_cast<int>(rng() % 2) : static_cast<int>(rng() % 4));
    return p;
}

std::size_t random_size(Rng& rng, std::size_t max) { return 1 + rng() % max; }

Tableau random_stabilizer_state(std::size_t n, std::size_t rank, Rng& rng) {
    const CliffordElement w = sample_uniform_clifford(n, rng);
    std::vector<PauliOp> gens;
    for (std::size_t j = 0; j < rank; ++j) {
        gens.push_back(w.z_image(j));
        if (rng() & 1) gens.back().negate();
    }
    return Tableau::from_stabilizers(n, gens);
}

double max_abs_diff(const DenseMatrix<double>& a, const DenseMatrix<double>& b) {
    return std::sqrt(a.max_sq_distance(b));
}

// Runs body(detail) and converts its verdict or any exception into a result.
template <class Body>
OracleCheckResult run_check(const std::string& name, Body&& body) {
    OracleCheckResult r{name, false, ""};
    std::ostringstream detail;
    try {
        r.passed = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
        r.passed = false;
    }
    r.detail = detail.str();
    return r;
}

bool within_sigma(const EstimateReport& report, double exact, double sigmas, std::ostream& detail) {
    const double diff = std::abs(report.ratio - exact);
    detail << "estimate " << report.ratio << " +- " << report.bootstrap_std << ", exact " << exact;
    if (report.bootstrap_std == 0.0) return diff < 1e-9;
    return diff <= sigmas * report.bootstrap_std;
}

struct StatisticalCase {
    StabilizerCode sector;
    std::size_t sectors;
    LogicalStatePrep prep;
    double p;
    PauliSum logical_observable;
    std::vector<double> coefficients;
};

bool check_estimator_against_dense(const StatisticalCase& c, const OracleCheckConfig& cfg, std::uint64_t seed,
                                   std::ostream& detail) {
    ShadowAcquirer acquirer(c.sector, c.sectors, c.prep, NoiseSpec{c.p, seed});
    std::vector<StabilizerCode> parts(c.sectors, c.sector);
    const StabilizerCode code = combine_sectors(parts);
    const std::vector<Snapshot> snaps = acquirer.acquire_range(0, cfg.shots, cfg.threads);

    EstimatorConfig ecfg;
    ecfg.coefficients = c.coefficients;
    ecfg.threads = cfg.threads;
    ecfg.bootstrap_seed = seed;
    const EstimateReport report = lst_expectation(snaps, code, c.logical_observable, ecfg);

    const DenseMatrix<double> rho = exact_noisy_state<double>(acquirer.encoded_state(), c.p);
    const PauliSum physical = lift_observable(code, c.logical_observable);
    const double exact = exact_lst_value<double>(rho, code.generators, physical, c.coefficients).ratio;
    return within_sigma(report, exact, 3.0, detail);
}

}  // namespace

std::vector<OracleCheckResult> run_oracle_checks(const OracleCheckConfig& config, const OracleCheckHooks& hooks) {
    const auto mul = hooks.multiply ? hooks.multiply
                                    : std::function<PauliOp(const PauliOp&, const PauliOp&)>(
                                          [](const PauliOp& a, const PauliOp& b) { return multiply(a, b); });
    std::vector<OracleCheckResult> results;

    results.push_back(run_check("pauli_multiply_associative", [&](std::ostream& detail) {
        Rng rng = derive_rng(config.seed, 0, 1);
        for (std::size_t t = 0; t < config.trials; ++t) {
            const std::size_t n = random_size(rng, kMaxQubits);
            PauliOp a = random_pauli(n, rng, false), b = random_pauli(n, rng, false), c = random_pauli(n, rng, false);
            if (!(mul(mul(a, b), c) == mul(a, mul(b, c)))) {
                detail << "(ab)c != a(bc) for a=" << a.str() << " b=" << b.str() << " c=" << c.str();
                return false;
            }
        }
        detail << config.trials << " triples";
        return true;
    }));

    results.push_back(run_check("pauli_multiply_dense", [&](std::ostream& detail) {
        Rng rng = derive_rng(config.seed, 0, 2);
        for (std::size_t t = 0; t < config.trials; ++t) {
            const std::size_t n = random_size(rng, kMaxQubits);
            PauliOp a = random_pauli(n, rng, false), b = random_pauli(n, rng, false);
            const auto lhs = pauli_matrix<double>(mul(a, b));
            const auto rhs = pauli_matrix<double>(a) * pauli_matrix<double>(b);
            if (max_abs_diff(lhs, rhs) > 1e-12) {
                detail << "product of " << a.str() << " and " << b.str() << " disagrees with matrices";
                return false;
            }
        }
        detail << config.trials << " products";
        return true;
    }));

    results.push_back(run_check("pauli_commutation_dense", [&](std::ostream& detail) {
        Rng rng = derive_rng(config.seed, 0, 3);
        for (std::size_t t = 0; t < config.trials; ++t) {
            const std::size_t n = random_size(rng, kMaxQubits);
            PauliOp a = random_pauli(n, rng, true), b = random_pauli(n, rng, true);
            const auto ma = pauli_matrix<double>(a), mb = pauli_matrix<double>(b);
            const bool dense_commute = max_abs_diff(ma * mb, mb * ma) < 1e-12;
            if (dense_commute != commutes(a, b)) {
                detail << a.str() << " and " << b.str();
                return false;
            }
        }
        detail << config.trials << " pairs";
        return true;
    }));

    results.push_back(run_check("gate_conjugation_dense", [&](std::ostream& detail) {
        Rng rng = derive_rng(config.seed, 0, 4);
        const Gate gates[] = {Gate::H, Gate::S, Gate::SDag, Gate::X, Gate::Y, Gate::Z, Gate::CX, Gate::CZ, Gate::SWAP};
        for (std::size_t t = 0; t < config.trials; ++t) {
            const std::size_t n = 2 + rng() % (kMaxQubits - 1);
            GateOp g{gates[rng() % std::size(gates)], static_cast<std::uint32_t>(rng() % n), 0};
            g.q1 = static_cast<std::uint32_t>((g.q0 + 1 + rng() % (n - 1)) % n);
            PauliOp p = random_pauli(n, rng, true);
            const auto u = gate_matrix(n, g);
            const auto expected = u * pauli_matrix<double>(p) * u.adjoint();
            PauliOp image = p;
            image.apply_gate(g);
            if (max_abs_diff(pauli_matrix<double>(image), expected) > 1e-12) {
                detail << gate_name(g.gate) << " on " << p.str();
                return false;
            }
        }
        detail << config.trials << " conjugations";
        return true;
    }));

    results.push_back(run_check("clifford_conjugation_dense", [&](std::ostream& detail) {
        Rng rng = derive_rng(config.seed, 0, 5);
        const std::size_t count = std::max<std::size_t>(1, config.trials / 4);
        for (std::size_t t = 0; t < count; ++t) {
            const std::size_t n = random_size(rng, 4);
            const CliffordElement w = sample_uniform_clifford(n, rng);
            auto u = DenseMatrix<double>::identity(std::size_t{1} << n);
            for (const GateOp& g : w.to_circuit()) u = gate_matrix(n, g) * u;
            PauliOp p = random_pauli(n, rng, true);
            const auto expected = u * pauli_matrix<double>(p) * u.adjoint();
            if (max_abs_diff(pauli_matrix<double>(w.conjugate(p)), expected) > 1e-10) {
                detail << "conjugation of " << p.str() << " on " << n << " qubits";
                return false;
            }
        }
        detail << count << " random Cliffords";
        return true;
    }));

    results.push_back(run_check("affine_trace_dense", [&](std::ostream& detail) {
        Rng rng = derive_rng(config.seed, 0, 6);
        double worst = 0.0;
        for (std::size_t t = 0; t < config.trials; ++t) {
            const std::size_t n = random_size(rng, 5);
            const std::size_t count = random_size(rng, 8);
            std::vector<AffinePauliFactor> factors;
            auto product = DenseMatrix<double>::identity(std::size_t{1} << n);
            for (std::size_t f = 0; f < count; ++f) {
                const double a = 2.0 * uniform01(rng) - 1.0;
                const double b = 2.0 * uniform01(rng) - 1.0;
                PauliOp op = random_pauli(n, rng, true);
                auto term = DenseMatrix<double>::identity(std::size_t{1} << n) * a + pauli_matrix<double>(op) * b;
                product = product * term;
                factors.push_back({a, b, std::move(op)});
            }
            const auto fast = affine_product_trace_complex(n, factors);
            const auto exact = product.trace();
            const double err = std::hypot(fast.real() - exact.re, fast.imag() - exact.im) /
                               std::max(1.0, std::hypot(exact.re, exact.im));
            worst = std::max(worst, err);
        }
        detail << "worst relative error " << worst;
        return worst <= 1e-10;
    }));

    results.push_back(run_check("tableau_projection_dense", [&](std::ostream& detail) {
        Rng rng = derive_rng(config.seed, 0, 7);
        for (std::size_t t = 0; t < config.trials; ++t) {
            const std::size_t n = random_size(rng, kMaxQubits);
            Tableau state = random_stabilizer_state(n, rng() % (n + 1), rng);
            const Tableau group = random_stabilizer_state(n, 1 + rng() % n, rng);
            std::vector<PauliOp> gens;
            for (std::size_t i = 0; i < group.num_active(); ++i) gens.push_back(group.stabilizer(i));

            const auto rho = stabilizer_state_matrix<double>(state);
            const auto projected = project_both(rho, std::span<const PauliOp>(gens));
            const double expected = projected.trace().re;
            const double value = state.project(gens);
            if (std::abs(value - expected) > 1e-12) {
                detail << "trace " << value << " vs dense " << expected;
                return false;
            }
            if (value > 0.0) {
                auto post = stabilizer_state_matrix<double>(state) * value;
                if (max_abs_diff(post, projected) > 1e-12) {
                    detail << "post-projection state differs on " << n << " qubits";
                    return false;
                }
                const PauliOp probe = random_pauli(n, rng, true);
                const double ev = trace_with_pauli(projected, probe).re / value;
                if (std::abs(state.expectation(probe) - ev) > 1e-12) {
                    detail << "expectation of " << probe.str() << " differs";
                    return false;
                }
            }
        }
        detail << config.trials << " projections";
        return true;
    }));

    results.push_back(run_check("fast_path_equivalence", [&](std::ostream& detail) {
        const StabilizerCode code = five_qubit_code();
        ShadowAcquirer acquirer(code, 1, zero_prep(1), NoiseSpec{0.1, config.seed});
        const std::size_t count = std::min<std::size_t>(config.trials, 100);
        const PauliSum observables[] = {lift_observable(code, {{1.0, PauliOp::from_string("Z")}}),
                                        {{1.0, PauliOp(code.n)}},
                                        lift_observable(code, fidelity_observable(zero_prep(1)))};
        double worst = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            const Snapshot s = acquirer.acquire(i);
            for (const PauliSum& obs : observables) {
                const double general = tuple_projected_trace(std::span<const Snapshot>(&s, 1), code, obs);
                worst = std::max(worst, std::abs(general - fast_projected_trace(s, code, obs)));
            }
        }
        detail << "worst difference " << worst << " over " << count << " snapshots";
        return worst <= 1e-10;
    }));

    const PauliSum logical_z{{1.0, PauliOp::from_string("Z")}};
    results.push_back(run_check("estimator_m1_vs_dense", [&](std::ostream& detail) {
        return check_estimator_against_dense({five_qubit_code(), 1, zero_prep(1), 0.1, logical_z, {1.0}}, config,
                                             config.seed + 1, detail);
    }));
    results.push_back(run_check("estimator_m2_vs_dense", [&](std::ostream& detail) {
        return check_estimator_against_dense({five_qubit_code(), 1, zero_prep(1), 0.1, logical_z, {0.0, 1.0}}, config,
                                             config.seed + 2, detail);
    }));
    const PauliSum logical_xx{{1.0, PauliOp::from_string("XX")}};
    results.push_back(run_check("estimator_two_sectors_vs_dense", [&](std::ostream& detail) {
        std::ostringstream m1, m2;
        bool ok = check_estimator_against_dense({trivial_code(1), 2, ghz_prep(2), 0.2, logical_xx, {1.0}}, config,
                                                config.seed + 3, m1);
        ok = check_estimator_against_dense({trivial_code(1), 2, ghz_prep(2), 0.2, logical_xx, {0.0, 1.0}}, config,
                                           config.seed + 4, m2) &&
             ok;
        detail << "m=1: " << m1.str() << "; m=2: " << m2.str();
        return ok;
    }));

    results.push_back(run_check("noiseless_fidelity", [&](std::ostream& detail) {
        const StabilizerCode code = five_qubit_code();
        const LogicalStatePrep prep = zero_prep(1);
        const PauliSum fidelity = fidelity_observable(prep);
        ShadowAcquirer acquirer(code, 1, prep, NoiseSpec{0.0, config.seed + 5});
        const auto rho = exact_noisy_state<double>(acquirer.encoded_state(), 0.0);
        const std::vector<double> f{1.0};
        const double exact = exact_lst_value<double>(rho, code.generators, lift_observable(code, fidelity), f).ratio;
        if (std::abs(exact - 1.0) > 1e-12) {
            detail << "dense fidelity " << exact;
            return false;
        }
        EstimatorConfig ecfg;
        ecfg.threads = config.threads;
        const EstimateReport report =
            lst_expectation(acquirer.acquire_range(0, config.shots, config.threads), code, fidelity, ecfg);
        return within_sigma(report, 1.0, 3.0, detail);
    }));

    return results;
}

bool all_passed(const std::vector<OracleCheckResult>& results) {
    for (const auto& r : results) {
        if (!r.passed) return false;
    }
    return true;
}

}  // namespace lst
