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

#include "lst/estimator.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "lst/errors.h"
#include "lst/parallel.h"
#include "lst/statistics.h"

namespace lst {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::size_t sector_size_of(const Snapshot& s, const StabilizerCode& code) {
    if (s.cliffords.empty()) throw SizeMismatch("snapshot has no sectors");
    const std::size_t n = s.cliffords.front().n_qubits();
    if (n * s.num_sectors() != code.n || s.outcomes.size() != s.num_sectors()) {
        throw SizeMismatch("snapshot shape (" + std::to_string(s.num_sectors()) + " sectors of " + std::to_string(n) +
                           " qubits) does not match a " + std::to_string(code.n) + "-qubit code");
    }
    return n;
}

void append_observable_factor(std::vector<AffinePauliFactor>& factors, const PauliTerm& term) {
    PauliOp canonical = term.op;
    canonical.set_phase_exp(0);
    double value = term.coefficient * term.op.sign();
    if (term.op.is_identity()) {
        factors.push_back({value, 0.0, std::move(canonical)});
    } else {
        factors.push_back({0.0, value, std::move(canonical)});
    }
}

void check_observable(const PauliSum& observable, std::size_t n) {
    for (const auto& t : observable) {
        if (t.op.n_qubits() != n) throw SizeMismatch("observable term has the wrong qubit count");
        if (!t.op.is_hermitian()) throw Error("observable term " + t.op.str() + " is not Hermitian");
    }
}

// Tr(Pi rho_hat Pi O_j) for every observable O_j, sharing the projected tableau per term.
std::vector<double> fast_traces(const Snapshot& snapshot, const StabilizerCode& code,
                                std::span<const PauliSum* const> observables) {
    const std::size_t n = sector_size_of(snapshot, code);
    const std::size_t k = snapshot.num_sectors();
    std::vector<Tableau> pure;
    pure.reserve(k);
    for (std::size_t i = 0; i < k; ++i) pure.push_back(snapshot_sector_state(snapshot, i));
    const Tableau mixed = Tableau::maximally_mixed(n);
    const double dim = std::ldexp(1.0, static_cast<int>(n));

    std::vector<double> totals(observables.size(), 0.0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Tableau t = (mask & 1) ? pure[0] : mixed;
        for (std::size_t i = 1; i < k; ++i) t = Tableau::direct_sum(t, ((mask >> i) & 1) ? pure[i] : mixed);
        double trace = t.project(code.generators);
        if (trace == 0.0) continue;
        const int chosen = std::popcount(mask);
        // (2^n + 1) sigma for chosen sectors, -1 = -2^n (1 / 2^n) for the others.
        double weight = std::pow(dim + 1.0, chosen) * std::pow(-dim, static_cast<int>(k) - chosen) * trace;
        for (std::size_t j = 0; j < observables.size(); ++j) {
            double ev = 0.0;
            for (const auto& term : *observables[j]) ev += term.coefficient * t.expectation(term.op);
            totals[j] += weight * ev;
        }
    }
    return totals;
}

PauliSum identity_observable(std::size_t n) { return {{1.0, PauliOp(n)}}; }

}  // namespace

PauliSum lift_observable(const StabilizerCode& code, const PauliSum& logical) {
    PauliSum out;
    out.reserve(logical.size());
    for (const auto& t : logical) {
        PauliOp op = lift_logical(code, t.op);
        if (!op.is_hermitian()) throw Error("logical observable term " + t.op.str() + " is not Hermitian");
        out.push_back({t.coefficient, std::move(op)});
    }
    return out;
}

PauliSum fidelity_observable(const LogicalStatePrep& prep) {
    const std::size_t k = prep.k();
    if (k == 0 || k > 20) throw SizeMismatch("fidelity_observable: unsupported logical qubit count");
    const double weight = std::ldexp(1.0, -static_cast<int>(prep.generators.size()));
    PauliSum out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << prep.generators.size()); ++mask) {
        PauliOp element(k);
        for (std::size_t j = 0; j < prep.generators.size(); ++j) {
            if ((mask >> j) & 1) element *= prep.generators[j];
        }
        out.push_back({weight, std::move(element)});
    }
    return out;
}

PauliSum parse_observable(std::string_view spec, std::size_t k, const LogicalStatePrep& prep) {
    spec = trim(spec);
    if (spec == "fidelity") return fidelity_observable(prep);
    PauliSum out;
    while (!spec.empty()) {
        std::size_t comma = spec.find(',');
        std::string_view token = trim(spec.substr(0, comma));
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
        if (token.empty()) continue;
        double coefficient = 1.0;
        if (auto star = token.find('*'); star != std::string_view::npos) {
            std::string number(trim(token.substr(0, star)));
            std::size_t used = 0;
            try {
                coefficient = std::stod(number, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != number.size() || number.empty()) throw ParseError("bad coefficient '" + number + "'");
            token = trim(token.substr(star + 1));
        }
        PauliOp op = PauliOp::from_string(token);
        if (op.n_qubits() != k) {
            throw ParseError("observable '" + std::string(token) + "' must act on " + std::to_string(k) + " qubits");
        }
        if (!op.is_hermitian()) throw ParseError("observable '" + std::string(token) + "' is not Hermitian");
        out.push_back({coefficient, std::move(op)});
    }
    if (out.empty()) throw ParseError("empty observable");
    return out;
}

std::array<WeightedFactors, 2> reconstruction_factors(const Snapshot& snapshot, std::size_t sector,
                                                      std::size_t n_total) {
    const CliffordElement& w = snapshot.cliffords.at(sector);
    const BitVector& bits = snapshot.outcomes.at(sector);
    const std::size_t n = w.n_qubits();
    const std::size_t offset = sector * n;
    if (offset + n > n_total) throw SizeMismatch("reconstruction_factors: sector outside the register");

    WeightedFactors sigma{std::ldexp(1.0, static_cast<int>(n)) + 1.0, {}};
    sigma.factors.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        PauliOp image = embed(w.z_image(j), n_total, offset);
        int sign = image.sign() * (bits.get(j) ? -1 : 1);
        image.set_phase_exp(0);
        sigma.factors.push_back({0.5, 0.5 * sign, std::move(image)});
    }
    return {std::move(sigma), WeightedFactors{-1.0, {}}};
}

double tuple_projected_trace(std::span<const Snapshot> tuple, const StabilizerCode& code, const PauliSum& observable,
                             std::uint64_t null_space_cap) {
    if (tuple.empty()) throw InsufficientShots("tuple_projected_trace: empty tuple");
    check_observable(observable, code.n);
    const std::size_t m = tuple.size();
    const std::size_t k = tuple.front().num_sectors();
    for (const Snapshot& s : tuple) {
        sector_size_of(s, code);
        if (s.num_sectors() != k) throw SizeMismatch("tuple_projected_trace: snapshots differ in sector count");
    }
    if (m * k >= 63) throw SizeMismatch("tuple_projected_trace: too many sector terms");

    std::vector<std::array<WeightedFactors, 2>> recon;
    recon.reserve(m * k);
    for (const Snapshot& s : tuple) {
        for (std::size_t i = 0; i < k; ++i) recon.push_back(reconstruction_factors(s, i, code.n));
    }
    const std::vector<AffinePauliFactor> projector = projector_factors(code);

    double total = 0.0;
    std::vector<AffinePauliFactor> factors;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m * k)); ++mask) {
        double weight = 1.0;
        factors.clear();
        for (std::size_t slot = 0; slot < m * k; ++slot) {
            const WeightedFactors& part = recon[slot][((mask >> slot) & 1) ? 0 : 1];
            weight *= part.weight;
            factors.insert(factors.end(), part.factors.begin(), part.factors.end());
        }
        factors.insert(factors.end(), projector.begin(), projector.end());
        const std::size_t base = factors.size();
        for (const PauliTerm& term : observable) {
            factors.resize(base);
            append_observable_factor(factors, term);
            try {
                double value = m == 1 ? affine_product_trace(code.n, factors, null_space_cap)
                                      : affine_product_trace_complex(code.n, factors, null_space_cap).real();
                total += weight * value;
            } catch (const NullSpaceTooLarge& e) {
                std::string shots;
                for (const Snapshot& s : tuple) shots += (shots.empty() ? "" : ",") + std::to_string(s.shot_index);
                throw NullSpaceTooLarge(e.dimension(), e.cap(), "tuple of shots " + shots);
            }
        }
    }
    return total;
}

double fast_projected_trace(const Snapshot& snapshot, const StabilizerCode& code, const PauliSum& observable) {
    check_observable(observable, code.n);
    const PauliSum* obs[] = {&observable};
    return fast_traces(snapshot, code, obs)[0];
}

MomentEstimate projected_moment(std::span<const Snapshot> snapshots, const StabilizerCode& code,
                                const PauliSum& observable, std::size_t m, const EstimatorConfig& cfg) {
    if (m == 0) throw std::invalid_argument("projected_moment: m must be positive");
    if (snapshots.size() < m) {
        throw InsufficientShots("projected_moment: " + std::to_string(snapshots.size()) + " snapshots for m = " +
                                std::to_string(m));
    }
    MomentEstimate est;
    est.samples.resize(snapshots.size() / m);
    parallel_for(est.samples.size(), cfg.threads, [&](std::size_t t) {
        est.samples[t] = tuple_projected_trace(snapshots.subspan(t * m, m), code, observable, cfg.null_space_cap);
    });
    for (double v : est.samples) est.mean += v;
    est.mean /= static_cast<double>(est.samples.size());
    return est;
}

MomentEstimate fast_projected_moment_m1(std::span<const Snapshot> snapshots, const StabilizerCode& code,
                                        const PauliSum& observable, std::size_t threads) {
    if (snapshots.empty()) throw InsufficientShots("fast_projected_moment_m1: no snapshots");
    check_observable(observable, code.n);
    MomentEstimate est;
    est.samples.resize(snapshots.size());
    parallel_for(snapshots.size(), threads,
                 [&](std::size_t i) { est.samples[i] = fast_projected_trace(snapshots[i], code, observable); });
    for (double v : est.samples) est.mean += v;
    est.mean /= static_cast<double>(est.samples.size());
    return est;
}

void SampleSet::append(const SampleSet& other) {
    if (other.block_size != block_size || other.moments.size() != moments.size()) {
        throw SizeMismatch("SampleSet::append: incompatible sample sets");
    }
    numerator.insert(numerator.end(), other.numerator.begin(), other.numerator.end());
    denominator.insert(denominator.end(), other.denominator.begin(), other.denominator.end());
    for (std::size_t i = 0; i < moments.size(); ++i) {
        moments[i].numerator_mean += other.moments[i].numerator_mean;
        moments[i].denominator_mean += other.moments[i].denominator_mean;
        moments[i].tuples += other.moments[i].tuples;
    }
}

SampleSet evaluate_samples(std::span<const Snapshot> snapshots, const StabilizerCode& code,
                           const PauliSum& physical_observable, const EstimatorConfig& cfg) {
    const std::size_t block = cfg.m_max();
    if (block == 0) throw std::invalid_argument("estimator needs at least one coefficient");
    bool any = false;
    for (double c : cfg.coefficients) any = any || c != 0.0;
    if (!any) throw std::invalid_argument("estimator coefficients are all zero");
    if (snapshots.size() < block) {
        throw InsufficientShots(std::to_string(snapshots.size()) + " snapshots cannot fill one block of " +
                                std::to_string(block));
    }
    check_observable(physical_observable, code.n);
    const PauliSum identity = identity_observable(code.n);

    SampleSet out;
    out.block_size = block;
    std::vector<std::size_t> powers;
    for (std::size_t p = 1; p <= block; ++p) {
        if (cfg.coefficients[p - 1] != 0.0) {
            powers.push_back(p);
            out.moments.push_back({p, cfg.coefficients[p - 1], 0.0, 0.0, 0});
        }
    }
    const std::size_t blocks = snapshots.size() / block;
    out.numerator.assign(blocks, 0.0);
    out.denominator.assign(blocks, 0.0);
    std::vector<double> moment_num(blocks * powers.size()), moment_den(blocks * powers.size());

    parallel_for(blocks, cfg.threads, [&](std::size_t b) {
        for (std::size_t pi = 0; pi < powers.size(); ++pi) {
            const std::size_t p = powers[pi];
            const std::size_t tuples = block / p;
            double sum_n = 0.0, sum_d = 0.0;
            for (std::size_t t = 0; t < tuples; ++t) {
                auto tuple = snapshots.subspan(b * block + t * p, p);
                if (p == 1 && cfg.use_fast_path) {
                    const PauliSum* obs[] = {&physical_observable, &identity};
                    auto values = fast_traces(tuple[0], code, obs);
                    sum_n += values[0];
                    sum_d += values[1];
                } else {
                    sum_n += tuple_projected_trace(tuple, code, physical_observable, cfg.null_space_cap);
                    sum_d += tuple_projected_trace(tuple, code, identity, cfg.null_space_cap);
                }
            }
            const double mean_n = sum_n / static_cast<double>(tuples);
            const double mean_d = sum_d / static_cast<double>(tuples);
            moment_num[b * powers.size() + pi] = mean_n;
            moment_den[b * powers.size() + pi] = mean_d;
            out.numerator[b] += cfg.coefficients[p - 1] * mean_n;
            out.denominator[b] += cfg.coefficients[p - 1] * mean_d;
        }
    });
    for (std::size_t b = 0; b < blocks; ++b) {
        for (std::size_t pi = 0; pi < powers.size(); ++pi) {
            out.moments[pi].numerator_mean += moment_num[b * powers.size() + pi];
            out.moments[pi].denominator_mean += moment_den[b * powers.size() + pi];
            out.moments[pi].tuples += block / powers[pi];
        }
    }
    return out;
}

SampleSet stream_samples(const ShadowAcquirer& acquirer, const StabilizerCode& code,
                         const PauliSum& physical_observable, const EstimatorConfig& cfg, std::size_t shots,
                         std::size_t chunk) {
    const std::size_t block = cfg.m_max();
    if (block == 0) throw std::invalid_argument("estimator needs at least one coefficient");
    if (shots < block) {
        throw InsufficientShots(std::to_string(shots) + " snapshots cannot fill one block of " + std::to_string(block));
    }
    chunk = std::max(block, chunk - chunk % block);
    const std::size_t usable = shots - shots % block;
    SampleSet total;
    for (std::size_t first = 0; first < usable; first += chunk) {
        const std::size_t count = std::min(chunk, usable - first);
        const std::vector<Snapshot> snaps = acquirer.acquire_range(first, count, cfg.threads);
        SampleSet part = evaluate_samples(snaps, code, physical_observable, cfg);
        if (first == 0) {
            total = std::move(part);
        } else {
            total.append(part);
        }
    }
    return total;
}

SampleSet leading_blocks(const SampleSet& samples, std::size_t blocks) {
    if (blocks > samples.numerator.size()) throw InsufficientShots("leading_blocks: not enough blocks");
    SampleSet out;
    out.block_size = samples.block_size;
    out.numerator.assign(samples.numerator.begin(), samples.numerator.begin() + blocks);
    out.denominator.assign(samples.denominator.begin(), samples.denominator.begin() + blocks);
    return out;
}

EstimateReport summarize(const SampleSet& samples, const EstimatorConfig& cfg) {
    if (samples.numerator.empty()) throw InsufficientShots("summarize: no samples");
    EstimateReport r;
    PairedMoments mom = paired_moments(samples.numerator, samples.denominator);
    r.numerator_mean = mom.mean_p;
    r.denominator_mean = mom.mean_q;
    r.ratio = mom.mean_p / mom.mean_q;
    r.samples = mom.count;
    r.shots_used = mom.count * samples.block_size;
    r.m = samples.block_size;
    BootstrapSummary boot =
        bootstrap_ratio(samples.numerator, samples.denominator, cfg.bootstrap_resamples, cfg.bootstrap_seed);
    r.bootstrap_std = boot.ratio_std;
    r.numerator_std = boot.numerator_std;
    r.denominator_std = boot.denominator_std;
    r.degenerate_denominator = std::abs(r.denominator_mean) < 5.0 * r.denominator_std || r.denominator_mean == 0.0;
    if (mom.mean_q != 0.0) {
        double var = ratio_variance_approx(mom.mean_p, mom.mean_q, mom.var_p, mom.var_q, mom.cov);
        r.ratio_std_approx = std::sqrt(std::max(var, 0.0) / static_cast<double>(mom.count));
    } else {
        r.ratio_std_approx = std::numeric_limits<double>::quiet_NaN();
    }
    r.moments = samples.moments;
    for (auto& m : r.moments) {
        m.numerator_mean /= static_cast<double>(mom.count);
        m.denominator_mean /= static_cast<double>(mom.count);
    }
    r.numerator_samples = samples.numerator;
    r.denominator_samples = samples.denominator;
    return r;
}

EstimateReport lst_expectation(std::span<const Snapshot> snapshots, const StabilizerCode& code,
                               const PauliSum& logical_observable, const EstimatorConfig& cfg) {
    PauliSum physical = lift_observable(code, logical_observable);
    return summarize(evaluate_samples(snapshots, code, physical, cfg), cfg);
}

std::string report_to_json(const EstimateReport& r) {
    nlohmann::ordered_json j;
    j["numerator_mean"] = r.numerator_mean;
    j["denominator_mean"] = r.denominator_mean;
    j["ratio"] = r.ratio;
    j["bootstrap_std"] = r.bootstrap_std;
    j["numerator_std"] = r.numerator_std;
    j["denominator_std"] = r.denominator_std;
    j["ratio_std_approx"] = r.ratio_std_approx;
    j["shots_used"] = r.shots_used;
    j["samples"] = r.samples;
    j["m"] = r.m;
    j["degenerate_denominator"] = r.degenerate_denominator;
    for (const auto& m : r.moments) {
        const std::string prefix = "moment_" + std::to_string(m.power) + "_";
        j[prefix + "coefficient"] = m.coefficient;
        j[prefix + "numerator_mean"] = m.numerator_mean;
        j[prefix + "denominator_mean"] = m.denominator_mean;
        j[prefix + "tuples"] = m.tuples;
    }
    return j.dump(2);
}

void write_samples_csv(const EstimateReport& r, std::ostream& out) {
    out << "index,numerator,denominator\n";
    out.precision(17);
    for (std::size_t i = 0; i < r.numerator_samples.size(); ++i) {
        out << i << "," << r.numerator_samples[i] << "," << r.denominator_samples[i] << "\n";
    }
}

}  // namespace lst
