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

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lst/affine_trace.h"
#include "lst/code.h"
#include "lst/pauli.h"
#include "lst/shadow.h"

namespace lst {

/// Real linear combination of Hermitian Pauli operators.
struct PauliTerm {
    double coefficient = 1.0;
    PauliOp op;
};
using PauliSum = std::vector<PauliTerm>;

/// Physical operator for a logical observable, term by term.
PauliSum lift_observable(const StabilizerCode& code, const PauliSum& logical);

/// Projector onto the prepared logical state: 2^-k times the sum of its stabilizer group.
PauliSum fidelity_observable(const LogicalStatePrep& prep);

/// "fidelity" (needs `prep`), or comma-separated terms like "XX", "-ZI", "0.5*ZZ, -0.25*XY".
PauliSum parse_observable(std::string_view spec, std::size_t k, const LogicalStatePrep& prep);

/// One sector of the reconstructed snapshot, (2^n + 1) sigma - 1, as two weighted
/// affine products on the full register: {2^n + 1, sigma's n factors} and {-1, none}.
struct WeightedFactors {
    double weight;
    std::vector<AffinePauliFactor> factors;
};
std::array<WeightedFactors, 2> reconstruction_factors(const Snapshot& snapshot, std::size_t sector,
                                                      std::size_t n_total);

struct EstimatorConfig {
    /// c_1..c_m of f(x) = sum_p c_p x^p.
    std::vector<double> coefficients{1.0};
    std::size_t bootstrap_resamples = 1000;
    std::uint64_t bootstrap_seed = 1;
    std::uint64_t null_space_cap = kDefaultNullSpaceCap;
    std::size_t threads = 1;
    /// Evaluate m = 1 terms with the tableau projection instead of the affine trace.
    bool use_fast_path = true;

    std::size_t m_max() const { return coefficients.size(); }
};

/// Tr(Pi rho_1 ... rho_m Pi O) for one tuple of distinct snapshots, by expanding every
/// sector's reconstruction and evaluating each product with the affine trace engine.
/// For m >= 2 the real part is returned (the imaginary part averages to zero).
double tuple_projected_trace(std::span<const Snapshot> tuple, const StabilizerCode& code, const PauliSum& observable,
                             std::uint64_t null_space_cap = kDefaultNullSpaceCap);

/// Tr(Pi rho_hat Pi O) for one snapshot via tableau projection, one term per sector subset.
double fast_projected_trace(const Snapshot& snapshot, const StabilizerCode& code, const PauliSum& observable);

struct MomentEstimate {
    double mean = 0.0;
    std::vector<double> samples;
};

/// Unbiased estimate of Tr(Pi rho^m Pi O) from consecutive disjoint m-tuples.
/// Throws InsufficientShots when fewer than m snapshots are given.
MomentEstimate projected_moment(std::span<const Snapshot> snapshots, const StabilizerCode& code,
                                const PauliSum& observable, std::size_t m, const EstimatorConfig& cfg);
MomentEstimate fast_projected_moment_m1(std::span<const Snapshot> snapshots, const StabilizerCode& code,
                                        const PauliSum& observable, std::size_t threads = 1);

struct MomentDiagnostics {
    std::size_t power = 0;
    double coefficient = 0.0;
    double numerator_mean = 0.0;
    double denominator_mean = 0.0;
    std::size_t tuples = 0;
};

/// Paired per-block numerator and denominator values. A block is m_max consecutive
/// snapshots; power p uses the mean over the disjoint p-tuples inside it.
struct SampleSet {
    std::size_t block_size = 1;
    std::vector<double> numerator;
    std::vector<double> denominator;
    std::vector<MomentDiagnostics> moments;  // sums until summarize() divides by the block count

    void append(const SampleSet& other);
};

SampleSet evaluate_samples(std::span<const Snapshot> snapshots, const StabilizerCode& code,
                           const PauliSum& physical_observable, const EstimatorConfig& cfg);

/// Acquires `shots` snapshots from `acquirer` in chunks and evaluates them as they arrive,
/// so memory stays bounded by one chunk. Same result as evaluate_samples on the full list
/// whenever `chunk` is a multiple of the block size (it is rounded up to one).
SampleSet stream_samples(const ShadowAcquirer& acquirer, const StabilizerCode& code,
                         const PauliSum& physical_observable, const EstimatorConfig& cfg, std::size_t shots,
                         std::size_t chunk = 4096);

/// The first `blocks` blocks of `samples`; moment diagnostics are dropped.
SampleSet leading_blocks(const SampleSet& samples, std::size_t blocks);

struct EstimateReport {
    double numerator_mean = 0.0;
    double denominator_mean = 0.0;
    double ratio = 0.0;
    double bootstrap_std = 0.0;
    double numerator_std = 0.0;
    double denominator_std = 0.0;
    /// sqrt of the delta-method ratio variance divided by the sample count; NaN when the
    /// denominator mean is zero.
    double ratio_std_approx = 0.0;
    std::size_t shots_used = 0;
    std::size_t samples = 0;
    std::size_t m = 1;
    bool degenerate_denominator = false;
    std::vector<MomentDiagnostics> moments;
    std::vector<double> numerator_samples;
    std::vector<double> denominator_samples;
};

EstimateReport summarize(const SampleSet& samples, const EstimatorConfig& cfg);

/// <O>_LST = Tr(Pi f(rho) Pi O) / Tr(Pi f(rho) Pi) with numerator and denominator evaluated
/// on the same snapshots. `code` is the full register code (combine_sectors for k > 1) and
/// `logical_observable` acts on its k logical qubits.
EstimateReport lst_expectation(std::span<const Snapshot> snapshots, const StabilizerCode& code,
                               const PauliSum& logical_observable, const EstimatorConfig& cfg);

/// Flat JSON object with every scalar field and moment_<p>_* entries.
std::string report_to_json(const EstimateReport& report);
/// "index,numerator,denominator" rows.
void write_samples_csv(const EstimateReport& report, std::ostream& out);

}  // namespace lst
