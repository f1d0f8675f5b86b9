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

#include "lst/shadow.h"

#include <cmath>

#include <gtest/gtest.h>

#include "lst/dense.h"

namespace lst {
namespace {

// Mean and standard error of (2^n + 1) <P>_sigma over the snapshots: the shadow estimate of Tr(rho P).
std::pair<double, double> shadow_estimate(const std::vector<Snapshot>& snaps, const PauliOp& p) {
    double sum = 0, sum2 = 0;
    for (const Snapshot& s : snaps) {
        double value = 1.0;
        const std::size_t n = s.cliffords.front().n_qubits();
        for (std::size_t i = 0; i < s.num_sectors(); ++i) {
            PauliOp local = restrict_to(p, i * n, n);
            if (local.is_identity()) continue;
            value *= (std::ldexp(1.0, static_cast<int>(n)) + 1) * snapshot_sector_state(s, i).expectation(local);
        }
        if (p.sign() < 0) value = -value;
        sum += value;
        sum2 += value * value;
    }
    const double count = static_cast<double>(snaps.size());
    const double mean = sum / count;
    return {mean, std::sqrt((sum2 / count - mean * mean) / count)};
}

TEST(Shadow, SectorStatesArePure) {
    ShadowAcquirer acq(five_qubit_code(), 2, zero_prep(2), {0.1, 3});
    for (std::uint64_t i = 0; i < 20; ++i) {
        Snapshot s = acq.acquire(i);
        ASSERT_EQ(s.num_sectors(), 2u);
        for (std::size_t j = 0; j < 2; ++j) {
            Tableau t = snapshot_sector_state(s, j);
            EXPECT_TRUE(t.is_pure());
            EXPECT_TRUE(t.is_consistent());
        }
    }
}

TEST(Shadow, AcquisitionIsDeterministicAndThreadInvariant) {
    ShadowAcquirer acq(steane_code(), 1, plus_prep(1), {0.05, 11});
    EXPECT_EQ(acq.acquire(5), acq.acquire(5));
    EXPECT_NE(acq.acquire(5), acq.acquire(6));
    EXPECT_EQ(acq.acquire_range(0, 50, 1), acq.acquire_range(0, 50, 3));
}

TEST(Shadow, ShadowsAreUnbiasedForTheNoisyState) {
    const double p = 0.15;
    ShadowAcquirer acq(five_qubit_code(), 1, plus_prep(1), {p, 21});
    const auto snaps = acq.acquire_range(0, 30000, 1);
    const auto rho = exact_noisy_state<double>(acq.encoded_state(), p);
    for (const char* s : {"XXXXX", "XZZXI", "ZIIII", "YYZIX", "-IXZZX"}) {
        const PauliOp op = PauliOp::from_string(s);
        auto [mean, err] = shadow_estimate(snaps, op);
        const double exact = trace_with_pauli(rho, op).re;
        EXPECT_LE(std::abs(mean - exact), 4 * err + 1e-12) << s << " " << mean << " vs " << exact;
    }
}

TEST(Shadow, TensorProductSectorsAreUnbiased) {
    const double p = 0.1;
    ShadowAcquirer acq(trivial_code(1), 2, ghz_prep(2), {p, 22});
    const auto snaps = acq.acquire_range(0, 30000, 1);
    const auto rho = exact_noisy_state<double>(acq.encoded_state(), p);
    for (const char* s : {"XX", "ZZ", "YY", "ZI", "XZ"}) {
        const PauliOp op = PauliOp::from_string(s);
        auto [mean, err] = shadow_estimate(snaps, op);
        const double exact = trace_with_pauli(rho, op).re;
        EXPECT_LE(std::abs(mean - exact), 4 * err + 1e-12) << s << " " << mean << " vs " << exact;
    }
}

TEST(Shadow, MetadataDescribesTheSource) {
    ShadowAcquirer acq(five_qubit_code(), 3, ghz_prep(3), {0.02, 9});
    EnsembleMetadata m = acq.metadata();
    EXPECT_EQ(m.sector_size, 5u);
    EXPECT_EQ(m.num_sectors, 3u);
    EXPECT_EQ(m.prep, "ghz");
    EXPECT_DOUBLE_EQ(m.noise.p, 0.02);
    EXPECT_EQ(acq.n_qubits(), 15u);
}

TEST(Shadow, RejectsMultiLogicalSectorCodes) {
    EXPECT_THROW(ShadowAcquirer(trivial_code(2), 1, zero_prep(2), {0.0, 0}), SizeMismatch);
}

}  // namespace
}  // namespace lst
