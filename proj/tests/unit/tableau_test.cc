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

#include "lst/tableau.h"

#include <cmath>

#include <gtest/gtest.h>

#include "lst/clifford.h"
#include "lst/dense.h"
#include "lst/errors.h"

namespace lst {
namespace {

std::vector<PauliOp> ops(std::initializer_list<const char*> strings) {
    std::vector<PauliOp> out;
    for (const char* s : strings) out.push_back(PauliOp::from_string(s));
    return out;
}

Tableau random_state(std::size_t n, std::size_t rank, Rng& rng) {
    CliffordElement w = sample_uniform_clifford(n, rng);
    std::vector<PauliOp> gens;
    for (std::size_t j = 0; j < rank; ++j) {
        gens.push_back(w.z_image(j));
        if (rng() & 1) gens.back().negate();
    }
    return Tableau::from_stabilizers(n, gens);
}

TEST(Tableau, ZeroStateMeasuresZero) {
    Tableau t(4);
    Rng rng(1);
    EXPECT_TRUE(t.is_pure());
    EXPECT_TRUE(t.measure_all_z(rng).none());
    EXPECT_EQ(t.expectation(PauliOp::from_string("ZIZI")), 1.0);
    EXPECT_EQ(t.expectation(PauliOp::from_string("XIII")), 0.0);
}

TEST(Tableau, BellStateCorrelations) {
    Tableau t(2);
    t.apply_gate(Gate::H, 0);
    t.apply_gate(Gate::CX, 0, 1);
    EXPECT_EQ(t.expectation(PauliOp::from_string("XX")), 1.0);
    EXPECT_EQ(t.expectation(PauliOp::from_string("YY")), -1.0);
    EXPECT_EQ(t.expectation(PauliOp::from_string("ZI")), 0.0);
    Rng rng(7);
    int ones = 0;
    for (int s = 0; s < 400; ++s) {
        Tableau copy = t;
        BitVector bits = copy.measure_all_z(rng);
        EXPECT_EQ(bits.get(0), bits.get(1));
        ones += bits.get(0);
    }
    EXPECT_NEAR(ones / 400.0, 0.5, 0.1);
}

TEST(Tableau, FromStabilizersRejectsBadInput) {
    EXPECT_THROW(Tableau::from_stabilizers(2, ops({"XI", "ZI"})), IncompatibleGenerators);
    EXPECT_THROW(Tableau::from_stabilizers(2, ops({"ZZ", "ZZ"})), Error);
    EXPECT_THROW(Tableau::from_stabilizers(2, ops({"iZZ"})), Error);
    EXPECT_THROW(Tableau::from_stabilizers(2, ops({"ZZZ"})), SizeMismatch);
}

TEST(Tableau, FromStabilizersIsConsistent) {
    Tableau t = Tableau::from_stabilizers(5, ops({"XZZXI", "IXZZX", "XIXZZ", "-ZXIXZ"}));
    EXPECT_TRUE(t.is_consistent());
    EXPECT_EQ(t.rank_deficit(), 1u);
    EXPECT_EQ(t.expectation(PauliOp::from_string("ZXIXZ")), -1.0);
    EXPECT_EQ(t.expectation(PauliOp::from_string("ZZZZZ")), 0.0);
}

TEST(Tableau, StateMatchesDenseDefinition) {
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + rng() % 4;
        Tableau s = random_state(n, rng() % (n + 1), rng);
        auto rho = stabilizer_state_matrix<double>(s);
        EXPECT_NEAR(rho.trace().re, 1.0, 1e-12);
        EXPECT_TRUE(is_positive_semidefinite(rho, 1e-10));
        for (int probe = 0; probe < 5; ++probe) {
            PauliOp p(n);
            for (std::size_t q = 0; q < n; ++q) p.set_pauli(q, "IXYZ"[rng() % 4]);
            EXPECT_NEAR(s.expectation(p), trace_with_pauli(rho, p).re, 1e-12);
        }
    }
}

TEST(Tableau, ProjectionMatchesDense) {
    Rng rng(4);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng() % 5;
        Tableau s = random_state(n, rng() % (n + 1), rng);
        Tableau g = random_state(n, 1 + rng() % n, rng);
        std::vector<PauliOp> gens;
        for (std::size_t i = 0; i < g.num_active(); ++i) gens.push_back(g.stabilizer(i));
        auto projected = project_both(stabilizer_state_matrix<double>(s), std::span<const PauliOp>(gens));
        double value = s.project(gens);
        ASSERT_NEAR(value, projected.trace().re, 1e-12);
        EXPECT_TRUE(s.is_consistent());
        if (value > 0) {
            EXPECT_LT(stabilizer_state_matrix<double>(s).max_sq_distance(projected * (1.0 / value)), 1e-24);
        }
    }
}

TEST(Tableau, ProjectRejectsAnticommutingGenerators) {
    Tableau t(2);
    EXPECT_THROW(t.project(ops({"XI", "ZI"})), IncompatibleGenerators);
}

TEST(Tableau, MaximallyMixedProjection) {
    Tableau t = Tableau::maximally_mixed(5);
    auto gens = ops({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"});
    EXPECT_DOUBLE_EQ(t.project(gens), 1.0 / 16.0);
    EXPECT_EQ(t.rank_deficit(), 1u);
    EXPECT_EQ(t.expectation(PauliOp::from_string("ZZZZZ")), 0.0);
}

TEST(Tableau, MeasurementStatisticsMatchBornRule) {
    Rng rng(9);
    Tableau base(3);
    base.apply_gate(Gate::H, 0);
    base.apply_gate(Gate::CX, 0, 1);
    base.apply_gate(Gate::H, 2);
    base.apply_gate(Gate::S, 2);
    base.apply_gate(Gate::H, 2);
    auto born = born_probabilities(stabilizer_state_matrix<double>(base));
    std::vector<int> counts(8, 0);
    const int shots = 8000;
    for (int s = 0; s < shots; ++s) {
        Tableau t = base;
        BitVector b = t.measure_all_z(rng);
        counts[b.get(0) | (b.get(1) << 1) | (b.get(2) << 2)]++;
    }
    for (int j = 0; j < 8; ++j) {
        const double sigma = std::sqrt(born[j] * (1 - born[j]) / shots) + 1e-12;
        EXPECT_LE(std::abs(counts[j] / double(shots) - born[j]), 5 * sigma) << j;
    }
}

TEST(Tableau, DirectSumKeepsActiveRowsFirst) {
    Tableau a = Tableau::from_stabilizers(2, ops({"XX"}));
    Tableau b(1);
    Tableau s = Tableau::direct_sum(a, b);
    EXPECT_EQ(s.n_qubits(), 3u);
    EXPECT_EQ(s.num_active(), 2u);
    EXPECT_TRUE(s.is_consistent());
    EXPECT_EQ(s.expectation(PauliOp::from_string("XXZ")), 1.0);
}

}  // namespace
}  // namespace lst
