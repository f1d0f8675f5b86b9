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

#include "lst/clifford.h"

#include <cmath>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "lst/dense.h"

namespace lst {
namespace {

DenseMatrix<double> circuit_unitary(std::size_t n, const Circuit& c) {
    auto u = DenseMatrix<double>::identity(std::size_t{1} << n);
    for (const GateOp& g : c) u = gate_matrix(n, g) * u;
    return u;
}

PauliOp random_pauli(std::size_t n, Rng& rng) {
    PauliOp p(n);
    for (std::size_t q = 0; q < n; ++q) p.set_pauli(q, "IXYZ"[rng() % 4]);
    return p;
}

TEST(Clifford, GroupOrders) {
    EXPECT_EQ(symplectic_group_order(1), 6u);
    EXPECT_EQ(symplectic_group_order(2), 720u);
    EXPECT_EQ(clifford_group_order(1), 24u);
    EXPECT_EQ(clifford_group_order(2), 11520u);
    EXPECT_THROW(symplectic_group_order(5), std::exception);
}

TEST(Clifford, IndexEnumerationIsABijection) {
    for (std::size_t n : {1u, 2u}) {
        std::set<std::uint64_t> keys;
        for (std::uint64_t i = 0; i < clifford_group_order(n); ++i) {
            CliffordElement c = clifford_from_index(n, i);
            ASSERT_TRUE(c.is_valid());
            keys.insert(c.canonical_key());
        }
        EXPECT_EQ(keys.size(), clifford_group_order(n));
    }
}

TEST(Clifford, ConjugationMatchesCircuitUnitary) {
    Rng rng(2);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + rng() % 4;
        CliffordElement w = sample_uniform_clifford(n, rng);
        auto u = circuit_unitary(n, w.to_circuit());
        PauliOp p = random_pauli(n, rng);
        auto expected = u * pauli_matrix<double>(p) * u.adjoint();
        EXPECT_LT(pauli_matrix<double>(w.conjugate(p)).max_sq_distance(expected), 1e-20);
        EXPECT_EQ(w.conjugate_inverse(w.conjugate(p)), p);
    }
}

TEST(Clifford, CircuitRoundTrip) {
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + rng() % 6;
        CliffordElement w = sample_uniform_clifford(n, rng);
        EXPECT_EQ(CliffordElement::from_circuit(n, w.to_circuit()), w);
    }
}

TEST(Clifford, InverseAndComposition) {
    Rng rng(4);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + rng() % 5;
        CliffordElement a = sample_uniform_clifford(n, rng), b = sample_uniform_clifford(n, rng);
        EXPECT_EQ(a.then(a.inverse()), CliffordElement(n));
        PauliOp p = random_pauli(n, rng);
        EXPECT_EQ(a.then(b).conjugate(p), b.conjugate(a.conjugate(p)));
    }
}

TEST(Clifford, FromImagesValidates) {
    std::vector<PauliOp> x{PauliOp::from_string("Z")}, z{PauliOp::from_string("X")};
    EXPECT_NO_THROW(CliffordElement::from_images(x, z));
    std::vector<PauliOp> bad{PauliOp::from_string("Z")};
    EXPECT_THROW(CliffordElement::from_images(x, bad), Error);
}

// Chi-square test of the sampler against the uniform distribution on the 24 elements.
TEST(Clifford, SamplerIsUniformOnOneQubit) {
    Rng rng(5);
    std::map<std::uint64_t, int> counts;
    const int shots = 24000;
    for (int s = 0; s < shots; ++s) counts[sample_uniform_clifford(1, rng).canonical_key()]++;
    ASSERT_EQ(counts.size(), 24u);
    double chi2 = 0;
    for (auto& [key, c] : counts) chi2 += (c - 1000.0) * (c - 1000.0) / 1000.0;
    EXPECT_LT(chi2, 49.7);  // 99.9th percentile with 23 degrees of freedom
}

TEST(Clifford, SamplerCoversTwoQubitGroup) {
    Rng rng(6);
    std::map<std::uint64_t, int> counts;
    const int shots = 11520 * 20;
    for (int s = 0; s < shots; ++s) counts[sample_uniform_clifford(2, rng).canonical_key()]++;
    EXPECT_EQ(counts.size(), 11520u);
    double chi2 = 0;
    for (auto& [key, c] : counts) chi2 += (c - 20.0) * (c - 20.0) / 20.0;
    // Mean 11519, std sqrt(2 * 11519) ~ 152.
    EXPECT_LT(chi2, 11519 + 5 * 152);
}

TEST(Clifford, ApplyCliffordMatchesDense) {
    Rng rng(7);
    for (int t = 0; t < 40; ++t) {
        Tableau state(4);
        apply_clifford(state, sample_uniform_clifford(4, rng), 0);
        CliffordElement u = sample_uniform_clifford(2, rng);
        auto before = stabilizer_state_matrix<double>(state);
        apply_clifford(state, u, 1);
        Circuit shifted;
        for (GateOp g : u.to_circuit()) {
            g.q0 += 1;
            g.q1 += 1;
            shifted.push_back(g);
        }
        auto big = circuit_unitary(4, shifted);
        auto expected = big * before * big.adjoint();
        EXPECT_LT(stabilizer_state_matrix<double>(state).max_sq_distance(expected), 1e-20);
    }
}

}  // namespace
}  // namespace lst
