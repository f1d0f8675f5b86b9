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

#include "lst/dense.h"

#include <gtest/gtest.h>

namespace lst {
namespace {

Tableau encoded(const StabilizerCode& code, const char* prep) {
    std::vector<StabilizerCode> parts{code};
    return prepare_logical_state(parts, parse_prep(prep, 1));
}

TEST(Dense, NoiselessStateIsPure) {
    auto rho = exact_noisy_state<double>(encoded(five_qubit_code(), "zero"), 0.0);
    EXPECT_NEAR(purity(rho), 1.0, 1e-12);
    EXPECT_TRUE(is_density_matrix(rho, 1e-10));
}

TEST(Dense, FullDepolarizationOfOneQubit) {
    auto rho = exact_noisy_state<double>(encoded(trivial_code(1), "zero"), 0.75);
    auto half = DenseMatrix<double>::identity(2) * 0.5;
    EXPECT_LT(rho.max_sq_distance(half), 1e-30);
    // p = 1 replaces the state by the average of X, Y, Z conjugations.
    auto rho1 = exact_noisy_state<double>(encoded(trivial_code(1), "zero"), 1.0);
    EXPECT_NEAR(rho1(0, 0).re, 1.0 / 3.0, 1e-15);
}

TEST(Dense, NoisyEncodedStateIsADensityMatrix) {
    auto rho = exact_noisy_state<double>(encoded(five_qubit_code(), "zero"), 0.1);
    EXPECT_TRUE(is_density_matrix(rho, 1e-10));
    EXPECT_LT(purity(rho), 1.0);
}

TEST(Dense, PsdCheckRejectsNegativeEigenvalues) {
    DenseMatrix<double> m(2);
    m(0, 0) = Complex<double>(0.5);
    m(1, 1) = Complex<double>(0.5);
    m(0, 1) = m(1, 0) = Complex<double>(0.6);
    EXPECT_FALSE(is_positive_semidefinite(m, 1e-10));
    m(0, 1) = m(1, 0) = Complex<double>(0.5);
    EXPECT_TRUE(is_positive_semidefinite(m, 1e-10));
}

TEST(Dense, TrivialCodeValueIsThePlainExpectation) {
    auto rho = exact_noisy_state<double>(encoded(trivial_code(1), "plus"), 0.3);
    const PauliSum x{{1.0, PauliOp::from_string("X")}};
    const std::vector<double> f{1.0};
    auto v = exact_lst_value<double>(rho, {}, x, f);
    EXPECT_NEAR(v.ratio, 1.0 - 4.0 * 0.3 / 3.0, 1e-14);
    EXPECT_NEAR(v.denominator, 1.0, 1e-14);
}

TEST(Dense, NoiselessLogicalValue) {
    const StabilizerCode code = five_qubit_code();
    auto rho = exact_noisy_state<double>(encoded(code, "zero"), 0.0);
    const PauliSum z{{1.0, lift_logical(code, PauliOp::from_string("Z"))}};
    for (const std::vector<double>& f : {std::vector<double>{1.0}, std::vector<double>{0.0, 1.0}}) {
        EXPECT_NEAR(exact_lst_value<double>(rho, code.generators, z, f).ratio, 1.0, 1e-14);
    }
}

TEST(Dense, QuadPrecisionAgreesWithDouble) {
    const StabilizerCode code = five_qubit_code();
    const Tableau t = encoded(code, "zero");
    auto rd = exact_noisy_state<double>(t, 0.2);
    auto rq = exact_noisy_state<QuadReal>(t, QuadReal(0.2));
    const PauliSum z{{1.0, lift_logical(code, PauliOp::from_string("Z"))}};
    const std::vector<double> f{0.0, 1.0};
    const double vd = exact_lst_value<double>(rd, code.generators, z, f).ratio;
    const double vq = static_cast<double>(exact_lst_value<QuadReal>(rq, code.generators, z, f).ratio);
    EXPECT_NEAR(vd, vq, 1e-13);
}

TEST(Dense, BlochStateIsAnEncodedPureState) {
    const StabilizerCode code = steane_code();
    const double v[3] = {0.6, 0.0, 0.8};
    auto rho = encoded_bloch_state<double>(code, v);
    EXPECT_TRUE(is_density_matrix(rho, 1e-10));
    EXPECT_NEAR(purity(rho), 1.0, 1e-12);
    EXPECT_NEAR(trace_with_pauli(rho, lift_logical(code, PauliOp::from_string("X"))).re, 0.6, 1e-12);
}

TEST(Dense, BornProbabilitiesOfBellState) {
    Tableau t(2);
    t.apply_gate(Gate::H, 0);
    t.apply_gate(Gate::CX, 0, 1);
    auto p = born_probabilities(stabilizer_state_matrix<double>(t));
    EXPECT_NEAR(p[0], 0.5, 1e-15);
    EXPECT_NEAR(p[3], 0.5, 1e-15);
    EXPECT_NEAR(p[1] + p[2], 0.0, 1e-15);
}

TEST(Dense, DimensionCap) {
    EXPECT_THROW(check_dense_qubits(13), SizeMismatch);
    EXPECT_NO_THROW(check_dense_qubits(12));
}

}  // namespace
}  // namespace lst
