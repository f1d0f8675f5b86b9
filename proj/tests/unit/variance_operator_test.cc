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

#include "lst/variance_operator.h"

#include <gtest/gtest.h>

namespace lst {
namespace {

DenseMatrix<double> pauli(const char* s) { return pauli_matrix<double>(PauliOp::from_string(s)); }

DenseMatrix<double> projector(const char* generator) {
    auto p = DenseMatrix<double>::identity(std::size_t{1} << std::string(generator).size()) + pauli(generator);
    return p * 0.5;
}

TEST(VarianceOperator, SingleQubitClosedForms) {
    auto p = DenseMatrix<double>::identity(2);
    auto v_identity = empirical_variance_operator(1, p, DenseMatrix<double>::identity(2));
    EXPECT_LT(v_identity.max_sq_distance(variance_operator_closed_form(1, p, false)), 1e-20);
    for (const char* o : {"X", "Y", "Z"}) {
        auto v = empirical_variance_operator(1, p, pauli(o));
        EXPECT_LT(v.max_sq_distance(variance_operator_closed_form(1, p, true)), 1e-20) << o;
    }
}

TEST(VarianceOperator, TwoQubitClosedForms) {
    auto p = projector("ZZ");
    auto v_identity = empirical_variance_operator(2, p, DenseMatrix<double>::identity(4));
    EXPECT_LT(v_identity.max_sq_distance(variance_operator_closed_form(2, p, false)), 1e-20);
    for (const char* o : {"XX", "ZI", "YY"}) {
        auto v = empirical_variance_operator(2, p, pauli(o));
        EXPECT_LT(v.max_sq_distance(variance_operator_closed_form(2, p, true)), 1e-20) << o;
    }
}

TEST(VarianceOperator, RankOneProjectorOnOneQubit) {
    // With P = (1 + Z)/2 the group average gives 1 + Z/2, not the rank-two closed form.
    auto v = empirical_variance_operator(1, projector("Z"), DenseMatrix<double>::identity(2));
    auto expected = DenseMatrix<double>::identity(2) + pauli("Z") * 0.5;
    EXPECT_LT(v.max_sq_distance(expected), 1e-20);
}

TEST(VarianceOperator, RejectsLargeRegisters) {
    EXPECT_THROW(empirical_variance_operator(3, DenseMatrix<double>::identity(8)), SizeMismatch);
    EXPECT_THROW(empirical_variance_operator(1, DenseMatrix<double>::identity(4)), SizeMismatch);
}

}  // namespace
}  // namespace lst
