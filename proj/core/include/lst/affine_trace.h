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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

#include "lst/pauli.h"

namespace lst {

/// The operator a * 1 + b * op.
struct AffinePauliFactor {
    double a;
    double b;
    PauliOp op;
};

inline constexpr std::uint64_t kDefaultNullSpaceCap = std::uint64_t{1} << 20;

/// Tr(prod_j (a_j 1 + b_j M_j)) over `n_qubits` qubits, factors multiplied left to right.
///
/// Expands the product, keeps only the Pauli subsets that multiply to a multiple of
/// the identity (the binary null space of the (x, z) column matrix) and sums
/// z(x) prod a^{1-x} b^{x} over it. Throws NullSpaceTooLarge when the null space has
/// more than `null_space_cap` elements.
std::complex<double> affine_product_trace_complex(std::size_t n_qubits, std::span<const AffinePauliFactor> factors,
                                                  std::uint64_t null_space_cap = kDefaultNullSpaceCap);

/// Real-valued variant. Throws ImaginaryPhase if a contributing null vector has an
/// imaginary phase, which cannot happen for traces like Tr(sigma Pi O) built from
/// two commuting stabilizer groups and an observable commuting with one of them.
double affine_product_trace(std::size_t n_qubits, std::span<const AffinePauliFactor> factors,
                            std::uint64_t null_space_cap = kDefaultNullSpaceCap);

}  // namespace lst
