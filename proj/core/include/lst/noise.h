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

#include <cstddef>
#include <cstdint>

#include "lst/pauli.h"
#include "lst/tableau.h"

namespace lst {

/// Single-qubit depolarizing noise: identity with probability 1 - p, otherwise X, Y or Z
/// with probability p/3 each, independently on every qubit.
struct NoiseSpec {
    double p = 0.0;
    std::uint64_t seed = 0;

    friend bool operator==(const NoiseSpec&, const NoiseSpec&) = default;
};

/// Throws std::invalid_argument unless 0 <= p <= 1.
void check_noise(const NoiseSpec& spec);

PauliOp sample_pauli_frame(const NoiseSpec& spec, std::size_t n_qubits, Rng& rng);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Independent stream for (master seed, index, purpose tag); the same triple always yields
/// the same stream, whatever thread requests it.
Rng derive_rng(std::uint64_t master_seed, std::uint64_t index, std::uint64_t tag = 0);

}  // namespace lst
