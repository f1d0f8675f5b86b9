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

#include "lst/noise.h"

#include <random>
#include <stdexcept>
#include <string>

namespace lst {

void check_noise(const NoiseSpec& spec) {
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
        throw std::invalid_argument("depolarizing rate must lie in [0, 1], got " + std::to_string(spec.p));
    }
}

PauliOp sample_pauli_frame(const NoiseSpec& spec, std::size_t n_qubits, Rng& rng) {
    check_noise(spec);
    PauliOp frame(n_qubits);
    if (spec.p == 0.0) return frame;
    for (std::size_t q = 0; q < n_qubits; ++q) {
        if (uniform01(rng) < spec.p) frame.set_pauli(q, "XYZ"[rng() % 3]);
    }
    return frame;
}

Rng derive_rng(std::uint64_t master_seed, std::uint64_t index, std::uint64_t tag) {
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                      static_cast<std::uint32_t>(tag)};
    return Rng(seq);
}

}  // namespace lst
