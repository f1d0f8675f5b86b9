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
#include <string>
#include <string_view>
#include <vector>

namespace lst {

enum class Gate : std::uint8_t { H, S, SDag, X, Y, Z, CX, CZ, SWAP };

inline bool is_two_qubit(Gate g) { return g == Gate::CX || g == Gate::CZ || g == Gate::SWAP; }

std::string_view gate_name(Gate g);
Gate parse_gate(std::string_view name);
/// Gate whose conjugation undoes `g`.
Gate inverse_gate(Gate g);

struct GateOp {
    Gate gate;
    std::uint32_t q0;
    std::uint32_t q1 = 0;

    friend bool operator==(const GateOp&, const GateOp&) = default;
};

using Circuit = std::vector<GateOp>;

/// Circuit implementing the inverse unitary (reversed order, inverted gates).
Circuit inverse_circuit(const Circuit& circuit);

}  // namespace lst
