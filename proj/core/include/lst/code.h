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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lst/affine_trace.h"
#include "lst/pauli.h"
#include "lst/tableau.h"

namespace lst {

/// [[n, k, d]] stabilizer code with a chosen logical basis.
struct StabilizerCode {
    std::string name;
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> distance;
    std::vector<PauliOp> generators;
    std::vector<PauliOp> logical_x;
    std::vector<PauliOp> logical_z;
};

/// Throws InvalidCode naming the offending generator or logical pair.
void validate(const StabilizerCode& code);

/// Parses the text code format:
///
///     # comment
///     5 1 3            header: n k [d]
///     +XZZXI           one signed Pauli per generator
///     ...
///     X:               logical X operators, one per logical qubit
///     +XXXXX
///     Z:
///     +ZZZZZ
///
/// The result is validated. Throws ParseError or InvalidCode.
StabilizerCode parse_code(std::string_view text, std::string name = "");
StabilizerCode load_code_file(const std::filesystem::path& path);
std::string format_code(const StabilizerCode& code);

StabilizerCode five_qubit_code();
StabilizerCode steane_code();
/// [[n, n]]: no generators, logical X_j = X_j and Z_j = Z_j.
StabilizerCode trivial_code(std::size_t n);
/// Resolves "five_qubit", "steane", "trivial:<n>" or a path to a code file.
StabilizerCode resolve_code(std::string_view spec);

/// Block code with `sectors[i]` on qubits [sum_{j<i} n_j, ...); logical qubit order follows.
StabilizerCode combine_sectors(std::span<const StabilizerCode> sectors);

/// (1 + S_j)/2 for every generator, as (1/2, +-1/2, |S_j|).
std::vector<AffinePauliFactor> projector_factors(const StabilizerCode& code);

/// Physical representative of a k-qubit logical Pauli, phase included:
/// i^{phase + x.z} prod_j Xbar_j^{x_j} prod_j Zbar_j^{z_j}.
PauliOp lift_logical(const StabilizerCode& code, const PauliOp& logical);

/// Smallest weight <= max_weight of a Pauli that commutes with every generator and is
/// not in the stabilizer group; nullopt if none exists up to that weight.
std::optional<std::size_t> minimum_distance(const StabilizerCode& code, std::size_t max_weight);

/// Pure logical stabilizer state given by k commuting logical generators.
struct LogicalStatePrep {
    std::string name;
    std::vector<PauliOp> generators;

    std::size_t k() const { return generators.empty() ? 0 : generators.front().n_qubits(); }
};

LogicalStatePrep zero_prep(std::size_t k);
LogicalStatePrep plus_prep(std::size_t k);
/// (|0...0> + |1...1>)/sqrt(2): +XX...X and +Z_j Z_{j+1}.
LogicalStatePrep ghz_prep(std::size_t k);
/// "zero", "plus", "ghz" or a comma-separated list of signed k-qubit Pauli strings.
LogicalStatePrep parse_prep(std::string_view spec, std::size_t k);

/// Stabilizer tableau of the encoded logical state over the given sectors.
Tableau prepare_logical_state(std::span<const StabilizerCode> sectors, const LogicalStatePrep& prep);

}  // namespace lst
