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
#include <functional>
#include <string>
#include <vector>

#include "lst/pauli.h"

namespace lst {

struct OracleCheckConfig {
    std::uint64_t seed = 2026;
    /// Random instances per algebraic check.
    std::size_t trials = 200;
    /// Snapshots per statistical check.
    std::size_t shots = 20000;
    std::size_t threads = 1;
};

/// Replaceable pieces, so a deliberately broken implementation can be checked against the suite.
struct OracleCheckHooks {
    std::function<PauliOp(const PauliOp&, const PauliOp&)> multiply;
};

struct OracleCheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Cross-checks the Pauli algebra, tableau, affine trace and estimators against dense
/// matrices on registers of at most 6 qubits. Failures are reported, never thrown.
std::vector<OracleCheckResult> run_oracle_checks(const OracleCheckConfig& config, const OracleCheckHooks& hooks = {});

bool all_passed(const std::vector<OracleCheckResult>& results);

}  // namespace lst
