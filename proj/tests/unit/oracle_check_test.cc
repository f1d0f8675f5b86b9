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

#include "lst/oracle_check.h"

#include <gtest/gtest.h>

namespace lst {
namespace {

OracleCheckConfig quick_config() {
    OracleCheckConfig cfg;
    cfg.trials = 100;
    cfg.shots = 4000;
    return cfg;
}

TEST(OracleCheck, DefaultSeedPasses) {
    const auto results = run_oracle_checks(quick_config());
    for (const auto& r : results) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
    EXPECT_TRUE(all_passed(results));
}

TEST(OracleCheck, SignBugFailsAssociativity) {
    OracleCheckHooks hooks;
    // Flips the sign whenever the left operand carries Y on qubit 0.
    hooks.multiply = [](const PauliOp& a, const PauliOp& b) {
        PauliOp out = multiply(a, b);
        if (a.pauli_at(0) == 'Y') out.negate();
        return out;
    };
    const auto results = run_oracle_checks(quick_config(), hooks);
    ASSERT_FALSE(results.empty());
    EXPECT_EQ(results[0].name, "pauli_multiply_associative");
    EXPECT_FALSE(results[0].passed);
    EXPECT_FALSE(all_passed(results));
}

}  // namespace
}  // namespace lst
