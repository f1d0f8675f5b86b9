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

#include "cli/config.h"

namespace lst::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

int cmd_sample(const ExperimentConfig& cfg);
int cmd_estimate(const ExperimentConfig& cfg);
int cmd_threshold_sweep(const ExperimentConfig& cfg);
int cmd_code_size_sweep(const ExperimentConfig& cfg);
int cmd_logical_scaling_sweep(const ExperimentConfig& cfg);
int cmd_oracle_check(const ExperimentConfig& cfg);

}  // namespace lst::cli
