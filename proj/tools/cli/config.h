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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lst::cli {

/// Bad flags, config files or combinations of settings. Exit code 1.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Settings shared by every subcommand. Unset optionals take per-command defaults.
struct ExperimentConfig {
    std::string code = "five_qubit";
    std::vector<std::string> codes;
    std::string prep = "zero";
    std::size_t sectors = 1;
    std::optional<double> p;
    std::vector<double> p_grid;
    std::optional<std::size_t> shots;
    std::vector<std::size_t> shot_budgets;
    std::vector<std::size_t> k_values;
    std::size_t m = 1;
    std::vector<double> coefficients;
    std::uint64_t seed = 1;
    std::size_t bootstrap = 1000;
    std::string observable = "fidelity";
    std::string out;
    std::string ensemble;
    std::string samples_csv;
    std::size_t threads = 1;
    bool gnuplot = false;
};

/// Command line values; each one set overrides the config file.
struct ConfigOverrides {
    std::string config_path;
    std::optional<std::string> code, codes, prep, p_grid, shot_budgets, k_values, coefficients, observable, out,
        ensemble, samples_csv;
    std::optional<double> p;
    std::optional<std::size_t> shots, sectors, m, bootstrap, threads;
    std::optional<std::uint64_t> seed;
    bool gnuplot = false;
};

/// Reads the JSON config (if any) and applies the overrides. Throws UsageError.
ExperimentConfig load_config(const ConfigOverrides& overrides);

/// f(x) = x^m unless explicit coefficients were given.
std::vector<double> estimator_coefficients(const ExperimentConfig& cfg);

/// 20 log-spaced points in [1e-3, 0.9].
std::vector<double> default_p_grid();

std::vector<std::string> split_list(const std::string& text);

}  // namespace lst::cli
