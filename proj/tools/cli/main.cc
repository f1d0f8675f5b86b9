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

// lst: sampling, estimation and experiment sweeps for logical shadow tomography.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli/commands.h"

namespace {

using namespace lst::cli;

void add_common_options(CLI::App* sub, ConfigOverrides& o) {
    sub->add_option("--config", o.config_path, "JSON config file; flags override its keys")->check(CLI::ExistingFile);
    sub->add_option("--code", o.code, "five_qubit, steane, trivial:<n> or a .code file");
    sub->add_option("--prep", o.prep, "zero, plus, ghz or comma-separated logical stabilizers");
    sub->add_option("--sectors", o.sectors, "number of code blocks (logical qubits)");
    sub->add_option("--p", o.p, "depolarizing rate per qubit");
    sub->add_option("--shots", o.shots, "snapshots per ensemble");
    sub->add_option("--m", o.m, "power of rho in f(rho) = rho^m");
    sub->add_option("--coefficients", o.coefficients, "c_1,c_2,... of f(rho) = sum_p c_p rho^p");
    sub->add_option("--seed", o.seed, "master seed");
    sub->add_option("--bootstrap", o.bootstrap, "bootstrap resamples");
    sub->add_option("--out", o.out, "output file (stdout if omitted)");
    sub->add_option("--threads", o.threads, "worker threads, 0 for all cores");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Logical shadow tomography: error-mitigated logical expectation values from classical shadows"};
    app.require_subcommand(1);
    ConfigOverrides o;

    auto* sample = app.add_subcommand("sample", "acquire a shadow ensemble and write it to --out");
    add_common_options(sample, o);

    auto* estimate = app.add_subcommand("estimate", "estimate a logical observable from an ensemble file");
    add_common_options(estimate, o);
    estimate->add_option("ensemble", o.ensemble, "ensemble file written by 'lst sample'");
    estimate->add_option("--observable", o.observable, "'fidelity' or terms like '0.5*ZZ, -XX'");
    estimate->add_option("--samples-csv", o.samples_csv, "also write per-sample values to this CSV");

    auto* threshold = app.add_subcommand("threshold-sweep", "infidelity versus p for f = rho and f = rho^2");
    add_common_options(threshold, o);
    threshold->add_option("--p-grid", o.p_grid, "comma-separated p values");
    threshold->add_flag("--gnuplot", o.gnuplot, "write <out>.gp next to the CSV");

    auto* code_size = app.add_subcommand("code-size-sweep", "fidelity estimates across codes and shot budgets");
    add_common_options(code_size, o);
    code_size->add_option("--codes", o.codes, "comma-separated code specs");
    code_size->add_option("--shot-budgets", o.shot_budgets, "comma-separated shot counts");
    code_size->add_flag("--gnuplot", o.gnuplot, "write <out>.gp next to the CSV");

    auto* scaling = app.add_subcommand("logical-scaling-sweep", "GHZ estimates over k code blocks");
    add_common_options(scaling, o);
    scaling->add_option("--k-values", o.k_values, "comma-separated logical qubit counts");
    scaling->add_flag("--gnuplot", o.gnuplot, "write <out>.gp next to the CSV");

    auto* oracle = app.add_subcommand("oracle-check", "compare every fast path against dense matrices");
    add_common_options(oracle, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const std::map<CLI::App*, int (*)(const ExperimentConfig&)> commands{
        {sample, cmd_sample},       {estimate, cmd_estimate},          {threshold, cmd_threshold_sweep},
        {code_size, cmd_code_size_sweep}, {scaling, cmd_logical_scaling_sweep}, {oracle, cmd_oracle_check}};
    try {
        const ExperimentConfig cfg = load_config(o);
        for (const auto& [sub, run] : commands) {
            if (sub->parsed()) return run(cfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "lst: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
