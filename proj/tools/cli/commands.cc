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

#include "cli/commands.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "lst/dense.h"
#include "lst/ensemble_io.h"
#include "lst/estimator.h"
#include "lst/oracle_check.h"
#include "lst/statistics.h"

namespace lst::cli {
namespace {

struct Setup {
    StabilizerCode sector;
    std::size_t sectors = 1;
    LogicalStatePrep prep;
    StabilizerCode full;
};

Setup make_setup(const std::string& code_spec, std::size_t sectors, const std::string& prep_spec) {
    Setup s;
    s.sector = resolve_code(code_spec);
    if (s.sector.k != 1) throw UsageError("code " + s.sector.name + " must encode exactly one logical qubit");
    s.sectors = sectors;
    s.prep = parse_prep(prep_spec, sectors);
    std::vector<StabilizerCode> parts(sectors, s.sector);
    s.full = combine_sectors(parts);
    return s;
}

// Writes to the named file, or stdout when the name is empty.
class Output {
   public:
    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file_.open(path);
        if (!file_) throw UsageError("cannot write " + path);
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

   private:
    std::ofstream file_;
};

EstimatorConfig estimator_config(const ExperimentConfig& cfg, std::vector<double> coefficients) {
    EstimatorConfig e;
    e.coefficients = std::move(coefficients);
    e.bootstrap_resamples = cfg.bootstrap;
    e.bootstrap_seed = cfg.seed;
    e.threads = cfg.threads;
    return e;
}

void check_shots(std::size_t shots, std::size_t block) {
    if (shots < block) {
        throw UsageError("need at least " + std::to_string(block) + " shots for f of degree " + std::to_string(block));
    }
}

// Dense reference value, or nullopt above the dense size limit.
std::optional<double> dense_ratio(const Tableau& encoded, const StabilizerCode& full, const PauliSum& logical,
                                  const std::vector<double>& coefficients, double p) {
    if (full.n > 10) return std::nullopt;
    const auto rho = exact_noisy_state<double>(encoded, p);
    return exact_lst_value<double>(rho, full.generators, lift_observable(full, logical), coefficients).ratio;
}

std::string optional_str(std::optional<double> v) {
    if (!v) return "";
    std::ostringstream s;
    s << std::setprecision(10) << *v;
    return s.str();
}

void warn_if_degenerate(const EstimateReport& r, const std::string& where) {
    if (r.degenerate_denominator) {
        std::cerr << "warning: " << where << ": denominator mean " << r.denominator_mean << " is within 5 sigma of zero\n";
    }
}

void write_gnuplot(const ExperimentConfig& cfg, const std::string& body) {
    if (!cfg.gnuplot) return;
    if (cfg.out.empty()) throw UsageError("--gnuplot needs --out");
    std::ofstream gp(cfg.out + ".gp");
    gp << "set datafile separator ','\nset key autotitle columnhead\nset terminal pngcairo size 900,650\n"
       << "set output '" << cfg.out << ".png'\n"
       << body;
}

}  // namespace

int cmd_sample(const ExperimentConfig& cfg) {
    if (cfg.out.empty()) throw UsageError("sample needs --out");
    const Setup s = make_setup(cfg.code, cfg.sectors, cfg.prep);
    const std::size_t shots = cfg.shots.value_or(3000);
    ShadowAcquirer acquirer(s.sector, s.sectors, s.prep, NoiseSpec{cfg.p.value_or(0.0), cfg.seed});
    const ShadowEnsemble ensemble = acquire_ensemble(acquirer, shots, cfg.threads);

    std::ostringstream bytes;
    write_ensemble(ensemble, bytes);
    const std::string data = bytes.str();
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) throw UsageError("cannot write " + cfg.out);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));

    const EnsembleMetadata& m = ensemble.metadata;
    std::cout << "code " << m.code_name << " [[" << s.sector.n << ",1]] x " << m.num_sectors << "\n"
              << "prep " << m.prep << "\n"
              << "p " << m.noise.p << "\n"
              << "seed " << m.noise.seed << "\n"
              << "snapshots " << ensemble.snapshots.size() << "\n"
              << "bytes " << data.size() << "\n"
              << "fnv1a64 " << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(data.data(), data.size())
              << std::dec << "\n";
    return kExitOk;
}

int cmd_estimate(const ExperimentConfig& cfg) {
    if (cfg.ensemble.empty()) throw UsageError("estimate needs an ensemble file");
    const ShadowEnsemble ensemble = read_ensemble_file(cfg.ensemble);
    const EnsembleMetadata& meta = ensemble.metadata;

    const StabilizerCode sector = resolve_code(cfg.code);
    if (sector.n != meta.sector_size || sector.name != meta.code_name) {
        throw UsageError("ensemble was recorded with code " + meta.code_name + " on " +
                         std::to_string(meta.sector_size) + " qubits per block, not " + sector.name + " on " +
                         std::to_string(sector.n));
    }
    if (sector.k != 1) throw UsageError("code " + sector.name + " must encode exactly one logical qubit");
    std::vector<StabilizerCode> parts(meta.num_sectors, sector);
    const StabilizerCode full = combine_sectors(parts);
    const LogicalStatePrep prep = parse_prep(meta.prep, meta.num_sectors);
    const PauliSum observable = parse_observable(cfg.observable, meta.num_sectors, prep);

    const auto coefficients = estimator_coefficients(cfg);
    check_shots(ensemble.snapshots.size(), coefficients.size());
    const EstimateReport report =
        lst_expectation(ensemble.snapshots, full, observable, estimator_config(cfg, coefficients));
    warn_if_degenerate(report, cfg.ensemble);

    Output out(cfg.out);
    out.stream() << report_to_json(report) << "\n";
    if (!cfg.samples_csv.empty()) {
        std::ofstream csv(cfg.samples_csv);
        if (!csv) throw UsageError("cannot write " + cfg.samples_csv);
        write_samples_csv(report, csv);
    }
    return kExitOk;
}

int cmd_threshold_sweep(const ExperimentConfig& cfg) {
    const Setup s = make_setup(cfg.code, cfg.sectors, cfg.prep);
    const std::vector<double> grid = cfg.p_grid.empty() ? default_p_grid() : cfg.p_grid;
    const std::size_t shots = cfg.shots.value_or(3000);
    check_shots(shots, 2);
    const PauliSum fidelity = fidelity_observable(s.prep);
    const std::vector<double> f1{1.0}, f2{0.0, 1.0};

    Output out(cfg.out);
    std::ostream& csv = out.stream();
    csv << "p,physical_infidelity,lst_m1,lst_m1_std,lst_m2,lst_m2_std,dense_m1,dense_m2\n" << std::setprecision(10);
    std::optional<double> previous_gap;
    double previous_p = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double p = grid[i];
        ShadowAcquirer acquirer(s.sector, s.sectors, s.prep, NoiseSpec{p, cfg.seed + i});
        const auto snaps = acquirer.acquire_range(0, shots, cfg.threads);
        const EstimateReport r1 = lst_expectation(snaps, s.full, fidelity, estimator_config(cfg, f1));
        const EstimateReport r2 = lst_expectation(snaps, s.full, fidelity, estimator_config(cfg, f2));
        warn_if_degenerate(r1, "p=" + std::to_string(p) + " f=rho");
        warn_if_degenerate(r2, "p=" + std::to_string(p) + " f=rho^2");
        // Unencoded |0> under one depolarizing step: fidelity 1 - 2p/3 per qubit.
        const double physical = 1.0 - std::pow(1.0 - 2.0 * p / 3.0, static_cast<double>(s.sectors));
        const auto d1 = dense_ratio(acquirer.encoded_state(), s.full, fidelity, f1, p);
        const auto d2 = dense_ratio(acquirer.encoded_state(), s.full, fidelity, f2, p);
        csv << p << "," << physical << "," << 1.0 - r1.ratio << "," << r1.bootstrap_std << "," << 1.0 - r2.ratio << ","
            << r2.bootstrap_std << "," << optional_str(d1 ? std::optional(1.0 - *d1) : std::nullopt) << ","
            << optional_str(d2 ? std::optional(1.0 - *d2) : std::nullopt) << "\n";
        if (d1) {
            const double gap = (1.0 - *d1) - physical;
            if (previous_gap && (*previous_gap < 0) != (gap < 0)) {
                std::cerr << "dense f=rho curve crosses the physical curve between p=" << previous_p << " and p=" << p
                          << "\n";
            }
            previous_gap = gap;
            previous_p = p;
        }
    }
    write_gnuplot(cfg,
                  "set logscale xy\nset xlabel 'p'\nset ylabel 'infidelity'\n"
                  "plot '" + cfg.out + "' using 1:2 with lines, '' using 1:3:4 with yerrorbars, "
                  "'' using 1:5:6 with yerrorbars, '' using 1:7 with lines, '' using 1:8 with lines\n");
    return kExitOk;
}

int cmd_code_size_sweep(const ExperimentConfig& cfg) {
    const std::vector<std::string> codes = cfg.codes.empty() ? std::vector<std::string>{cfg.code} : cfg.codes;
    std::vector<std::size_t> budgets =
        cfg.shot_budgets.empty() ? std::vector<std::size_t>{100, 1000, 10000, 100000} : cfg.shot_budgets;
    if (cfg.shots && cfg.shot_budgets.empty()) budgets = {*cfg.shots};
    std::sort(budgets.begin(), budgets.end());
    const double p = cfg.p.value_or(0.01);
    const std::vector<double> coefficients = estimator_coefficients(cfg);
    check_shots(budgets.front(), coefficients.size());

    Output out(cfg.out);
    std::ostream& csv = out.stream();
    csv << "code,n,distance,shots,fidelity,bootstrap_std,dense_fidelity\n" << std::setprecision(10);
    for (std::size_t c = 0; c < codes.size(); ++c) {
        const Setup s = make_setup(codes[c], 1, cfg.prep);
        const PauliSum fidelity = fidelity_observable(s.prep);
        ShadowAcquirer acquirer(s.sector, 1, s.prep, NoiseSpec{p, cfg.seed + c});
        const EstimatorConfig ecfg = estimator_config(cfg, coefficients);
        const SampleSet all =
            stream_samples(acquirer, s.full, lift_observable(s.full, fidelity), ecfg, budgets.back());
        const auto dense = dense_ratio(acquirer.encoded_state(), s.full, fidelity, coefficients, p);
        for (std::size_t shots : budgets) {
            const EstimateReport r = summarize(leading_blocks(all, shots / all.block_size), ecfg);
            warn_if_degenerate(r, s.sector.name + " at " + std::to_string(shots) + " shots");
            csv << s.sector.name << "," << s.sector.n << ","
                << (s.sector.distance ? std::to_string(*s.sector.distance) : "") << "," << r.shots_used << ","
                << r.ratio << "," << r.bootstrap_std << "," << optional_str(dense) << "\n";
        }
    }
    write_gnuplot(cfg,
                  "set logscale x\nset xlabel 'shots'\nset ylabel 'fidelity'\n"
                  "plot '" + cfg.out + "' using 4:5:6 with yerrorbars\n");
    return kExitOk;
}

int cmd_logical_scaling_sweep(const ExperimentConfig& cfg) {
    const std::vector<std::size_t> ks = cfg.k_values.empty() ? std::vector<std::size_t>{1, 2, 3, 4} : cfg.k_values;
    const std::size_t shots = cfg.shots.value_or(10000);
    const double p = cfg.p.value_or(0.01);
    const std::vector<double> coefficients = estimator_coefficients(cfg);
    check_shots(shots, coefficients.size());

    Output out(cfg.out);
    std::ostream& csv = out.stream();
    csv << "k,mean,bootstrap_std,dense\n" << std::setprecision(10);
    std::vector<double> xs, log_std;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        const std::size_t k = ks[i];
        const Setup s = make_setup(cfg.code, k, "ghz");
        const PauliSum xbar{{1.0, PauliOp::from_string(std::string(k, 'X'))}};
        ShadowAcquirer acquirer(s.sector, k, s.prep, NoiseSpec{p, cfg.seed + i});
        const EstimatorConfig ecfg = estimator_config(cfg, coefficients);
        const EstimateReport r =
            summarize(stream_samples(acquirer, s.full, lift_observable(s.full, xbar), ecfg, shots), ecfg);
        warn_if_degenerate(r, "k=" + std::to_string(k));
        const auto dense = dense_ratio(acquirer.encoded_state(), s.full, xbar, coefficients, p);
        csv << k << "," << r.ratio << "," << r.bootstrap_std << "," << optional_str(dense) << "\n";
        if (r.bootstrap_std > 0) {
            xs.push_back(static_cast<double>(k));
            log_std.push_back(std::log(r.bootstrap_std));
        }
    }
    if (xs.size() >= 2) {
        const LineFit fit = fit_line(xs, log_std);
        std::cerr << "slope of ln(std) versus k: " << fit.slope << " +- " << fit.slope_stderr << " (ln 2 = "
                  << std::log(2.0) << ")\n";
    }
    write_gnuplot(cfg,
                  "set logscale y\nset xlabel 'k'\nset ylabel 'bootstrap std'\n"
                  "plot '" + cfg.out + "' using 1:3 with linespoints\n");
    return kExitOk;
}

int cmd_oracle_check(const ExperimentConfig& cfg) {
    OracleCheckConfig oc;
    oc.seed = cfg.seed;
    oc.shots = cfg.shots.value_or(oc.shots);
    oc.threads = cfg.threads;
    const auto results = run_oracle_checks(oc);
    Output out(cfg.out);
    for (const auto& r : results) {
        out.stream() << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << "\n";
    }
    const bool ok = all_passed(results);
    out.stream() << (ok ? "all checks passed" : "some checks FAILED") << "\n";
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace lst::cli
