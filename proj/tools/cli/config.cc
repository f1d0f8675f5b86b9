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

#include "cli/config.h"

#include <cmath>
#include <fstream>
#include <type_traits>

#include <json.hpp>

namespace lst::cli {
namespace {

using nlohmann::json;

template <class T>
T parse_number(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        T value;
        if constexpr (std::is_floating_point_v<T>) {
            value = static_cast<T>(std::stod(text, &used));
        } else {
            if (!text.empty() && text.front() == '-') throw std::invalid_argument("negative");
            value = static_cast<T>(std::stoull(text, &used));
        }
        if (used != text.size()) throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception&) {
        throw UsageError(std::string("bad ") + what + " '" + text + "'");
    }
}

template <class T>
std::vector<T> parse_numbers(const std::string& text, const char* what) {
    std::vector<T> out;
    for (const std::string& item : split_list(text)) out.push_back(parse_number<T>(item, what));
    return out;
}

template <class T>
void read_key(const json& j, const char* key, T& target) {
    if (!j.contains(key)) return;
    try {
        target = j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw UsageError(std::string("config key '") + key + "': " + e.what());
    }
}

template <class T>
void read_key(const json& j, const char* key, std::optional<T>& target) {
    if (!j.contains(key)) return;
    T value{};
    read_key(j, key, value);
    target = value;
}

void apply_json(const json& j, ExperimentConfig& cfg) {
    static const char* const kKnown[] = {"code",   "codes",        "prep",     "sectors",     "p",
                                         "p_grid", "shots",        "shot_budgets", "k_values", "m",
                                         "coefficients", "seed",   "bootstrap", "observable", "out",
                                         "ensemble", "samples_csv", "threads",  "gnuplot"};
    if (!j.is_object()) throw UsageError("config must be a JSON object");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : kKnown) known = known || item.key() == k;
        if (!known) throw UsageError("unknown config key '" + item.key() + "'");
    }
    read_key(j, "code", cfg.code);
    read_key(j, "codes", cfg.codes);
    read_key(j, "prep", cfg.prep);
    read_key(j, "sectors", cfg.sectors);
    read_key(j, "p", cfg.p);
    read_key(j, "p_grid", cfg.p_grid);
    read_key(j, "shots", cfg.shots);
    read_key(j, "shot_budgets", cfg.shot_budgets);
    read_key(j, "k_values", cfg.k_values);
    read_key(j, "m", cfg.m);
    read_key(j, "coefficients", cfg.coefficients);
    read_key(j, "seed", cfg.seed);
    read_key(j, "bootstrap", cfg.bootstrap);
    read_key(j, "observable", cfg.observable);
    read_key(j, "out", cfg.out);
    read_key(j, "ensemble", cfg.ensemble);
    read_key(j, "samples_csv", cfg.samples_csv);
    read_key(j, "threads", cfg.threads);
    read_key(j, "gnuplot", cfg.gnuplot);
}

}  // namespace

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        std::string item = text.substr(start, comma - start);
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first != std::string::npos) out.push_back(item.substr(first, last - first + 1));
        start = comma + 1;
    }
    return out;
}

ExperimentConfig load_config(const ConfigOverrides& o) {
    ExperimentConfig cfg;
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) throw UsageError("cannot open config file " + o.config_path);
        try {
            apply_json(json::parse(in), cfg);
        } catch (const json::parse_error& e) {
            throw UsageError("config file " + o.config_path + ": " + e.what());
        }
    }
    if (o.code) cfg.code = *o.code;
    if (o.codes) cfg.codes = split_list(*o.codes);
    if (o.prep) cfg.prep = *o.prep;
    if (o.sectors) cfg.sectors = *o.sectors;
    if (o.p) cfg.p = *o.p;
    if (o.p_grid) cfg.p_grid = parse_numbers<double>(*o.p_grid, "p grid");
    if (o.shots) cfg.shots = *o.shots;
    if (o.shot_budgets) cfg.shot_budgets = parse_numbers<std::size_t>(*o.shot_budgets, "shot budget");
    if (o.k_values) cfg.k_values = parse_numbers<std::size_t>(*o.k_values, "k value");
    if (o.m) cfg.m = *o.m;
    if (o.coefficients) cfg.coefficients = parse_numbers<double>(*o.coefficients, "coefficient");
    if (o.seed) cfg.seed = *o.seed;
    if (o.bootstrap) cfg.bootstrap = *o.bootstrap;
    if (o.observable) cfg.observable = *o.observable;
    if (o.out) cfg.out = *o.out;
    if (o.ensemble) cfg.ensemble = *o.ensemble;
    if (o.samples_csv) cfg.samples_csv = *o.samples_csv;
    if (o.threads) cfg.threads = *o.threads;
    cfg.gnuplot = cfg.gnuplot || o.gnuplot;

    if (cfg.m == 0) throw UsageError("m must be at least 1");
    if (cfg.sectors == 0) throw UsageError("need at least one sector");
    if (cfg.bootstrap < 2) throw UsageError("bootstrap needs at least 2 resamples");
    if (cfg.shots && *cfg.shots == 0) throw UsageError("shots must be positive");
    if (cfg.p && !(*cfg.p >= 0.0 && *cfg.p <= 1.0)) throw UsageError("p must lie in [0, 1]");
    for (double p : cfg.p_grid) {
        if (!(p >= 0.0 && p <= 1.0)) throw UsageError("p grid values must lie in [0, 1]");
    }
    for (std::size_t s : cfg.shot_budgets) {
        if (s == 0) throw UsageError("shot budgets must be positive");
    }
    for (std::size_t k : cfg.k_values) {
        if (k == 0) throw UsageError("k values must be positive");
    }
    return cfg;
}

std::vector<double> estimator_coefficients(const ExperimentConfig& cfg) {
    if (!cfg.coefficients.empty()) return cfg.coefficients;
    std::vector<double> c(cfg.m, 0.0);
    c.back() = 1.0;
    return c;
}

std::vector<double> default_p_grid() {
    std::vector<double> grid;
    const double lo = std::log(1e-3), hi = std::log(0.9);
    for (int i = 0; i < 20; ++i) grid.push_back(std::exp(lo + (hi - lo) * i / 19.0));
    return grid;
}

}  // namespace lst::cli
