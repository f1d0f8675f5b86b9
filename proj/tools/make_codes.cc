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

// Generates the code files shipped in data/codes.
//
//   lst-make-codes <output-dir>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "lst/clifford.h"
#include "lst/code.h"
#include "lst/noise.h"

namespace {

using namespace lst;

// [[n, 1]] code stabilized by W Z_j W^dagger for j < n - 1, with W uniform.
StabilizerCode random_clifford_code(std::size_t n, std::uint64_t seed) {
    Rng rng = derive_rng(seed, n);
    const CliffordElement w = sample_uniform_clifford(n, rng);
    StabilizerCode code;
    code.name = "random_" + std::to_string(n);
    code.n = n;
    code.k = 1;
    for (std::size_t j = 0; j + 1 < n; ++j) code.generators.push_back(w.z_image(j));
    code.logical_x.push_back(w.x_image(n - 1));
    code.logical_z.push_back(w.z_image(n - 1));
    validate(code);
    return code;
}

// Rotated surface code on a d x d grid, qubit (r, c) at index r * d + c.
StabilizerCode rotated_surface_code(std::size_t d) {
    StabilizerCode code;
    code.name = "surface_" + std::to_string(d);
    code.n = d * d;
    code.k = 1;
    code.distance = d;
    auto plaquette = [&](std::size_t i, std::size_t j, char type) {
        PauliOp g(code.n);
        for (std::size_t r = i > 0 ? i - 1 : 0; r <= std::min(i, d - 1); ++r) {
            for (std::size_t c = j > 0 ? j - 1 : 0; c <= std::min(j, d - 1); ++c) g.set_pauli(r * d + c, type);
        }
        code.generators.push_back(g);
    };
    for (std::size_t i = 0; i <= d; ++i) {
        for (std::size_t j = 0; j <= d; ++j) {
            const bool even = (i + j) % 2 == 0;
            const bool row_edge = i == 0 || i == d;
            const bool col_edge = j == 0 || j == d;
            if (row_edge && col_edge) continue;
            if (!row_edge && !col_edge) {
                plaquette(i, j, even ? 'X' : 'Z');
            } else if (row_edge && even) {
                plaquette(i, j, 'X');
            } else if (col_edge && !even) {
                plaquette(i, j, 'Z');
            }
        }
    }
    // Logical operators run along the boundary that their type does not terminate on.
    auto line = [&](char type, bool row) {
        PauliOp op(code.n);
        for (std::size_t t = 0; t < d; ++t) op.set_pauli(row ? t : t * d, type);
        return op;
    };
    for (bool row : {true, false}) {
        PauliOp x = line('X', row), z = line('Z', !row);
        bool ok = true;
        for (const PauliOp& g : code.generators) ok = ok && commutes(g, x) && commutes(g, z);
        if (ok) {
            code.logical_x = {x};
            code.logical_z = {z};
            break;
        }
    }
    validate(code);
    return code;
}

void write(const std::filesystem::path& dir, const std::string& file, const StabilizerCode& code) {
    std::ofstream out(dir / file);
    out << format_code(code);
    std::cout << file << ": [[" << code.n << "," << code.k;
    if (code.distance) std::cout << "," << *code.distance;
    std::cout << "]]\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: lst-make-codes <output-dir>\n";
        return 1;
    }
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    try {
        write(dir, "five_qubit.code", five_qubit_code());
        write(dir, "steane.code", steane_code());
        for (std::size_t d : {3u, 5u, 7u}) {
            write(dir, "surface_" + std::to_string(d * d) + ".code", rotated_surface_code(d));
        }
        // Exhaustive distance search is affordable up to n = 17.
        for (std::size_t n : {11u, 17u, 60u}) {
            StabilizerCode code = random_clifford_code(n, 20260101);
            if (n <= 17) code.distance = minimum_distance(code, n == 11 ? 5 : 4);
            write(dir, "random_" + std::to_string(n) + ".code", code);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
