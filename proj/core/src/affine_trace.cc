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

#include "lst/affine_trace.h"

#include <bit>
#include <cmath>
#include <vector>

#include "lst/errors.h"
#include "lst/gf2.h"

namespace lst {
namespace {

constexpr std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

struct PhaseSums {
    // Sum of prod a^{1-x} b^x over enumerated null vectors, bucketed by phase exponent.
    double by_phase[4] = {0, 0, 0, 0};
    std::complex<double> prefactor = 1.0;
    bool zero = false;
};

PhaseSums enumerate(std::size_t n_qubits, std::span<const AffinePauliFactor> factors, std::uint64_t cap) {
    PhaseSums result;
    std::vector<const AffinePauliFactor*> live;
    for (const auto& f : factors) {
        if (f.op.n_qubits() != n_qubits) throw SizeMismatch("affine_product_trace: factor qubit count mismatch");
        if (f.b == 0.0) {
            result.prefactor *= f.a;
        } else if (f.op.is_identity()) {
            result.prefactor *= f.a + f.b * kIPow[f.op.phase_exp()];
        } else {
            live.push_back(&f);
        }
    }
    if (result.prefactor == 0.0) {
        result.zero = true;
        return result;
    }

    const std::size_t l = live.size();
    if (l == 0) {
        result.by_phase[0] = 1.0;
        return result;
    }

    std::vector<PauliOp> ops;
    ops.reserve(l);
    for (const auto* f : live) ops.push_back(f->op);
    std::vector<BitVector> basis = null_space(ops);
    const std::size_t dim = basis.size();
    if (dim >= 64 || (std::uint64_t{1} << dim) > cap) throw NullSpaceTooLarge(dim, cap);

    // For a null vector x the ordered product is
    //   prod_{j in x} M_j = i^{sum_j (phase_j + x_j.z_j)} (-1)^{sum_{j<j'} z_j . x_j'} * 1,
    // because the X and Z exponents sum to zero mod 2 once all X's are moved left.
    BitVector linear_lo(l), linear_hi(l);
    std::vector<BitVector> upper(l, BitVector(l));
    for (std::size_t j = 0; j < l; ++j) {
        const PauliOp& m = ops[j];
        int lin = (m.phase_exp() + static_cast<int>((m.x() & m.z()).popcount())) & 3;
        linear_lo.set(j, lin & 1);
        linear_hi.set(j, lin & 2);
        for (std::size_t k = j + 1; k < l; ++k) {
            if (m.z().dot(ops[k].x())) upper[j].set(k, true);
        }
    }

    BitVector x(l);
    const std::uint64_t count = std::uint64_t{1} << dim;
    for (std::uint64_t step = 0; step < count; ++step) {
        if (step > 0) x ^= basis[std::countr_zero(step)];

        int phase = static_cast<int>((x & linear_lo).popcount() + 2 * (x & linear_hi).popcount());
        int quad = 0;
        double coef = 1.0;
        for (std::size_t j = 0; j < l; ++j) {
            if (x.get(j)) {
                quad ^= upper[j].dot(x) ? 1 : 0;
                coef *= live[j]->b;
            } else {
                coef *= live[j]->a;
            }
        }
        phase = (phase + 2 * quad) & 3;
        result.by_phase[phase] += coef;
    }
    return result;
}

}  // namespace

std::complex<double> affine_product_trace_complex(std::size_t n_qubits, std::span<const AffinePauliFactor> factors,
                                                  std::uint64_t null_space_cap) {
    PhaseSums sums = enumerate(n_qubits, factors, null_space_cap);
    if (sums.zero) return 0.0;
    std::complex<double> total(sums.by_phase[0] - sums.by_phase[2], sums.by_phase[1] - sums.by_phase[3]);
    return std::ldexp(1.0, static_cast<int>(n_qubits)) * sums.prefactor * total;
}

double affine_product_trace(std::size_t n_qubits, std::span<const AffinePauliFactor> factors,
                            std::uint64_t null_space_cap) {
    PhaseSums sums = enumerate(n_qubits, factors, null_space_cap);
    if (sums.zero) return 0.0;
    if (sums.by_phase[1] != 0.0 || sums.by_phase[3] != 0.0 || sums.prefactor.imag() != 0.0) {
        throw ImaginaryPhase("affine_product_trace: null-space product has an imaginary phase");
    }
    return std::ldexp(1.0, static_cast<int>(n_qubits)) * sums.prefactor.real() *
           (sums.by_phase[0] - sums.by_phase[2]);
}

}  // namespace lst
