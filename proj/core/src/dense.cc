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

#include "lst/dense.h"

#include <cmath>

namespace lst {

void check_dense_qubits(std::size_t n_qubits) {
    if (n_qubits > kMaxDenseQubits) {
        throw SizeMismatch("dense oracle supports at most " + std::to_string(kMaxDenseQubits) + " qubits, got " +
                           std::to_string(n_qubits));
    }
}

PauliAction::PauliAction(const PauliOp& op) {
    check_dense_qubits(op.n_qubits());
    if (op.n_qubits() > 0) {
        x_mask = op.x().words()[0];
        z_mask = op.z().words()[0];
    }
    phase = op.phase_exp() + std::popcount(x_mask & z_mask);
}

DenseMatrix<double> gate_matrix(std::size_t n_qubits, const GateOp& op) {
    check_dense_qubits(n_qubits);
    const bool two = is_two_qubit(op.gate);
    if (op.q0 >= n_qubits || (two && (op.q1 >= n_qubits || op.q1 == op.q0))) {
        throw std::out_of_range("gate_matrix: bad qubit index");
    }
    const std::size_t d = std::size_t{1} << n_qubits;
    const std::uint64_t m0 = std::uint64_t{1} << op.q0;
    const std::uint64_t m1 = two ? std::uint64_t{1} << op.q1 : 0;
    const double h = 1.0 / std::sqrt(2.0);
    DenseMatrix<double> g(d);
    for (std::uint64_t j = 0; j < d; ++j) {
        const bool b0 = j & m0;
        const bool b1 = j & m1;
        switch (op.gate) {
            case Gate::H:
                g(j & ~m0, j) += Complex<double>(h);
                g(j | m0, j) += Complex<double>(b0 ? -h : h);
                break;
            case Gate::S: g(j, j) = b0 ? Complex<double>(0, 1) : Complex<double>(1); break;
            case Gate::SDag: g(j, j) = b0 ? Complex<double>(0, -1) : Complex<double>(1); break;
            case Gate::X: g(j ^ m0, j) = Complex<double>(1); break;
            case Gate::Y: g(j ^ m0, j) = b0 ? Complex<double>(0, -1) : Complex<double>(0, 1); break;
            case Gate::Z: g(j, j) = Complex<double>(b0 ? -1.0 : 1.0); break;
            case Gate::CX: g(b0 ? j ^ m1 : j, j) = Complex<double>(1); break;
            case Gate::CZ: g(j, j) = Complex<double>(b0 && b1 ? -1.0 : 1.0); break;
            case Gate::SWAP: {
                std::uint64_t out = j & ~(m0 | m1);
                if (b0) out |= m1;
                if (b1) out |= m0;
                g(out, j) = Complex<double>(1);
                break;
            }
        }
    }
    return g;
}

}  // namespace lst
