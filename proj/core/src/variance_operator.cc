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

#include "lst/variance_operator.h"

#include <vector>

#include "lst/clifford.h"

namespace lst {

DenseMatrix<double> empirical_variance_operator(std::size_t n_qubits, const DenseMatrix<double>& a) {
    if (n_qubits == 0 || n_qubits > 2) {
        throw SizeMismatch("empirical_variance_operator: exhaustive averaging needs n in {1, 2}");
    }
    const std::size_t d = std::size_t{1} << n_qubits;
    if (a.dim() != d) throw SizeMismatch("empirical_variance_operator: operator dimension mismatch");
    const double trace_a = a.trace().re;
    const std::uint64_t order = clifford_group_order(n_qubits);

    DenseMatrix<double> total(d);
    std::vector<PauliOp> stabilizers(n_qubits);
    for (std::uint64_t index = 0; index < order; ++index) {
        const CliffordElement w = clifford_from_index(n_qubits, index);
        for (std::uint64_t b = 0; b < d; ++b) {
            for (std::size_t j = 0; j < n_qubits; ++j) {
                stabilizers[j] = w.z_image(j);
                if ((b >> j) & 1) stabilizers[j].negate();
            }
            const DenseMatrix<double> pi_b = projector_matrix<double>(n_qubits, stabilizers);
            const double value = static_cast<double>(d + 1) * trace_of_product(a, pi_b).re - trace_a;
            total += pi_b * (value * value);
        }
    }
    total *= 1.0 / static_cast<double>(order);
    return total;
}

DenseMatrix<double> empirical_variance_operator(std::size_t n_qubits, const DenseMatrix<double>& projector,
                                                const DenseMatrix<double>& observable) {
    return empirical_variance_operator(n_qubits, projector * observable * projector);
}

DenseMatrix<double> variance_operator_closed_form(std::size_t n_qubits, const DenseMatrix<double>& projector,
                                                  bool with_observable) {
    const double d = static_cast<double>(std::size_t{1} << n_qubits);
    const double factor = with_observable ? (2 * d + 2) / (d + 2) : (2 * d - 2) / (d + 2);
    DenseMatrix<double> out = projector + DenseMatrix<double>::identity(projector.dim());
    out *= factor;
    return out;
}

}  // namespace lst
