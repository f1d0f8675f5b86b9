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

#include "lst/gf2.h"

#include <utility>

#include "lst/errors.h"

namespace lst {

std::vector<std::size_t> Gf2Matrix::reduce() {
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < cols_ && next_row < rows_.size(); ++c) {
        std::size_t pivot = next_row;
        while (pivot < rows_.size() && !rows_[pivot].get(c)) ++pivot;
        if (pivot == rows_.size()) continue;
        std::swap(rows_[pivot], rows_[next_row]);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (r != next_row && rows_[r].get(c)) rows_[r] ^= rows_[next_row];
        }
        pivots.push_back(c);
        ++next_row;
    }
    return pivots;
}

std::size_t Gf2Matrix::rank() const {
    Gf2Matrix copy = *this;
    return copy.reduce().size();
}

std::vector<BitVector> Gf2Matrix::null_space() const {
    Gf2Matrix reduced = *this;
    std::vector<std::size_t> pivots = reduced.reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        BitVector v(cols_);
        v.set(free, true);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (reduced.get(r, free)) v.set(pivots[r], true);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Gf2Matrix symplectic_columns(std::span<const PauliOp> ops) {
    if (ops.empty()) return Gf2Matrix(0, 0);
    const std::size_t n = ops.front().n_qubits();
    Gf2Matrix a(2 * n, ops.size());
    for (std::size_t j = 0; j < ops.size(); ++j) {
        if (ops[j].n_qubits() != n) throw SizeMismatch("null_space: operators have different qubit counts");
        for (std::size_t q = 0; q < n; ++q) {
            if (ops[j].x().get(q)) a.set(q, j, true);
            if (ops[j].z().get(q)) a.set(n + q, j, true);
        }
    }
    return a;
}

std::vector<BitVector> null_space(std::span<const PauliOp> ops) {
    if (ops.empty()) throw SizeMismatch("null_space: empty operator list");
    return symplectic_columns(ops).null_space();
}

std::size_t symplectic_rank(std::span<const PauliOp> ops) {
    if (ops.empty()) return 0;
    return symplectic_columns(ops).rank();
}

}  // namespace lst
