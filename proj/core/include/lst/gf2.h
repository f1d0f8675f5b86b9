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
#include <span>
#include <vector>

#include "lst/bit_vector.h"
#include "lst/pauli.h"

namespace lst {

/// Dense GF(2) matrix with bit-packed rows.
class Gf2Matrix {
   public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }
    const BitVector& row(std::size_t r) const { return rows_[r]; }
    BitVector& row(std::size_t r) { return rows_[r]; }

    /// In-place reduced row echelon form. Pivots are taken column by column, each from the
    /// first remaining row with a set bit. Returns the pivot column of every pivot row.
    std::vector<std::size_t> reduce();

    std::size_t rank() const;

    /// Basis of {x : A x = 0 (mod 2)}; one vector per free column, in column order.
    std::vector<BitVector> null_space() const;

   private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// The 2N x l matrix whose column j is the (x, z) encoding of ops[j].
Gf2Matrix symplectic_columns(std::span<const PauliOp> ops);

/// Basis of the binary vectors x with prod_j ops[j]^{x_j} proportional to the identity.
std::vector<BitVector> null_space(std::span<const PauliOp> ops);

/// GF(2) rank of the (x, z) encodings of `ops`.
std::size_t symplectic_rank(std::span<const PauliOp> ops);

}  // namespace lst
