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
#include <span>
#include <vector>

#include "lst/bit_vector.h"
#include "lst/gate.h"
#include "lst/pauli.h"
#include "lst/tableau.h"

namespace lst {

/// n-qubit Clifford unitary W (modulo global phase), stored as its conjugation table:
/// the signed Pauli images W X_j W^dagger and W Z_j W^dagger.
///
/// Image r = 2j is the image of X_j and r = 2j + 1 the image of Z_j. Images are
/// Hermitian, so a sign bit per image completes the table.
class CliffordElement {
   public:
    using Word = BitVector::Word;

    CliffordElement() = default;
    /// Identity on `n_qubits`.
    explicit CliffordElement(std::size_t n_qubits);

    /// Builds from explicit images; throws Error if they do not form a valid table.
    static CliffordElement from_images(std::span<const PauliOp> x_images, std::span<const PauliOp> z_images);
    /// The Clifford implemented by applying `circuit` in order.
    static CliffordElement from_circuit(std::size_t n_qubits, const Circuit& circuit);

    std::size_t n_qubits() const { return n_; }

    /// Image `r` as a PauliOp (r = 2j: X_j, r = 2j + 1: Z_j).
    PauliOp image(std::size_t r) const;
    PauliOp x_image(std::size_t j) const { return image(2 * j); }
    PauliOp z_image(std::size_t j) const { return image(2 * j + 1); }
    /// Overwrites image `r` with a Hermitian operator. Validity is the caller's concern.
    void set_image(std::size_t r, const PauliOp& op);
    /// Overwrites image `r` from packed words (n_qubits bits each) and a sign bit.
    void set_image_raw(std::size_t r, std::span<const Word> x, std::span<const Word> z, bool negative);
    bool image_sign_bit(std::size_t r) const { return signs_.get(r); }

    std::span<const Word> image_x_words(std::size_t r) const { return {data_.data() + (2 * r) * words_, words_}; }
    std::span<const Word> image_z_words(std::size_t r) const { return {data_.data() + (2 * r + 1) * words_, words_}; }

    /// W P W^dagger.
    PauliOp conjugate(const PauliOp& op) const;
    /// W^dagger P W.
    PauliOp conjugate_inverse(const PauliOp& op) const;
    CliffordElement inverse() const;
    /// The element "this, then next": next * this.
    CliffordElement then(const CliffordElement& next) const;

    /// Gate sequence from {H, S, S_DAG, X, Z, CX, SWAP} implementing W.
    Circuit to_circuit() const;

    /// Packed table and sign bits; unique per group element. Requires n_qubits <= 3.
    std::uint64_t canonical_key() const;

    bool is_valid() const;

    friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
        return a.n_ == b.n_ && a.data_ == b.data_ && a.signs_ == b.signs_;
    }

   private:
    Word* x_words(std::size_t r) { return data_.data() + (2 * r) * words_; }
    Word* z_words(std::size_t r) { return data_.data() + (2 * r + 1) * words_; }
    // Multiplies the accumulator by the images of the set bits of (x, z), X images first.
    void accumulate(const BitVector& x, const BitVector& z, PauliOp& acc) const;

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> data_;
    BitVector signs_;
};

/// |Sp(2n, F_2)|. Throws for n > 4 (would not fit in 64 bits for larger n).
std::uint64_t symplectic_group_order(std::size_t n);
/// |Sp(2n, F_2)| * 4^n: the Clifford group size modulo phases. n <= 4.
std::uint64_t clifford_group_order(std::size_t n);

/// Exactly uniform Clifford over n qubits: a uniform symplectic matrix built from
/// symplectic transvections (Koenig and Smolin) plus uniform image signs.
CliffordElement sample_uniform_clifford(std::size_t n, Rng& rng);

/// The `index`-th Clifford, index < clifford_group_order(n). A bijection onto the group,
/// used for exhaustive enumeration at small n.
CliffordElement clifford_from_index(std::size_t n, std::uint64_t index);

/// Conjugates every row of `t` on qubits [offset, offset + u.n_qubits()) by u:
/// the state becomes u rho u^dagger.
void apply_clifford(Tableau& t, const CliffordElement& u, std::size_t offset);

}  // namespace lst
