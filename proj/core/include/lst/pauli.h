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
#include <string>
#include <string_view>

#include "lst/bit_vector.h"
#include "lst/gate.h"

namespace lst {

/// Signed N-qubit Pauli operator in binary symplectic form.
///
/// The operator is i^phase_exp * sigma(x, z), where
/// sigma(x, z) = i^{x.z} prod_q X_q^{x_q} prod_q Z_q^{z_q} is the Hermitian tensor
/// product of single-qubit I/X/Y/Z. So (x=1, z=1) with phase_exp 0 is +Y and every
/// phase_exp-even operator is Hermitian.
class PauliOp {
   public:
    PauliOp() = default;
    /// Identity on `n_qubits`.
    explicit PauliOp(std::size_t n_qubits) : x_(n_qubits), z_(n_qubits) {}
    PauliOp(BitVector x, BitVector z, int phase_exp);

    /// Parses "[sign]PAULIS" with sign one of + - +i -i (U+2212 accepted for minus)
    /// and Paulis from {I, _, X, Y, Z}. A missing sign means +.
    static PauliOp from_string(std::string_view text);
    static PauliOp single(std::size_t n_qubits, std::size_t qubit, char pauli);

    /// "+XIZ", "-iY", ... always with an explicit sign token.
    std::string str() const;

    std::size_t n_qubits() const { return x_.size(); }
    const BitVector& x() const { return x_; }
    const BitVector& z() const { return z_; }
    BitVector& x() { return x_; }
    BitVector& z() { return z_; }

    int phase_exp() const { return phase_; }
    void set_phase_exp(int e) { phase_ = static_cast<std::uint8_t>(((e % 4) + 4) % 4); }
    void negate() { phase_ = static_cast<std::uint8_t>((phase_ + 2) & 3); }

    bool is_hermitian() const { return (phase_ & 1) == 0; }
    /// +1 or -1 for Hermitian operators.
    int sign() const { return phase_ == 0 ? 1 : -1; }
    /// True when no qubit carries X or Z, whatever the phase.
    bool is_identity() const { return x_.none() && z_.none(); }
    std::size_t weight() const;

    char pauli_at(std::size_t q) const;
    void set_pauli(std::size_t q, char pauli);

    /// this <- this * rhs.
    PauliOp& operator*=(const PauliOp& rhs);
    /// this <- lhs * this.
    PauliOp& left_multiply(const PauliOp& lhs);

    /// this <- g this g^dagger.
    void apply_gate(Gate g, std::size_t q0, std::size_t q1 = 0);
    void apply_gate(const GateOp& op) { apply_gate(op.gate, op.q0, op.q1); }

    friend bool operator==(const PauliOp& a, const PauliOp& b) {
        return a.phase_ == b.phase_ && a.x_ == b.x_ && a.z_ == b.z_;
    }

   private:
    BitVector x_;
    BitVector z_;
    std::uint8_t phase_ = 0;
};

/// Exponent p with sigma(x1, z1) sigma(x2, z2) = i^p sigma(x1 ^ x2, z1 ^ z2) on packed words.
int raw_product_phase(std::span<const BitVector::Word> x1, std::span<const BitVector::Word> z1,
                      std::span<const BitVector::Word> x2, std::span<const BitVector::Word> z2);

/// Exponent p with sigma(a) sigma(b) = i^p sigma(a xor b), ignoring the phases of a and b.
int product_phase(const PauliOp& a, const PauliOp& b);

/// a * b with exact phase. Throws SizeMismatch.
PauliOp multiply(const PauliOp& a, const PauliOp& b);
inline PauliOp operator*(const PauliOp& a, const PauliOp& b) { return multiply(a, b); }

/// Symplectic product sum_q (z_q x'_q + x_q z'_q) mod 2: 0 iff a and b commute.
int anticommutation_indicator(const PauliOp& a, const PauliOp& b);
inline bool commutes(const PauliOp& a, const PauliOp& b) { return anticommutation_indicator(a, b) == 0; }

/// Places `local` on qubits [offset, offset + local.n_qubits()) of an n_total-qubit identity.
PauliOp embed(const PauliOp& local, std::size_t n_total, std::size_t offset);
/// Restriction to qubits [offset, offset + count), dropping the phase.
PauliOp restrict_to(const PauliOp& op, std::size_t offset, std::size_t count);
/// a on the low qubits, b on the high qubits.
PauliOp tensor_product(const PauliOp& a, const PauliOp& b);

}  // namespace lst
