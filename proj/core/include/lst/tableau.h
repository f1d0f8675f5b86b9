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
#include <random>
#include <span>
#include <vector>

#include "lst/bit_vector.h"
#include "lst/gate.h"
#include "lst/pauli.h"

namespace lst {

using Rng = std::mt19937_64;

/// Stabilizer tableau of a possibly mixed N-qubit stabilizer state.
///
/// Rows come in symplectic pairs (stabilizer(i), destabilizer(i)): stabilizer(i)
/// anticommutes with destabilizer(j) iff i == j and all other pairs commute. The
/// first N - r stabilizers are active and the state is
///   rho = 2^-N prod_{i active} (1 + stabilizer(i)).
/// The inactive pairs span the maximally mixed part; their signs carry no meaning.
/// Destabilizer signs are likewise irrelevant and kept at phase 0.
class Tableau {
   public:
    Tableau() = default;
    /// |0...0>.
    explicit Tableau(std::size_t n_qubits);

    static Tableau zero_state(std::size_t n_qubits) { return Tableau(n_qubits); }
    /// 1 / 2^N, rank deficit N.
    static Tableau maximally_mixed(std::size_t n_qubits);
    /// State stabilized by `generators` (pairwise commuting, independent, Hermitian); rank
    /// deficit is N minus their count. Throws IncompatibleGenerators or Error.
    static Tableau from_stabilizers(std::size_t n_qubits, std::span<const PauliOp> generators);
    /// Tableau from explicit paired rows; the first N - rank_deficit stabilizers are active.
    /// Throws Error if the rows violate the pairing or sign conventions.
    static Tableau from_rows(std::vector<PauliOp> stabilizers, std::vector<PauliOp> destabilizers,
                             std::size_t rank_deficit);
    /// Tensor product: `a` on the low qubits, `b` on the high qubits.
    static Tableau direct_sum(const Tableau& a, const Tableau& b);

    std::size_t n_qubits() const { return stab_.size(); }
    std::size_t rank_deficit() const { return rank_deficit_; }
    std::size_t num_active() const { return stab_.size() - rank_deficit_; }
    bool is_pure() const { return rank_deficit_ == 0; }

    const PauliOp& stabilizer(std::size_t i) const { return stab_[i]; }
    const PauliOp& destabilizer(std::size_t i) const { return destab_[i]; }
    /// Direct row access for callers that maintain the pairing themselves.
    PauliOp& stabilizer_row(std::size_t i) { return stab_[i]; }
    PauliOp& destabilizer_row(std::size_t i) { return destab_[i]; }

    void apply_gate(Gate g, std::size_t q0, std::size_t q1 = 0);
    void apply_gate(const GateOp& op) { apply_gate(op.gate, op.q0, op.q1); }
    void apply_circuit(const Circuit& circuit);

    /// rho <- P rho P^dagger. Flips the sign of every active stabilizer anticommuting with P.
    void apply_pauli_frame(const PauliOp& frame);

    /// Measures Z on `qubit`; returns the outcome bit and collapses the state.
    /// Deterministic outcomes do not draw from `rng`.
    bool measure_z(std::size_t qubit, Rng& rng);
    /// Measures every qubit in ascending order.
    BitVector measure_all_z(Rng& rng);

    /// Applies Pi = prod_k (1 + G_k)/2 and returns Tr(Pi rho Pi) for the normalized input
    /// state. The tableau becomes the normalized post-projection state. When the trace is
    /// zero the tableau is left at the state reached before the incompatible generator.
    double project(std::span<const PauliOp> generators);

    /// Tr(rho P) in {-1, 0, +1}. P must be Hermitian.
    double expectation(const PauliOp& op) const;

    /// True when the pairing, commutation and sign conventions all hold.
    bool is_consistent() const;

    friend bool operator==(const Tableau& a, const Tableau& b) {
        return a.rank_deficit_ == b.rank_deficit_ && a.stab_ == b.stab_ && a.destab_ == b.destab_;
    }

   private:
    struct Collapse {
        bool random;
        int sign;  // eigenvalue of `op` in the post-collapse state
    };

    // Collapses onto an eigenspace of the Hermitian operator `op`. A random outcome takes
    // its sign from `rng` when given, otherwise `forced_sign`.
    Collapse collapse(const PauliOp& op, Rng* rng, int forced_sign);
    int deterministic_sign(const PauliOp& op) const;
    void check_size(const PauliOp& op, const char* what) const;

    std::vector<PauliOp> stab_;
    std::vector<PauliOp> destab_;
    std::size_t rank_deficit_ = 0;
};

}  // namespace lst
