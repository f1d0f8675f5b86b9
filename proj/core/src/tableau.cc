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

#include "lst/tableau.h"

#include <utility>

#include "lst/errors.h"

namespace lst {
namespace {

bool anticommutes(const PauliOp& a, const PauliOp& b) { return anticommutation_indicator(a, b) != 0; }

// Makes `c` commute with every pair in [0, count) by multiplying in partner rows.
void orthogonalize(PauliOp& c, const std::vector<PauliOp>& stab, const std::vector<PauliOp>& destab,
                   std::size_t count) {
    for (std::size_t j = 0; j < count; ++j) {
        if (anticommutes(c, stab[j])) c *= destab[j];
        if (anticommutes(c, destab[j])) c *= stab[j];
    }
    c.set_phase_exp(0);
}

std::vector<PauliOp> single_qubit_pool(std::size_t n) {
    std::vector<PauliOp> pool;
    pool.reserve(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
        pool.push_back(PauliOp::single(n, q, 'X'));
        pool.push_back(PauliOp::single(n, q, 'Z'));
    }
    return pool;
}

}  // namespace

Tableau::Tableau(std::size_t n_qubits) {
    stab_.reserve(n_qubits);
    destab_.reserve(n_qubits);
    for (std::size_t q = 0; q < n_qubits; ++q) {
        stab_.push_back(PauliOp::single(n_qubits, q, 'Z'));
        destab_.push_back(PauliOp::single(n_qubits, q, 'X'));
    }
}

Tableau Tableau::maximally_mixed(std::size_t n_qubits) {
    Tableau t(n_qubits);
    t.rank_deficit_ = n_qubits;
    return t;
}

Tableau Tableau::from_stabilizers(std::size_t n_qubits, std::span<const PauliOp> generators) {
    if (generators.size() > n_qubits) throw SizeMismatch("from_stabilizers: more generators than qubits");
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].n_qubits() != n_qubits) throw SizeMismatch("from_stabilizers: generator size mismatch");
        if (!generators[i].is_hermitian()) throw Error("from_stabilizers: generator " + std::to_string(i) + " is not Hermitian");
        for (std::size_t j = 0; j < i; ++j) {
            if (anticommutes(generators[i], generators[j])) {
                throw IncompatibleGenerators("from_stabilizers: generators " + std::to_string(j) + " and " +
                                             std::to_string(i) + " anticommute");
            }
        }
    }

    Tableau t;
    t.stab_.reserve(n_qubits);
    t.destab_.reserve(n_qubits);
    const std::vector<PauliOp> pool = single_qubit_pool(n_qubits);

    auto find_partner = [&](const PauliOp& s) {
        for (const PauliOp& candidate : pool) {
            if (!anticommutes(candidate, s)) continue;
            PauliOp partner = candidate;
            orthogonalize(partner, t.stab_, t.destab_, t.stab_.size());
            return partner;
        }
        throw Error("from_stabilizers: no symplectic partner found");
    };

    for (std::size_t i = 0; i < generators.size(); ++i) {
        PauliOp s = generators[i];
        for (std::size_t j = 0; j < t.stab_.size(); ++j) {
            if (anticommutes(s, t.destab_[j])) s *= t.stab_[j];
        }
        if (s.is_identity()) {
            throw Error("from_stabilizers: generator " + std::to_string(i) + " is dependent on earlier ones");
        }
        PauliOp partner = find_partner(s);
        t.stab_.push_back(std::move(s));
        t.destab_.push_back(std::move(partner));
    }

    for (const PauliOp& candidate : pool) {
        if (t.stab_.size() == n_qubits) break;
        PauliOp s = candidate;
        orthogonalize(s, t.stab_, t.destab_, t.stab_.size());
        if (s.is_identity()) continue;
        PauliOp partner = find_partner(s);
        t.stab_.push_back(std::move(s));
        t.destab_.push_back(std::move(partner));
    }
    t.rank_deficit_ = n_qubits - generators.size();
    return t;
}

Tableau Tableau::from_rows(std::vector<PauliOp> stabilizers, std::vector<PauliOp> destabilizers,
                           std::size_t rank_deficit) {
    if (stabilizers.size() != destabilizers.size()) throw SizeMismatch("from_rows: row counts differ");
    Tableau t;
    t.stab_ = std::move(stabilizers);
    t.destab_ = std::move(destabilizers);
    t.rank_deficit_ = rank_deficit;
    if (!t.is_consistent()) throw Error("from_rows: rows do not form a stabilizer tableau");
    return t;
}

Tableau Tableau::direct_sum(const Tableau& a, const Tableau& b) {
    const std::size_t n = a.n_qubits() + b.n_qubits();
    Tableau t;
    t.stab_.reserve(n);
    t.destab_.reserve(n);
    auto append = [&](const Tableau& src, std::size_t offset, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            t.stab_.push_back(embed(src.stab_[i], n, offset));
            t.destab_.push_back(embed(src.destab_[i], n, offset));
        }
    };
    append(a, 0, 0, a.num_active());
    append(b, a.n_qubits(), 0, b.num_active());
    append(a, 0, a.num_active(), a.n_qubits());
    append(b, a.n_qubits(), b.num_active(), b.n_qubits());
    t.rank_deficit_ = a.rank_deficit_ + b.rank_deficit_;
    return t;
}

void Tableau::check_size(const PauliOp& op, const char* what) const {
    if (op.n_qubits() != n_qubits()) {
        throw SizeMismatch(std::string(what) + ": operator has " + std::to_string(op.n_qubits()) +
                           " qubits, tableau has " + std::to_string(n_qubits()));
    }
}

void Tableau::apply_gate(Gate g, std::size_t q0, std::size_t q1) {
    const std::size_t active = num_active();
    for (std::size_t i = 0; i < stab_.size(); ++i) {
        stab_[i].apply_gate(g, q0, q1);
        if (i >= active) stab_[i].set_phase_exp(0);
        destab_[i].apply_gate(g, q0, q1);
        destab_[i].set_phase_exp(0);
    }
}

void Tableau::apply_circuit(const Circuit& circuit) {
    for (const GateOp& op : circuit) apply_gate(op);
}

void Tableau::apply_pauli_frame(const PauliOp& frame) {
    check_size(frame, "apply_pauli_frame");
    for (std::size_t i = 0; i < num_active(); ++i) {
        if (anticommutes(stab_[i], frame)) stab_[i].negate();
    }
}

int Tableau::deterministic_sign(const PauliOp& op) const {
    PauliOp product(n_qubits());
    for (std::size_t i = 0; i < num_active(); ++i) {
        if (anticommutes(op, destab_[i])) product *= stab_[i];
    }
    if (!(product.x() == op.x()) || !(product.z() == op.z())) {
        throw Error("tableau: operator is not in the stabilizer group");
    }
    int diff = (op.phase_exp() - product.phase_exp() + 4) & 3;
    if (diff & 1) throw ImaginaryPhase("tableau: imaginary eigenvalue");
    return diff == 0 ? 1 : -1;
}

Tableau::Collapse Tableau::collapse(const PauliOp& op, Rng* rng, int forced_sign) {
    const std::size_t n = n_qubits();
    std::size_t active = num_active();
    std::size_t pivot = n;
    bool activated = false;

    for (std::size_t i = 0; i < active; ++i) {
        if (anticommutes(op, stab_[i])) {
            pivot = i;
            break;
        }
    }
    if (pivot == n) {
        for (std::size_t j = active; j < n; ++j) {
            bool anti_s = anticommutes(op, stab_[j]);
            if (anti_s || anticommutes(op, destab_[j])) {
                if (!anti_s) std::swap(stab_[j], destab_[j]);
                pivot = j;
                activated = true;
                break;
            }
        }
    }
    if (pivot == n) return {false, deterministic_sign(op)};

    const PauliOp old = stab_[pivot];
    for (std::size_t i = 0; i < n; ++i) {
        if (i != pivot && anticommutes(op, stab_[i])) {
            stab_[i] *= old;
            if (i >= active) stab_[i].set_phase_exp(0);
        }
        if (i != pivot && anticommutes(op, destab_[i])) {
            destab_[i] *= old;
            destab_[i].set_phase_exp(0);
        }
    }
    destab_[pivot] = old;
    destab_[pivot].set_phase_exp(0);

    int sign = forced_sign;
    if (rng != nullptr) sign = ((*rng)() >> 63) ? -1 : 1;
    stab_[pivot] = op;
    if (sign < 0) stab_[pivot].negate();

    if (activated) {
        std::swap(stab_[pivot], stab_[active]);
        std::swap(destab_[pivot], destab_[active]);
        --rank_deficit_;
    }
    return {true, sign};
}

bool Tableau::measure_z(std::size_t qubit, Rng& rng) {
    if (qubit >= n_qubits()) throw std::out_of_range("measure_z: qubit index out of range");
    Collapse c = collapse(PauliOp::single(n_qubits(), qubit, 'Z'), &rng, 1);
    return c.sign < 0;
}

BitVector Tableau::measure_all_z(Rng& rng) {
    BitVector bits(n_qubits());
    for (std::size_t q = 0; q < n_qubits(); ++q) bits.set(q, measure_z(q, rng));
    return bits;
}

double Tableau::project(std::span<const PauliOp> generators) {
    for (std::size_t i = 0; i < generators.size(); ++i) {
        check_size(generators[i], "project");
        if (!generators[i].is_hermitian()) throw Error("project: generator " + std::to_string(i) + " is not Hermitian");
        for (std::size_t j = 0; j < i; ++j) {
            if (anticommutes(generators[i], generators[j])) {
                throw IncompatibleGenerators("project: generators " + std::to_string(j) + " and " +
                                             std::to_string(i) + " anticommute");
            }
        }
    }
    double trace = 1.0;
    for (const PauliOp& g : generators) {
        if (g.is_identity()) {
            if (g.sign() < 0) return 0.0;
            continue;
        }
        Collapse c = collapse(g, nullptr, 1);
        if (c.random) {
            trace *= 0.5;
        } else if (c.sign < 0) {
            return 0.0;
        }
    }
    return trace;
}

double Tableau::expectation(const PauliOp& op) const {
    check_size(op, "expectation");
    if (!op.is_hermitian()) throw Error("expectation: operator is not Hermitian");
    if (op.is_identity()) return op.sign();
    const std::size_t active = num_active();
    for (std::size_t i = 0; i < n_qubits(); ++i) {
        if (anticommutes(op, stab_[i])) return 0.0;
        if (i >= active && anticommutes(op, destab_[i])) return 0.0;
    }
    return deterministic_sign(op);
}

bool Tableau::is_consistent() const {
    const std::size_t n = n_qubits();
    if (destab_.size() != n || rank_deficit_ > n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (stab_[i].n_qubits() != n || destab_[i].n_qubits() != n) return false;
        if (destab_[i].phase_exp() != 0) return false;
        if (i < num_active() ? !stab_[i].is_hermitian() : stab_[i].phase_exp() != 0) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (anticommutes(stab_[i], destab_[j]) != (i == j)) return false;
            if (j < i && (anticommutes(stab_[i], stab_[j]) || anticommutes(destab_[i], destab_[j]))) return false;
        }
    }
    return true;
}

}  // namespace lst
