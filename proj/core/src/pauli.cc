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

#include "lst/pauli.h"

#include <algorithm>
#include <bit>

#include "lst/errors.h"

namespace lst {

std::string_view gate_name(Gate g) {
    switch (g) {
        case Gate::H: return "H";
        case Gate::S: return "S";
        case Gate::SDag: return "S_DAG";
        case Gate::X: return "X";
        case Gate::Y: return "Y";
        case Gate::Z: return "Z";
        case Gate::CX: return "CX";
        case Gate::CZ: return "CZ";
        case Gate::SWAP: return "SWAP";
    }
    return "?";
}

Gate parse_gate(std::string_view name) {
    for (Gate g : {Gate::H, Gate::S, Gate::SDag, Gate::X, Gate::Y, Gate::Z, Gate::CX, Gate::CZ, Gate::SWAP}) {
        if (gate_name(g) == name) return g;
    }
    throw ParseError("unknown gate '" + std::string(name) + "'");
}

Gate inverse_gate(Gate g) {
    if (g == Gate::S) return Gate::SDag;
    if (g == Gate::SDag) return Gate::S;
    return g;
}

Circuit inverse_circuit(const Circuit& circuit) {
    Circuit out;
    out.reserve(circuit.size());
    for (auto it = circuit.rbegin(); it != circuit.rend(); ++it) {
        out.push_back({inverse_gate(it->gate), it->q0, it->q1});
    }
    return out;
}

PauliOp::PauliOp(BitVector x, BitVector z, int phase_exp) : x_(std::move(x)), z_(std::move(z)) {
    if (x_.size() != z_.size()) throw SizeMismatch("PauliOp: x and z lengths differ");
    set_phase_exp(phase_exp);
}

PauliOp PauliOp::from_string(std::string_view text) {
    int phase = 0;
    auto consume = [&](std::string_view prefix) {
        if (text.substr(0, prefix.size()) == prefix) {
            text.remove_prefix(prefix.size());
            return true;
        }
        return false;
    };
    if (consume("+")) {
        phase = 0;
    } else if (consume("-") || consume("−")) {
        phase = 2;
    }
    if (consume("i")) phase += 1;

    PauliOp op(text.size());
    for (std::size_t q = 0; q < text.size(); ++q) {
        char c = text[q];
        if (c != 'I' && c != '_' && c != 'X' && c != 'Y' && c != 'Z') {
            throw ParseError("invalid Pauli character '" + std::string(1, c) + "'");
        }
        op.set_pauli(q, c);
    }
    op.set_phase_exp(phase);
    return op;
}

PauliOp PauliOp::single(std::size_t n_qubits, std::size_t qubit, char pauli) {
    PauliOp op(n_qubits);
    op.set_pauli(qubit, pauli);
    return op;
}

std::string PauliOp::str() const {
    static constexpr std::string_view kSigns[4] = {"+", "+i", "-", "-i"};
    std::string out(kSigns[phase_]);
    out.reserve(out.size() + n_qubits());
    for (std::size_t q = 0; q < n_qubits(); ++q) out.push_back(pauli_at(q));
    return out;
}

std::size_t PauliOp::weight() const { return (x_ | z_).popcount(); }

char PauliOp::pauli_at(std::size_t q) const {
    static constexpr char kChars[4] = {'I', 'X', 'Z', 'Y'};
    return kChars[(x_.get(q) ? 1 : 0) | (z_.get(q) ? 2 : 0)];
}

void PauliOp::set_pauli(std::size_t q, char pauli) {
    x_.set(q, pauli == 'X' || pauli == 'Y');
    z_.set(q, pauli == 'Z' || pauli == 'Y');
}

int raw_product_phase(std::span<const BitVector::Word> x1, std::span<const BitVector::Word> z1,
                      std::span<const BitVector::Word> x2, std::span<const BitVector::Word> z2) {
    // i^{x1.z1} X^x1 Z^z1 * i^{x2.z2} X^x2 Z^z2
    //   = i^{x1.z1 + x2.z2 + 2 z1.x2} X^{x1^x2} Z^{z1^z2}
    //   = i^{x1.z1 + x2.z2 + 2 z1.x2 - (x1^x2).(z1^z2)} sigma(x1^x2, z1^z2)
    int acc = 0;
    for (std::size_t w = 0; w < x1.size(); ++w) {
        acc += std::popcount(x1[w] & z1[w]);
        acc += std::popcount(x2[w] & z2[w]);
        acc += 2 * std::popcount(z1[w] & x2[w]);
        acc -= std::popcount((x1[w] ^ x2[w]) & (z1[w] ^ z2[w]));
    }
    return ((acc % 4) + 4) % 4;
}

namespace {

void check_same_size(const PauliOp& a, const PauliOp& b, const char* what) {
    if (a.n_qubits() != b.n_qubits()) {
        throw SizeMismatch(std::string(what) + ": qubit counts " + std::to_string(a.n_qubits()) + " and " +
                           std::to_string(b.n_qubits()) + " differ");
    }
}

}  // namespace

int product_phase(const PauliOp& a, const PauliOp& b) {
    check_same_size(a, b, "product_phase");
    return raw_product_phase(a.x().words(), a.z().words(), b.x().words(), b.z().words());
}

PauliOp& PauliOp::operator*=(const PauliOp& rhs) {
    check_same_size(*this, rhs, "multiply");
    int p = raw_product_phase(x_.words(), z_.words(), rhs.x_.words(), rhs.z_.words());
    x_ ^= rhs.x_;
    z_ ^= rhs.z_;
    set_phase_exp(phase_ + rhs.phase_ + p);
    return *this;
}

PauliOp& PauliOp::left_multiply(const PauliOp& lhs) {
    check_same_size(lhs, *this, "multiply");
    int p = raw_product_phase(lhs.x_.words(), lhs.z_.words(), x_.words(), z_.words());
    x_ ^= lhs.x_;
    z_ ^= lhs.z_;
    set_phase_exp(phase_ + lhs.phase_ + p);
    return *this;
}

PauliOp multiply(const PauliOp& a, const PauliOp& b) {
    PauliOp out = a;
    out *= b;
    return out;
}

int anticommutation_indicator(const PauliOp& a, const PauliOp& b) {
    check_same_size(a, b, "anticommutation_indicator");
    auto ax = a.x().words(), az = a.z().words(), bx = b.x().words(), bz = b.z().words();
    BitVector::Word acc = 0;
    for (std::size_t w = 0; w < ax.size(); ++w) acc ^= (az[w] & bx[w]) ^ (ax[w] & bz[w]);
    return std::popcount(acc) & 1;
}

void PauliOp::apply_gate(Gate g, std::size_t q0, std::size_t q1) {
    const std::size_t n = n_qubits();
    if (q0 >= n || (is_two_qubit(g) && (q1 >= n || q1 == q0))) {
        throw std::out_of_range("gate " + std::string(gate_name(g)) + " qubit index out of range");
    }
    bool x0 = x_.get(q0), z0 = z_.get(q0);
    switch (g) {
        case Gate::H:
            if (x0 && z0) negate();
            x_.set(q0, z0);
            z_.set(q0, x0);
            break;
        case Gate::S:
            // X -> Y, Y -> -X
            if (x0 && z0) negate();
            z_.set(q0, z0 ^ x0);
            break;
        case Gate::SDag:
            // X -> -Y, Y -> X
            if (x0 && !z0) negate();
            z_.set(q0, z0 ^ x0);
            break;
        case Gate::X:
            if (z0) negate();
            break;
        case Gate::Y:
            if (x0 ^ z0) negate();
            break;
        case Gate::Z:
            if (x0) negate();
            break;
        case Gate::CX: {
            bool xt = x_.get(q1), zt = z_.get(q1);
            if (x0 && zt && !(xt ^ z0)) negate();
            x_.set(q1, xt ^ x0);
            z_.set(q0, z0 ^ zt);
            break;
        }
        case Gate::CZ: {
            bool x1 = x_.get(q1), z1 = z_.get(q1);
            if (x0 && x1 && (z0 ^ z1)) negate();
            z_.set(q0, z0 ^ x1);
            z_.set(q1, z1 ^ x0);
            break;
        }
        case Gate::SWAP: {
            bool x1 = x_.get(q1), z1 = z_.get(q1);
            x_.set(q0, x1);
            z_.set(q0, z1);
            x_.set(q1, x0);
            z_.set(q1, z0);
            break;
        }
    }
}

PauliOp embed(const PauliOp& local, std::size_t n_total, std::size_t offset) {
    if (offset + local.n_qubits() > n_total) throw SizeMismatch("embed: operator does not fit");
    PauliOp out(n_total);
    out.x().assign_slice(offset, local.x());
    out.z().assign_slice(offset, local.z());
    out.set_phase_exp(local.phase_exp());
    return out;
}

PauliOp restrict_to(const PauliOp& op, std::size_t offset, std::size_t count) {
    if (offset + count > op.n_qubits()) throw SizeMismatch("restrict_to: range out of bounds");
    return PauliOp(op.x().slice(offset, count), op.z().slice(offset, count), 0);
}

PauliOp tensor_product(const PauliOp& a, const PauliOp& b) {
    PauliOp out(a.n_qubits() + b.n_qubits());
    out.x().assign_slice(0, a.x());
    out.z().assign_slice(0, a.z());
    out.x().assign_slice(a.n_qubits(), b.x());
    out.z().assign_slice(a.n_qubits(), b.z());
    out.set_phase_exp(a.phase_exp() + b.phase_exp());
    return out;
}

}  // namespace lst
