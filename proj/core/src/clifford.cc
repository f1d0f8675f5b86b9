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

#include "lst/clifford.h"

#include <bit>
#include <functional>
#include <utility>

#include "lst/errors.h"

namespace lst {

CliffordElement::CliffordElement(std::size_t n_qubits)
    : n_(n_qubits), words_(BitVector::words_for(n_qubits)), data_(4 * n_qubits * words_, 0), signs_(2 * n_qubits) {
    for (std::size_t j = 0; j < n_; ++j) {
        x_words(2 * j)[j / 64] |= Word{1} << (j % 64);
        z_words(2 * j + 1)[j / 64] |= Word{1} << (j % 64);
    }
}

CliffordElement CliffordElement::from_images(std::span<const PauliOp> x_images, std::span<const PauliOp> z_images) {
    if (x_images.size() != z_images.size()) throw SizeMismatch("from_images: image counts differ");
    CliffordElement c(x_images.size());
    for (std::size_t j = 0; j < c.n_; ++j) {
        if (x_images[j].n_qubits() != c.n_ || z_images[j].n_qubits() != c.n_) {
            throw SizeMismatch("from_images: image qubit count mismatch");
        }
        if (!x_images[j].is_hermitian() || !z_images[j].is_hermitian()) {
            throw Error("from_images: images must be Hermitian");
        }
        c.set_image(2 * j, x_images[j]);
        c.set_image(2 * j + 1, z_images[j]);
    }
    if (!c.is_valid()) throw Error("from_images: images do not preserve commutation relations");
    return c;
}

CliffordElement CliffordElement::from_circuit(std::size_t n_qubits, const Circuit& circuit) {
    std::vector<PauliOp> images;
    images.reserve(2 * n_qubits);
    for (std::size_t j = 0; j < n_qubits; ++j) {
        images.push_back(PauliOp::single(n_qubits, j, 'X'));
        images.push_back(PauliOp::single(n_qubits, j, 'Z'));
    }
    for (const GateOp& g : circuit) {
        for (PauliOp& img : images) img.apply_gate(g);
    }
    CliffordElement c(n_qubits);
    for (std::size_t r = 0; r < images.size(); ++r) c.set_image(r, images[r]);
    return c;
}

PauliOp CliffordElement::image(std::size_t r) const {
    PauliOp op(n_);
    auto x = op.x().words();
    auto z = op.z().words();
    for (std::size_t w = 0; w < words_; ++w) {
        x[w] = image_x_words(r)[w];
        z[w] = image_z_words(r)[w];
    }
    op.set_phase_exp(signs_.get(r) ? 2 : 0);
    return op;
}

void CliffordElement::set_image(std::size_t r, const PauliOp& op) {
    if (op.n_qubits() != n_) throw SizeMismatch("set_image: qubit count mismatch");
    if (!op.is_hermitian()) throw Error("set_image: image must be Hermitian");
    for (std::size_t w = 0; w < words_; ++w) {
        x_words(r)[w] = op.x().words()[w];
        z_words(r)[w] = op.z().words()[w];
    }
    signs_.set(r, op.phase_exp() == 2);
}

void CliffordElement::set_image_raw(std::size_t r, std::span<const Word> x, std::span<const Word> z, bool negative) {
    if (x.size() != words_ || z.size() != words_) throw SizeMismatch("set_image_raw: word count mismatch");
    const Word tail = n_ % 64 == 0 ? ~Word{0} : (Word{1} << (n_ % 64)) - 1;
    for (std::size_t w = 0; w < words_; ++w) {
        Word mask = w + 1 == words_ ? tail : ~Word{0};
        if ((x[w] & ~mask) || (z[w] & ~mask)) throw FormatError("set_image_raw: bits set past the qubit count");
        x_words(r)[w] = x[w];
        z_words(r)[w] = z[w];
    }
    signs_.set(r, negative);
}

void CliffordElement::accumulate(const BitVector& x, const BitVector& z, PauliOp& acc) const {
    auto ax = acc.x().words();
    auto az = acc.z().words();
    int phase = acc.phase_exp();
    auto mul = [&](std::size_t r) {
        auto ix = image_x_words(r);
        auto iz = image_z_words(r);
        phase += raw_product_phase(ax, az, ix, iz) + (signs_.get(r) ? 2 : 0);
        for (std::size_t w = 0; w < words_; ++w) {
            ax[w] ^= ix[w];
            az[w] ^= iz[w];
        }
    };
    auto xs = x.words();
    auto zs = z.words();
    for (std::size_t w = 0; w < xs.size(); ++w) {
        for (Word bits = xs[w]; bits; bits &= bits - 1) mul(2 * (64 * w + std::countr_zero(bits)));
    }
    for (std::size_t w = 0; w < zs.size(); ++w) {
        for (Word bits = zs[w]; bits; bits &= bits - 1) mul(2 * (64 * w + std::countr_zero(bits)) + 1);
    }
    acc.set_phase_exp(phase);
}

PauliOp CliffordElement::conjugate(const PauliOp& op) const {
    if (op.n_qubits() != n_) throw SizeMismatch("conjugate: qubit count mismatch");
    // op = i^{phase + x.z} X^x Z^z.
    PauliOp acc(n_);
    acc.set_phase_exp(op.phase_exp() + static_cast<int>((op.x() & op.z()).popcount()));
    accumulate(op.x(), op.z(), acc);
    return acc;
}

PauliOp CliffordElement::conjugate_inverse(const PauliOp& op) const {
    if (op.n_qubits() != n_) throw SizeMismatch("conjugate_inverse: qubit count mismatch");
    // Q = W^dagger P W has an X on qubit q iff P anticommutes with W Z_q W^dagger, and a Z
    // iff P anticommutes with W X_q W^dagger.
    BitVector alpha(n_), beta(n_);
    auto px = op.x().words();
    auto pz = op.z().words();
    auto anti = [&](std::size_t r) {
        auto ix = image_x_words(r);
        auto iz = image_z_words(r);
        Word acc = 0;
        for (std::size_t w = 0; w < words_; ++w) acc ^= (px[w] & iz[w]) ^ (pz[w] & ix[w]);
        return (std::popcount(acc) & 1) != 0;
    };
    for (std::size_t q = 0; q < n_; ++q) {
        if (anti(2 * q + 1)) alpha.set(q, true);
        if (anti(2 * q)) beta.set(q, true);
    }
    PauliOp image_of_q(n_);
    image_of_q.set_phase_exp(static_cast<int>((alpha & beta).popcount()));
    accumulate(alpha, beta, image_of_q);
    if (!(image_of_q.x() == op.x()) || !(image_of_q.z() == op.z())) {
        throw Error("conjugate_inverse: table is not a valid Clifford");
    }
    return PauliOp(std::move(alpha), std::move(beta), op.phase_exp() - image_of_q.phase_exp());
}

CliffordElement CliffordElement::inverse() const {
    CliffordElement inv(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        inv.set_image(2 * j, conjugate_inverse(PauliOp::single(n_, j, 'X')));
        inv.set_image(2 * j + 1, conjugate_inverse(PauliOp::single(n_, j, 'Z')));
    }
    return inv;
}

CliffordElement CliffordElement::then(const CliffordElement& next) const {
    if (next.n_ != n_) throw SizeMismatch("then: qubit count mismatch");
    CliffordElement out(n_);
    for (std::size_t r = 0; r < 2 * n_; ++r) out.set_image(r, next.conjugate(image(r)));
    return out;
}

Circuit CliffordElement::to_circuit() const {
    std::vector<PauliOp> images;
    images.reserve(2 * n_);
    for (std::size_t r = 0; r < 2 * n_; ++r) images.push_back(image(r));

    // Reduce the table to the identity by gates applied on the output side; the
    // circuit for W is the inverse of that reduction.
    Circuit reduction;
    auto apply = [&](Gate g, std::size_t q0, std::size_t q1 = 0) {
        reduction.push_back({g, static_cast<std::uint32_t>(q0), static_cast<std::uint32_t>(q1)});
        for (PauliOp& img : images) img.apply_gate(g, q0, q1);
    };

    for (std::size_t i = 0; i < n_; ++i) {
        PauliOp& a = images[2 * i];
        for (std::size_t q = i; q < n_; ++q) {
            char c = a.pauli_at(q);
            if (c == 'Z') apply(Gate::H, q);
            if (c == 'Y') apply(Gate::S, q);
        }
        if (a.pauli_at(i) == 'I') {
            for (std::size_t q = i + 1; q < n_; ++q) {
                if (a.pauli_at(q) != 'I') {
                    apply(Gate::SWAP, i, q);
                    break;
                }
            }
        }
        for (std::size_t q = i + 1; q < n_; ++q) {
            if (a.pauli_at(q) != 'I') apply(Gate::CX, i, q);
        }

        PauliOp& b = images[2 * i + 1];
        for (std::size_t q = i + 1; q < n_; ++q) {
            char c = b.pauli_at(q);
            if (c == 'X') apply(Gate::H, q);
            if (c == 'Y') {
                apply(Gate::S, q);
                apply(Gate::H, q);
            }
            if (c != 'I') apply(Gate::CX, q, i);
        }
        if (b.pauli_at(i) == 'Y') {
            apply(Gate::H, i);
            apply(Gate::S, i);
            apply(Gate::H, i);
        }
        if (a.sign() < 0) apply(Gate::Z, i);
        if (b.sign() < 0) apply(Gate::X, i);
    }
    return inverse_circuit(reduction);
}

std::uint64_t CliffordElement::canonical_key() const {
    if (n_ > 3) throw SizeMismatch("canonical_key: only defined for up to 3 qubits");
    std::uint64_t key = 0;
    for (std::size_t r = 0; r < 2 * n_; ++r) {
        key = (key << n_) | (image_x_words(r)[0] & ((Word{1} << n_) - 1));
        key = (key << n_) | (image_z_words(r)[0] & ((Word{1} << n_) - 1));
        key = (key << 1) | (signs_.get(r) ? 1 : 0);
    }
    return key;
}

bool CliffordElement::is_valid() const {
    std::vector<PauliOp> images;
    for (std::size_t r = 0; r < 2 * n_; ++r) images.push_back(image(r));
    for (std::size_t r = 0; r < images.size(); ++r) {
        for (std::size_t s = r + 1; s < images.size(); ++s) {
            bool expect_anti = (r % 2 == 0) && s == r + 1;
            if ((anticommutation_indicator(images[r], images[s]) != 0) != expect_anti) return false;
        }
    }
    return true;
}

namespace {

// Vectors in interleaved symplectic layout (x0, z0, x1, z1, ...).
constexpr BitVector::Word kEvenBits = 0x5555555555555555ULL;

bool symplectic_inner(const BitVector& v, const BitVector& w) {
    auto a = v.words();
    auto b = w.words();
    BitVector::Word acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc ^= (a[i] & kEvenBits & (b[i] >> 1)) ^ (b[i] & kEvenBits & (a[i] >> 1));
    }
    return std::popcount(acc) & 1;
}

void transvect(const BitVector& k, BitVector& v) {
    if (symplectic_inner(k, v)) v ^= k;
}

bool pair_nonzero(const BitVector& v, std::size_t i) { return v.get(2 * i) || v.get(2 * i + 1); }

// Two transvection vectors (h1, h2) with y = Z_h1 Z_h2 x; unused slots stay zero.
std::pair<BitVector, BitVector> find_transvection(const BitVector& x, const BitVector& y) {
    const std::size_t nn = x.size();
    std::pair<BitVector, BitVector> out{BitVector(nn), BitVector(nn)};
    if (x == y) return out;
    if (symplectic_inner(x, y)) {
        out.first = x ^ y;
        return out;
    }
    BitVector z(nn);
    for (std::size_t i = 0; i < nn / 2; ++i) {
        if (pair_nonzero(x, i) && pair_nonzero(y, i)) {
            const std::size_t ii = 2 * i;
            z.set(ii, x.get(ii) ^ y.get(ii));
            z.set(ii + 1, x.get(ii + 1) ^ y.get(ii + 1));
            if (!z.get(ii) && !z.get(ii + 1)) {
                z.set(ii + 1, true);
                if (x.get(ii) != x.get(ii + 1)) z.set(ii, true);
            }
            out.first = x ^ z;
            out.second = y ^ z;
            return out;
        }
    }
    for (std::size_t i = 0; i < nn / 2; ++i) {
        const std::size_t ii = 2 * i;
        if (pair_nonzero(x, i) && !pair_nonzero(y, i)) {
            if (x.get(ii) == x.get(ii + 1)) {
                z.set(ii + 1, true);
            } else {
                z.set(ii + 1, x.get(ii));
                z.set(ii, x.get(ii + 1));
            }
            break;
        }
    }
    for (std::size_t i = 0; i < nn / 2; ++i) {
        const std::size_t ii = 2 * i;
        if (!pair_nonzero(x, i) && pair_nonzero(y, i)) {
            if (y.get(ii) == y.get(ii + 1)) {
                z.set(ii + 1, true);
            } else {
                z.set(ii + 1, y.get(ii));
                z.set(ii, y.get(ii + 1));
            }
            break;
        }
    }
    out.first = x ^ z;
    out.second = y ^ z;
    return out;
}

struct LevelDraw {
    BitVector f1;    // nonzero, 2m bits
    BitVector bits;  // 2m - 1 bits
};

using DrawSource = std::function<LevelDraw(std::size_t m)>;

// Rows of a symplectic matrix on m qubits (row 2j: image of X_j, row 2j + 1: image of Z_j).
std::vector<BitVector> build_symplectic(std::size_t m, const DrawSource& draw) {
    const std::size_t nn = 2 * m;
    LevelDraw d = draw(m);

    BitVector e1(nn);
    e1.set(0, true);
    auto [t0, t1] = find_transvection(e1, d.f1);

    BitVector h0 = e1;
    for (std::size_t j = 2; j < nn; ++j) h0.set(j, d.bits.get(j - 1));
    transvect(t0, h0);
    transvect(t1, h0);

    BitVector f1 = d.f1;
    if (d.bits.get(0)) f1.clear();

    std::vector<BitVector> g(nn, BitVector(nn));
    g[0].set(0, true);
    g[1].set(1, true);
    if (m > 1) {
        std::vector<BitVector> inner = build_symplectic(m - 1, draw);
        for (std::size_t r = 0; r < inner.size(); ++r) {
            for (std::size_t c = 0; c < inner.size(); ++c) {
                if (inner[r].get(c)) g[r + 2].set(c + 2, true);
            }
        }
    }
    for (BitVector& row : g) {
        transvect(t0, row);
        transvect(t1, row);
        transvect(h0, row);
        transvect(f1, row);
    }
    return g;
}

CliffordElement from_symplectic(const std::vector<BitVector>& rows, const BitVector& sign_bits) {
    const std::size_t n = rows.size() / 2;
    CliffordElement c(n);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        PauliOp img(n);
        for (std::size_t q = 0; q < n; ++q) {
            img.x().set(q, rows[r].get(2 * q));
            img.z().set(q, rows[r].get(2 * q + 1));
        }
        if (sign_bits.get(r)) img.negate();
        c.set_image(r, img);
    }
    return c;
}

BitVector random_bits(std::size_t count, Rng& rng) {
    BitVector v(count);
    auto words = v.words();
    for (std::size_t w = 0; w < words.size(); ++w) {
        std::size_t valid = std::min<std::size_t>(64, count - 64 * w);
        BitVector::Word mask = valid == 64 ? ~BitVector::Word{0} : ((BitVector::Word{1} << valid) - 1);
        words[w] = rng() & mask;
    }
    return v;
}

BitVector bits_of(std::uint64_t value, std::size_t count) {
    BitVector v(count);
    for (std::size_t j = 0; j < count && j < 64; ++j) v.set(j, (value >> j) & 1);
    return v;
}

}  // namespace

std::uint64_t symplectic_group_order(std::size_t n) {
    if (n > 4) throw SizeMismatch("symplectic_group_order: n > 4 overflows 64 bits");
    std::uint64_t order = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        order *= ((std::uint64_t{1} << (2 * j)) - 1) * (std::uint64_t{1} << (2 * j - 1));
    }
    return order;
}

std::uint64_t clifford_group_order(std::size_t n) { return symplectic_group_order(n) << (2 * n); }

CliffordElement sample_uniform_clifford(std::size_t n, Rng& rng) {
    if (n == 0) throw SizeMismatch("sample_uniform_clifford: n must be positive");
    DrawSource draw = [&rng](std::size_t m) {
        LevelDraw d;
        do {
            d.f1 = random_bits(2 * m, rng);
        } while (d.f1.none());
        d.bits = random_bits(2 * m - 1, rng);
        return d;
    };
    std::vector<BitVector> rows = build_symplectic(n, draw);
    return from_symplectic(rows, random_bits(2 * n, rng));
}

CliffordElement clifford_from_index(std::size_t n, std::uint64_t index) {
    if (n == 0) throw SizeMismatch("clifford_from_index: n must be positive");
    if (index >= clifford_group_order(n)) throw std::out_of_range("clifford_from_index: index out of range");
    BitVector signs = bits_of(index & ((std::uint64_t{1} << (2 * n)) - 1), 2 * n);
    std::uint64_t rest = index >> (2 * n);
    DrawSource draw = [&rest](std::size_t m) {
        const std::size_t nn = 2 * m;
        const std::uint64_t s = (std::uint64_t{1} << nn) - 1;
        LevelDraw d;
        d.f1 = bits_of(rest % s + 1, nn);
        rest /= s;
        d.bits = bits_of(rest & ((std::uint64_t{1} << (nn - 1)) - 1), nn - 1);
        rest >>= nn - 1;
        return d;
    };
    return from_symplectic(build_symplectic(n, draw), signs);
}

void apply_clifford(Tableau& t, const CliffordElement& u, std::size_t offset) {
    const std::size_t n = u.n_qubits();
    const std::size_t total = t.n_qubits();
    if (offset + n > total) throw SizeMismatch("apply_clifford: sector out of range");
    auto update = [&](PauliOp& row, bool keep_phase) {
        if (n == total) {
            row = u.conjugate(row);
        } else {
            PauliOp local = u.conjugate(restrict_to(row, offset, n));
            row.x().assign_slice(offset, local.x());
            row.z().assign_slice(offset, local.z());
            row.set_phase_exp(row.phase_exp() + local.phase_exp());
        }
        if (!keep_phase) row.set_phase_exp(0);
    };
    for (std::size_t i = 0; i < total; ++i) {
        update(t.stabilizer_row(i), i < t.num_active());
        update(t.destabilizer_row(i), false);
    }
}

}  // namespace lst
