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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lst/code.h"
#include "lst/errors.h"
#include "lst/estimator.h"
#include "lst/gate.h"
#include "lst/pauli.h"
#include "lst/tableau.h"

namespace lst {

/// Reference dense linear algebra for small registers. Qubit q is bit q of a basis index.
/// Every routine is templated on the real type; QuadReal gives the ~34 digits needed to
/// resolve p^6 corrections next to O(1) matrix entries.

#if defined(__SIZEOF_FLOAT128__)
using QuadReal = __float128;
#else
using QuadReal = long double;
#endif

inline constexpr std::size_t kMaxDenseQubits = 12;

/// Throws SizeMismatch above kMaxDenseQubits.
void check_dense_qubits(std::size_t n_qubits);

/// Minimal complex number that works for any Real, including __float128.
template <class Real>
struct Complex {
    Real re{0};
    Real im{0};

    Complex() = default;
    Complex(Real r, Real i = Real(0)) : re(r), im(i) {}

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }
    Complex& operator*=(Real s) {
        re *= s;
        im *= s;
        return *this;
    }
    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(Complex a, Real s) { return a *= s; }
    friend Complex operator*(Real s, Complex a) { return a *= s; }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

    Complex conj() const { return {re, -im}; }
    Real norm2() const { return re * re + im * im; }
    /// Multiplies by i^e.
    Complex times_i_power(int e) const {
        switch (e & 3) {
            case 0: return *this;
            case 1: return {-im, re};
            case 2: return {-re, -im};
            default: return {im, -re};
        }
    }
};

template <class Real>
Real abs_real(Real v) {
    return v < Real(0) ? -v : v;
}

/// Square complex matrix, row-major.
template <class Real>
class DenseMatrix {
   public:
    using Scalar = Complex<Real>;

    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static DenseMatrix identity(std::size_t dim) {
        DenseMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = Scalar(Real(1));
        return m;
    }

    std::size_t dim() const { return dim_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    std::span<Scalar> data() { return data_; }
    std::span<const Scalar> data() const { return data_; }

    DenseMatrix& operator+=(const DenseMatrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    DenseMatrix& operator-=(const DenseMatrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    DenseMatrix& operator*=(Real s) {
        for (auto& v : data_) v *= s;
        return *this;
    }
    DenseMatrix& operator*=(const Scalar& s) {
        for (auto& v : data_) v *= s;
        return *this;
    }
    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
    friend DenseMatrix operator*(DenseMatrix a, Real s) { return a *= s; }
    friend DenseMatrix operator*(Real s, DenseMatrix a) { return a *= s; }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        a.check_same(b);
        const std::size_t d = a.dim_;
        DenseMatrix out(d);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t k = 0; k < d; ++k) {
                const Scalar aik = a(i, k);
                if (aik.re == Real(0) && aik.im == Real(0)) continue;
                for (std::size_t j = 0; j < d; ++j) out(i, j) += aik * b(k, j);
            }
        }
        return out;
    }

    Scalar trace() const {
        Scalar t;
        for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    DenseMatrix adjoint() const {
        DenseMatrix out(dim_);
        for (std::size_t r = 0; r < dim_; ++r) {
            for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c).conj();
        }
        return out;
    }

    /// Largest entrywise |a - b|^2.
    Real max_sq_distance(const DenseMatrix& o) const {
        check_same(o);
        Real worst(0);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            Real d = (data_[i] - o.data_[i]).norm2();
            if (d > worst) worst = d;
        }
        return worst;
    }

    bool is_hermitian(Real tol) const { return max_sq_distance(adjoint()) <= tol * tol; }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

   private:
    void check_same(const DenseMatrix& o) const {
        if (o.dim_ != dim_) throw SizeMismatch("dense matrix dimensions differ");
    }

    std::size_t dim_ = 0;
    std::vector<Scalar> data_;
};

/// Action of a Pauli on basis states, P|j> = i^{exponent(j)} |j ^ x_mask>.
struct PauliAction {
    std::uint64_t x_mask = 0;
    std::uint64_t z_mask = 0;
    int phase = 0;  // i^phase * i^{x.z}

    explicit PauliAction(const PauliOp& op);

    /// Exponent e with P|j> = i^e |j ^ x_mask>.
    int exponent(std::uint64_t j) const { return phase + 2 * (std::popcount(z_mask & j) & 1); }
};

template <class Real>
DenseMatrix<Real> pauli_matrix(const PauliOp& op) {
    check_dense_qubits(op.n_qubits());
    const PauliAction act(op);
    const std::size_t d = std::size_t{1} << op.n_qubits();
    DenseMatrix<Real> m(d);
    for (std::uint64_t j = 0; j < d; ++j) {
        m(j ^ act.x_mask, j) = Complex<Real>(Real(1)).times_i_power(act.exponent(j));
    }
    return m;
}

/// P * m in O(d^2).
template <class Real>
DenseMatrix<Real> pauli_left(const PauliOp& op, const DenseMatrix<Real>& m) {
    const PauliAction act(op);
    const std::size_t d = m.dim();
    DenseMatrix<Real> out(d);
    for (std::uint64_t j = 0; j < d; ++j) {
        const int e = act.exponent(j);
        for (std::size_t c = 0; c < d; ++c) out(j ^ act.x_mask, c) = m(j, c).times_i_power(e);
    }
    return out;
}

/// m * P in O(d^2).
template <class Real>
DenseMatrix<Real> pauli_right(const DenseMatrix<Real>& m, const PauliOp& op) {
    const PauliAction act(op);
    const std::size_t d = m.dim();
    DenseMatrix<Real> out(d);
    for (std::uint64_t c = 0; c < d; ++c) {
        const int e = act.exponent(c);
        for (std::size_t r = 0; r < d; ++r) out(r, c) = m(r, c ^ act.x_mask).times_i_power(e);
    }
    return out;
}

/// Tr(m P) in O(d).
template <class Real>
Complex<Real> trace_with_pauli(const DenseMatrix<Real>& m, const PauliOp& op) {
    const PauliAction act(op);
    Complex<Real> t;
    for (std::uint64_t c = 0; c < m.dim(); ++c) t += m(c, c ^ act.x_mask).times_i_power(act.exponent(c));
    return t;
}

/// Tr(a b) in O(d^2).
template <class Real>
Complex<Real> trace_of_product(const DenseMatrix<Real>& a, const DenseMatrix<Real>& b) {
    Complex<Real> t;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) t += a(r, c) * b(c, r);
    }
    return t;
}

/// prod_j (1 + g_j) / 2 applied to m from the left.
template <class Real>
DenseMatrix<Real> project_left(const DenseMatrix<Real>& m, std::span<const PauliOp> generators) {
    DenseMatrix<Real> out = m;
    for (const PauliOp& g : generators) {
        out += pauli_left(g, out);
        out *= Real(0.5);
    }
    return out;
}

/// Pi m Pi with Pi = prod_j (1 + g_j) / 2 for commuting Hermitian g_j.
template <class Real>
DenseMatrix<Real> project_both(const DenseMatrix<Real>& m, std::span<const PauliOp> generators) {
    DenseMatrix<Real> out = project_left(m, generators);
    for (const PauliOp& g : generators) {
        out += pauli_right(out, g);
        out *= Real(0.5);
    }
    return out;
}

template <class Real>
DenseMatrix<Real> projector_matrix(std::size_t n_qubits, std::span<const PauliOp> generators) {
    check_dense_qubits(n_qubits);
    return project_left(DenseMatrix<Real>::identity(std::size_t{1} << n_qubits), generators);
}

/// Density matrix of a tableau: 2^-n prod over active stabilizers (1 + S_i).
template <class Real>
DenseMatrix<Real> stabilizer_state_matrix(const Tableau& t) {
    const std::size_t n = t.n_qubits();
    check_dense_qubits(n);
    std::vector<PauliOp> active;
    for (std::size_t i = 0; i < t.num_active(); ++i) active.push_back(t.stabilizer(i));
    DenseMatrix<Real> m = projector_matrix<Real>(n, active);
    m *= Real(1) / Real(std::uint64_t{1} << t.rank_deficit());
    return m;
}

template <class Real>
DenseMatrix<Real> pauli_sum_matrix(std::size_t n_qubits, const PauliSum& terms) {
    check_dense_qubits(n_qubits);
    DenseMatrix<Real> out(std::size_t{1} << n_qubits);
    for (const auto& [coefficient, op] : terms) {
        DenseMatrix<Real> p = pauli_matrix<Real>(op);
        p *= Real(coefficient);
        out += p;
    }
    return out;
}

/// Unitary matrix of one gate on an n-qubit register.
DenseMatrix<double> gate_matrix(std::size_t n_qubits, const GateOp& op);

/// rho -> (1 - p) rho + p/3 (X rho X + Y rho Y + Z rho Z) on one qubit.
template <class Real>
DenseMatrix<Real> depolarize(const DenseMatrix<Real>& rho, std::size_t n_qubits, std::size_t qubit, Real p) {
    if (qubit >= n_qubits) throw std::out_of_range("depolarize: qubit index out of range");
    DenseMatrix<Real> twirled(rho.dim());
    for (char c : {'X', 'Y', 'Z'}) {
        PauliOp op = PauliOp::single(n_qubits, qubit, c);
        twirled += pauli_right(pauli_left(op, rho), op);
    }
    DenseMatrix<Real> out = rho;
    out *= Real(1) - p;
    twirled *= p / Real(3);
    out += twirled;
    return out;
}

/// The encoded state after independent depolarizing noise of rate p on every qubit.
template <class Real>
DenseMatrix<Real> exact_noisy_state(const Tableau& encoded, Real p) {
    if (p < Real(0) || p > Real(1)) throw std::invalid_argument("exact_noisy_state: p outside [0, 1]");
    DenseMatrix<Real> rho = stabilizer_state_matrix<Real>(encoded);
    if (p == Real(0)) return rho;
    for (std::size_t q = 0; q < encoded.n_qubits(); ++q) rho = depolarize(rho, encoded.n_qubits(), q, p);
    return rho;
}

/// Encoded single-logical-qubit state Pi (1 + v.(Xbar, Ybar, Zbar)) / 2 of an [[n, 1]] code.
/// `bloch` need not be normalized; |v| = 1 gives a pure state.
template <class Real>
DenseMatrix<Real> encoded_bloch_state(const StabilizerCode& code, const Real (&bloch)[3]) {
    if (code.k != 1) throw SizeMismatch("encoded_bloch_state: code must encode one logical qubit");
    check_dense_qubits(code.n);
    const PauliOp lx = lift_logical(code, PauliOp::from_string("X"));
    const PauliOp ly = lift_logical(code, PauliOp::from_string("Y"));
    const PauliOp lz = lift_logical(code, PauliOp::from_string("Z"));
    const std::size_t d = std::size_t{1} << code.n;
    DenseMatrix<Real> m = DenseMatrix<Real>::identity(d);
    const PauliOp* ops[] = {&lx, &ly, &lz};
    for (int a = 0; a < 3; ++a) {
        DenseMatrix<Real> p = pauli_matrix<Real>(*ops[a]);
        p *= bloch[a];
        m += p;
    }
    m *= Real(0.5);
    return project_left(m, std::span<const PauliOp>(code.generators));
}

/// f(rho) = sum_p c_p rho^p with coefficients c_1, c_2, ...
template <class Real>
DenseMatrix<Real> matrix_polynomial(const DenseMatrix<Real>& rho, std::span<const double> coefficients) {
    DenseMatrix<Real> out(rho.dim());
    DenseMatrix<Real> power = rho;
    for (std::size_t p = 0; p < coefficients.size(); ++p) {
        if (p > 0) power = power * rho;
        if (coefficients[p] != 0.0) out += power * Real(coefficients[p]);
    }
    return out;
}

template <class Real>
struct DenseLstValue {
    Real numerator{0};
    Real denominator{0};
    Real ratio{0};
};

/// Tr(Pi f(rho) Pi O) / Tr(Pi f(rho) Pi) with O given densely. Throws ZeroDenominatorMean.
template <class Real>
DenseLstValue<Real> exact_lst_value(const DenseMatrix<Real>& rho, std::span<const PauliOp> code_generators,
                                    const DenseMatrix<Real>& observable, std::span<const double> coefficients) {
    const DenseMatrix<Real> projected = project_both(matrix_polynomial(rho, coefficients), code_generators);
    DenseLstValue<Real> v;
    v.numerator = trace_of_product(projected, observable).re;
    v.denominator = projected.trace().re;
    if (v.denominator == Real(0)) throw ZeroDenominatorMean("exact_lst_value: Tr(Pi f(rho) Pi) is zero");
    v.ratio = v.numerator / v.denominator;
    return v;
}

/// Same with O = sum_j c_j P_j.
template <class Real>
DenseLstValue<Real> exact_lst_value(const DenseMatrix<Real>& rho, std::span<const PauliOp> code_generators,
                                    const PauliSum& observable,
                                    std::span<const double> coefficients) {
    const DenseMatrix<Real> projected = project_both(matrix_polynomial(rho, coefficients), code_generators);
    DenseLstValue<Real> v;
    for (const auto& [coefficient, op] : observable) {
        v.numerator += Real(coefficient) * trace_with_pauli(projected, op).re;
    }
    v.denominator = projected.trace().re;
    if (v.denominator == Real(0)) throw ZeroDenominatorMean("exact_lst_value: Tr(Pi f(rho) Pi) is zero");
    v.ratio = v.numerator / v.denominator;
    return v;
}

/// Computational-basis outcome probabilities <j|rho|j>.
template <class Real>
std::vector<Real> born_probabilities(const DenseMatrix<Real>& rho) {
    std::vector<Real> out(rho.dim());
    for (std::size_t j = 0; j < rho.dim(); ++j) out[j] = rho(j, j).re;
    return out;
}

/// Positive semidefiniteness of a Hermitian matrix within `tol`, by an LDL^dagger sweep.
/// A pivot in [-tol, tol] is accepted only if its remaining column is also below tol.
template <class Real>
bool is_positive_semidefinite(DenseMatrix<Real> m, Real tol) {
    if (!m.is_hermitian(tol)) return false;
    const std::size_t d = m.dim();
    for (std::size_t k = 0; k < d; ++k) {
        const Real pivot = m(k, k).re;
        if (pivot < -tol) return false;
        if (pivot <= tol) {
            for (std::size_t i = k + 1; i < d; ++i) {
                if (m(i, k).norm2() > tol) return false;
            }
            continue;
        }
        for (std::size_t i = k + 1; i < d; ++i) {
            const Complex<Real> lik = m(i, k) * (Real(1) / pivot);
            if (lik.re == Real(0) && lik.im == Real(0)) continue;
            for (std::size_t j = k + 1; j < d; ++j) m(i, j) -= lik * m(k, j);
        }
    }
    return true;
}

/// Trace-one, Hermitian and PSD within `tol`.
template <class Real>
bool is_density_matrix(const DenseMatrix<Real>& rho, Real tol) {
    const Complex<Real> t = rho.trace();
    return abs_real(t.re - Real(1)) <= tol && abs_real(t.im) <= tol && is_positive_semidefinite(rho, tol);
}

template <class Real>
Real purity(const DenseMatrix<Real>& rho) {
    return trace_of_product(rho, rho).re;
}

}  // namespace lst
