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

#include "lst/dense.h"

namespace lst {

/// V[A] = E_W sum_b Pi_b Tr(M^-1(A) Pi_b)^2 over the full n-qubit Clifford group, with
/// Pi_b = W |b><b| W^dagger and M^-1(X) = (2^n + 1) X - Tr(X) 1. The group is enumerated
/// exhaustively, so n is limited to 1 or 2. `a` should be Hermitian.
DenseMatrix<double> empirical_variance_operator(std::size_t n_qubits, const DenseMatrix<double>& a);

/// V[P O P] for a projector P and an observable O.
DenseMatrix<double> empirical_variance_operator(std::size_t n_qubits, const DenseMatrix<double>& projector,
                                                const DenseMatrix<double>& observable);

/// (2d - 2)/(d + 2) (P + 1) when `with_observable` is false, (2d + 2)/(d + 2) (P + 1) otherwise.
DenseMatrix<double> variance_operator_closed_form(std::size_t n_qubits, const DenseMatrix<double>& projector,
                                                  bool with_observable);

}  // namespace lst
