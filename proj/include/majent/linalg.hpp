// Copyright 2026 The majent Authors
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

/**
 * @file
 * Small dense complex linear algebra: Kronecker products and a deterministic
 * Hermitian eigensolver (cyclic complex Jacobi).
 */
#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace majent {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Hermiticity tolerance for operators supplied from outside.
inline constexpr double kHermitianTol = 1e-10;

struct HermitianEigen {
    /// Eigenvalues, nonincreasing.
    std::vector<double> values;
    /// Orthonormal eigenvectors as columns, in the order of `values`.
    ComplexMatrix vectors;
};

/// max |M - M^†| over entries.
double hermiticity_defect(const ComplexMatrix& m);

/// Eigendecomposition of a Hermitian matrix.
///
/// Eigenvectors are phase-fixed: inside a degenerate cluster the basis is
/// obtained by Gram-Schmidt on the projections of the coordinate vectors
/// (largest projection first, lowest index on ties), and an isolated
/// eigenvector has its largest component real and positive. The output is a
/// deterministic function of the input.
///
/// Throws std::invalid_argument if `m` is not square or its hermiticity
/// defect exceeds `herm_tol * max(1, max|M_ij|)`.
HermitianEigen eig_hermitian(const ComplexMatrix& m, double herm_tol = kHermitianTol);

/// Eigenvector of the largest eigenvalue, with the same phase convention.
ComplexVector top_eigenvector(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

}  // namespace majent
