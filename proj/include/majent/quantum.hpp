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
 * Finite-dimensional quantum states and measurements.
 *
 * Multipartite spaces are described by an ordered list of party dimensions.
 * Party 0 is the slowest (most significant) tensor index: the basis state
 * |i_0>|i_1>...|i_{f-1}> sits at index ((i_0 * d_1 + i_1) * d_2 + ...).
 */
#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "majent/linalg.hpp"
#include "majent/probvec.hpp"

namespace majent {

using Dims = std::vector<int>;

/// Product of the party dimensions; throws on an empty list or a nonpositive entry.
int total_dim(const Dims& dims);

/// Unit-norm state vector (norm within 1e-12).
class PureState {
public:
    PureState(ComplexVector amplitudes, Dims dims);
    explicit PureState(ComplexVector amplitudes);

    /// Rescales `amplitudes` to unit norm first.
    static PureState normalized(ComplexVector amplitudes, Dims dims);
    static PureState basis(int index, Dims dims);

    const ComplexVector& amplitudes() const noexcept { return amps_; }
    const Dims& dims() const noexcept { return dims_; }
    int dim() const noexcept { return static_cast<int>(amps_.size()); }

    /// |psi><psi|
    ComplexMatrix projector() const;

private:
    ComplexVector amps_;
    Dims dims_;
};

/// Hermitian, positive semidefinite, unit-trace matrix with party dimensions.
///
/// Construction tolerates a hermiticity defect, trace error and negative
/// eigenvalues up to 1e-10 each; the stored matrix is symmetrized,
/// renormalized and, when needed, projected onto the PSD cone. A valid input
/// passes through unchanged, so serialization round trips are exact.
class DensityMatrix {
public:
    DensityMatrix(ComplexMatrix m, Dims dims);
    explicit DensityMatrix(ComplexMatrix m);

    static DensityMatrix from_pure(const PureState& psi);
    static DensityMatrix maximally_mixed(Dims dims);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    const Dims& dims() const noexcept { return dims_; }
    int dim() const noexcept { return static_cast<int>(m_.rows()); }
    int parties() const noexcept { return static_cast<int>(dims_.size()); }

    /// Eigenvalues in nonincreasing order.
    const ProbVec& spectrum() const noexcept { return spectrum_; }

private:
    ComplexMatrix m_;
    Dims dims_;
    ProbVec spectrum_{1.0};
};

/// Generalized measurement: positive elements summing to the identity
/// (both within 1e-10).
class Povm {
public:
    Povm(std::string label, std::vector<ComplexMatrix> elements);

    const std::string& label() const noexcept { return label_; }
    const std::vector<ComplexMatrix>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    int dim() const noexcept { return static_cast<int>(elements_.front().rows()); }

    /// True when every element is a projector of rank one.
    bool is_rank1_projective(double tol = 1e-9) const;

private:
    std::string label_;
    std::vector<ComplexMatrix> elements_;
};

/// Hermitian observable with its spectrum partitioned into measurement bins.
struct Observable {
    ComplexMatrix matrix;
    /// Each bin lists eigenvalues (matched within the binning tolerance).
    std::vector<std::vector<double>> bins;

    /// One singleton bin per distinct eigenvalue, in decreasing order.
    static Observable maximal(const ComplexMatrix& matrix, double tol = 1e-9);
};

/// Distinct eigenvalues of a Hermitian matrix (within tol), decreasing.
std::vector<double> distinct_eigenvalues(const ComplexMatrix& m, double tol = 1e-9);

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
PureState tensor(const PureState& a, const PureState& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on the parties listed in `keep` (kept in their original order).
/// `keep` must be a nonempty proper subset of the party indices.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// Outcome probabilities tr[E_a rho].
ProbVec born_probs(const Povm& m, const DensityMatrix& rho);
/// Outcome probabilities <psi|E_a|psi>.
ProbVec born_probs(const Povm& m, const PureState& psi);

/// One projector per bin. Throws if a bin matches no eigenvalue or an
/// eigenvalue falls in no bin (or in two).
Povm projective_from_observable(const Observable& o, double tol = 1e-9, std::string label = "");

/// Rank-one projective measurement onto the columns of a unitary.
Povm basis_measurement(const ComplexMatrix& basis_columns, std::string label);
Povm basis_measurement(std::span<const PureState> basis, std::string label);
Povm computational_basis_measurement(int dim);

/// Generalized Bell basis |B_{mn}> = d^{-1/2} Σ_j e^{2πi jn/d} |j>|j+m mod d>,
/// listed at index m*d + n. Element 0 is d^{-1/2} Σ_j |jj>.
std::vector<PureState> bell_basis(int d);
Povm bell_measurement(int d);

/// Singular values of the dA x dB amplitude matrix, decreasing.
std::vector<double> schmidt_coefficients(const PureState& psi, int dA, int dB);

/// (1-q)/d^2 * 1 + q |B_0><B_0| on d x d.
DensityMatrix werner(int d, double q);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
/// Maximal measurements of sigma_x, sigma_y, sigma_z (outcome +1 first).
std::vector<Povm> pauli_measurements();

/// Haar-random pure state (normalized complex Gaussian amplitudes).
PureState random_pure_state(const Dims& dims, std::mt19937_64& rng);
/// Random mixed state G G^† / tr from a dim x rank complex Gaussian G.
DensityMatrix random_density_matrix(const Dims& dims, std::mt19937_64& rng, int rank = 0);
/// Mixture of `terms` random pure product states with random weights.
DensityMatrix random_separable_state(const Dims& dims, int terms, std::mt19937_64& rng);

}  // namespace majent
