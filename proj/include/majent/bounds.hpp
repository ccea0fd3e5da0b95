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
 * Majorization uncertainty bounds of a measurement set.
 *
 * For measurements X, Y, ..., Z the joint outcome vector of a state is the
 * outer product of the individual Born vectors. Its supremum over all states
 * (or over separable states) is assembled from the cumulative maxima
 *
 *   mu_i = max over states of (sum of the i largest joint probabilities),
 *
 * which are attained on pure states (pure product states in the separable
 * case). Each mu_i is found by a multi-start fixed-point iteration: for the
 * current state pick the i largest outcome tuples, form the weighted operator
 *
 *   W = Σ_k Σ_{t in S} (Π_{l≠k} p^l_{t_l}) E^k_{t_k}
 *
 * and move to its top eigenvector; in the separable case the update is made
 * one party at a time on the operator contracted with the other factors.
 * A stationary point satisfies W|ψ> = <ψ|W|ψ> |ψ>.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "majent/probvec.hpp"
#include "majent/quantum.hpp"

namespace majent {

/// Measurements on a common space with declared party structure.
class MeasurementSet {
public:
    /// `dims` defaults to a single party of the measurements' dimension.
    explicit MeasurementSet(std::vector<Povm> povms, Dims dims = {});

    const std::vector<Povm>& povms() const noexcept { return povms_; }
    const Dims& dims() const noexcept { return dims_; }
    int dim() const noexcept { return povms_.front().dim(); }
    /// Number of joint outcome tuples (product of the outcome counts).
    std::size_t outcome_count() const noexcept;

private:
    std::vector<Povm> povms_;
    Dims dims_;
};

struct OptimizerConfig {
    int restarts = 64;
    int max_iters = 500;
    double tol_fp = 1e-10;
    std::uint64_t seed = 20260101;
    /// Exhaustive index-set verification runs when outcome_count() is at most this.
    std::size_t exhaustive_limit = 12;

    void validate() const;
};

struct ComponentResult {
    double value = 0.0;
    PureState witness = PureState::basis(0, Dims{1});
    bool converged = false;
    /// Stationarity residual at the witness.
    double residual = 0.0;
};

struct BoundResult {
    ProbVec bound{1.0};
    /// Cumulative sequence after monotone and concave repair; bound = differences of mu.
    std::vector<double> mu;
    /// Optimizer maxima before repair.
    std::vector<double> mu_raw;
    std::vector<PureState> witnesses;
    std::vector<bool> converged;
};

ProbVec joint_probs(const MeasurementSet& ms, const DensityMatrix& rho);
ProbVec joint_probs(const MeasurementSet& ms, const PureState& psi);

/// mu_i over all pure states, 1 <= i <= outcome_count().
ComponentResult mu_sup_component(const MeasurementSet& ms, std::size_t i, const OptimizerConfig& cfg);
/// mu_i over pure product states of ms.dims().
ComponentResult mu_sep_component(const MeasurementSet& ms, std::size_t i, const OptimizerConfig& cfg);

BoundResult sup_all_states(const MeasurementSet& ms, const OptimizerConfig& cfg);
BoundResult sup_separable(const MeasurementSet& ms, const OptimizerConfig& cfg);
BoundResult sup_separable(const MeasurementSet& ms, const Dims& dims, const OptimizerConfig& cfg);

/// Largest squared Schmidt coefficient of a bipartite state.
double max_product_overlap(const PureState& psi, const Dims& dims);

/// ||W psi - <psi|W|psi> psi|| for the i largest tuples at psi.
double stationarity_residual(const MeasurementSet& ms, std::size_t i, const PureState& psi);

}  // namespace majent
