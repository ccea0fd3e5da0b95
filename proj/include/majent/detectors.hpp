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
 * Majorization entanglement detectors and their scalar corollaries.
 *
 * Every detector is a necessary condition for separability: it either
 * certifies entanglement or stays silent. A verdict is never "separable".
 */
#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "majent/bounds.hpp"
#include "majent/entropy.hpp"
#include "majent/probvec.hpp"
#include "majent/quantum.hpp"

namespace majent {

/// Detection tolerance for closed-form bounds.
inline constexpr double kTolAnalytic = 1e-9;
/// Detection tolerance for optimizer-produced bounds.
inline constexpr double kTolOptimizer = 1e-4;

enum class Status { Entangled, Inconclusive };

std::string to_string(Status s);

struct Verdict {
    Status status = Status::Inconclusive;
    /// First (1-based) partial-sum index where lhs exceeds rhs by more than tol.
    std::optional<std::size_t> violated_index;
    /// Largest excess of lhs over rhs (partial sums, or the scalar difference
    /// for corollaries). Entangled iff margin > tol.
    double margin = 0.0;
    ProbVec lhs{1.0};
    ProbVec rhs{1.0};

    bool entangled() const noexcept { return status == Status::Entangled; }
};

/// Majorization test lhs ≺ rhs turned into a verdict.
Verdict majorization_verdict(const ProbVec& lhs, const ProbVec& rhs, double tol);

Verdict theorem1_detect(const DensityMatrix& sigma, const Povm& m, const ProbVec& sep_bound,
                        double tol = kTolAnalytic);

/// Rank-1 projective measurement onto the eigenvectors of sigma, largest
/// eigenvalue first. A degenerate d x d state that is diagonal in the
/// generalized Bell basis gets the Bell basis instead; the maximally mixed
/// state gets the computational basis.
Povm optimal_measurement(const DensityMatrix& sigma);

/// Separable bound of the generalized Bell measurement: d entries 1/d, then zeros.
ProbVec bell_separable_bound(int d);

using ObservablePair = std::pair<Observable, Observable>;

/// (sigma_x, sigma_x), (sigma_y, sigma_y), (sigma_z, sigma_z) with maximal bins.
std::vector<ObservablePair> pauli_pairs();

/// Closed-form supremum of the joint vector of three mutually unbiased qubit measurements.
ProbVec pauli3_bound();

/// Joint vector of the product observables A⊗B, each binned by distinct
/// product eigenvalue.
ProbVec product_statistics(const DensityMatrix& sigma, std::span<const ObservablePair> pairs);

Verdict theorem2_detect(const DensityMatrix& sigma, std::span<const ObservablePair> pairs,
                        const ProbVec& single_sys_bound, double tol = kTolAnalytic);

struct SubsystemDisorder {
    /// Spectrum of every proper reduced state, keyed by the kept parties.
    std::map<std::vector<int>, ProbVec> subsystem_spectra;
    /// Infimum of the subsystem spectra.
    ProbVec lambda_inf{1.0};
};

SubsystemDisorder subsystem_disorder(const DensityMatrix& rho);

std::pair<Verdict, SubsystemDisorder> theorem3_detect(const DensityMatrix& rho, double tol = kTolAnalytic);

enum class Corollary { C1, C2, C3 };

/// C1 and C3 take one lhs vector; C2 takes one vector per product observable
/// and scores their joint (outer product) vector. Entangled iff
/// G(rhs) - G(lhs) > tol. For Tsallis of infinite order the largest entries
/// are compared instead.
Verdict corollary_detect(const EntropyMeasure& g, std::span<const ProbVec> lhs, const ProbVec& rhs,
                         Corollary which, double tol = kTolAnalytic);

/// Spectrum of the Werner state: q + (1-q)/d^2 once, (1-q)/d^2 repeated d^2 - 1 times.
ProbVec werner_spectrum(int d, double q);

enum class ThresholdMethod { Analytic, Bisection };

struct ThresholdPoint {
    int d = 2;
    EntropyMeasure measure = EntropyMeasure::shannon();
    double q_star = 0.0;
    ThresholdMethod method = ThresholdMethod::Bisection;
};

/// Smallest Werner weight q at which the Tsallis corollary with the Bell
/// measurement fires. r >= 1; r = inf gives 1/(1+d) exactly.
ThresholdPoint tsallis_threshold(int d, double r);

/// Thresholds for every (d, r), ordered by d then by the listed orders.
std::vector<ThresholdPoint> werner_scan(std::span<const int> ds, std::span<const double> orders);

/// CSV with header d,order,q_star,method and "inf" for infinite order.
std::string scan_to_csv(std::span<const ThresholdPoint> points);

/// Supremum of Born vectors over rank-1 projective measurements, found by
/// ascending from random bases with plane rotations. Each rotation moves
/// the outcome vector up in the majorization order.
ProbVec estimate_spectrum(const DensityMatrix& rho, const OptimizerConfig& cfg);

}  // namespace majent
