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
 * Probability vectors, the majorization partial order and the lattice
 * operations (infimum, supremum) on it.
 *
 * a ≺ b ("a is majorized by b", a is more disordered than b) iff every
 * partial sum of the descending rearrangement of a is at most the matching
 * partial sum of b. Vectors of different length are compared after padding
 * the shorter one with trailing zeros.
 */
#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace majent {

/// Numerical slack used for analytic inputs.
inline constexpr double kEpsNum = 1e-12;

/// A finite probability vector. Immutable after construction.
///
/// Entries in (-kEpsNum, 0) are clamped to zero and the vector is rescaled to
/// unit sum; more negative entries, an empty vector or a sum further than
/// kEpsNum from one are rejected with std::invalid_argument.
class ProbVec {
public:
    ProbVec(std::initializer_list<double> entries);
    explicit ProbVec(std::vector<double> entries);

    /// The point mass (1, 0, ..., 0) of the given dimension.
    static ProbVec point_mass(std::size_t dim);
    /// The uniform vector (1/d, ..., 1/d).
    static ProbVec uniform(std::size_t dim);

    std::size_t size() const noexcept { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }
    std::span<const double> entries() const noexcept { return p_; }
    double max_entry() const;

    auto begin() const noexcept { return p_.begin(); }
    auto end() const noexcept { return p_.end(); }

    /// Copy extended with trailing zeros up to `dim` (never truncates).
    ProbVec padded(std::size_t dim) const;

    friend bool operator==(const ProbVec&, const ProbVec&) = default;

private:
    std::vector<double> p_;
};

enum class MajOrder {
    FirstMajorized,   // a ≺ b
    SecondMajorized,  // b ≺ a
    Equal,
    Incomparable,
};

std::string to_string(MajOrder order);

/// Stable descending sort.
ProbVec sort_desc(const ProbVec& v);

/// Cumulative sums of a vector already sorted in descending order.
/// Throws std::invalid_argument if `v` is not sorted.
std::vector<double> partial_sums(const ProbVec& v);

/// Partial sums of sort_desc(v) padded to `dim` entries.
std::vector<double> sorted_partial_sums(const ProbVec& v, std::size_t dim);

MajOrder compare(const ProbVec& a, const ProbVec& b, double tol = kEpsNum);

/// a ≺ b within `tol`.
bool majorized_by(const ProbVec& a, const ProbVec& b, double tol = kEpsNum);

/// True iff v is strictly majorized by the point mass, i.e. max entry < 1 - kEpsNum.
bool is_uncertain(const ProbVec& v);

/// Joint distribution of independent outcomes: entry i*|b|+j is a_i * b_j.
ProbVec outer(const ProbVec& a, const ProbVec& b);
ProbVec outer(std::span<const ProbVec> factors);

ProbVec infimum(std::span<const ProbVec> set);
ProbVec supremum(std::span<const ProbVec> set);

/// Least concave majorant of the points (j, mu[j-1]), j = 1..n, together with
/// the fixed endpoints (0, 0) and (n, 1). Returns the majorant at j = 1..n.
std::vector<double> concave_majorant(std::span<const double> mu);

/// Adjacent differences of a concave cumulative sequence mu (mu_0 = 0 implied).
ProbVec from_cumulative(std::span<const double> mu);

}  // namespace majent
