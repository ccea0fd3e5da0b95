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
 * Schur-concave disorder measures on probability vectors. Natural logarithms
 * are used throughout.
 *
 *   Shannon      H(p)   = -Σ p ln p
 *   Tsallis(r)   S_r(p) = (1 - Σ p^r) / (r - 1)
 *   Renyi(r)     R_r(p) = ln(Σ p^r) / (1 - r)
 *
 * Order 1 of either family resolves to Shannon. Tsallis of infinite order is
 * kept as a distinguished value with no finite evaluation; the detectors
 * replace it by the comparison of largest entries.
 */
#pragma once

#include <limits>
#include <string>
#include <string_view>

#include "majent/probvec.hpp"

namespace majent {

class EntropyMeasure {
public:
    enum class Kind { Shannon, Tsallis, Renyi };

    static EntropyMeasure shannon() { return {Kind::Shannon, 1.0}; }
    /// order > 0; order == 1 gives Shannon, order == +inf gives the limiting measure.
    static EntropyMeasure tsallis(double order);
    static EntropyMeasure tsallis_inf() { return tsallis(std::numeric_limits<double>::infinity()); }
    /// order > 0; order == 1 gives Shannon.
    static EntropyMeasure renyi(double order);

    /// Accepts "shannon", "tsallis:<r>", "tsallis:inf", "renyi:<r>".
    static EntropyMeasure parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    double order() const noexcept { return order_; }
    bool is_infinite_order() const noexcept;

    std::string name() const;

    friend bool operator==(const EntropyMeasure&, const EntropyMeasure&) = default;

private:
    EntropyMeasure(Kind kind, double order) : kind_(kind), order_(order) {}

    Kind kind_;
    double order_;
};

/// Value of the measure. Throws std::domain_error for Tsallis of infinite order.
double eval(const EntropyMeasure& m, const ProbVec& v);

}  // namespace majent
