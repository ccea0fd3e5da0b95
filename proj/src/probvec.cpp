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

#include "majent/probvec.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace majent {

ProbVec::ProbVec(std::initializer_list<double> entries)
    : ProbVec(std::vector<double>(entries)) {}

ProbVec::ProbVec(std::vector<double> entries) : p_(std::move(entries)) {
    if (p_.empty()) {
        throw std::invalid_argument("ProbVec: dimension must be at least 1");
    }
    for (double& x : p_) {
        if (!std::isfinite(x) || x <= -kEpsNum) {
            throw std::invalid_argument("ProbVec: negative or non-finite entry");
        }
        if (x < 0.0) x = 0.0;
    }
    const double sum = std::accumulate(p_.begin(), p_.end(), 0.0);
    if (std::abs(sum - 1.0) > kEpsNum) {
        throw std::invalid_argument("ProbVec: entries must sum to 1, got " + std::to_string(sum));
    }
    if (sum != 1.0) {
        for (double& x : p_) x /= sum;
    }
}

ProbVec ProbVec::point_mass(std::size_t dim) {
    std::vector<double> v(dim, 0.0);
    if (dim > 0) v[0] = 1.0;
    return ProbVec(std::move(v));
}

ProbVec ProbVec::uniform(std::size_t dim) {
    return ProbVec(std::vector<double>(dim, dim == 0 ? 0.0 : 1.0 / static_cast<double>(dim)));
}

double ProbVec::max_entry() const { return *std::max_element(p_.begin(), p_.end()); }

ProbVec ProbVec::padded(std::size_t dim) const {
    if (dim <= p_.size()) return *this;
    std::vector<double> v = p_;
    v.resize(dim, 0.0);
    return ProbVec(std::move(v));
}

std::string to_string(MajOrder order) {
    switch (order) {
        case MajOrder::FirstMajorized: return "first-majorized";
        case MajOrder::SecondMajorized: return "second-majorized";
        case MajOrder::Equal: return "equal";
        case MajOrder::Incomparable: return "incomparable";
    }
    return "unknown";
}

ProbVec sort_desc(const ProbVec& v) {
    std::vector<double> s(v.begin(), v.end());
    std::stable_sort(s.begin(), s.end(), std::greater<>());
    return ProbVec(std::move(s));
}

std::vector<double> partial_sums(const ProbVec& v) {
    if (!std::is_sorted(v.begin(), v.end(), std::greater<>())) {
        throw std::invalid_argument("partial_sums: input must be sorted in descending order");
    }
    std::vector<double> out(v.size());
    std::partial_sum(v.begin(), v.end(), out.begin());
    return out;
}

std::vector<double> sorted_partial_sums(const ProbVec& v, std::size_t dim) {
    std::vector<double> out = partial_sums(sort_desc(v));
    // Trailing zeros keep the last partial sum.
    out.resize(std::max(dim, out.size()), out.back());
    return out;
}

namespace {

bool dominated(std::span<const double> lo, std::span<const double> hi, double tol) {
    for (std::size_t j = 0; j < lo.size(); ++j) {
        if (lo[j] > hi[j] + tol) return false;
    }
    return true;
}

std::size_t max_dim(std::span<const ProbVec> set) {
    std::size_t d = 0;
    for (const auto& v : set) d = std::max(d, v.size());
    return d;
}

}  // namespace

MajOrder compare(const ProbVec& a, const ProbVec& b, double tol) {
    const std::size_t d = std::max(a.size(), b.size());
    const auto sa = sorted_partial_sums(a, d);
    const auto sb = sorted_partial_sums(b, d);
    const bool a_below = dominated(sa, sb, tol);
    const bool b_below = dominated(sb, sa, tol);
    if (a_below && b_below) return MajOrder::Equal;
    if (a_below) return MajOrder::FirstMajorized;
    if (b_below) return MajOrder::SecondMajorized;
    return MajOrder::Incomparable;
}

bool majorized_by(const ProbVec& a, const ProbVec& b, double tol) {
    const auto order = compare(a, b, tol);
    return order == MajOrder::FirstMajorized || order == MajOrder::Equal;
}

bool is_uncertain(const ProbVec& v) { return v.max_entry() < 1.0 - kEpsNum; }

ProbVec outer(const ProbVec& a, const ProbVec& b) {
    std::vector<double> out;
    out.reserve(a.size() * b.size());
    for (double x : a) {
        for (double y : b) out.push_back(x * y);
    }
    return ProbVec(std::move(out));
}

ProbVec outer(std::span<const ProbVec> factors) {
    if (factors.empty()) throw std::invalid_argument("outer: no factors");
    ProbVec acc = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) acc = outer(acc, factors[k]);
    return acc;
}

ProbVec infimum(std::span<const ProbVec> set) {
    if (set.empty()) throw std::invalid_argument("infimum: empty set");
    const std::size_t d = max_dim(set);
    std::vector<double> mu(d, 1.0);
    for (const auto& v : set) {
        const auto s = sorted_partial_sums(v, d);
        for (std::size_t j = 0; j < d; ++j) mu[j] = std::min(mu[j], s[j]);
    }
    // The pointwise minimum of concave sequences is concave.
    return from_cumulative(mu);
}

ProbVec supremum(std::span<const ProbVec> set) {
    if (set.empty()) throw std::invalid_argument("supremum: empty set");
    const std::size_t d = max_dim(set);
    std::vector<double> mu(d, 0.0);
    for (const auto& v : set) {
        const auto s = sorted_partial_sums(v, d);
        for (std::size_t j = 0; j < d; ++j) mu[j] = std::max(mu[j], s[j]);
    }
    return from_cumulative(concave_majorant(mu));
}

std::vector<double> concave_majorant(std::span<const double> mu) {
    const std::size_t n = mu.size();
    if (n == 0) return {};
    // Points (j, y_j) for j = 0..n with y_0 = 0 and y_n = 1.
    std::vector<double> y(n + 1);
    y[0] = 0.0;
    for (std::size_t j = 1; j < n; ++j) y[j] = std::clamp(mu[j - 1], 0.0, 1.0);
    y[n] = 1.0;

    // Upper hull by monotone chain; x coordinates are the indices.
    std::vector<std::size_t> hull;
    for (std::size_t j = 0; j <= n; ++j) {
        while (hull.size() >= 2) {
            const std::size_t i0 = hull[hull.size() - 2];
            const std::size_t i1 = hull.back();
            // Drop i1 when it lies on or below the chord i0 -> j.
            const double cross = (y[i1] - y[i0]) * static_cast<double>(j - i0) -
                                 (y[j] - y[i0]) * static_cast<double>(i1 - i0);
            if (cross <= 0.0) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(j);
    }

    std::vector<double> out(n);
    std::size_t seg = 0;
    for (std::size_t j = 1; j <= n; ++j) {
        while (hull[seg + 1] < j) ++seg;
        const std::size_t x0 = hull[seg];
        const std::size_t x1 = hull[seg + 1];
        if (j == x1) {
            out[j - 1] = y[x1];
        } else {
            const double t = static_cast<double>(j - x0) / static_cast<double>(x1 - x0);
            out[j - 1] = y[x0] + t * (y[x1] - y[x0]);
        }
    }
    return out;
}

ProbVec from_cumulative(std::span<const double> mu) {
    if (mu.empty()) throw std::invalid_argument("from_cumulative: empty sequence");
    std::vector<double> p(mu.size());
    double prev = 0.0;
    for (std::size_t j = 0; j < mu.size(); ++j) {
        // Steps within a few ulps of 1 are rounding noise of either sign.
        const double step = mu[j] - prev;
        p[j] = step > 8 * std::numeric_limits<double>::epsilon() ? step : 0.0;
        prev = mu[j];
    }
    return ProbVec(std::move(p));
}

}  // namespace majent
