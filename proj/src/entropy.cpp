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

#include "majent/entropy.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace majent {

namespace {

void check_order(double order) {
    if (std::isnan(order) || order <= 0.0) {
        throw std::invalid_argument("entropy order must be positive");
    }
}

double parse_order(std::string_view text) {
    if (text == "inf" || text == "infinity") return std::numeric_limits<double>::infinity();
    double value = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw std::invalid_argument("bad entropy order '" + std::string(text) + "'");
    }
    return value;
}

// Σ p^r, with Neumaier summation for large orders where 1 - Σ p^r cancels.
double power_sum(const ProbVec& v, double r) {
    double sum = 0.0;
    double comp = 0.0;
    const bool compensated = r > 20.0;
    for (double p : v) {
        if (p <= 0.0) continue;
        const double term = std::pow(p, r);
        if (!compensated) {
            sum += term;
            continue;
        }
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term)) {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

double shannon_value(const ProbVec& v) {
    double h = 0.0;
    for (double p : v) {
        if (p > 0.0) h -= p * std::log(p);
    }
    return h;
}

}  // namespace

EntropyMeasure EntropyMeasure::tsallis(double order) {
    check_order(order);
    if (order == 1.0) return shannon();
    return {Kind::Tsallis, order};
}

EntropyMeasure EntropyMeasure::renyi(double order) {
    check_order(order);
    if (order == 1.0) return shannon();
    if (std::isinf(order)) throw std::invalid_argument("Renyi order must be finite");
    return {Kind::Renyi, order};
}

EntropyMeasure EntropyMeasure::parse(std::string_view text) {
    if (text == "shannon") return shannon();
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("unknown entropy measure '" + std::string(text) + "'");
    }
    const auto family = text.substr(0, colon);
    const double order = parse_order(text.substr(colon + 1));
    if (family == "tsallis") return tsallis(order);
    if (family == "renyi") return renyi(order);
    throw std::invalid_argument("unknown entropy family '" + std::string(family) + "'");
}

bool EntropyMeasure::is_infinite_order() const noexcept {
    return kind_ == Kind::Tsallis && std::isinf(order_);
}

std::string EntropyMeasure::name() const {
    switch (kind_) {
        case Kind::Shannon: return "shannon";
        case Kind::Tsallis:
            if (is_infinite_order()) return "tsallis:inf";
            break;
        case Kind::Renyi: break;
    }
    std::ostringstream os;
    os << (kind_ == Kind::Tsallis ? "tsallis:" : "renyi:") << order_;
    return os.str();
}

double eval(const EntropyMeasure& m, const ProbVec& v) {
    switch (m.kind()) {
        case EntropyMeasure::Kind::Shannon:
            return shannon_value(v);
        case EntropyMeasure::Kind::Tsallis: {
            if (m.is_infinite_order()) {
                throw std::domain_error("Tsallis entropy of infinite order has no finite value");
            }
            const double r = m.order();
            return std::max(0.0, (1.0 - power_sum(v, r)) / (r - 1.0));
        }
        case EntropyMeasure::Kind::Renyi: {
            const double r = m.order();
            return std::max(0.0, std::log(power_sum(v, r)) / (1.0 - r));
        }
    }
    return 0.0;
}

}  // namespace majent
