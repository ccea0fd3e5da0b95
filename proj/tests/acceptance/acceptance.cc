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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails or exceeds its time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "majent/bounds.hpp"
#include "majent/detectors.hpp"
#include "oracles.hpp"

using namespace majent;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

const double kInf = std::numeric_limits<double>::infinity();

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

// Werner threshold of Theorem 1 with the Bell measurement.
Outcome theorem1_thresholds() {
    double worst = 0.0;
    for (int d = 2; d <= 5; ++d) {
        const auto m = bell_measurement(d);
        const auto bound = bell_separable_bound(d);
        const double q = oracle::bisect(
            [&](double x) { return theorem1_detect(werner(d, x), m, bound, kEpsNum).entangled(); });
        worst = std::max(worst, std::abs(q - 1.0 / (1 + d)));
    }
    return {worst <= 1e-9, "max |q* - 1/(1+d)| = " + sci(worst)};
}

Outcome pauli_bound() {
    const MeasurementSet ms(pauli_measurements());
    OptimizerConfig cfg;
    cfg.restarts = 64;
    const auto r = sup_all_states(ms, cfg);
    const double a = std::pow(1 + 1 / std::sqrt(3.0), 3);
    const double b = std::pow(1 + 1 / std::sqrt(2.0), 2);
    const double closed[] = {a / 8, (2 * b - a) / 8, (4 - b) / 8, (4 - b) / 8, 0, 0, 0, 0};
    const double reference[] = {0.490499, 0.238054, 0.135724, 0.135724, 0, 0, 0, 0};
    double dev_closed = 0.0;
    double dev_reference = 0.0;
    for (std::size_t k = 0; k < 8; ++k) {
        dev_closed = std::max(dev_closed, std::abs(r.bound[k] - closed[k]));
        dev_reference = std::max(dev_reference, std::abs(r.bound[k] - reference[k]));
    }
    return {dev_closed <= 1e-4 && dev_reference <= 1e-4,
            "max dev vs closed form " + sci(dev_closed) + ", vs reference decimals " + sci(dev_reference)};
}

Outcome theorem2_threshold() {
    const auto pairs = pauli_pairs();
    const double target = 1 / std::sqrt(3.0);
    const ProbVec closed = pauli3_bound();
    const double q_closed =
        oracle::bisect([&](double x) { return theorem2_detect(werner(2, x), pairs, closed).entangled(); });
    const ProbVec optimized = sup_all_states(MeasurementSet(pauli_measurements()), OptimizerConfig{}).bound;
    const double q_opt = oracle::bisect(
        [&](double x) { return theorem2_detect(werner(2, x), pairs, optimized, kTolOptimizer).entangled(); });
    const double e1 = std::abs(q_closed - target);
    const double e2 = std::abs(q_opt - target);
    return {e1 <= 1e-6 && e2 <= 1e-3, "closed-form bound dev " + sci(e1) + ", optimizer bound dev " + sci(e2)};
}

Outcome bell_separable() {
    double worst = 0.0;
    for (int d : {2, 3}) {
        const auto r = sup_separable(MeasurementSet({bell_measurement(d)}, Dims{d, d}), OptimizerConfig{});
        for (int j = 0; j < d * d; ++j) worst = std::max(worst, std::abs(r.bound[j] - (j < d ? 1.0 / d : 0.0)));
    }
    return {worst <= 1e-4, "max dev from (1/d,...,0) = " + sci(worst)};
}

Outcome tsallis_scan() {
    bool ok = true;
    std::string why;
    for (int d = 2; d <= 8; ++d) {
        if (tsallis_threshold(d, kInf).q_star != 1.0 / (1.0 + d)) {
            ok = false;
            why += " inf(d=" + std::to_string(d) + ")";
        }
        double prev = 2.0;
        for (double r : {1.0, 2.0, 5.0, kInf}) {
            const double q = tsallis_threshold(d, r).q_star;
            if (!(q < prev)) {
                ok = false;
                why += " order(d=" + std::to_string(d) + ")";
            }
            prev = q;
        }
    }
    const double e = std::abs(tsallis_threshold(2, 2).q_star - 1 / std::sqrt(3.0));
    if (e > 1e-8) {
        ok = false;
        why += " r=2";
    }
    return {ok, "q*(2,2) dev " + sci(e) + (why.empty() ? ", strict decrease in r for d=2..8" : "; failed:" + why)};
}

Outcome theorem3_thresholds() {
    double worst = 0.0;
    for (int d = 2; d <= 4; ++d) {
        const double q = oracle::bisect([&](double x) { return theorem3_detect(werner(d, x)).first.entangled(); });
        worst = std::max(worst, std::abs(q - 1.0 / (1 + d)));
    }
    return {worst <= 1e-6, "max |q* - 1/(1+d)| = " + sci(worst)};
}

// Least concave majorant through (0,0), the points and (n,1), by brute force.
std::vector<double> hull_oracle(const std::vector<double>& mu) {
    const std::size_t n = mu.size();
    std::vector<double> y(n + 1, 0.0);
    for (std::size_t j = 1; j <= n; ++j) y[j] = mu[j - 1];
    y[n] = 1.0;
    std::vector<double> out(n);
    for (std::size_t j = 1; j <= n; ++j) {
        double best = y[j];
        for (std::size_t a = 0; a <= j; ++a) {
            for (std::size_t b = j; b <= n; ++b) {
                if (a == b) continue;
                const double t = double(j - a) / double(b - a);
                best = std::max(best, y[a] + t * (y[b] - y[a]));
            }
        }
        out[j - 1] = best;
    }
    return out;
}

Outcome lattice_suite() {
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<int> dim(2, 8);
    std::uniform_int_distribution<int> count(2, 4);
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<ProbVec> set;
        const int k = count(rng);
        std::size_t n = 0;
        for (int j = 0; j < k; ++j) {
            set.push_back(oracle::random_probvec(dim(rng), rng, 0.2));
            n = std::max(n, set.back().size());
        }
        const ProbVec inf = infimum(set);
        const ProbVec sup = supremum(set);
        bool ok = true;
        for (const auto& p : set) ok = ok && oracle::precedes(inf, p) && oracle::precedes(p, sup);
        std::vector<double> lo(n, 1.0);
        std::vector<double> hi(n, 0.0);
        for (const auto& p : set) {
            const auto c = oracle::cumulative(oracle::raw(p), n);
            for (std::size_t j = 0; j < n; ++j) {
                lo[j] = std::min(lo[j], c[j]);
                hi[j] = std::max(hi[j], c[j]);
            }
        }
        // Tightness: inf attains the pointwise minimum, sup the concave hull of the maximum.
        const auto ci = oracle::cumulative(oracle::raw(inf), n);
        const auto cs = oracle::cumulative(oracle::raw(sup), n);
        const auto hull = hull_oracle(hi);
        for (std::size_t j = 0; j < n; ++j) {
            ok = ok && std::abs(ci[j] - lo[j]) <= 1e-12 && std::abs(cs[j] - hull[j]) <= 1e-12;
        }
        // Any other bound is comparable the right way.
        const ProbVec w = oracle::random_probvec(dim(rng), rng);
        std::vector<ProbVec> wider = set;
        wider.push_back(w);
        ok = ok && oracle::precedes(sup, supremum(wider)) && oracle::precedes(infimum(wider), inf);
        if (!ok) ++failures;
    }
    const std::vector<ProbVec> golden{ProbVec{0.45, 0.2, 0.2, 0.15}, ProbVec{0.4, 0.3, 0.3, 0}};
    const ProbVec g = supremum(golden);
    const double expected[] = {0.45, 0.275, 0.275, 0.0};
    double dev = 0.0;
    for (std::size_t j = 0; j < 4; ++j) dev = std::max(dev, std::abs(g[j] - expected[j]));
    return {failures == 0 && dev <= 1e-12,
            std::to_string(failures) + " of 1000 random cases failed; golden dev " + sci(dev)};
}

// Generalized Bell measurement of 3 x 3 compressed to the 2 x 3 subspace.
// Product states of 2 x 3 are product states of 3 x 3, so the d = 3 bound
// still holds.
Povm compressed_bell_2x3() {
    std::vector<ComplexMatrix> elements;
    for (const auto& b : bell_basis(3)) {
        ComplexVector v(6);
        for (int a = 0; a < 2; ++a) {
            for (int c = 0; c < 3; ++c) v(a * 3 + c) = b.amplitudes()(a * 3 + c);
        }
        elements.push_back(v * v.adjoint());
    }
    return Povm("bell3|2x3", elements);
}

Outcome soundness_suite() {
    std::mt19937_64 rng(500);
    std::uniform_int_distribution<int> terms(1, 10);
    const EntropyMeasure measures[] = {EntropyMeasure::shannon(),  EntropyMeasure::tsallis(1.5),
                                       EntropyMeasure::tsallis(2), EntropyMeasure::tsallis(5),
                                       EntropyMeasure::tsallis_inf(), EntropyMeasure::renyi(0.5),
                                       EntropyMeasure::renyi(2)};
    const auto bell2 = bell_measurement(2);
    const auto bell23 = compressed_bell_2x3();
    const auto pairs = pauli_pairs();
    int entangled = 0;
    int verdicts = 0;
    auto tally = [&](const Verdict& v) {
        ++verdicts;
        if (v.entangled()) ++entangled;
    };
    for (const Dims& dims : {Dims{2, 2}, Dims{2, 3}}) {
        const bool qubits = dims[1] == 2;
        const Povm& bell = qubits ? bell2 : bell23;
        const ProbVec bell_bound = bell_separable_bound(qubits ? 2 : 3);
        for (int trial = 0; trial < 500; ++trial) {
            const auto rho = random_separable_state(dims, terms(rng), rng);
            const ProbVec t1_lhs = born_probs(bell, rho);
            tally(majorization_verdict(t1_lhs, bell_bound, kTolAnalytic));
            auto [t3, sd] = theorem3_detect(rho);
            tally(t3);
            const ProbVec spectrum = rho.spectrum();
            std::vector<ProbVec> parts;
            if (qubits) {
                tally(theorem2_detect(rho, pairs, pauli3_bound()));
                for (const auto& p : pairs) parts.push_back(product_statistics(rho, std::span(&p, 1)));
            }
            for (const auto& g : measures) {
                tally(corollary_detect(g, std::span(&t1_lhs, 1), bell_bound, Corollary::C1));
                tally(corollary_detect(g, std::span(&spectrum, 1), sd.lambda_inf, Corollary::C3));
                if (qubits) tally(corollary_detect(g, parts, pauli3_bound(), Corollary::C2));
            }
        }
    }
    return {entangled == 0, std::to_string(entangled) + " Entangled of " + std::to_string(verdicts) +
                                " verdicts on 500 + 500 separable states"};
}

Outcome spectrum_estimation() {
    std::mt19937_64 rng(50);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 3;
        const auto rho = random_density_matrix(Dims{n}, rng);
        OptimizerConfig cfg;
        cfg.seed = static_cast<std::uint64_t>(trial);
        const ProbVec est = estimate_spectrum(rho, cfg);
        const auto eig = eig_hermitian(rho.matrix());
        for (int k = 0; k < n; ++k) worst = std::max(worst, std::abs(est[k] - eig.values[k]));
    }
    return {worst <= 1e-6, "max deviation from eigenvalues " + sci(worst)};
}

struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> check;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"Theorem 1 Werner thresholds 1/(1+d), d=2..5", 1.0, theorem1_thresholds},
        {"Three-Pauli supremum bound", 60.0, pauli_bound},
        {"Theorem 2 two-qubit Werner threshold 1/sqrt(3)", 60.0, theorem2_threshold},
        {"Separable bound of the Bell measurement, d=2,3", 120.0, bell_separable},
        {"Tsallis threshold scan", 5.0, tsallis_scan},
        {"Theorem 3 Werner thresholds, d=2..4", 5.0, theorem3_thresholds},
        {"Lattice property suite", 5.0, lattice_suite},
        {"Soundness on random separable states", 60.0, soundness_suite},
        {"Spectrum estimation on 50 random states", 120.0, spectrum_estimation},
    };
    int failed = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o{false, ""};
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.budget_s;
        const bool pass = o.ok && in_time;
        if (!pass) ++failed;
        std::printf("%s  %d. %s: %s (%.2f s of %.0f s)%s\n", pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str(),
                    secs, c.budget_s, in_time ? "" : " over budget");
    }
    std::printf("%d of %d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
