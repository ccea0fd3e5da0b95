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

#include "majent/detectors.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "majent/linalg.hpp"

namespace majent {

namespace {

constexpr double kDegeneracyTol = 1e-9;

std::string format12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

bool has_degenerate_spectrum(const std::vector<double>& values) {
    for (std::size_t j = 1; j < values.size(); ++j) {
        if (values[j - 1] - values[j] <= kDegeneracyTol) return true;
    }
    return false;
}

// Bell basis sorted by weight in sigma, when sigma is diagonal in it.
std::optional<Povm> bell_diagonal_measurement(const DensityMatrix& sigma) {
    const Dims& dims = sigma.dims();
    if (dims.size() != 2 || dims[0] != dims[1]) return std::nullopt;
    const int d = dims[0];
    auto basis = bell_basis(d);
    const int n = d * d;
    ComplexMatrix cols(n, n);
    for (int k = 0; k < n; ++k) cols.col(k) = basis[static_cast<std::size_t>(k)].amplitudes();
    const ComplexMatrix in_basis = cols.adjoint() * sigma.matrix() * cols;
    const ComplexMatrix off = in_basis - ComplexMatrix(in_basis.diagonal().asDiagonal());
    if (off.cwiseAbs().maxCoeff() > kHermitianTol) return std::nullopt;

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    // Weights equal up to rounding keep the natural Bell order.
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return in_basis(a, a).real() > in_basis(b, b).real() + kDegeneracyTol;
    });
    ComplexMatrix sorted(n, n);
    for (int k = 0; k < n; ++k) sorted.col(k) = cols.col(order[static_cast<std::size_t>(k)]);
    return basis_measurement(sorted, "bell");
}

ComplexMatrix random_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    return qr.householderQ();
}

ProbVec diagonal_probs(const ComplexMatrix& d) {
    std::vector<double> p(static_cast<std::size_t>(d.rows()));
    for (Eigen::Index k = 0; k < d.rows(); ++k) p[static_cast<std::size_t>(k)] = std::max(0.0, d(k, k).real());
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    for (double& x : p) x /= total;
    return ProbVec(std::move(p));
}

// Plane rotation of rows/columns p, q of the Hermitian d that puts the larger
// eigenvalue of the 2x2 block at p. The block's diagonal moves up in the
// majorization order.
void rotate_plane(ComplexMatrix& d, Eigen::Index p, Eigen::Index q) {
    const double a = d(p, p).real();
    const double b = d(q, q).real();
    const Complex c = d(p, q);
    const double mag = std::abs(c);
    if (mag == 0.0) return;
    const Complex w = std::conj(c / mag);
    const double theta = 0.5 * std::atan2(2.0 * mag, a - b);
    const double cs = std::cos(theta);
    const double sn = std::sin(theta);
    // v = [[cs, -sn], [sn * w, cs * w]]
    for (Eigen::Index r = 0; r < d.rows(); ++r) {
        const Complex xp = d(r, p);
        const Complex xq = d(r, q);
        d(r, p) = cs * xp + sn * w * xq;
        d(r, q) = -sn * xp + cs * w * xq;
    }
    for (Eigen::Index col = 0; col < d.cols(); ++col) {
        const Complex yp = d(p, col);
        const Complex yq = d(q, col);
        d(p, col) = cs * yp + sn * std::conj(w) * yq;
        d(q, col) = -sn * yp + cs * std::conj(w) * yq;
    }
    d(q, p) = 0.0;
    d(p, q) = 0.0;
}

double off_norm(const ComplexMatrix& d) {
    double s = 0.0;
    for (Eigen::Index r = 0; r < d.rows(); ++r) {
        for (Eigen::Index c = 0; c < d.cols(); ++c) {
            if (r != c) s += std::norm(d(r, c));
        }
    }
    return std::sqrt(s);
}

}  // namespace

std::string to_string(Status s) { return s == Status::Entangled ? "Entangled" : "Inconclusive"; }

Verdict majorization_verdict(const ProbVec& lhs, const ProbVec& rhs, double tol) {
    const std::size_t dim = std::max(lhs.size(), rhs.size());
    const auto sl = sorted_partial_sums(lhs, dim);
    const auto sr = sorted_partial_sums(rhs, dim);
    Verdict v;
    v.lhs = lhs;
    v.rhs = rhs;
    v.margin = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < dim; ++j) {
        const double gap = sl[j] - sr[j];
        v.margin = std::max(v.margin, gap);
        if (gap > tol && !v.violated_index) v.violated_index = j + 1;
    }
    v.status = v.margin > tol ? Status::Entangled : Status::Inconclusive;
    return v;
}

Verdict theorem1_detect(const DensityMatrix& sigma, const Povm& m, const ProbVec& sep_bound, double tol) {
    if (m.dim() != sigma.dim()) throw std::invalid_argument("theorem1_detect: measurement and state dimensions differ");
    return majorization_verdict(born_probs(m, sigma), sep_bound, tol);
}

Povm optimal_measurement(const DensityMatrix& sigma) {
    const auto eig = eig_hermitian(sigma.matrix());
    if (eig.values.front() - eig.values.back() <= kDegeneracyTol) {
        return computational_basis_measurement(sigma.dim());
    }
    if (has_degenerate_spectrum(eig.values)) {
        if (auto bell = bell_diagonal_measurement(sigma)) return *bell;
    }
    return basis_measurement(eig.vectors, "eigenbasis");
}

ProbVec bell_separable_bound(int d) {
    if (d < 2) throw std::invalid_argument("bell_separable_bound: d must be at least 2");
    std::vector<double> p(static_cast<std::size_t>(d * d), 0.0);
    std::fill_n(p.begin(), d, 1.0 / d);
    return ProbVec(std::move(p));
}

std::vector<ObservablePair> pauli_pairs() {
    return {{Observable::maximal(pauli_x()), Observable::maximal(pauli_x())},
            {Observable::maximal(pauli_y()), Observable::maximal(pauli_y())},
            {Observable::maximal(pauli_z()), Observable::maximal(pauli_z())}};
}

ProbVec pauli3_bound() {
    const double a = std::pow(1.0 + 1.0 / std::sqrt(3.0), 3);
    const double b = std::pow(1.0 + 1.0 / std::sqrt(2.0), 2);
    return ProbVec({a / 8, (2 * b - a) / 8, (4 - b) / 8, (4 - b) / 8, 0, 0, 0, 0});
}

ProbVec product_statistics(const DensityMatrix& sigma, std::span<const ObservablePair> pairs) {
    if (sigma.parties() != 2) throw std::invalid_argument("product_statistics: state must be bipartite");
    if (pairs.empty()) throw std::invalid_argument("product_statistics: no observables");
    std::vector<ProbVec> parts;
    for (const auto& [a, b] : pairs) {
        if (a.matrix.rows() != sigma.dims()[0] || b.matrix.rows() != sigma.dims()[1]) {
            throw std::invalid_argument("product_statistics: observable dimension does not match its party");
        }
        const Povm m = projective_from_observable(Observable::maximal(kron(a.matrix, b.matrix)));
        parts.push_back(born_probs(m, sigma));
    }
    return outer(parts);
}

Verdict theorem2_detect(const DensityMatrix& sigma, std::span<const ObservablePair> pairs,
                        const ProbVec& single_sys_bound, double tol) {
    return majorization_verdict(product_statistics(sigma, pairs), single_sys_bound, tol);
}

SubsystemDisorder subsystem_disorder(const DensityMatrix& rho) {
    const int f = rho.parties();
    if (f < 2) throw std::invalid_argument("subsystem_disorder: state must have at least two parties");
    SubsystemDisorder out;
    std::vector<ProbVec> spectra;
    for (unsigned mask = 1; mask + 1 < (1u << f); ++mask) {
        std::vector<int> keep;
        for (int p = 0; p < f; ++p) {
            if (mask & (1u << p)) keep.push_back(p);
        }
        ProbVec s = partial_trace(rho, keep).spectrum();
        spectra.push_back(s);
        out.subsystem_spectra.emplace(std::move(keep), std::move(s));
    }
    out.lambda_inf = infimum(spectra);
    return out;
}

std::pair<Verdict, SubsystemDisorder> theorem3_detect(const DensityMatrix& rho, double tol) {
    SubsystemDisorder sd = subsystem_disorder(rho);
    Verdict v = majorization_verdict(rho.spectrum(), sd.lambda_inf, tol);
    return {std::move(v), std::move(sd)};
}

Verdict corollary_detect(const EntropyMeasure& g, std::span<const ProbVec> lhs, const ProbVec& rhs, Corollary which,
                         double tol) {
    const bool joint = which == Corollary::C2;
    if (joint ? lhs.size() < 2 : lhs.size() != 1) {
        throw std::invalid_argument(joint ? "corollary_detect: C2 needs at least two vectors"
                                          : "corollary_detect: C1 and C3 take exactly one vector");
    }
    Verdict v;
    v.lhs = joint ? outer(lhs) : lhs.front();
    v.rhs = rhs;
    v.margin = g.is_infinite_order() ? v.lhs.max_entry() - rhs.max_entry() : eval(g, rhs) - eval(g, v.lhs);
    v.status = v.margin > tol ? Status::Entangled : Status::Inconclusive;
    return v;
}

ProbVec werner_spectrum(int d, double q) {
    if (d < 2) throw std::invalid_argument("werner_spectrum: d must be at least 2");
    const double rest = (1.0 - q) / (d * d);
    std::vector<double> p(static_cast<std::size_t>(d * d), rest);
    p.front() = q + rest;
    return ProbVec(std::move(p));
}

ThresholdPoint tsallis_threshold(int d, double r) {
    if (d < 2) throw std::invalid_argument("tsallis_threshold: d must be at least 2");
    if (!(r >= 1.0)) throw std::invalid_argument("tsallis_threshold: order must be at least 1");
    ThresholdPoint out;
    out.d = d;
    out.measure = EntropyMeasure::tsallis(r);
    if (std::isinf(r)) {
        out.q_star = 1.0 / (1.0 + d);
        out.method = ThresholdMethod::Analytic;
        return out;
    }
    const ProbVec bound = bell_separable_bound(d);
    const double g_bound = eval(out.measure, bound);
    auto fires = [&](double q) { return g_bound - eval(out.measure, werner_spectrum(d, q)) > 0.0; };
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        (fires(mid) ? hi : lo) = mid;
    }
    out.q_star = 0.5 * (lo + hi);
    out.method = ThresholdMethod::Bisection;
    return out;
}

std::vector<ThresholdPoint> werner_scan(std::span<const int> ds, std::span<const double> orders) {
    std::vector<ThresholdPoint> out;
    out.reserve(ds.size() * orders.size());
    for (int d : ds) {
        for (double r : orders) out.push_back(tsallis_threshold(d, r));
    }
    return out;
}

std::string scan_to_csv(std::span<const ThresholdPoint> points) {
    std::ostringstream os;
    os << "d,order,q_star,method\n";
    for (const auto& p : points) {
        os << p.d << ',' << (p.measure.is_infinite_order() ? std::string("inf") : format12(p.measure.order())) << ','
           << format12(p.q_star) << ',' << (p.method == ThresholdMethod::Analytic ? "analytic" : "bisection")
           << '\n';
    }
    return os.str();
}

ProbVec estimate_spectrum(const DensityMatrix& rho, const OptimizerConfig& cfg) {
    cfg.validate();
    const int n = rho.dim();
    if (n == 1) return ProbVec{1.0};
    std::optional<ProbVec> best;
    auto absorb = [&](const ProbVec& v) {
        if (!best) {
            best = v;
        } else {
            const ProbVec pair[] = {*best, v};
            best = supremum(pair);
        }
    };
    for (int restart = 0; restart < cfg.restarts; ++restart) {
        std::seed_seq seq{static_cast<std::uint64_t>(cfg.seed), static_cast<std::uint64_t>(restart)};
        std::mt19937_64 rng(seq);
        const ComplexMatrix u = random_unitary(n, rng);
        ComplexMatrix d = u.adjoint() * rho.matrix() * u;
        absorb(diagonal_probs(d));
        const double scale = std::max(d.norm(), 1e-300);
        for (int sweep = 0; sweep < cfg.max_iters && off_norm(d) > 1e-15 * scale; ++sweep) {
            for (Eigen::Index p = 0; p + 1 < n; ++p) {
                for (Eigen::Index q = p + 1; q < n; ++q) {
                    if (std::abs(d(p, q)) == 0.0) continue;
                    rotate_plane(d, p, q);
                    absorb(diagonal_probs(d));
                }
            }
        }
    }
    return sort_desc(*best);
}

}  // namespace majent
