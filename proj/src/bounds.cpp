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

#include "majent/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace majent {

namespace {

using Probs = std::vector<std::vector<double>>;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent stream per (seed, component, stream kind, start index).
std::mt19937_64 start_rng(std::uint64_t seed, std::uint64_t component, std::uint64_t kind, std::uint64_t start) {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ component);
    h = splitmix64(h ^ (kind << 32));
    h = splitmix64(h ^ start);
    return std::mt19937_64(h);
}

// Joint-outcome bookkeeping for one measurement set.
class Engine {
public:
    explicit Engine(const MeasurementSet& ms) : ms_(ms) {
        const std::size_t total = ms.outcome_count();
        const std::size_t n = ms.povms().size();
        digits_.assign(total, std::vector<std::size_t>(n));
        for (std::size_t t = 0; t < total; ++t) {
            std::size_t rest = t;
            for (std::size_t k = n; k-- > 0;) {
                const std::size_t m = ms.povms()[k].size();
                digits_[t][k] = rest % m;
                rest /= m;
            }
        }
    }

    std::size_t outcomes() const { return digits_.size(); }

    Probs probs(const ComplexVector& psi) const {
        Probs p;
        p.reserve(ms_.povms().size());
        for (const auto& m : ms_.povms()) {
            std::vector<double> row;
            row.reserve(m.size());
            for (const auto& e : m.elements()) row.push_back(std::max(0.0, psi.dot(e * psi).real()));
            p.push_back(std::move(row));
        }
        return p;
    }

    double tuple_prob(const Probs& p, std::size_t t) const {
        double v = 1.0;
        for (std::size_t k = 0; k < p.size(); ++k) v *= p[k][digits_[t][k]];
        return v;
    }

    // Indices of the i largest tuples; ties go to the lower index.
    std::vector<std::size_t> top_tuples(const Probs& p, std::size_t i) const {
        std::vector<double> joint(outcomes());
        for (std::size_t t = 0; t < joint.size(); ++t) joint[t] = tuple_prob(p, t);
        std::vector<std::size_t> idx(joint.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return joint[a] > joint[b]; });
        idx.resize(i);
        return idx;
    }

    double set_value(const Probs& p, const std::vector<std::size_t>& set) const {
        double v = 0.0;
        for (std::size_t t : set) v += tuple_prob(p, t);
        return v;
    }

    ComplexMatrix weighted_operator(const Probs& p, const std::vector<std::size_t>& set) const {
        const auto n = static_cast<Eigen::Index>(ms_.dim());
        ComplexMatrix w = ComplexMatrix::Zero(n, n);
        const std::size_t nm = p.size();
        for (std::size_t k = 0; k < nm; ++k) {
            std::vector<double> coeff(ms_.povms()[k].size(), 0.0);
            for (std::size_t t : set) {
                double c = 1.0;
                for (std::size_t l = 0; l < nm; ++l) {
                    if (l != k) c *= p[l][digits_[t][l]];
                }
                coeff[digits_[t][k]] += c;
            }
            for (std::size_t a = 0; a < coeff.size(); ++a) {
                if (coeff[a] != 0.0) w += coeff[a] * ms_.povms()[k].elements()[a];
            }
        }
        return w;
    }

private:
    const MeasurementSet& ms_;
    std::vector<std::vector<std::size_t>> digits_;
};

// Either the greedy top-i objective or a fixed index set.
struct Objective {
    std::size_t i;
    const std::vector<std::size_t>* fixed = nullptr;

    std::vector<std::size_t> select(const Engine& e, const Probs& p) const {
        return fixed != nullptr ? *fixed : e.top_tuples(p, i);
    }
    double value(const Engine& e, const ComplexVector& psi) const {
        const Probs p = e.probs(psi);
        return e.set_value(p, select(e, p));
    }
};

struct Run {
    double value = -1.0;
    ComplexVector psi;
    bool converged = false;
    double residual = std::numeric_limits<double>::infinity();
};

ComplexVector phase_aligned(const ComplexVector& ref, ComplexVector y) {
    const Complex overlap = ref.dot(y);
    if (std::abs(overlap) > 0.0) y *= std::conj(overlap) / std::abs(overlap);
    return y;
}

double eigen_residual(const ComplexMatrix& w, const ComplexVector& x) {
    const ComplexVector wx = w * x;
    const Complex eta = x.dot(wx);
    return (wx - eta * x).norm();
}

// Top-eigenvector move from x, falling back to damped moves when the full
// step lowers the objective. Returns nullopt when no move helps.
template <typename Value>
std::optional<ComplexVector> ascent_step(const ComplexVector& x, const ComplexMatrix& w, double current,
                                         const Value& value) {
    ComplexVector y = phase_aligned(x, top_eigenvector(w));
    // Near a stationary point the objective is flat to rounding; the full
    // step still shrinks the residual.
    if (value(y) >= current - 1e-13) return y;
    for (double t = 0.5; t > 1e-6; t *= 0.5) {
        ComplexVector z = (1.0 - t) * x + t * y;
        const double n = z.norm();
        if (!(n > 0.0)) continue;
        z /= n;
        if (value(z) > current) return z;
    }
    return std::nullopt;
}

Run ascend_pure(const Engine& e, ComplexVector psi, const Objective& obj, const OptimizerConfig& cfg) {
    auto value = [&](const ComplexVector& v) { return obj.value(e, v); };
    double current = value(psi);
    Run run;
    for (int it = 0; it < cfg.max_iters; ++it) {
        const Probs p = e.probs(psi);
        const ComplexMatrix w = e.weighted_operator(p, obj.select(e, p));
        run.residual = eigen_residual(w, psi);
        if (run.residual < cfg.tol_fp) {
            run.converged = true;
            break;
        }
        auto next = ascent_step(psi, w, current, value);
        if (!next) break;
        psi = std::move(*next);
        current = value(psi);
    }
    if (!run.converged) {
        const Probs p = e.probs(psi);
        run.residual = eigen_residual(e.weighted_operator(p, obj.select(e, p)), psi);
        run.converged = run.residual < cfg.tol_fp;
    }
    run.value = current;
    run.psi = std::move(psi);
    return run;
}

ComplexVector product_vector(const std::vector<ComplexVector>& factors) {
    ComplexVector v = factors.front();
    for (std::size_t p = 1; p < factors.size(); ++p) v = kron(v, factors[p]);
    return v;
}

// Columns: the product basis with party `party` free and the others fixed.
ComplexMatrix environment(const std::vector<ComplexVector>& factors, std::size_t party) {
    const auto dp = factors[party].size();
    std::vector<ComplexVector> parts = factors;
    ComplexMatrix env;
    for (Eigen::Index a = 0; a < dp; ++a) {
        parts[party] = ComplexVector::Unit(dp, a);
        const ComplexVector col = product_vector(parts);
        if (a == 0) env.resize(col.size(), dp);
        env.col(a) = col;
    }
    return env;
}

double product_residual(const Engine& e, const std::vector<ComplexVector>& factors, const Objective& obj) {
    const ComplexVector psi = product_vector(factors);
    const Probs p = e.probs(psi);
    const ComplexMatrix w = e.weighted_operator(p, obj.select(e, p));
    double worst = 0.0;
    for (std::size_t q = 0; q < factors.size(); ++q) {
        const ComplexMatrix env = environment(factors, q);
        worst = std::max(worst, eigen_residual(env.adjoint() * w * env, factors[q]));
    }
    return worst;
}

Run ascend_product(const Engine& e, std::vector<ComplexVector> factors, const Objective& obj,
                   const OptimizerConfig& cfg) {
    double current = obj.value(e, product_vector(factors));
    Run run;
    for (int it = 0; it < cfg.max_iters; ++it) {
        run.residual = product_residual(e, factors, obj);
        if (run.residual < cfg.tol_fp) {
            run.converged = true;
            break;
        }
        bool moved = false;
        for (std::size_t q = 0; q < factors.size(); ++q) {
            const ComplexVector psi = product_vector(factors);
            const Probs p = e.probs(psi);
            const ComplexMatrix env = environment(factors, q);
            const ComplexMatrix wq = env.adjoint() * e.weighted_operator(p, obj.select(e, p)) * env;
            auto value = [&](const ComplexVector& phi) {
                std::vector<ComplexVector> trial = factors;
                trial[q] = phi;
                return obj.value(e, product_vector(trial));
            };
            if (auto next = ascent_step(factors[q], wq, current, value)) {
                factors[q] = std::move(*next);
                current = value(factors[q]);
                moved = true;
            }
        }
        if (!moved) break;
    }
    if (!run.converged) {
        run.residual = product_residual(e, factors, obj);
        run.converged = run.residual < cfg.tol_fp;
    }
    run.value = current;
    run.psi = product_vector(factors);
    return run;
}

std::vector<ComplexVector> random_factors(const Dims& dims, std::mt19937_64& rng) {
    std::vector<ComplexVector> factors;
    for (int d : dims) factors.push_back(random_pure_state(Dims{d}, rng).amplitudes());
    return factors;
}

// Visits every i-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t i, Fn&& fn) {
    std::vector<std::size_t> set(i);
    std::iota(set.begin(), set.end(), std::size_t{0});
    std::size_t index = 0;
    while (true) {
        fn(set, index++);
        std::size_t k = i;
        while (k > 0 && set[k - 1] == n - i + (k - 1)) --k;
        if (k == 0) return;
        ++set[k - 1];
        for (std::size_t j = k; j < i; ++j) set[j] = set[j - 1] + 1;
    }
}

// Best run; the earlier run wins ties.
void keep_best(Run& best, Run&& candidate) {
    if (candidate.value > best.value) best = std::move(candidate);
}

void check_component(const MeasurementSet& ms, std::size_t i) {
    if (i < 1 || i > ms.outcome_count()) {
        throw std::out_of_range("component index must lie in [1, outcome count]");
    }
}

constexpr std::uint64_t kRandomStarts = 1;
constexpr std::uint64_t kVerifyStarts = 2;

int verify_restarts(const OptimizerConfig& cfg) { return std::max(2, cfg.restarts / 16); }

// Re-evaluates a fixed-set run under the greedy objective.
Run as_greedy(const Engine& e, Run run, std::size_t i, const OptimizerConfig& cfg) {
    const Objective greedy{i};
    run.value = greedy.value(e, run.psi);
    const Probs p = e.probs(run.psi);
    run.residual = eigen_residual(e.weighted_operator(p, greedy.select(e, p)), run.psi);
    run.converged = run.residual < cfg.tol_fp;
    return run;
}

ComponentResult to_component(Run run, const Dims& dims) {
    ComponentResult out;
    out.value = std::clamp(run.value, 0.0, 1.0);
    out.witness = PureState::normalized(std::move(run.psi), dims);
    out.converged = run.converged;
    out.residual = run.residual;
    return out;
}

// Top Schmidt pair of a bipartite vector, as product-state factors.
std::vector<ComplexVector> top_schmidt_factors(const ComplexVector& v, int dA, int dB) {
    ComplexMatrix amp(dA, dB);
    for (int a = 0; a < dA; ++a) {
        for (int b = 0; b < dB; ++b) amp(a, b) = v(a * dB + b);
    }
    ComplexVector phi_a = top_eigenvector(amp * amp.adjoint());
    ComplexVector phi_b = (amp.transpose() * phi_a.conjugate()).conjugate();
    if (phi_b.norm() == 0.0) phi_b = ComplexVector::Unit(dB, 0);
    phi_b.normalize();
    return {phi_a, phi_b};
}

BoundResult assemble(std::vector<ComponentResult> comps) {
    BoundResult out;
    for (auto& c : comps) {
        out.mu_raw.push_back(c.value);
        out.converged.push_back(c.converged);
        out.witnesses.push_back(std::move(c.witness));
    }
    std::vector<double> monotone = out.mu_raw;
    for (std::size_t j = 1; j < monotone.size(); ++j) monotone[j] = std::max(monotone[j], monotone[j - 1]);
    out.mu = concave_majorant(monotone);
    out.bound = from_cumulative(out.mu);
    return out;
}

template <typename ComponentFn>
BoundResult sweep_components(const MeasurementSet& ms, ComponentFn&& component) {
    const std::size_t total = ms.outcome_count();
    std::vector<ComponentResult> comps;
    comps.reserve(total);
    for (std::size_t i = 1; i <= total; ++i) {
        if (!comps.empty() && comps.back().value >= 1.0 - kEpsNum) {
            // mu is nondecreasing and bounded by 1.
            ComponentResult saturated = comps.back();
            saturated.value = 1.0;
            comps.push_back(std::move(saturated));
            continue;
        }
        comps.push_back(component(i));
    }
    return assemble(std::move(comps));
}

}  // namespace

// ------------------------------------------------------------ MeasurementSet

MeasurementSet::MeasurementSet(std::vector<Povm> povms, Dims dims)
    : povms_(std::move(povms)), dims_(std::move(dims)) {
    if (povms_.empty()) throw std::invalid_argument("MeasurementSet: no measurements");
    for (const auto& m : povms_) {
        if (m.dim() != povms_.front().dim()) {
            throw std::invalid_argument("MeasurementSet: measurements act on different dimensions");
        }
    }
    if (dims_.empty()) dims_ = Dims{povms_.front().dim()};
    if (total_dim(dims_) != povms_.front().dim()) {
        throw std::invalid_argument("MeasurementSet: party dimensions do not match the measurements");
    }
}

std::size_t MeasurementSet::outcome_count() const noexcept {
    std::size_t n = 1;
    for (const auto& m : povms_) n *= m.size();
    return n;
}

void OptimizerConfig::validate() const {
    if (restarts < 1 || max_iters < 1 || !(tol_fp > 0.0)) {
        throw std::invalid_argument("OptimizerConfig: restarts, max_iters and tol_fp must be positive");
    }
}

// ----------------------------------------------------------------- bounds

ProbVec joint_probs(const MeasurementSet& ms, const DensityMatrix& rho) {
    std::vector<ProbVec> parts;
    for (const auto& m : ms.povms()) parts.push_back(born_probs(m, rho));
    return outer(parts);
}

ProbVec joint_probs(const MeasurementSet& ms, const PureState& psi) {
    std::vector<ProbVec> parts;
    for (const auto& m : ms.povms()) parts.push_back(born_probs(m, psi));
    return outer(parts);
}

ComponentResult mu_sup_component(const MeasurementSet& ms, std::size_t i, const OptimizerConfig& cfg) {
    cfg.validate();
    check_component(ms, i);
    const Engine engine(ms);
    const Dims single{ms.dim()};

    Run best;
    for (int r = 0; r < cfg.restarts; ++r) {
        auto rng = start_rng(cfg.seed, i, kRandomStarts, static_cast<std::uint64_t>(r));
        keep_best(best, ascend_pure(engine, random_pure_state(single, rng).amplitudes(), Objective{i}, cfg));
    }

    if (engine.outcomes() <= cfg.exhaustive_limit) {
        for_each_subset(engine.outcomes(), i, [&](const std::vector<std::size_t>& set, std::size_t index) {
            for (int r = 0; r < verify_restarts(cfg); ++r) {
                auto rng = start_rng(cfg.seed, i, kVerifyStarts, (index << 16) + static_cast<std::uint64_t>(r));
                Run run = ascend_pure(engine, random_pure_state(single, rng).amplitudes(), Objective{i, &set}, cfg);
                if (run.value > best.value + 1e-12) keep_best(best, as_greedy(engine, std::move(run), i, cfg));
            }
        });
    }
    return to_component(std::move(best), ms.dims());
}

ComponentResult mu_sep_component(const MeasurementSet& ms, std::size_t i, const OptimizerConfig& cfg) {
    cfg.validate();
    check_component(ms, i);
    const Engine engine(ms);
    const Dims& dims = ms.dims();

    Run best;
    for (int r = 0; r < cfg.restarts; ++r) {
        auto rng = start_rng(cfg.seed, i, kRandomStarts, static_cast<std::uint64_t>(r));
        keep_best(best, ascend_product(engine, random_factors(dims, rng), Objective{i}, cfg));
    }

    // Single rank-1 measurement: the best product overlap with each element
    // is its top Schmidt pair.
    if (i == 1 && dims.size() == 2 && ms.povms().size() == 1 && ms.povms().front().is_rank1_projective()) {
        for (const auto& e : ms.povms().front().elements()) {
            const ComplexVector v = top_eigenvector(e);
            keep_best(best, ascend_product(engine, top_schmidt_factors(v, dims[0], dims[1]), Objective{i}, cfg));
        }
    }

    if (engine.outcomes() <= cfg.exhaustive_limit) {
        for_each_subset(engine.outcomes(), i, [&](const std::vector<std::size_t>& set, std::size_t index) {
            for (int r = 0; r < verify_restarts(cfg); ++r) {
                auto rng = start_rng(cfg.seed, i, kVerifyStarts, (index << 16) + static_cast<std::uint64_t>(r));
                Run run = ascend_product(engine, random_factors(dims, rng), Objective{i, &set}, cfg);
                if (run.value > best.value + 1e-12) {
                    run = as_greedy(engine, std::move(run), i, cfg);
                    keep_best(best, std::move(run));
                }
            }
        });
    }
    return to_component(std::move(best), dims);
}

BoundResult sup_all_states(const MeasurementSet& ms, const OptimizerConfig& cfg) {
    return sweep_components(ms, [&](std::size_t i) { return mu_sup_component(ms, i, cfg); });
}

BoundResult sup_separable(const MeasurementSet& ms, const OptimizerConfig& cfg) {
    return sweep_components(ms, [&](std::size_t i) { return mu_sep_component(ms, i, cfg); });
}

BoundResult sup_separable(const MeasurementSet& ms, const Dims& dims, const OptimizerConfig& cfg) {
    return sup_separable(MeasurementSet(ms.povms(), dims), cfg);
}

double max_product_overlap(const PureState& psi, const Dims& dims) {
    if (dims.size() != 2) throw std::invalid_argument("max_product_overlap: state must be bipartite");
    const auto s = schmidt_coefficients(psi, dims[0], dims[1]);
    return s.front() * s.front();
}

double stationarity_residual(const MeasurementSet& ms, std::size_t i, const PureState& psi) {
    check_component(ms, i);
    const Engine engine(ms);
    const Probs p = engine.probs(psi.amplitudes());
    return eigen_residual(engine.weighted_operator(p, engine.top_tuples(p, i)), psi.amplitudes());
}

}  // namespace majent
