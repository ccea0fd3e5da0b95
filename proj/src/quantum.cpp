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

#include "majent/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

namespace majent {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kStateTol = 1e-10;
// Trace errors and negative eigenvalues below this are left untouched.
constexpr double kRepairThreshold = 1e-13;

void check_square(const ComplexMatrix& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw std::invalid_argument(std::string(what) + ": matrix must be square and nonempty");
    }
    if (!m.allFinite()) {
        throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
}

ProbVec spectrum_of(const std::vector<double>& values) {
    std::vector<double> v = values;
    for (double& x : v) x = std::max(x, 0.0);
    const double sum = std::accumulate(v.begin(), v.end(), 0.0);
    for (double& x : v) x /= sum;
    return ProbVec(std::move(v));
}

}  // namespace

int total_dim(const Dims& dims) {
    if (dims.empty()) throw std::invalid_argument("party dimensions must be nonempty");
    int n = 1;
    for (int d : dims) {
        if (d <= 0) throw std::invalid_argument("party dimensions must be positive");
        n *= d;
    }
    return n;
}

// ---------------------------------------------------------------- PureState

PureState::PureState(ComplexVector amplitudes, Dims dims)
    : amps_(std::move(amplitudes)), dims_(std::move(dims)) {
    if (total_dim(dims_) != amps_.size()) {
        throw std::invalid_argument("PureState: dims do not match the amplitude count");
    }
    if (!amps_.allFinite() || std::abs(amps_.norm() - 1.0) > kNormTol) {
        throw std::invalid_argument("PureState: amplitudes must have unit norm");
    }
}

PureState::PureState(ComplexVector amplitudes)
    : PureState(amplitudes, Dims{static_cast<int>(amplitudes.size())}) {}

PureState PureState::normalized(ComplexVector amplitudes, Dims dims) {
    const double n = amplitudes.norm();
    if (!(n > 0.0)) throw std::invalid_argument("PureState: zero vector");
    amplitudes /= n;
    return PureState(std::move(amplitudes), std::move(dims));
}

PureState PureState::basis(int index, Dims dims) {
    const int n = total_dim(dims);
    if (index < 0 || index >= n) throw std::out_of_range("PureState::basis: index out of range");
    ComplexVector v = ComplexVector::Zero(n);
    v(index) = 1.0;
    return PureState(std::move(v), std::move(dims));
}

ComplexMatrix PureState::projector() const { return amps_ * amps_.adjoint(); }

// ------------------------------------------------------------ DensityMatrix

DensityMatrix::DensityMatrix(ComplexMatrix m, Dims dims) : m_(std::move(m)), dims_(std::move(dims)) {
    check_square(m_, "DensityMatrix");
    if (total_dim(dims_) != m_.rows()) {
        throw std::invalid_argument("DensityMatrix: dims do not match the matrix size");
    }
    if (hermiticity_defect(m_) > kStateTol) {
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    }
    m_ = (m_ + m_.adjoint()) / 2.0;
    const double trace = m_.trace().real();
    if (std::abs(trace - 1.0) > kStateTol) {
        throw std::invalid_argument("DensityMatrix: trace must be 1, got " + std::to_string(trace));
    }
    if (std::abs(trace - 1.0) > kRepairThreshold) m_ /= trace;

    auto eig = eig_hermitian(m_);
    const double lowest = eig.values.back();
    if (lowest < -kStateTol) {
        throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
    }
    if (lowest < -kRepairThreshold) {
        Eigen::VectorXd clamped(m_.rows());
        for (Eigen::Index i = 0; i < clamped.size(); ++i) {
            clamped(i) = std::max(eig.values[static_cast<std::size_t>(i)], 0.0);
        }
        clamped /= clamped.sum();
        m_ = eig.vectors * clamped.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
        m_ = (m_ + m_.adjoint()) / 2.0;
        for (Eigen::Index i = 0; i < clamped.size(); ++i) {
            eig.values[static_cast<std::size_t>(i)] = clamped(i);
        }
    }
    spectrum_ = spectrum_of(eig.values);
}

DensityMatrix::DensityMatrix(ComplexMatrix m)
    : DensityMatrix(m, Dims{static_cast<int>(m.rows())}) {}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    return DensityMatrix(psi.projector(), psi.dims());
}

DensityMatrix DensityMatrix::maximally_mixed(Dims dims) {
    const int n = total_dim(dims);
    return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(n), std::move(dims));
}

// --------------------------------------------------------------------- Povm

Povm::Povm(std::string label, std::vector<ComplexMatrix> elements)
    : label_(std::move(label)), elements_(std::move(elements)) {
    if (elements_.empty()) throw std::invalid_argument("Povm: no elements");
    const auto n = elements_.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (const auto& e : elements_) {
        check_square(e, "Povm element");
        if (e.rows() != n) throw std::invalid_argument("Povm: elements differ in dimension");
        if (hermiticity_defect(e) > kStateTol) {
            throw std::invalid_argument("Povm: element is not Hermitian");
        }
        if (eig_hermitian(e).values.back() < -kStateTol) {
            throw std::invalid_argument("Povm: element is not positive semidefinite");
        }
        sum += e;
    }
    if ((sum - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > kStateTol) {
        throw std::invalid_argument("Povm: elements do not sum to the identity");
    }
}

bool Povm::is_rank1_projective(double tol) const {
    for (const auto& e : elements_) {
        if ((e * e - e).cwiseAbs().maxCoeff() > tol) return false;
        if (std::abs(e.trace().real() - 1.0) > tol) return false;
    }
    return true;
}

// --------------------------------------------------------------- Observable

std::vector<double> distinct_eigenvalues(const ComplexMatrix& m, double tol) {
    const auto eig = eig_hermitian(m);
    std::vector<double> out;
    for (double v : eig.values) {
        if (out.empty() || out.back() - v > tol) out.push_back(v);
    }
    return out;
}

Observable Observable::maximal(const ComplexMatrix& matrix, double tol) {
    Observable o{matrix, {}};
    for (double v : distinct_eigenvalues(matrix, tol)) o.bins.push_back({v});
    return o;
}

Povm projective_from_observable(const Observable& o, double tol, std::string label) {
    const auto eig = eig_hermitian(o.matrix);
    const auto n = o.matrix.rows();
    std::vector<ComplexMatrix> projectors(o.bins.size(), ComplexMatrix::Zero(n, n));
    std::vector<bool> bin_hit(o.bins.size(), false);
    for (std::size_t k = 0; k < eig.values.size(); ++k) {
        const double lambda = eig.values[k];
        std::size_t owner = o.bins.size();
        for (std::size_t b = 0; b < o.bins.size(); ++b) {
            for (double value : o.bins[b]) {
                if (std::abs(value - lambda) <= tol) {
                    if (owner != o.bins.size() && owner != b) {
                        throw std::invalid_argument("observable bins overlap");
                    }
                    owner = b;
                }
            }
        }
        if (owner == o.bins.size()) {
            throw std::invalid_argument("observable bins do not cover the spectrum");
        }
        const auto col = eig.vectors.col(static_cast<Eigen::Index>(k));
        projectors[owner] += col * col.adjoint();
        bin_hit[owner] = true;
    }
    for (std::size_t b = 0; b < o.bins.size(); ++b) {
        for (double value : o.bins[b]) {
            const bool in_spectrum = std::any_of(eig.values.begin(), eig.values.end(),
                                                 [&](double x) { return std::abs(x - value) <= tol; });
            if (!in_spectrum) throw std::invalid_argument("observable bin value not in the spectrum");
        }
        if (!bin_hit[b]) throw std::invalid_argument("empty observable bin");
    }
    return Povm(std::move(label), std::move(projectors));
}

// ------------------------------------------------------------------ tensor

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) { return kron(a, b); }

PureState tensor(const PureState& a, const PureState& b) {
    Dims dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return PureState::normalized(kron(a.amplitudes(), b.amplitudes()), std::move(dims));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    Dims dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return DensityMatrix(kron(a.matrix(), b.matrix()), std::move(dims));
}

// ------------------------------------------------------------ partial trace

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
    const Dims& dims = rho.dims();
    const int f = rho.parties();
    std::set<int> kept(keep.begin(), keep.end());
    if (kept.size() != keep.size()) throw std::invalid_argument("partial_trace: repeated party");
    if (kept.empty() || static_cast<int>(kept.size()) >= f) {
        throw std::invalid_argument("partial_trace: keep must be a nonempty proper subset of parties");
    }
    if (*kept.begin() < 0 || *kept.rbegin() >= f) {
        throw std::invalid_argument("partial_trace: party index out of range");
    }

    std::vector<int> stride(static_cast<std::size_t>(f));
    int s = 1;
    for (int p = f - 1; p >= 0; --p) {
        stride[static_cast<std::size_t>(p)] = s;
        s *= dims[static_cast<std::size_t>(p)];
    }
    std::vector<int> kept_parties;
    std::vector<int> traced_parties;
    for (int p = 0; p < f; ++p) (kept.contains(p) ? kept_parties : traced_parties).push_back(p);

    auto digits_to_offset = [&](int index, const std::vector<int>& parties) {
        int offset = 0;
        for (auto it = parties.rbegin(); it != parties.rend(); ++it) {
            const int d = dims[static_cast<std::size_t>(*it)];
            offset += (index % d) * stride[static_cast<std::size_t>(*it)];
            index /= d;
        }
        return offset;
    };

    Dims out_dims;
    int dk = 1;
    for (int p : kept_parties) {
        out_dims.push_back(dims[static_cast<std::size_t>(p)]);
        dk *= dims[static_cast<std::size_t>(p)];
    }
    int dt = 1;
    for (int p : traced_parties) dt *= dims[static_cast<std::size_t>(p)];

    std::vector<int> kept_offset(static_cast<std::size_t>(dk));
    std::vector<int> traced_offset(static_cast<std::size_t>(dt));
    for (int k = 0; k < dk; ++k) kept_offset[static_cast<std::size_t>(k)] = digits_to_offset(k, kept_parties);
    for (int t = 0; t < dt; ++t) traced_offset[static_cast<std::size_t>(t)] = digits_to_offset(t, traced_parties);

    ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
    const ComplexMatrix& m = rho.matrix();
    for (int i = 0; i < dk; ++i) {
        for (int j = 0; j < dk; ++j) {
            Complex acc = 0.0;
            for (int t : traced_offset) {
                acc += m(kept_offset[static_cast<std::size_t>(i)] + t, kept_offset[static_cast<std::size_t>(j)] + t);
            }
            out(i, j) = acc;
        }
    }
    return DensityMatrix(std::move(out), std::move(out_dims));
}

// -------------------------------------------------------------- Born rule

namespace {

ProbVec normalize_probs(std::vector<double> p) {
    double sum = 0.0;
    for (double& x : p) {
        if (x < 0.0 && x > -kStateTol) x = 0.0;
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("born_probs: probabilities do not sum to 1");
    }
    for (double& x : p) x /= sum;
    return ProbVec(std::move(p));
}

}  // namespace

ProbVec born_probs(const Povm& m, const DensityMatrix& rho) {
    if (m.dim() != rho.dim()) throw std::invalid_argument("born_probs: dimension mismatch");
    std::vector<double> p;
    p.reserve(m.size());
    const ComplexMatrix rho_t = rho.matrix().transpose();
    for (const auto& e : m.elements()) p.push_back(e.cwiseProduct(rho_t).sum().real());
    return normalize_probs(std::move(p));
}

ProbVec born_probs(const Povm& m, const PureState& psi) {
    if (m.dim() != psi.dim()) throw std::invalid_argument("born_probs: dimension mismatch");
    std::vector<double> p;
    p.reserve(m.size());
    for (const auto& e : m.elements()) p.push_back(psi.amplitudes().dot(e * psi.amplitudes()).real());
    return normalize_probs(std::move(p));
}

// ----------------------------------------------------------- measurements

Povm basis_measurement(const ComplexMatrix& basis_columns, std::string label) {
    std::vector<ComplexMatrix> elements;
    elements.reserve(static_cast<std::size_t>(basis_columns.cols()));
    for (Eigen::Index k = 0; k < basis_columns.cols(); ++k) {
        elements.push_back(basis_columns.col(k) * basis_columns.col(k).adjoint());
    }
    return Povm(std::move(label), std::move(elements));
}

Povm basis_measurement(std::span<const PureState> basis, std::string label) {
    std::vector<ComplexMatrix> elements;
    elements.reserve(basis.size());
    for (const auto& psi : basis) elements.push_back(psi.projector());
    return Povm(std::move(label), std::move(elements));
}

Povm computational_basis_measurement(int dim) {
    return basis_measurement(ComplexMatrix::Identity(dim, dim), "computational");
}

std::vector<PureState> bell_basis(int d) {
    if (d < 2) throw std::invalid_argument("bell_basis: d must be at least 2");
    std::vector<PureState> out;
    out.reserve(static_cast<std::size_t>(d * d));
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            ComplexVector v = ComplexVector::Zero(d * d);
            for (int j = 0; j < d; ++j) {
                const double angle = 2.0 * std::numbers::pi * j * n / d;
                v(j * d + (j + m) % d) = norm * Complex(std::cos(angle), std::sin(angle));
            }
            out.push_back(PureState::normalized(std::move(v), Dims{d, d}));
        }
    }
    return out;
}

Povm bell_measurement(int d) {
    const auto basis = bell_basis(d);
    return basis_measurement(basis, "bell");
}

std::vector<double> schmidt_coefficients(const PureState& psi, int dA, int dB) {
    if (dA <= 0 || dB <= 0 || dA * dB != psi.dim()) {
        throw std::invalid_argument("schmidt_coefficients: dA * dB must equal the state dimension");
    }
    ComplexMatrix amp(dA, dB);
    for (int i = 0; i < dA; ++i) {
        for (int j = 0; j < dB; ++j) amp(i, j) = psi.amplitudes()(i * dB + j);
    }
    const ComplexMatrix gram = dA <= dB ? ComplexMatrix(amp * amp.adjoint()) : ComplexMatrix(amp.adjoint() * amp);
    const auto eig = eig_hermitian(gram);
    std::vector<double> out;
    out.reserve(eig.values.size());
    for (double v : eig.values) out.push_back(std::sqrt(std::max(v, 0.0)));
    return out;
}

DensityMatrix werner(int d, double q) {
    if (d < 2) throw std::invalid_argument("werner: d must be at least 2");
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("werner: q must lie in [0, 1]");
    const int n = d * d;
    ComplexMatrix m = ComplexMatrix::Identity(n, n) * ((1.0 - q) / n);
    m += q * bell_basis(d).front().projector();
    return DensityMatrix(std::move(m), Dims{d, d});
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

std::vector<Povm> pauli_measurements() {
    return {
        projective_from_observable(Observable::maximal(pauli_x()), 1e-9, "sigma_x"),
        projective_from_observable(Observable::maximal(pauli_y()), 1e-9, "sigma_y"),
        projective_from_observable(Observable::maximal(pauli_z()), 1e-9, "sigma_z"),
    };
}

// ------------------------------------------------------------------ random

PureState random_pure_state(const Dims& dims, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n = total_dim(dims);
    ComplexVector v(n);
    for (int i = 0; i < n; ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v(i) = Complex(re, im);
    }
    return PureState::normalized(std::move(v), dims);
}

DensityMatrix random_density_matrix(const Dims& dims, std::mt19937_64& rng, int rank) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n = total_dim(dims);
    const int k = rank > 0 ? rank : n;
    ComplexMatrix g(n, k);
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < n; ++i) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(i, j) = Complex(re, im);
        }
    }
    ComplexMatrix m = g * g.adjoint();
    m /= m.trace().real();
    return DensityMatrix(std::move(m), dims);
}

DensityMatrix random_separable_state(const Dims& dims, int terms, std::mt19937_64& rng) {
    if (terms < 1) throw std::invalid_argument("random_separable_state: terms must be positive");
    std::exponential_distribution<double> weight(1.0);
    const int n = total_dim(dims);
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    double total = 0.0;
    for (int t = 0; t < terms; ++t) {
        ComplexVector v = random_pure_state(Dims{dims.front()}, rng).amplitudes();
        for (std::size_t p = 1; p < dims.size(); ++p) {
            v = kron(v, random_pure_state(Dims{dims[p]}, rng).amplitudes());
        }
        const double w = weight(rng);
        m += w * v * v.adjoint();
        total += w;
    }
    m /= total;
    return DensityMatrix(std::move(m), dims);
}

}  // namespace majent
