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

#include "majent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace majent {

namespace {

constexpr int kMaxSweeps = 100;

// One Jacobi rotation annihilating a(p, q).
void rotate(ComplexMatrix& a, ComplexMatrix& v, Eigen::Index p, Eigen::Index q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const Complex phase = apq / r;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // U = diag(1, conj(phase)) * [[c, s], [-s, c]] acting on columns (p, q).
    const Complex upp = c;
    const Complex upq = s;
    const Complex uqp = -s * std::conj(phase);
    const Complex uqq = c * std::conj(phase);

    const Eigen::Index n = a.rows();
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * upp + akq * uqp;
        a(k, q) = akp * upq + akq * uqq;
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
        a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * upp + vkq * uqp;
        v(k, q) = vkp * upq + vkq * uqq;
    }
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double off = 0.0;
    for (Eigen::Index q = 0; q < a.cols(); ++q) {
        for (Eigen::Index p = 0; p < q; ++p) off += std::norm(a(p, q));
    }
    return std::sqrt(2.0 * off);
}

// First index whose magnitude is within a relative 1e-8 of the largest.
Eigen::Index leading_index(const ComplexVector& x) {
    const double top = x.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (std::abs(x(i)) >= top * (1.0 - 1e-8)) return i;
    }
    return 0;
}

void fix_phase(Eigen::Ref<ComplexVector> x) {
    const Complex lead = x(leading_index(x));
    if (std::abs(lead) > 0.0) x *= std::conj(lead) / std::abs(lead);
}

// Replaces the columns [first, last) spanning one eigenspace by the canonical basis.
void canonicalize_cluster(ComplexMatrix& vecs, Eigen::Index first, Eigen::Index last) {
    const Eigen::Index n = vecs.rows();
    const Eigen::Index k = last - first;
    const ComplexMatrix span = vecs.middleCols(first, k);
    // Columns are P e_j for the projector onto the cluster.
    ComplexMatrix residual = span * span.adjoint();
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (Eigen::Index c = 0; c < k; ++c) {
        double best = -1.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!used[static_cast<std::size_t>(j)]) best = std::max(best, residual.col(j).norm());
        }
        Eigen::Index pick = 0;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!used[static_cast<std::size_t>(j)] && residual.col(j).norm() >= best * (1.0 - 1e-8)) {
                pick = j;
                break;
            }
        }
        used[static_cast<std::size_t>(pick)] = true;
        ComplexVector u = residual.col(pick) / residual.col(pick).norm();
        // Re-orthogonalize against the columns already chosen.
        for (Eigen::Index prev = first; prev < first + c; ++prev) {
            u -= vecs.col(prev) * vecs.col(prev).dot(u);
        }
        u.normalize();
        fix_phase(u);
        vecs.col(first + c) = u;
        residual -= u * (u.adjoint() * residual);
    }
}

}  // namespace

double hermiticity_defect(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    if (m.size() == 0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianEigen eig_hermitian(const ComplexMatrix& m, double herm_tol) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw std::invalid_argument("eig_hermitian: matrix must be square and nonempty");
    }
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (!(hermiticity_defect(m) <= herm_tol * scale)) {
        throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");
    }
    const Eigen::Index n = m.rows();
    ComplexMatrix a = (m + m.adjoint()) / 2.0;
    ComplexMatrix v = ComplexMatrix::Identity(n, n);

    const double frob = a.norm();
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= 1e-15 * frob) break;
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
        }
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&a](Eigen::Index i, Eigen::Index j) {
        return a(i, i).real() > a(j, j).real();
    });

    HermitianEigen out;
    out.values.reserve(static_cast<std::size_t>(n));
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index src = order[static_cast<std::size_t>(k)];
        out.values.push_back(a(src, src).real());
        out.vectors.col(k) = v.col(src);
    }

    const double cluster_tol = 1e-11 * std::max(1.0, frob);
    Eigen::Index first = 0;
    while (first < n) {
        Eigen::Index last = first + 1;
        while (last < n && out.values[static_cast<std::size_t>(last - 1)] -
                                   out.values[static_cast<std::size_t>(last)] <=
                               cluster_tol) {
            ++last;
        }
        if (last - first > 1) {
            canonicalize_cluster(out.vectors, first, last);
        } else {
            fix_phase(out.vectors.col(first));
        }
        first = last;
    }
    return out;
}

ComplexVector top_eigenvector(const ComplexMatrix& m) {
    return eig_hermitian(m).vectors.col(0);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
    ComplexVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

}  // namespace majent
