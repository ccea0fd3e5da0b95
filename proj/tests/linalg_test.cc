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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace majent {
namespace {

ComplexMatrix random_hermitian(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    ComplexMatrix a(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) a(r, c) = Complex(g(rng), g(rng));
    }
    return (a + a.adjoint()) / 2.0;
}

TEST(EigHermitianTest, MatchesReferenceSolver) {
    std::mt19937_64 rng(1);
    for (int n : {1, 2, 3, 5, 8, 16}) {
        for (int trial = 0; trial < 5; ++trial) {
            const ComplexMatrix m = random_hermitian(n, rng);
            const auto eig = eig_hermitian(m);
            const auto expected = oracle::eigenvalues(m);
            ASSERT_EQ(eig.values.size(), expected.size());
            for (int k = 0; k < n; ++k) EXPECT_NEAR(eig.values[k], expected[k], 1e-12 * (1 + std::abs(expected[k])));
            const ComplexMatrix& v = eig.vectors;
            EXPECT_LT((v.adjoint() * v - ComplexMatrix::Identity(n, n)).norm(), 1e-12);
            ComplexMatrix lambda = ComplexMatrix::Zero(n, n);
            for (int k = 0; k < n; ++k) lambda(k, k) = eig.values[k];
            EXPECT_LT((v * lambda * v.adjoint() - m).norm(), 1e-11 * (1 + m.norm()));
        }
    }
}

TEST(EigHermitianTest, IsolatedVectorsHaveRealPositiveLeadingComponent) {
    std::mt19937_64 rng(2);
    const ComplexMatrix m = random_hermitian(4, rng);
    const auto eig = eig_hermitian(m);
    for (int k = 0; k < 4; ++k) {
        Eigen::Index big = 0;
        eig.vectors.col(k).cwiseAbs().maxCoeff(&big);
        EXPECT_NEAR(eig.vectors(big, k).imag(), 0.0, 1e-14);
        EXPECT_GT(eig.vectors(big, k).real(), 0.0);
    }
}

TEST(EigHermitianTest, DegenerateClusterIsCanonical) {
    // Two unitarily rotated copies of the same matrix give the same output.
    ComplexMatrix m = ComplexMatrix::Zero(3, 3);
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 2) = -2;
    const auto a = eig_hermitian(m);
    EXPECT_NEAR((a.vectors - ComplexMatrix::Identity(3, 3)).norm(), 0.0, 1e-14);
    const ComplexMatrix identity = ComplexMatrix::Identity(4, 4) * 0.25;
    const auto b = eig_hermitian(identity);
    EXPECT_NEAR((b.vectors - ComplexMatrix::Identity(4, 4)).norm(), 0.0, 1e-14);
}

TEST(EigHermitianTest, Deterministic) {
    std::mt19937_64 rng(9);
    const ComplexMatrix m = random_hermitian(6, rng);
    const auto a = eig_hermitian(m);
    const auto b = eig_hermitian(m);
    EXPECT_EQ(a.values, b.values);
    EXPECT_TRUE(a.vectors == b.vectors);
}

TEST(EigHermitianTest, RejectsBadInput) {
    ComplexMatrix m(2, 2);
    m << 1, 2, 0, 1;
    EXPECT_THROW(eig_hermitian(m), std::invalid_argument);
    EXPECT_THROW(eig_hermitian(ComplexMatrix(2, 3)), std::invalid_argument);
    EXPECT_GT(hermiticity_defect(m), 1.0);
}

TEST(EigHermitianTest, TopEigenvector) {
    ComplexMatrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    const ComplexVector v = top_eigenvector(m);
    EXPECT_NEAR(std::abs((m * v - v).norm()), 0.0, 1e-14);
}

TEST(KronTest, IndexFormula) {
    std::mt19937_64 rng(4);
    const ComplexMatrix a = random_hermitian(2, rng);
    const ComplexMatrix b = random_hermitian(3, rng);
    const ComplexMatrix k = kron(a, b);
    ASSERT_EQ(k.rows(), 6);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int r = 0; r < 2; ++r) {
                for (int s = 0; s < 3; ++s) EXPECT_EQ(k(i * 3 + j, r * 3 + s), a(i, r) * b(j, s));
            }
        }
    }
    ComplexVector x(2);
    x << 1, Complex(0, 2);
    ComplexVector y(2);
    y << 3, 4;
    const ComplexVector xy = kron(x, y);
    EXPECT_EQ(xy(1), Complex(4, 0));
    EXPECT_EQ(xy(2), Complex(0, 6));
}

}  // namespace
}  // namespace majent
