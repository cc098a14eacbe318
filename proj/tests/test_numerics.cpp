// Copyright 2026 The gtokit Authors
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

#include <gtest/gtest.h>

#include <cmath>

#include "gtokit/numerics.hpp"
#include "support.hpp"

using namespace gtokit;
using gtokit::testing::charpoly_roots;
using gtokit::testing::max_diff;
using gtokit::testing::random_hermitian;
using gtokit::testing::random_symmetric;
using gtokit::testing::svd_oracle;

TEST(HermitianEigen, DiagonalInput) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 3.0;
    m(1, 1) = 1.0;
    HermitianEigen e = hermitian_eigendecomposition(m);
    EXPECT_EQ(e.eigenvalues, (std::vector<double>{3.0, 1.0}));
    EXPECT_LT(max_abs(ComplexMatrix(e.basis.cwiseAbs().cast<Complex>() - ComplexMatrix::Identity(2, 2))), 1e-14);
}

TEST(HermitianEigen, PauliX) {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    HermitianEigen e = hermitian_eigendecomposition(m);
    EXPECT_NEAR(e.eigenvalues[0], 1.0, 1e-14);
    EXPECT_NEAR(e.eigenvalues[1], -1.0, 1e-14);
}

TEST(HermitianEigen, MatchesCharacteristicPolynomialRoots) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        ComplexMatrix m = random_hermitian(4, rng);
        HermitianEigen e = hermitian_eigendecomposition(m);
        std::vector<double> roots = charpoly_roots(m);
        ASSERT_EQ(roots.size(), 4u);
        EXPECT_LT(max_diff(e.eigenvalues, roots), 1e-10);
        Eigen::VectorXd lam = Eigen::Map<const Eigen::VectorXd>(e.eigenvalues.data(), 4);
        ComplexMatrix back = e.basis * lam.cast<Complex>().asDiagonal() * e.basis.adjoint();
        EXPECT_LT(max_abs(ComplexMatrix(back - m)), 1e-12);
    }
}

TEST(HermitianEigen, RejectsNonHermitian) {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 0.0, 0.0;
    try {
        hermitian_eigendecomposition(m);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotHermitian);
    }
}

TEST(Takagi, AlreadyDiagonal) {
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    a(0, 0) = 2.0;
    a(1, 1) = 1.0;
    TakagiFactorization t = takagi_factorize(a);
    EXPECT_LT(max_diff(t.singular_values, {2.0, 1.0}), 1e-14);
    ComplexMatrix rebuilt = t.congruence * Eigen::VectorXd::Map(t.singular_values.data(), 2).cast<Complex>().asDiagonal() *
                            t.congruence.transpose();
    EXPECT_LT(max_abs(ComplexMatrix(rebuilt - a)), 1e-13);
}

TEST(Takagi, OffDiagonalExamples) {
    ComplexMatrix x(2, 2);
    x << 0.0, 1.0, 1.0, 0.0;
    ComplexMatrix y(2, 2);
    y << 0.0, Complex(0, 1), Complex(0, 1), 0.0;
    for (const ComplexMatrix &a : {x, y}) {
        TakagiFactorization t = takagi_factorize(a);
        EXPECT_LT(max_diff(t.singular_values, svd_oracle(a)), 1e-12);
        ComplexMatrix rebuilt = t.congruence *
                                Eigen::VectorXd::Map(t.singular_values.data(), 2).cast<Complex>().asDiagonal() *
                                t.congruence.transpose();
        EXPECT_LT(max_abs(ComplexMatrix(rebuilt - a)), 1e-12);
        EXPECT_TRUE(is_unitary(t.congruence));
    }
}

TEST(Takagi, RandomMatricesReconstructAndMatchSvd) {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            ComplexMatrix a = random_symmetric(n, rng);
            TakagiFactorization t = takagi_factorize(a);
            ComplexMatrix rebuilt = t.congruence *
                                    Eigen::VectorXd::Map(t.singular_values.data(), n).cast<Complex>().asDiagonal() *
                                    t.congruence.transpose();
            EXPECT_LT(max_abs(ComplexMatrix(rebuilt - a)), 1e-10);
            EXPECT_LT(max_diff(t.singular_values, svd_oracle(a)), 1e-10);
        }
    }
}

TEST(Takagi, DegenerateSpectrum) {
    // Rank-deficient and repeated singular values.
    std::mt19937_64 rng(8);
    ComplexMatrix u = haar_random_unitary(4, rng);
    Eigen::VectorXcd s(4);
    s << 1.5, 1.5, 0.0, 0.0;
    ComplexMatrix a = u * s.asDiagonal() * u.transpose();
    TakagiFactorization t = takagi_factorize(a);
    ComplexMatrix rebuilt = t.congruence * Eigen::VectorXd::Map(t.singular_values.data(), 4).cast<Complex>().asDiagonal() *
                            t.congruence.transpose();
    EXPECT_LT(max_abs(ComplexMatrix(rebuilt - a)), 1e-10);
    EXPECT_LT(max_diff(t.singular_values, {1.5, 1.5, 0.0, 0.0}), 1e-10);
}

TEST(Haar, SingleModeIsPhase) {
    ComplexMatrix u = haar_random_unitary(1, 3);
    EXPECT_NEAR(std::abs(u(0, 0)), 1.0, 1e-14);
}

TEST(Haar, Deterministic) {
    EXPECT_EQ(max_abs(ComplexMatrix(haar_random_unitary(3, 42) - haar_random_unitary(3, 42))), 0.0);
}

TEST(Haar, SecondMoment) {
    const int samples = 10000;
    std::mt19937_64 rng(99);
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < samples; ++i) {
        ComplexMatrix u = haar_random_unitary(3, rng);
        EXPECT_TRUE(is_unitary(u, {1e-12}));
        double x = std::norm(u(0, 0));
        sum += x;
        sum2 += x * x;
    }
    double mean = sum / samples;
    double var = sum2 / samples - mean * mean;
    double se = std::sqrt(var / samples);
    EXPECT_LT(std::abs(mean - 1.0 / 3.0), 3.0 * se);
}

TEST(MinEigen, Examples) {
    EXPECT_DOUBLE_EQ(min_eigenvalue_hermitian(ComplexMatrix::Identity(3, 3)), 1.0);
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = -0.5;
    EXPECT_NEAR(min_eigenvalue_hermitian(d), -0.5, 1e-15);
    std::mt19937_64 rng(1);
    ComplexMatrix m = random_hermitian(5, rng);
    EXPECT_NEAR(min_eigenvalue_hermitian(m), hermitian_eigendecomposition(m).eigenvalues.back(), 1e-12);
}

TEST(Predicates, Basic) {
    ComplexMatrix u(2, 2);
    u << 1.0, 2.0, 3.0, 4.0;
    EXPECT_FALSE(is_hermitian(u));
    EXPECT_FALSE(is_complex_symmetric(u));
    EXPECT_FALSE(is_unitary(u));
    EXPECT_TRUE(is_unitary(haar_random_unitary(4, 7)));
}

TEST(DeriveSeed, DistinctAndStable) {
    EXPECT_EQ(derive_seed(1, 2), derive_seed(1, 2));
    EXPECT_NE(derive_seed(1, 2), derive_seed(1, 3));
    EXPECT_NE(derive_seed(1, 2), derive_seed(2, 2));
}
