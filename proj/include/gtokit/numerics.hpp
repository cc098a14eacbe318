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

#ifndef GTOKIT_NUMERICS_HPP
#define GTOKIT_NUMERICS_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "gtokit/error.hpp"

namespace gtokit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Absolute tolerance used by structural checks (Hermiticity, symmetry,
/// unitarity, positivity).
struct Tolerance {
    double abs_tol = 1e-9;
};

inline constexpr Tolerance kDefaultTolerance{};

double max_abs(const ComplexMatrix &m);
double max_abs(const RealMatrix &m);

bool is_hermitian(const ComplexMatrix &m, Tolerance tol = kDefaultTolerance);
bool is_complex_symmetric(const ComplexMatrix &m, Tolerance tol = kDefaultTolerance);
bool is_unitary(const ComplexMatrix &m, Tolerance tol = kDefaultTolerance);

struct HermitianEigen {
    std::vector<double> eigenvalues;  // descending
    ComplexMatrix basis;              // columns are the matching eigenvectors
};

/// basis^dagger * m * basis = diag(eigenvalues), eigenvalues descending.
HermitianEigen hermitian_eigendecomposition(const ComplexMatrix &m,
                                            Tolerance tol = kDefaultTolerance);

double min_eigenvalue_hermitian(const ComplexMatrix &m, Tolerance tol = kDefaultTolerance);

struct TakagiFactorization {
    std::vector<double> singular_values;  // descending, non-negative
    ComplexMatrix congruence;             // unitary V with V diag(s) V^T = a
};

/// Takagi (Autonne) factorization of a complex symmetric matrix.
///
/// Read off the real symmetric embedding [[Re a, Im a], [Im a, -Re a]]:
/// its top-n eigenvectors [p; q] give the columns p + iq of V.
TakagiFactorization takagi_factorize(const ComplexMatrix &a, Tolerance tol = kDefaultTolerance);

std::vector<double> singular_values(const ComplexMatrix &a);

/// Haar-distributed n x n unitary, deterministic in (n, seed).
ComplexMatrix haar_random_unitary(int n, std::uint64_t seed);

/// Same sampler drawing from a caller-owned generator.
template <typename Rng>
ComplexMatrix haar_random_unitary(int n, Rng &rng);

/// Mixes a master seed with a stream index (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace gtokit

#include <random>

namespace gtokit {

template <typename Rng>
ComplexMatrix haar_random_unitary(int n, Rng &rng) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "haar_random_unitary: n must be >= 1");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            double re = gauss(rng);
            double im = gauss(rng);
            g(i, j) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix &r = qr.matrixQR();
    for (int j = 0; j < n; ++j) {
        Complex d = r(j, j);
        double mag = std::abs(d);
        Complex phase = mag > 0 ? d / mag : Complex(1.0, 0.0);
        q.col(j) *= phase;
    }
    return q;
}

}  // namespace gtokit

#endif
