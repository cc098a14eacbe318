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

#include "gtokit/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace gtokit {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::NotPhysical: return "NotPhysical";
        case ErrorCode::NonPositiveProduct: return "NonPositiveProduct";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NotMajorized: return "NotMajorized";
        case ErrorCode::NotWeaklyMajorized: return "NotWeaklyMajorized";
        case ErrorCode::NegativeEntry: return "NegativeEntry";
        case ErrorCode::ModeCountMismatch: return "ModeCountMismatch";
        case ErrorCode::NegativeDelta: return "NegativeDelta";
        case ErrorCode::Infeasible: return "Infeasible";
        case ErrorCode::RatioConflict: return "RatioConflict";
        case ErrorCode::DegenerateRatio: return "DegenerateRatio";
        case ErrorCode::NotDecouplable: return "NotDecouplable";
        case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorCode::SolverFailure: return "SolverFailure";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

double max_abs(const ComplexMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs(const RealMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix &m, Tolerance tol) {
    return m.rows() == m.cols() && max_abs(ComplexMatrix(m - m.adjoint())) <= tol.abs_tol;
}

bool is_complex_symmetric(const ComplexMatrix &m, Tolerance tol) {
    return m.rows() == m.cols() && max_abs(ComplexMatrix(m - m.transpose())) <= tol.abs_tol;
}

bool is_unitary(const ComplexMatrix &m, Tolerance tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    ComplexMatrix id = ComplexMatrix::Identity(m.rows(), m.cols());
    return max_abs(ComplexMatrix(m.adjoint() * m - id)) <= tol.abs_tol;
}

namespace {

void require_square(const ComplexMatrix &m, const char *what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + ": expected a non-empty square matrix, got " +
                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

// Modified Gram-Schmidt over the columns in order. Columns that have
// (numerically) collapsed onto earlier ones are replaced by the first
// standard basis vector that still has weight outside the span.
ComplexMatrix orthonormalize_columns(ComplexMatrix v) {
    const Eigen::Index n = v.rows();
    const Eigen::Index k = v.cols();
    Eigen::Index next_basis = 0;
    for (Eigen::Index j = 0; j < k; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index i = 0; i < j; ++i) {
                v.col(j) -= v.col(i).dot(v.col(j)) * v.col(i);
            }
        }
        double norm = v.col(j).norm();
        while (norm < 0.5) {
            Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
            e(next_basis++ % n) = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (Eigen::Index i = 0; i < j; ++i) {
                    e -= v.col(i).dot(e) * v.col(i);
                }
            }
            v.col(j) = e;
            norm = e.norm();
        }
        v.col(j) /= norm;
    }
    return v;
}

}  // namespace

HermitianEigen hermitian_eigendecomposition(const ComplexMatrix &m, Tolerance tol) {
    require_square(m, "hermitian_eigendecomposition");
    if (!is_hermitian(m, tol)) {
        throw Error(ErrorCode::NotHermitian, "hermitian_eigendecomposition: input is not Hermitian");
    }
    ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::SolverFailure, "hermitian_eigendecomposition: solver did not converge");
    }
    const Eigen::Index n = m.rows();
    HermitianEigen out;
    out.eigenvalues.resize(static_cast<std::size_t>(n));
    out.basis.resize(n, n);
    // Eigen returns ascending order.
    for (Eigen::Index j = 0; j < n; ++j) {
        out.eigenvalues[static_cast<std::size_t>(j)] = solver.eigenvalues()(n - 1 - j);
        out.basis.col(j) = solver.eigenvectors().col(n - 1 - j);
    }
    return out;
}

double min_eigenvalue_hermitian(const ComplexMatrix &m, Tolerance tol) {
    require_square(m, "min_eigenvalue_hermitian");
    if (!is_hermitian(m, tol)) {
        throw Error(ErrorCode::NotHermitian, "min_eigenvalue_hermitian: input is not Hermitian");
    }
    ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

std::vector<double> singular_values(const ComplexMatrix &a) {
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    const auto &s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

TakagiFactorization takagi_factorize(const ComplexMatrix &a, Tolerance tol) {
    require_square(a, "takagi_factorize");
    if (!is_complex_symmetric(a, tol)) {
        throw Error(ErrorCode::NotSymmetric, "takagi_factorize: input is not complex symmetric");
    }
    const Eigen::Index n = a.rows();
    ComplexMatrix sym = 0.5 * (a + a.transpose());
    RealMatrix x = sym.real();
    RealMatrix y = sym.imag();

    // With a = x + iy, the real symmetric matrix [[x, y], [y, -x]] has
    // eigenpairs (s, [p; q]) and (-s, [-q; p]) for every Takagi pair
    // a conj(p + iq) = s (p + iq).
    RealMatrix k(2 * n, 2 * n);
    k << x, y, y, -x;
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(k);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::SolverFailure, "takagi_factorize: eigen solver did not converge");
    }

    TakagiFactorization out;
    out.singular_values.resize(static_cast<std::size_t>(n));
    ComplexMatrix v(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        Eigen::Index col = 2 * n - 1 - j;
        out.singular_values[static_cast<std::size_t>(j)] = std::max(0.0, solver.eigenvalues()(col));
        auto vec = solver.eigenvectors().col(col);
        for (Eigen::Index i = 0; i < n; ++i) {
            v(i, j) = Complex(vec(i), vec(n + i));
        }
    }
    // Only the zero eigenspace can hand back a vector together with its
    // partner; re-orthonormalizing replaces those columns without moving
    // the others.
    out.congruence = orthonormalize_columns(std::move(v));
    return out;
}

ComplexMatrix haar_random_unitary(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return haar_random_unitary(n, rng);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace gtokit
