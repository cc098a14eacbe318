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

#include "gtokit/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace gtokit {

double thermal_variance(double beta, double omega) {
    double x = beta * omega;
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw Error(ErrorCode::NonPositiveProduct, "thermal_variance: beta * omega must be positive");
    }
    return 1.0 / std::expm1(x) + 0.5;
}

ThermalContext::ThermalContext(double omega, double beta) : omega_(omega), beta_(beta), nu_(0.0) {
    if (!(omega > 0.0) || !(beta > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "ThermalContext: omega and beta must be positive");
    }
    nu_ = thermal_variance(beta, omega);
}

GaussianState GaussianState::thermal(int n_modes, const ThermalContext &context) {
    return {context, RealVector::Zero(2 * n_modes),
            context.nu() * RealMatrix::Identity(2 * n_modes, 2 * n_modes)};
}

ModeDecomposition ModeDecomposition::thermal(int n_modes, const ThermalContext &context) {
    return {ComplexMatrix::Zero(n_modes, n_modes), ComplexMatrix::Zero(n_modes, n_modes), context,
            RealVector::Zero(2 * n_modes)};
}

ModeDecomposition ModeDecomposition::diagonal(const std::vector<double> &mu,
                                              const std::vector<double> &alpha,
                                              const ThermalContext &context) {
    if (mu.size() != alpha.size()) {
        throw Error(ErrorCode::ShapeMismatch, "ModeDecomposition::diagonal: mu and alpha lengths differ");
    }
    const int n = static_cast<int>(mu.size());
    ModeDecomposition d = thermal(n, context);
    for (int i = 0; i < n; ++i) {
        d.m(i, i) = mu[static_cast<std::size_t>(i)];
        d.a(i, i) = alpha[static_cast<std::size_t>(i)];
    }
    return d;
}

PassiveUnitary::PassiveUnitary(ComplexMatrix u, Tolerance tol) : u_(std::move(u)) {
    if (u_.rows() != u_.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "PassiveUnitary: matrix must be square");
    }
    if (!is_unitary(u_, tol)) {
        throw Error(ErrorCode::NotUnitary, "PassiveUnitary: matrix is not unitary");
    }
}

PassiveUnitary PassiveUnitary::identity(int n) {
    return PassiveUnitary(ComplexMatrix::Identity(n, n));
}

PassiveUnitary PassiveUnitary::beam_splitter(int n, int i, int j, double transmissivity) {
    if (!(transmissivity >= 0.0 && transmissivity <= 1.0)) {
        throw Error(ErrorCode::ParameterOutOfRange, "beam_splitter: transmissivity outside [0, 1]");
    }
    double c = std::sqrt(transmissivity);
    double s = std::sqrt(1.0 - transmissivity);
    ComplexMatrix block(2, 2);
    block << c, -s, s, c;
    return embed(n, {i, j}, block);
}

PassiveUnitary PassiveUnitary::phase_shift(int n, int mode, double phase) {
    ComplexMatrix block(1, 1);
    block(0, 0) = std::polar(1.0, phase);
    return embed(n, {mode}, block);
}

PassiveUnitary PassiveUnitary::embed(int n, const std::vector<int> &modes, const ComplexMatrix &block) {
    const auto k = static_cast<Eigen::Index>(modes.size());
    if (block.rows() != k || block.cols() != k) {
        throw Error(ErrorCode::DimensionMismatch, "PassiveUnitary::embed: block size does not match mode list");
    }
    ComplexMatrix u = ComplexMatrix::Identity(n, n);
    for (Eigen::Index r = 0; r < k; ++r) {
        for (Eigen::Index c = 0; c < k; ++c) {
            int i = modes[static_cast<std::size_t>(r)];
            int j = modes[static_cast<std::size_t>(c)];
            if (i < 0 || i >= n || j < 0 || j >= n) {
                throw Error(ErrorCode::IndexOutOfRange, "PassiveUnitary::embed: mode index out of range");
            }
            u(i, j) = block(r, c);
        }
    }
    return PassiveUnitary(std::move(u));
}

RealMatrix symplectic_form(int n_modes) {
    RealMatrix omega = RealMatrix::Zero(2 * n_modes, 2 * n_modes);
    for (int i = 0; i < n_modes; ++i) {
        omega(2 * i, 2 * i + 1) = 1.0;
        omega(2 * i + 1, 2 * i) = -1.0;
    }
    return omega;
}

namespace {

void require_covariance_shape(const RealMatrix &cov) {
    if (cov.rows() != cov.cols() || cov.rows() % 2 != 0 || cov.rows() == 0) {
        throw Error(ErrorCode::ShapeMismatch, "covariance must be a non-empty 2n x 2n matrix");
    }
}

}  // namespace

double physicality_residual(const RealMatrix &covariance) {
    require_covariance_shape(covariance);
    const int n = static_cast<int>(covariance.rows() / 2);
    ComplexMatrix h = covariance.cast<Complex>();
    h += Complex(0.0, 0.5) * symplectic_form(n).cast<Complex>();
    return min_eigenvalue_hermitian(h, Tolerance{1e-6});
}

bool is_physical(const RealMatrix &covariance, [[maybe_unused]] const ThermalContext &context,
                 Tolerance tol) {
    require_covariance_shape(covariance);
    if (max_abs(RealMatrix(covariance - covariance.transpose())) > tol.abs_tol) {
        throw Error(ErrorCode::NotSymmetric, "is_physical: covariance is not symmetric");
    }
    RealMatrix sym = 0.5 * (covariance + covariance.transpose());
    return physicality_residual(sym) >= -tol.abs_tol;
}

bool is_physical(const ModeDecomposition &d, Tolerance tol) {
    return is_physical(reconstruct_cm(d).covariance, d.context, tol);
}

ModeDecomposition decompose_cm(const GaussianState &state, Tolerance tol) {
    const RealMatrix &cov = state.covariance;
    require_covariance_shape(cov);
    const int n = static_cast<int>(cov.rows() / 2);
    if (state.first_moments.size() != 2 * n) {
        throw Error(ErrorCode::ShapeMismatch, "decompose_cm: first moments must have length 2n");
    }
    if (!is_physical(cov, state.context, tol)) {
        throw Error(ErrorCode::NotPhysical, "decompose_cm: covariance violates the uncertainty relation");
    }
    RealMatrix xx(n, n), pp(n, n), xp(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            xx(i, j) = 0.5 * (cov(2 * i, 2 * j) + cov(2 * j, 2 * i));
            pp(i, j) = 0.5 * (cov(2 * i + 1, 2 * j + 1) + cov(2 * j + 1, 2 * i + 1));
            xp(i, j) = 0.5 * (cov(2 * i, 2 * j + 1) + cov(2 * j + 1, 2 * i));
        }
    }
    const double nu = state.context.nu();
    ModeDecomposition d;
    d.context = state.context;
    d.first_moments = state.first_moments;
    RealMatrix m_re = 0.5 * (xx + pp) - nu * RealMatrix::Identity(n, n);
    RealMatrix m_im = 0.5 * (xp.transpose() - xp);
    RealMatrix a_re = 0.5 * (xx - pp);
    RealMatrix a_im = 0.5 * (xp.transpose() + xp);
    d.m = m_re.cast<Complex>() + Complex(0.0, 1.0) * m_im.cast<Complex>();
    d.a = a_re.cast<Complex>() + Complex(0.0, 1.0) * a_im.cast<Complex>();
    return d;
}

GaussianState reconstruct_cm(const ModeDecomposition &d) {
    if (d.m.rows() != d.m.cols() || d.a.rows() != d.a.cols() || d.m.rows() != d.a.rows()) {
        throw Error(ErrorCode::ShapeMismatch, "reconstruct_cm: M and A must be square of equal size");
    }
    const int n = d.n_modes();
    if (d.first_moments.size() != 2 * n) {
        throw Error(ErrorCode::ShapeMismatch, "reconstruct_cm: first moments must have length 2n");
    }
    if (!is_hermitian(d.m)) {
        throw Error(ErrorCode::NotHermitian, "reconstruct_cm: M is not Hermitian");
    }
    if (!is_complex_symmetric(d.a)) {
        throw Error(ErrorCode::NotSymmetric, "reconstruct_cm: A is not symmetric");
    }
    ComplexMatrix m = 0.5 * (d.m + d.m.adjoint());
    ComplexMatrix a = 0.5 * (d.a + d.a.transpose());
    const double nu = d.context.nu();
    RealMatrix xx = (m + a).real() + nu * RealMatrix::Identity(n, n);
    RealMatrix pp = (m - a).real() + nu * RealMatrix::Identity(n, n);
    RealMatrix xp = (a - m).imag();
    GaussianState state{d.context, d.first_moments, RealMatrix(2 * n, 2 * n)};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            state.covariance(2 * i, 2 * j) = xx(i, j);
            state.covariance(2 * i + 1, 2 * j + 1) = pp(i, j);
            state.covariance(2 * i, 2 * j + 1) = xp(i, j);
            state.covariance(2 * i + 1, 2 * j) = xp(j, i);
        }
    }
    return state;
}

SpectralSummary spectral_summary(const ModeDecomposition &d, Tolerance tol) {
    if (d.n_modes() == 0) {
        return {};
    }
    SpectralSummary s;
    s.mu = hermitian_eigendecomposition(d.m, tol).eigenvalues;
    s.alpha = takagi_factorize(d.a, tol).singular_values;
    return s;
}

RealMatrix passive_to_symplectic(const PassiveUnitary &u) {
    const ComplexMatrix &mat = u.matrix();
    const int n = u.n_modes();
    RealMatrix s(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double re = mat(i, j).real();
            double im = mat(i, j).imag();
            s(2 * i, 2 * j) = re;
            s(2 * i, 2 * j + 1) = -im;
            s(2 * i + 1, 2 * j) = im;
            s(2 * i + 1, 2 * j + 1) = re;
        }
    }
    return s;
}

bool is_decouplable(const ModeDecomposition &d, Tolerance tol) {
    const int n = d.n_modes();
    if (n <= 1) {
        return true;
    }
    HermitianEigen eig = hermitian_eigendecomposition(d.m, tol);
    double scale = std::max(1.0, std::max(max_abs(d.m), max_abs(d.a)));
    double gap_tol = tol.abs_tol * scale;
    // A in the eigenbasis of M: M -> W^dag M W implies A -> W^dag A conj(W).
    ComplexMatrix a_rot = eig.basis.adjoint() * d.a * eig.basis.conjugate();
    std::vector<int> group(static_cast<std::size_t>(n), 0);
    for (int i = 1; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        bool same = eig.eigenvalues[k - 1] - eig.eigenvalues[k] <= gap_tol;
        group[k] = same ? group[k - 1] : group[k - 1] + 1;
    }
    // Inside a degenerate eigenspace any unitary is free, and a Takagi
    // congruence diagonalizes the symmetric block there. Only couplings
    // between distinct eigenspaces obstruct decoupling.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (group[static_cast<std::size_t>(i)] != group[static_cast<std::size_t>(j)] &&
                std::abs(a_rot(i, j)) > gap_tol) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace gtokit
