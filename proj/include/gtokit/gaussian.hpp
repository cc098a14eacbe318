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

#ifndef GTOKIT_GAUSSIAN_HPP
#define GTOKIT_GAUSSIAN_HPP

#include <vector>

#include "gtokit/numerics.hpp"

namespace gtokit {

/// n̄ + 1/2 for a mode of frequency omega at inverse temperature beta, i.e.
/// the quadrature variance of the background thermal state in the
/// convention where the vacuum variance is 1/2.
double thermal_variance(double beta, double omega);

/// Background bath seen by every mode (all modes share one frequency).
class ThermalContext {
   public:
    ThermalContext() : ThermalContext(1.0, 1.0) {}
    ThermalContext(double omega, double beta);

    double omega() const { return omega_; }
    double beta() const { return beta_; }
    double nu() const { return nu_; }

    bool operator==(const ThermalContext &) const = default;

   private:
    double omega_;
    double beta_;
    double nu_;
};

/// Quadrature order is (x1, p1, ..., xn, pn).
struct GaussianState {
    ThermalContext context;
    RealVector first_moments;
    RealMatrix covariance;

    int n_modes() const { return static_cast<int>(covariance.rows() / 2); }

    static GaussianState thermal(int n_modes, const ThermalContext &context);
};

/// M_ij = <a_j^dag a_i> - delta_ij (nu - 1/2) and A_ij = <a_j a_i>, both
/// taken on the centered state. First moments ride along so the
/// decomposition carries the whole Gaussian state.
struct ModeDecomposition {
    ComplexMatrix m;
    ComplexMatrix a;
    ThermalContext context;
    RealVector first_moments;

    int n_modes() const { return static_cast<int>(m.rows()); }

    static ModeDecomposition thermal(int n_modes, const ThermalContext &context);
    /// Uncorrelated modes with M = diag(mu), A = diag(alpha).
    static ModeDecomposition diagonal(const std::vector<double> &mu, const std::vector<double> &alpha,
                                      const ThermalContext &context);
};

/// Principal mode temperatures and asymmetries, each sorted descending.
struct SpectralSummary {
    std::vector<double> mu;
    std::vector<double> alpha;

    std::size_t n_modes() const { return mu.size(); }
};

/// Validated n x n unitary acting on mode operators as a_i -> sum_j u_ij a_j.
class PassiveUnitary {
   public:
    explicit PassiveUnitary(ComplexMatrix u, Tolerance tol = kDefaultTolerance);

    const ComplexMatrix &matrix() const { return u_; }
    int n_modes() const { return static_cast<int>(u_.rows()); }

    static PassiveUnitary identity(int n);
    /// Beam splitter [[sqrt(t), -sqrt(1-t)], [sqrt(1-t), sqrt(t)]] on (i, j).
    static PassiveUnitary beam_splitter(int n, int i, int j, double transmissivity);
    static PassiveUnitary phase_shift(int n, int mode, double phase);
    /// Embeds a k x k unitary on the listed modes of an n-mode system.
    static PassiveUnitary embed(int n, const std::vector<int> &modes, const ComplexMatrix &block);

   private:
    ComplexMatrix u_;
};

/// The symplectic form, direct sum of [[0, 1], [-1, 0]].
RealMatrix symplectic_form(int n_modes);

ModeDecomposition decompose_cm(const GaussianState &state, Tolerance tol = kDefaultTolerance);
GaussianState reconstruct_cm(const ModeDecomposition &d);

SpectralSummary spectral_summary(const ModeDecomposition &d, Tolerance tol = kDefaultTolerance);

/// Real 2n x 2n orthogonal symplectic matrix with 2x2 blocks
/// [[Re u_ij, -Im u_ij], [Im u_ij, Re u_ij]].
RealMatrix passive_to_symplectic(const PassiveUnitary &u);

/// Smallest eigenvalue of sigma + (i/2) Omega.
double physicality_residual(const RealMatrix &covariance);
bool is_physical(const RealMatrix &covariance, const ThermalContext &context,
                 Tolerance tol = kDefaultTolerance);
bool is_physical(const ModeDecomposition &d, Tolerance tol = kDefaultTolerance);

bool is_decouplable(const ModeDecomposition &d, Tolerance tol = kDefaultTolerance);

}  // namespace gtokit

#endif
