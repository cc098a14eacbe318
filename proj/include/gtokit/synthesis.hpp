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

#ifndef GTOKIT_SYNTHESIS_HPP
#define GTOKIT_SYNTHESIS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gtokit/engine.hpp"
#include "gtokit/feasibility.hpp"

namespace gtokit {

enum class CatalystRole { Strong, Weak };

/// Catalyst prepared mode by mode with M = diag(mu), A = diag(alpha).
struct CatalystSpec {
    std::vector<double> mu;
    std::vector<double> alpha;
    CatalystRole role = CatalystRole::Weak;

    int n_modes() const { return static_cast<int>(mu.size()); }
    SpectralSummary summary() const;
};

/// Which part of the state a plan is built to control.
enum class PlanBranch { Both, MOnly, AOnly };

std::string_view plan_branch_name(PlanBranch b);

/// The source is prepared as M = diag(source.mu), A = diag(source.alpha)
/// (entries paired by sorted position) on modes [0, n_system), followed by
/// the catalyst modes. The circuit traces out every bath mode it attaches.
struct SynthesisPlan {
    GtoCircuit circuit;
    std::optional<CatalystSpec> catalyst;
    SpectralSummary source;
    SpectralSummary expected_target;
    PlanBranch branch = PlanBranch::Both;
    /// False when only each catalyst mode's own state is guaranteed to
    /// return (correlations between catalyst modes may remain).
    bool joint_catalyst_return = true;
    std::map<std::string, double> diagnostics;

    int n_system() const { return static_cast<int>(source.mu.size()); }
    int n_catalyst() const { return catalyst ? catalyst->n_modes() : 0; }
};

struct SimulationReport {
    SpectralSummary achieved;
    ModeDecomposition final_state;  // system followed by catalyst modes
    double target_residual = 0.0;
    double catalyst_residual = 0.0;        // whole catalyst block
    double catalyst_local_residual = 0.0;  // each catalyst mode on its own
    double system_catalyst_correlation = 0.0;
    double physicality_residual = 0.0;
    double catalyst_physicality_residual = 0.0;
    bool catalyst_restored = true;
    bool ok = false;
};

inline constexpr double kPlanTolerance = 1e-8;

SimulationReport simulate_plan(const SynthesisPlan &plan, double tol = kPlanTolerance);

/// Optional phase rotation, then mixing with one thermal mode at
/// transmissivity p: (mu, alpha) -> (p mu, p alpha).
SynthesisPlan synth_single_mode(const SpectralSummary &source, double p, double phase = 0.0,
                                const ThermalContext &context = ThermalContext());

/// One loss step per mode (entries paired by sorted position).
SynthesisPlan synth_no_catalyst(const SpectralSummary &source, const SpectralSummary &target,
                                const ThermalContext &context = ThermalContext());

/// Single mode with one weak catalyst mode: first lower alpha at fixed mu
/// through the catalyst, then mix with a thermal mode.
SynthesisPlan synth_weak_single(const SpectralSummary &source, const SpectralSummary &target,
                                const ThermalContext &context = ThermalContext());

/// Real orthogonal 3 x 3 matrix U with U diag(u1, u2, c) U^T having
/// diagonal (v1, v2, c) and a vanishing (1, 2) entry. Requires (v1, v2) to
/// be a T-transform of (u1, u2) and c between v1 and v2.
RealMatrix pair_t_unitary(double u1, double u2, double v1, double v2, double c);

/// One T-transform on a pair of modes with one catalyst mode. The catalyst
/// value defaults to the midpoint of the target pair.
SynthesisPlan synth_pair_t_transform(const std::vector<double> &mu_pair, const std::vector<double> &target,
                                     std::optional<double> catalyst_mu = std::nullopt,
                                     const ThermalContext &context = ThermalContext());

/// M-branch plan: T-transforms with one catalyst mode each and, with a bath,
/// loss steps on the positive and negative parts separately.
SynthesisPlan synth_weak_M(const SpectralSummary &source, const SpectralSummary &target, bool with_bath,
                           const ThermalContext &context = ThermalContext());

/// A-branch plan: real T-transforms with catalysts, then loss steps using
/// bath modes or (without a bath) one extra catalyst mode each.
SynthesisPlan synth_weak_A(const SpectralSummary &source, const SpectralSummary &target, bool with_bath = true,
                           const ThermalContext &context = ThermalContext());

}  // namespace gtokit

#endif
