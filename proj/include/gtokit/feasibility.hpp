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

#ifndef GTOKIT_FEASIBILITY_HPP
#define GTOKIT_FEASIBILITY_HPP

#include <map>
#include <optional>
#include <string>

#include "gtokit/gaussian.hpp"
#include "gtokit/ordering.hpp"

namespace gtokit {

inline constexpr double kRelativeDecisionTolerance = 1e-9;

/// What a positive verdict licenses.
enum class Claim {
    None,                 // infeasible
    TransformationExists, // proven sufficient for this setting
    BranchRealizable,     // the decided branch alone can be realized
    NecessaryOnly,        // necessary conditions pass; no existence claim
};

std::string_view claim_name(Claim c);

struct FeasibilityVerdict {
    bool feasible = false;
    Claim claim = Claim::None;
    std::map<std::string, double> witness;
    std::map<std::string, bool> branches;
    std::optional<std::string> violation;
    /// Size of the worst failed constraint (0 when every constraint holds).
    double excess = 0.0;
};

/// 1e-9 scaled by the largest magnitude in either summary (at least 1).
double decision_tolerance(const SpectralSummary &s, const SpectralSummary &t,
                          double rel_tol = kRelativeDecisionTolerance);

/// Single mode, no catalyst (also the strong-catalyst criterion):
/// mu' = p mu and alpha' = p alpha for one p in [0, 1].
FeasibilityVerdict check_single_mode_gto(const SpectralSummary &s, const SpectralSummary &t,
                                         double rel_tol = kRelativeDecisionTolerance);

/// Elementwise mu'+ <= mu+, mu'- <= mu-, alpha' <= alpha after zero padding.
FeasibilityVerdict check_no_catalyst(const SpectralSummary &s, const SpectralSummary &t,
                                     double rel_tol = kRelativeDecisionTolerance);

/// Single mode with a weak catalyst: mu' = p mu, alpha' = q alpha, q <= p.
FeasibilityVerdict check_weak_single(const SpectralSummary &s, const SpectralSummary &t,
                                     double rel_tol = kRelativeDecisionTolerance);

/// Approximate strong catalysis with trace-norm budget delta. Each entry gets
/// the same slack as the exact decider, so delta = 0 coincides with
/// check_no_catalyst.
FeasibilityVerdict check_strong_approx(const SpectralSummary &s, const SpectralSummary &t, double delta,
                                       double rel_tol = kRelativeDecisionTolerance);

FeasibilityVerdict check_weak_M(const SpectralSummary &s, const SpectralSummary &t, bool with_bath,
                                double rel_tol = kRelativeDecisionTolerance);

FeasibilityVerdict check_weak_A(const SpectralSummary &s, const SpectralSummary &t,
                                double rel_tol = kRelativeDecisionTolerance);

/// sum_i [xp_i - x_i - slack]_+ after zero padding.
double slack_excess(const OrderedVector &xp, const OrderedVector &x, double slack);

/// Largest amount by which a partial sum of x exceeds that of y (0 if none).
double partial_sum_gap(const OrderedVector &y, const OrderedVector &x);

}  // namespace gtokit

#endif
