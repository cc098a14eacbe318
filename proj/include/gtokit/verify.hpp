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

#ifndef GTOKIT_VERIFY_HPP
#define GTOKIT_VERIFY_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gtokit/engine.hpp"
#include "gtokit/feasibility.hpp"

namespace gtokit {

using Rng = std::mt19937_64;

/// Per-mode (mu, alpha) pairs drawn with mu in [-(nu - 1/2), 3 nu] and
/// alpha in [0, sqrt((mu + nu)^2 - 1/4)], so every mode is physical.
ModeDecomposition random_decoupled_state(int n_modes, const ThermalContext &context, Rng &rng);
SpectralSummary random_physical_summary(int n_modes, const ThermalContext &context, Rng &rng);

/// Generic physical state: thermal blocks of variance >= 1/2 dressed by a
/// random symplectic O1 Z O2 (passive, squeezing, passive), plus random
/// first moments.
GaussianState random_physical_state(int n_modes, const ThermalContext &context, Rng &rng);

enum class Theorem { SingleMode, NoCatalyst, WeakSingle, StrongApprox, WeakM, WeakA };

std::string_view theorem_name(Theorem t);
Theorem parse_theorem(std::string_view name);

struct DimensionRange {
    int system_min = 1;
    int system_max = 3;
    int catalyst_min = 1;
    int catalyst_max = 2;
    int bath_min = 0;
    int bath_max = 3;
};

struct CampaignOptions {
    ThermalContext context;
    /// Runs whose catalyst block moves by more than this are discarded.
    double filter_tolerance = 1e-8;
    /// Size of a deliberate perturbation of the exact catalyst.
    double catalyst_perturbation = 0.0;
    /// Violations above this are recorded as failures.
    double margin = 1e-9;
};

struct CampaignFailure {
    std::uint64_t seed = 0;
    std::string description;
};

struct CampaignReport {
    std::string name;
    long trials = 0;
    long accepted = 0;
    double max_violation = 0.0;
    std::vector<CampaignFailure> failures;
    double runtime_seconds = 0.0;
    std::map<std::string, double> stats;
};

/// Number of worker threads: hardware concurrency, capped by
/// GTO_KIT_THREADS when set.
unsigned campaign_threads();

/// Random states pushed through random dilations, checked against the
/// matching decider. Catalytic theorems use catalysts that the sampled
/// dilation returns exactly (fixed point of the induced catalyst map).
CampaignReport necessity_campaign(Theorem theorem, const DimensionRange &dims, long trials, std::uint64_t seed,
                                  const CampaignOptions &options = CampaignOptions());

struct RegionPoint {
    double p = 0.0;
    double q = 0.0;
    bool catalytic = false;
    int n_bath = 0;
    double catalyst_residual = 0.0;
};

struct RegionCloud {
    std::vector<RegionPoint> points;
    long trials = 0;
    long rejected = 0;
};

/// (p, q) = (mu'/mu, alpha'/alpha) for one system mode under random
/// dilations with one weak catalyst mode and up to two bath modes; about a
/// quarter of the trials use no catalyst.
RegionCloud reachable_region_single_mode(double mu_s, double alpha_s, long trials, std::uint64_t seed,
                                         const CampaignOptions &options = CampaignOptions());

/// Random triples z~ <= z, |z~ - z'|_1 <= delta of sorted lists up to
/// max_length entries; the violation is sum_i [z'_i - z_i]_+ - |z~ - z'|_1.
CampaignReport excess_bound_campaign(long trials, int max_length, double max_delta, std::uint64_t seed);

/// Decider boundary versus the exact excess on a grid of budgets, plus
/// Excess-bound sampling at each budget.
CampaignReport approx_catalyst_probe(const SpectralSummary &source, const SpectralSummary &target,
                                     const std::vector<double> &delta_grid, long trials, std::uint64_t seed);

struct LorenzRow {
    std::size_t series = 0;
    std::size_t k = 0;
    double partial_sum = 0.0;
};

std::vector<LorenzRow> emit_lorenz_data(const std::vector<std::vector<double>> &series);
std::string lorenz_csv(const std::vector<LorenzRow> &rows);

/// max over entries of the elementwise gaps mu'+ - mu+, mu'- - mu-,
/// alpha' - alpha (0 when all hold).
double no_catalyst_violation(const SpectralSummary &s, const SpectralSummary &t);

}  // namespace gtokit

#endif
