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

#include "generators.hpp"
#include "gtokit/feasibility.hpp"
#include "gtokit/synthesis.hpp"

using namespace gtokit;
using namespace gtokit::testing;

namespace {

void expect_sound(const SynthesisPlan &plan) {
    SimulationReport r = simulate_plan(plan);
    EXPECT_TRUE(r.ok) << "target " << r.target_residual << " catalyst " << r.catalyst_residual;
    EXPECT_LE(r.target_residual, 1e-8);
    EXPECT_GE(r.physicality_residual, -1e-9);
    EXPECT_GE(r.catalyst_physicality_residual, -1e-9);
    if (plan.diagnostics.count("t_steps")) {
        EXPECT_LE(plan.diagnostics.at("t_steps"), std::max(0, plan.n_system() - 1));
    }
}

}  // namespace

TEST(SingleModeSynth, Examples) {
    SynthesisPlan id = synth_single_mode({{1.0}, {0.5}}, 1.0, 0.3);
    SimulationReport r = simulate_plan(id);
    EXPECT_NEAR(r.achieved.mu[0], 1.0, 1e-14);
    EXPECT_NEAR(r.achieved.alpha[0], 0.5, 1e-14);

    r = simulate_plan(synth_single_mode({{1.0}, {0.5}}, 0.0));
    EXPECT_NEAR(r.achieved.mu[0], 0.0, 1e-14);
    EXPECT_NEAR(r.achieved.alpha[0], 0.0, 1e-14);

    r = simulate_plan(synth_single_mode({{1.0}, {0.5}}, 0.25));
    EXPECT_NEAR(r.achieved.mu[0], 0.25, 1e-14);
    EXPECT_NEAR(r.achieved.alpha[0], 0.125, 1e-14);
    EXPECT_TRUE(r.ok);

    EXPECT_THROW(synth_single_mode({{1.0}, {0.5}}, 1.2), Error);
}

TEST(NoCatalystSynth, PerModeRatios) {
    SynthesisPlan plan = synth_no_catalyst({{2.0, 1.0}, {1.0, 0.0}}, {{1.0, 1.0}, {0.5, 0.0}});
    SimulationReport r = simulate_plan(plan);
    EXPECT_TRUE(r.ok);
    EXPECT_LT(max_diff(r.achieved.mu, {1.0, 1.0}), 1e-12);
    EXPECT_LT(max_diff(r.achieved.alpha, {0.5, 0.0}), 1e-12);
    EXPECT_EQ(plan.n_catalyst(), 0);
}

TEST(NoCatalystSynth, IdentityIsEmpty) {
    EXPECT_TRUE(synth_no_catalyst({{2.0, 1.0}, {1.0, 0.0}}, {{2.0, 1.0}, {1.0, 0.0}}).circuit.empty());
}

TEST(NoCatalystSynth, RatioConflict) {
    try {
        synth_no_catalyst({{1.0}, {0.5}}, {{0.5}, {0.3}});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::RatioConflict);
    }
}

TEST(NoCatalystSynth, InfeasibleRejected) {
    try {
        synth_no_catalyst({{1.0}, {0.5}}, {{1.5}, {0.3}});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Infeasible);
    }
}

TEST(WeakSingleSynth, ReductionExample) {
    SynthesisPlan plan = synth_weak_single({{1.0}, {0.5}}, {{0.5}, {0.1}});
    ASSERT_TRUE(plan.catalyst.has_value());
    EXPECT_NEAR(plan.diagnostics.at("alpha_bar"), 0.2, 1e-14);
    EXPECT_NEAR(plan.catalyst->mu[0], 1.0, 1e-14);
    EXPECT_NEAR(plan.catalyst->alpha[0], 0.15, 1e-14);
    EXPECT_NEAR(plan.diagnostics.at("mixing_a"), 0.7 / 1.3, 1e-12);
    EXPECT_NEAR(plan.diagnostics.at("p"), 0.5, 1e-14);
    SimulationReport r = simulate_plan(plan);
    EXPECT_TRUE(r.ok);
    EXPECT_LT(r.catalyst_residual, 1e-12);
    EXPECT_NEAR(r.achieved.mu[0], 0.5, 1e-12);
    EXPECT_NEAR(r.achieved.alpha[0], 0.1, 1e-12);
}

TEST(WeakSingleSynth, DiagonalTargetNeedsNoCatalyst) {
    SynthesisPlan plan = synth_weak_single({{1.0}, {0.5}}, {{0.6}, {0.3}});
    EXPECT_FALSE(plan.catalyst.has_value());
    EXPECT_TRUE(simulate_plan(plan).ok);
    SynthesisPlan id = synth_weak_single({{1.0}, {0.5}}, {{1.0}, {0.5}});
    EXPECT_FALSE(id.catalyst.has_value());
    EXPECT_NEAR(id.diagnostics.at("p"), 1.0, 1e-15);
}

TEST(WeakSingleSynth, ZeroMuSource) {
    SynthesisPlan plan = synth_weak_single({{0.0}, {0.4}}, {{0.0}, {0.1}});
    SimulationReport r = simulate_plan(plan);
    EXPECT_TRUE(r.ok);
    EXPECT_NEAR(r.achieved.alpha[0], 0.1, 1e-12);
}

TEST(PairT, UnitaryMovesDiagonal) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-1.0, 2.0), t(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        double u1 = u(rng), u2 = u(rng);
        double tt = t(rng);
        double v1 = tt * u1 + (1 - tt) * u2, v2 = u1 + u2 - v1;
        double c = std::min(v1, v2) + t(rng) * std::abs(v1 - v2);
        RealMatrix r = pair_t_unitary(u1, u2, v1, v2, c);
        EXPECT_LT((r * r.transpose() - RealMatrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-12);
        Eigen::Vector3d d(u1, u2, c);
        RealMatrix h = r * d.asDiagonal() * r.transpose();
        EXPECT_NEAR(h(0, 0), v1, 1e-10);
        EXPECT_NEAR(h(1, 1), v2, 1e-10);
        EXPECT_NEAR(h(2, 2), c, 1e-10);
    }
}

TEST(PairT, SymmetricAveragePlan) {
    SynthesisPlan plan = synth_pair_t_transform({2.0, 0.0}, {1.0, 1.0});
    ASSERT_TRUE(plan.catalyst.has_value());
    SimulationReport r = simulate_plan(plan);
    EXPECT_TRUE(r.ok);
    EXPECT_LT(r.catalyst_residual, 1e-12);
    EXPECT_LT(max_diff(r.achieved.mu, {1.0, 1.0}), 1e-12);
}

TEST(PairT, RejectsNonTransform) {
    EXPECT_THROW(synth_pair_t_transform({2.0, 0.0}, {2.5, -0.5}), Error);
    EXPECT_THROW(synth_pair_t_transform({2.0, 0.0}, {1.5, 0.5}, 1.7), Error);
}

TEST(WeakMSynth, Examples) {
    SynthesisPlan plan = synth_weak_M({{2.0, 0.0}, {0.0, 0.0}}, {{1.0, 1.0}, {0.0, 0.0}}, false);
    expect_sound(plan);
    EXPECT_EQ(plan.branch, PlanBranch::MOnly);
    expect_sound(synth_weak_M({{2.0, 0.0}, {0.0, 0.0}}, {{1.5, 0.2}, {0.0, 0.0}}, true));
    expect_sound(synth_weak_M({{1.0, -1.0}, {0.0, 0.0}}, {{0.5, 0.3}, {0.0, 0.0}}, true));
    EXPECT_THROW(synth_weak_M({{2.0, 0.0}, {0.0, 0.0}}, {{1.5, 0.2}, {0.0, 0.0}}, false), Error);
}

TEST(WeakASynth, Examples) {
    SpectralSummary s{{1.0, 1.0}, {1.0, 0.0}};
    SpectralSummary t{{1.0, 1.0}, {0.6, 0.3}};
    SynthesisPlan plan = synth_weak_A(s, t, true);
    EXPECT_EQ(plan.branch, PlanBranch::AOnly);
    expect_sound(plan);
    expect_sound(synth_weak_A(s, t, false));
}

TEST(RandomFeasible, WeakSingle) {
    std::mt19937_64 rng(101);
    ThermalContext ctx;
    for (int i = 0; i < 200; ++i) {
        Instance in = weak_single_instance(ctx, rng);
        expect_sound(synth_weak_single(in.source, in.target, ctx));
    }
}

TEST(RandomFeasible, NoCatalyst) {
    std::mt19937_64 rng(102);
    ThermalContext ctx;
    for (int i = 0; i < 200; ++i) {
        Instance in = no_catalyst_instance(ctx, rng);
        expect_sound(synth_no_catalyst(in.source, in.target, ctx));
    }
}

TEST(RandomFeasible, PairT) {
    std::mt19937_64 rng(103);
    ThermalContext ctx;
    for (int i = 0; i < 200; ++i) {
        Instance in = pair_t_instance(ctx, rng);
        expect_sound(synth_pair_t_transform(in.source.mu, in.target.mu, std::nullopt, ctx));
    }
}

TEST(RandomFeasible, WeakM) {
    std::mt19937_64 rng(104);
    ThermalContext ctx;
    for (int i = 0; i < 200; ++i) {
        const bool bath = i % 2 == 1;
        Instance in = weak_m_instance(bath, ctx, rng);
        expect_sound(synth_weak_M(in.source, in.target, bath, ctx));
    }
}

TEST(RandomFeasible, WeakA) {
    std::mt19937_64 rng(105);
    ThermalContext ctx;
    for (int i = 0; i < 200; ++i) {
        Instance in = weak_a_instance(ctx, rng);
        expect_sound(synth_weak_A(in.source, in.target, i % 2 == 0, ctx));
    }
}
