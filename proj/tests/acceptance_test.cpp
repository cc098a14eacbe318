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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is
// non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "gtokit/cli.hpp"
#include "gtokit/engine.hpp"
#include "gtokit/feasibility.hpp"
#include "gtokit/io.hpp"
#include "gtokit/ordering.hpp"
#include "gtokit/synthesis.hpp"
#include "gtokit/verify.hpp"
#include "support.hpp"

using namespace gtokit;
using namespace gtokit::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

Outcome roundtrip_and_convention() {
    Rng rng(1001);
    ThermalContext ctx(1.0, 0.9);
    double rt = 0.0, cons = 0.0;
    for (int i = 0; i < 500; ++i) {
        int n = 1 + i % 6;
        GaussianState s = random_physical_state(n, ctx, rng);
        ModeDecomposition d = decompose_cm(s);
        rt = std::max(rt, max_abs(RealMatrix(reconstruct_cm(d).covariance - s.covariance)));
        PassiveUnitary u(haar_random_unitary(n, rng));
        RealMatrix sym = passive_to_symplectic(u);
        RealMatrix direct = sym * s.covariance * sym.transpose();
        cons = std::max(cons, max_abs(RealMatrix(reconstruct_cm(apply_passive(d, u)).covariance - direct)));
    }
    return {rt <= 1e-12 && cons <= 1e-10, "roundtrip " + fmt(rt) + " <= 1e-12, consistency " + fmt(cons) + " <= 1e-10"};
}

Outcome takagi() {
    std::mt19937_64 rng(1002);
    double rec = 0.0, sv = 0.0;
    for (int i = 0; i < 500; ++i) {
        int n = 1 + i % 8;
        ComplexMatrix a = random_symmetric(n, rng);
        TakagiFactorization t = takagi_factorize(a);
        Eigen::VectorXd s = Eigen::VectorXd::Map(t.singular_values.data(), n);
        rec = std::max(rec, max_abs(ComplexMatrix(t.congruence * s.cast<Complex>().asDiagonal() *
                                                      t.congruence.transpose() -
                                                  a)));
        sv = std::max(sv, max_diff(t.singular_values, svd_oracle(a)));
    }
    return {rec <= 1e-10 && sv <= 1e-10, "reconstruction " + fmt(rec) + ", singular values " + fmt(sv) + " <= 1e-10"};
}

Outcome no_catalyst_necessity() {
    CampaignReport r = necessity_campaign(Theorem::NoCatalyst, DimensionRange{1, 3, 1, 1, 0, 3}, 10000, 1003);
    return {r.failures.empty() && r.max_violation <= 1e-9 && r.trials == 10000,
            std::to_string(r.trials) + " circuits, max violation " + fmt(r.max_violation) + " <= 1e-9"};
}

Outcome single_mode_region() {
    RegionCloud c = reachable_region_single_mode(1.0, 0.5, 2000, 1004);
    double above = -INFINITY, diag = 0.0;
    long interior = 0, strong = 0;
    for (const auto &p : c.points) {
        above = std::max(above, p.q - p.p);
        if (p.p - p.q > 0.05) ++interior;
        if (!p.catalytic) {
            ++strong;
            diag = std::max(diag, std::abs(p.p - p.q));
        }
    }
    const double frac = c.points.empty() ? 0.0 : static_cast<double>(interior) / c.points.size();
    bool ok = c.points.size() >= 1000 && above <= 1e-6 && frac >= 0.10 && strong > 0 && diag <= 1e-6;
    return {ok, std::to_string(c.points.size()) + " points, max q-p " + fmt(above) + ", interior fraction " +
                    fmt(frac) + ", diagonal deviation " + fmt(diag) + " over " + std::to_string(strong)};
}

Outcome synthesis_soundness() {
    ThermalContext ctx;
    std::string detail;
    bool ok = true;
    auto run = [&](const std::string &name, std::uint64_t seed, const std::function<SynthesisPlan(std::mt19937_64 &)> &make) {
        std::mt19937_64 rng(seed);
        double target = 0.0, cat = 0.0;
        long bad = 0, long_chain = 0;
        for (int i = 0; i < 1000; ++i) {
            try {
                SynthesisPlan plan = make(rng);
                SimulationReport r = simulate_plan(plan);
                target = std::max(target, r.target_residual);
                cat = std::max(cat, plan.joint_catalyst_return ? r.catalyst_residual : r.catalyst_local_residual);
                if (!r.ok || r.physicality_residual < -1e-9) ++bad;
                auto it = plan.diagnostics.find("t_steps");
                if (it != plan.diagnostics.end() && it->second > std::max(0, plan.n_system() - 1)) ++long_chain;
            } catch (const Error &) {
                ++bad;
            }
        }
        ok = ok && bad == 0 && long_chain == 0 && target <= 1e-8 && cat <= 1e-8;
        detail += name + " target " + fmt(target) + " catalyst " + fmt(cat) +
                  (bad || long_chain ? " (" + std::to_string(bad + long_chain) + " bad)" : "") + "; ";
    };
    run("weak-single", 2001, [&](auto &rng) {
        Instance in = weak_single_instance(ctx, rng);
        return synth_weak_single(in.source, in.target, ctx);
    });
    run("no-catalyst", 2002, [&](auto &rng) {
        Instance in = no_catalyst_instance(ctx, rng);
        return synth_no_catalyst(in.source, in.target, ctx);
    });
    run("pair-T", 2003, [&](auto &rng) {
        Instance in = pair_t_instance(ctx, rng);
        return synth_pair_t_transform(in.source.mu, in.target.mu, std::nullopt, ctx);
    });
    int k = 0;
    run("weak-M", 2004, [&](auto &rng) {
        const bool bath = (k++ % 2) == 1;
        Instance in = weak_m_instance(bath, ctx, rng);
        return synth_weak_M(in.source, in.target, bath, ctx);
    });
    int j = 0;
    run("weak-A", 2005, [&](auto &rng) {
        const bool bath = (j++ % 2) == 0;
        Instance in = weak_a_instance(ctx, rng);
        return synth_weak_A(in.source, in.target, bath, ctx);
    });
    detail.resize(detail.size() - 2);
    return {ok, detail};
}

Outcome approximate_catalysis() {
    CampaignReport r = excess_bound_campaign(10000, 6, 1.0, 1006);
    Rng rng(1007);
    ThermalContext ctx;
    long disagree = 0;
    for (int i = 0; i < 1000; ++i) {
        int n = 1 + i % 4;
        SpectralSummary s = random_physical_summary(n, ctx, rng);
        SpectralSummary t = random_physical_summary(n, ctx, rng);
        if (i % 3 == 0) t = {apply_random_loss(s.mu, rng), apply_random_loss(s.alpha, rng)};
        if (check_strong_approx(s, t, 0.0).feasible != check_no_catalyst(s, t).feasible) ++disagree;
    }
    return {r.failures.empty() && r.trials == 10000 && disagree == 0,
            std::to_string(r.trials) + " triples, " + std::to_string(r.failures.size()) +
                " violations (max " + fmt(r.max_violation) + "); delta=0 disagreements " + std::to_string(disagree) +
                "/1000"};
}

Outcome majorization_machinery() {
    std::mt19937_64 rng(1008);
    long mismatch = 0, lorenz_mismatch = 0;
    for (int i = 0; i < 10000; ++i) {
        std::size_t n = 1 + i % 8;
        std::vector<double> y = dyadic_vector(n, rng);
        std::vector<double> x = i % 2 ? dyadic_vector(n, rng) : apply_random_loss(y, rng);
        if (i % 4 == 0) {
            // Exact T-image on dyadic values: average two entries.
            std::size_t a = i % n, b = (i / 4) % n;
            double m = 0.5 * (y[a] + y[b]);
            x = y;
            x[a] = x[b] = m;
            x = sorted_desc(x);
        }
        OrderedVector oy(y), ox(x);
        bool w = weak_majorizes(oy, ox, 0.0);
        if (w != weak_majorizes_by_ga(oy, ox, 0.0)) ++mismatch;
        if (majorizes(oy, ox, 0.0) != majorizes_by_ga(oy, ox, 0.0)) ++mismatch;
        std::vector<double> ly = lorenz_curve(oy), lx = lorenz_curve(ox);
        bool nested = true;
        for (std::size_t k = 0; k < n; ++k) nested = nested && lx[k] <= ly[k];
        if (nested != w) ++lorenz_mismatch;
    }
    return {mismatch == 0 && lorenz_mismatch == 0, "10000 pairs, g_a/partial-sum mismatches " +
                                                       std::to_string(mismatch) + ", Lorenz mismatches " +
                                                       std::to_string(lorenz_mismatch)};
}

Outcome refrigerator() {
    double gap = 0.0;
    long fails = 0;
    std::string names;
    std::uint64_t seed = 3000;
    for (Theorem t : {Theorem::SingleMode, Theorem::NoCatalyst, Theorem::WeakSingle, Theorem::WeakM, Theorem::WeakA}) {
        CampaignReport r = necessity_campaign(t, DimensionRange{}, 3000, seed++);
        gap = std::max(gap, r.stats.at("refrigerator_gap"));
        fails += static_cast<long>(r.stats.at("refrigerator_failures"));
        fails += static_cast<long>(r.failures.size());
    }
    return {fails == 0 && gap <= 1e-8, "5 campaigns x 3000 runs, largest improvement " + fmt(gap) + " <= 1e-8"};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome cli_pipeline() {
    fs::path dir = fs::temp_directory_path() / "gtokit_acceptance_cli";
    fs::remove_all(dir);
    fs::create_directories(dir);
    struct Case {
        std::string theorem, mode, source, target;
        bool bath;
    };
    std::vector<Case> cases{
        {"weak-single", "weak-single", R"({"mu":[1.0],"alpha":[0.5]})", R"({"mu":[0.5],"alpha":[0.1]})", false},
        {"no-catalyst", "no-catalyst", R"({"mu":[2.0,1.0],"alpha":[1.0,0.0]})", R"({"mu":[1.0,1.0],"alpha":[0.5,0.0]})",
         false},
        {"weak-M", "weak-M", R"({"mu":[2.0,0.5,-0.3],"alpha":[0.4,0.2,0.0]})",
         R"({"mu":[1.0,0.6,0.1],"alpha":[0.4,0.2,0.0]})", true},
        {"weak-A", "weak-A", R"({"mu":[1.0,0.5,0.0],"alpha":[1.0,0.6,0.1]})",
         R"({"mu":[1.0,0.5,0.0],"alpha":[0.7,0.5,0.2]})", true},
    };
    bool ok = true;
    double worst = 0.0;
    std::string first_error;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const Case &c = cases[i];
        auto s = dir / ("s" + std::to_string(i) + ".json");
        auto t = dir / ("t" + std::to_string(i) + ".json");
        std::ofstream(s) << c.source;
        std::ofstream(t) << c.target;
        std::string outputs[2];
        for (int run = 0; run < 2; ++run) {
            std::ostringstream out, err;
            std::string tag = std::to_string(i) + "_" + std::to_string(run);
            auto verdict = dir / ("v" + tag + ".json");
            auto plan = dir / ("p" + tag + ".json");
            auto sim = dir / ("r" + tag + ".json");
            std::vector<std::string> check{"check", "--theorem", c.theorem, "--source", s.string(),
                                           "--target", t.string(), "--out", verdict.string()};
            std::vector<std::string> synth{"synth", "--mode", c.mode, "--source", s.string(),
                                           "--target", t.string(), "--out", plan.string()};
            if (c.bath) {
                check.push_back("--with-bath");
                synth.push_back("--with-bath");
            }
            int rc = cli::run(check, out, err);
            rc = rc == 0 ? cli::run(synth, out, err) : rc;
            rc = rc == 0 ? cli::run({"simulate", "--plan", plan.string(), "--out", sim.string()}, out, err) : rc;
            if (rc != 0) {
                ok = false;
                if (first_error.empty()) first_error = c.mode + ": exit " + std::to_string(rc) + " " + err.str();
                continue;
            }
            Json r = parse_json(slurp(sim));
            worst = std::max(worst, r["target_residual"].get<double>());
            ok = ok && r["ok"].get<bool>();
            outputs[run] = slurp(verdict) + slurp(plan) + slurp(sim);
        }
        ok = ok && !outputs[0].empty() && outputs[0] == outputs[1];
    }
    std::string region[2];
    for (auto &text : region) {
        std::ostringstream out, err;
        cli::run({"sample-region", "--mu", "1", "--alpha", "0.5", "--trials", "200", "--seed", "9"}, out, err);
        text = out.str();
    }
    ok = ok && !region[0].empty() && region[0] == region[1] && worst <= 1e-8;
    fs::remove_all(dir);
    return {ok, std::to_string(cases.size()) + " pipelines, worst residual " + fmt(worst) +
                    ", repeat runs byte-identical" + (first_error.empty() ? "" : "; " + first_error)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"roundtrip and passive-action convention", roundtrip_and_convention},
        {"Takagi factorization", takagi},
        {"no-catalyst necessity on random circuits", no_catalyst_necessity},
        {"single-mode reachable region", single_mode_region},
        {"synthesis soundness", synthesis_soundness},
        {"approximate catalysis bound", approximate_catalysis},
        {"majorization machinery", majorization_machinery},
        {"no refrigeration", refrigerator},
        {"end-to-end CLI", cli_pipeline},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failed;
        std::printf("%s criterion %zu (%s): %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
