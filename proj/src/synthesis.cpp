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

#include "gtokit/synthesis.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <variant>
#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>

namespace gtokit {

SpectralSummary CatalystSpec::summary() const {
    SpectralSummary s{mu, alpha};
    std::sort(s.mu.begin(), s.mu.end(), std::greater<>());
    std::sort(s.alpha.begin(), s.alpha.end(), std::greater<>());
    return s;
}

std::string_view plan_branch_name(PlanBranch b) {
    switch (b) {
        case PlanBranch::Both:
            return "both";
        case PlanBranch::MOnly:
            return "M";
        case PlanBranch::AOnly:
            return "A";
    }
    return "unknown";
}

namespace {

SpectralSummary padded_summary(const SpectralSummary &s, std::size_t n) {
    if (s.mu.size() != s.alpha.size()) {
        throw Error(ErrorCode::ShapeMismatch, "summary: mu and alpha lengths differ");
    }
    return {OrderedVector(s.mu).padded(n).values(), OrderedVector(s.alpha).padded(n).values()};
}

std::vector<double> concat(std::vector<double> a, const std::vector<double> &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

ComplexMatrix to_complex(const RealMatrix &m) {
    return m.cast<Complex>();
}

// Weak-catalyst coupling that lowers alpha to alpha_bar at fixed mu when
// the catalyst holds (mu, (alpha - alpha_bar) / 2).
ComplexMatrix alpha_reduction_unitary(double a) {
    const Complex i(0.0, 1.0);
    ComplexMatrix u(2, 2);
    u << std::sqrt(a), i * std::sqrt(1.0 - a), std::sqrt(1.0 - a), -i * std::sqrt(a);
    return u;
}

double reduction_mixing(double alpha, double alpha_bar) {
    return (alpha + alpha_bar) / (3.0 * alpha - alpha_bar);
}

struct PairOp {
    int j;
    int k;
    int catalyst;
    RealMatrix u;
};

struct LossOp {
    int mode;
    double r;
};

struct ReductionOp {
    int mode;
    int catalyst;
    double a;
};

using Op = std::variant<PairOp, LossOp, ReductionOp>;

// Plans are assembled as abstract operations first, so the catalyst count is
// known before any unitary is sized.
struct PlanBuilder {
    int n_system = 0;
    CatalystSpec catalyst;
    std::vector<Op> ops;
    int t_steps = 0;
    int loss_steps = 0;
    bool joint_return = true;

    int add_catalyst(double mu, double alpha) {
        catalyst.mu.push_back(mu);
        catalyst.alpha.push_back(alpha);
        return catalyst.n_modes() - 1;
    }

    GtoCircuit emit(const ThermalContext &context) const {
        GtoCircuit c(context);
        const int n = n_system + catalyst.n_modes();
        for (const auto &op : ops) {
            if (const auto *p = std::get_if<PairOp>(&op)) {
                c.apply(PassiveUnitary::embed(n, {p->j, p->k, n_system + p->catalyst}, to_complex(p->u)));
            } else if (const auto *l = std::get_if<LossOp>(&op)) {
                c.attach_bath(1);
                c.apply(PassiveUnitary::beam_splitter(n + 1, l->mode, n, l->r));
                c.trace_out({n});
            } else {
                const auto &red = std::get<ReductionOp>(op);
                c.apply(PassiveUnitary::embed(n, {red.mode, n_system + red.catalyst},
                                              alpha_reduction_unitary(red.a)));
            }
        }
        return c;
    }
};

enum class Lane { M, A };

// Realizes a chain of T/L steps on the listed modes. values are the actual
// (signed) entries at each chain position; every position's mode starts
// uncorrelated with all catalysts.
void build_chain(PlanBuilder &b, const std::vector<int> &modes, std::vector<double> values,
                 const std::vector<TransformStep> &steps, Lane lane, bool with_bath) {
    const std::size_t n_steps = steps.size();
    // Modes that get a catalyst-assisted loss step later want to stay free of
    // catalyst correlations.
    std::set<std::size_t> reduced_later;
    if (!with_bath) {
        for (const auto &s : steps) {
            if (s.kind == TransformStep::Kind::L) reduced_later.insert(s.first);
        }
    }
    std::set<std::size_t> correlated;
    for (std::size_t idx = 0; idx < n_steps; ++idx) {
        const TransformStep &s = steps[idx];
        if (s.kind == TransformStep::Kind::T) {
            const std::size_t j = s.first;
            const std::size_t k = s.second;
            const double t = s.parameter;
            const double uj = values[j];
            const double uk = values[k];
            const double vj = t * uj + (1.0 - t) * uk;
            const double vk = (1.0 - t) * uj + t * uk;
            bool j_later = false;
            bool k_later = false;
            for (std::size_t later = idx + 1; later < n_steps; ++later) {
                const auto &o = steps[later];
                if (o.kind != TransformStep::Kind::T) continue;
                j_later = j_later || o.first == j || o.second == j;
                k_later = k_later || o.first == k || o.second == k;
            }
            // The decoupled mode is the one still in play afterwards.
            bool decouple_j;
            if (j_later != k_later) {
                decouple_j = j_later;
            } else {
                decouple_j = reduced_later.count(j) > 0 || reduced_later.count(k) == 0;
            }
            const double c = decouple_j ? vj : vk;
            int cat = lane == Lane::M ? b.add_catalyst(c, 0.0) : b.add_catalyst(c, c);
            b.ops.emplace_back(PairOp{modes[j], modes[k], cat, pair_t_unitary(uj, uk, vj, vk, c)});
            correlated.insert(decouple_j ? k : j);
            values[j] = vj;
            values[k] = vk;
            ++b.t_steps;
        } else {
            const std::size_t i = s.first;
            const double r = s.parameter;
            if (with_bath) {
                b.ops.emplace_back(LossOp{modes[i], r});
            } else {
                const double alpha = values[i];
                if (alpha <= 0.0) continue;
                const double alpha_bar = r * alpha;
                const double alpha_c = 0.5 * (alpha - alpha_bar);
                int cat = b.add_catalyst(alpha_c, alpha_c);
                b.ops.emplace_back(ReductionOp{modes[i], cat, reduction_mixing(alpha, alpha_bar)});
                if (correlated.count(i)) b.joint_return = false;
            }
            values[i] *= r;
            ++b.loss_steps;
        }
    }
}

SynthesisPlan finish(PlanBuilder &b, const SpectralSummary &source, const SpectralSummary &target,
                     PlanBranch branch, const ThermalContext &context) {
    SynthesisPlan plan;
    plan.circuit = b.emit(context);
    if (b.catalyst.n_modes() > 0) {
        plan.catalyst = b.catalyst;
    }
    plan.source = source;
    plan.expected_target = target;
    plan.branch = branch;
    plan.joint_catalyst_return = b.joint_return;
    plan.diagnostics["t_steps"] = b.t_steps;
    plan.diagnostics["loss_steps"] = b.loss_steps;
    plan.diagnostics["catalyst_modes"] = b.catalyst.n_modes();
    return plan;
}

void require_feasible(const FeasibilityVerdict &v, const char *what) {
    if (!v.feasible) {
        throw Error(ErrorCode::Infeasible, std::string(what) + ": " + v.violation.value_or("infeasible"));
    }
}

}  // namespace

RealMatrix pair_t_unitary(double u1, double u2, double v1, double v2, double c) {
    const double hi = std::max(u1, u2);
    const double lo = std::min(u1, u2);
    const double d1 = std::max(v1, v2);
    const double d2 = std::min(v1, v2);
    const double scale = std::max({1.0, std::abs(hi), std::abs(lo), std::abs(c)});
    const double eps = 1e-9 * scale;
    if (std::abs((u1 + u2) - (v1 + v2)) > eps || d1 > hi + eps || d2 < lo - eps) {
        throw Error(ErrorCode::Infeasible, "pair T-transform: target pair is not a T-transform of the source");
    }
    if (c > d1 + eps || c < d2 - eps) {
        throw Error(ErrorCode::InvalidArgument, "pair T-transform: catalyst value outside the target interval");
    }
    double b_hi2;
    double b_lo2;
    if (d1 - d2 > 0.0) {
        const double w = std::clamp((d1 - c) / (d1 - d2), 0.0, 1.0);
        b_hi2 = (hi - d1) * (d1 - lo) * w;
        b_lo2 = (hi - d2) * (d2 - lo) * (1.0 - w);
    } else {
        b_hi2 = 0.25 * (hi - lo) * (hi - lo);
        b_lo2 = 0.0;
    }
    const double b_hi = std::sqrt(std::max(b_hi2, 0.0));
    const double b_lo = std::sqrt(std::max(b_lo2, 0.0));
    const bool first_is_hi = v1 >= v2;

    Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
    h(0, 0) = v1;
    h(1, 1) = v2;
    h(2, 2) = c;
    h(0, 2) = h(2, 0) = first_is_hi ? b_hi : b_lo;
    h(1, 2) = h(2, 1) = first_is_hi ? b_lo : b_hi;

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(h);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::SolverFailure, "pair T-transform: eigen solver did not converge");
    }
    // Spectra agree as multisets, so sorted order pairs them up.
    std::array<double, 3> input{u1, u2, c};
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int a, int b) { return input[a] < input[b]; });
    RealMatrix u(3, 3);
    for (int r = 0; r < 3; ++r) {
        u.col(order[r]) = solver.eigenvectors().col(r);
    }
    Eigen::Vector3d diag(u1, u2, c);
    double residual = (u * diag.asDiagonal() * u.transpose() - RealMatrix(h)).cwiseAbs().maxCoeff();
    if (residual > 1e-10 * scale) {
        throw Error(ErrorCode::SolverFailure,
                    "pair T-transform: construction residual " + std::to_string(residual));
    }
    return u;
}

SimulationReport simulate_plan(const SynthesisPlan &plan, double tol) {
    const int ns = plan.n_system();
    const int nc = plan.n_catalyst();
    const CatalystSpec cat = plan.catalyst.value_or(CatalystSpec{});
    const ThermalContext &ctx = plan.circuit.context();
    ModeDecomposition initial =
        ModeDecomposition::diagonal(concat(plan.source.mu, cat.mu), concat(plan.source.alpha, cat.alpha), ctx);

    SimulationReport rep;
    ModeDecomposition out = run_circuit(initial, plan.circuit);
    if (out.n_modes() != ns + nc) {
        throw Error(ErrorCode::ModeCountMismatch, "simulate_plan: circuit does not return system plus catalyst");
    }
    rep.final_state = out;
    std::vector<int> sys_idx(static_cast<std::size_t>(ns));
    std::iota(sys_idx.begin(), sys_idx.end(), 0);
    std::vector<int> cat_idx(static_cast<std::size_t>(nc));
    std::iota(cat_idx.begin(), cat_idx.end(), ns);
    ModeDecomposition sys = trace_out(out, cat_idx);
    rep.achieved = spectral_summary(sys);

    const bool check_m = plan.branch != PlanBranch::AOnly;
    const bool check_a = plan.branch != PlanBranch::MOnly;
    const SpectralSummary expect = padded_summary(plan.expected_target, static_cast<std::size_t>(ns));
    for (int i = 0; i < ns; ++i) {
        auto k = static_cast<std::size_t>(i);
        if (check_m) rep.target_residual = std::max(rep.target_residual, std::abs(rep.achieved.mu[k] - expect.mu[k]));
        if (check_a)
            rep.target_residual = std::max(rep.target_residual, std::abs(rep.achieved.alpha[k] - expect.alpha[k]));
    }

    if (nc > 0) {
        ModeDecomposition c_block = trace_out(out, sys_idx);
        ModeDecomposition c_init = trace_out(initial, sys_idx);
        if (check_m) {
            rep.catalyst_residual = std::max(rep.catalyst_residual, max_abs(ComplexMatrix(c_block.m - c_init.m)));
            rep.catalyst_local_residual = std::max(rep.catalyst_local_residual,
                                                   (c_block.m.diagonal() - c_init.m.diagonal()).cwiseAbs().maxCoeff());
        }
        if (check_a) {
            rep.catalyst_residual = std::max(rep.catalyst_residual, max_abs(ComplexMatrix(c_block.a - c_init.a)));
            rep.catalyst_local_residual = std::max(rep.catalyst_local_residual,
                                                   (c_block.a.diagonal() - c_init.a.diagonal()).cwiseAbs().maxCoeff());
        }
        if (ns > 0) {
            rep.system_catalyst_correlation = std::max(max_abs(ComplexMatrix(out.m.block(0, ns, ns, nc))),
                                                       max_abs(ComplexMatrix(out.a.block(0, ns, ns, nc))));
        }
        rep.catalyst_physicality_residual = physicality_residual(reconstruct_cm(c_init).covariance);
        const double restore = plan.joint_catalyst_return ? rep.catalyst_residual : rep.catalyst_local_residual;
        rep.catalyst_restored = restore <= tol;
        if (cat.role == CatalystRole::Strong) {
            rep.catalyst_restored = rep.catalyst_restored && rep.system_catalyst_correlation <= tol;
        }
    }
    rep.physicality_residual = out.n_modes() > 0 ? physicality_residual(reconstruct_cm(out).covariance) : 0.0;
    rep.ok = rep.target_residual <= tol && rep.catalyst_restored;
    return rep;
}

SynthesisPlan synth_single_mode(const SpectralSummary &source, double p, double phase,
                                const ThermalContext &context) {
    if (source.n_modes() != 1 || source.alpha.size() != 1) {
        throw Error(ErrorCode::ModeCountMismatch, "synth_single_mode: expects a single-mode source");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::ParameterOutOfRange, "synth_single_mode: p outside [0, 1]");
    }
    SynthesisPlan plan;
    plan.circuit = GtoCircuit(context);
    if (phase != 0.0) {
        plan.circuit.apply(PassiveUnitary::phase_shift(1, 0, phase));
    }
    if (p < 1.0) {
        plan.circuit.attach_bath(1);
        plan.circuit.apply(PassiveUnitary::beam_splitter(2, 0, 1, p));
        plan.circuit.trace_out({1});
    }
    plan.source = source;
    plan.expected_target = {{p * source.mu[0]}, {p * source.alpha[0]}};
    plan.diagnostics["p"] = p;
    plan.diagnostics["loss_steps"] = p < 1.0 ? 1.0 : 0.0;
    return plan;
}

namespace {

// Matches source modes to target entries with one common ratio per mode.
bool match_ratios(const SpectralSummary &src, const SpectralSummary &tgt, double eps, std::size_t i,
                  std::vector<bool> &mu_used, std::vector<bool> &al_used, std::vector<double> &r, long &budget) {
    const std::size_t n = src.mu.size();
    if (i == n) return true;
    if (--budget < 0) return false;
    const double mu = src.mu[i];
    const double al = src.alpha[i];
    for (std::size_t dp = 0; dp < n; ++dp) {
        const std::size_t pm = (i + dp) % n;
        if (mu_used[pm]) continue;
        const double mup = tgt.mu[pm];
        std::optional<double> ratio;
        if (std::abs(mu) > eps) {
            ratio = mup / mu;
            if (*ratio * std::abs(mu) < -eps || (*ratio - 1.0) * std::abs(mu) > eps) continue;
        } else if (std::abs(mup) > eps) {
            continue;
        }
        for (std::size_t dq = 0; dq < n; ++dq) {
            const std::size_t qa = (i + dq) % n;
            if (al_used[qa]) continue;
            const double alp = tgt.alpha[qa];
            double rr;
            if (ratio) {
                rr = std::clamp(*ratio, 0.0, 1.0);
                if (std::abs(alp - rr * al) > eps) continue;
            } else if (al > eps) {
                rr = alp / al;
                if (rr * al < -eps || (rr - 1.0) * al > eps) continue;
                rr = std::clamp(rr, 0.0, 1.0);
            } else {
                if (std::abs(alp) > eps) continue;
                rr = 1.0;
            }
            mu_used[pm] = al_used[qa] = true;
            r[i] = rr;
            if (match_ratios(src, tgt, eps, i + 1, mu_used, al_used, r, budget)) return true;
            mu_used[pm] = al_used[qa] = false;
        }
    }
    return false;
}

}  // namespace

SynthesisPlan synth_no_catalyst(const SpectralSummary &source, const SpectralSummary &target,
                                const ThermalContext &context) {
    require_feasible(check_no_catalyst(source, target), "synth_no_catalyst");
    const std::size_t n = std::max(source.n_modes(), target.n_modes());
    SpectralSummary src = padded_summary(source, n);
    SpectralSummary tgt = padded_summary(target, n);
    const double eps = decision_tolerance(src, tgt);
    std::vector<bool> mu_used(n, false);
    std::vector<bool> al_used(n, false);
    std::vector<double> r(n, 1.0);
    long budget = 200000;
    if (!match_ratios(src, tgt, eps, 0, mu_used, al_used, r, budget)) {
        throw Error(ErrorCode::RatioConflict,
                    "synth_no_catalyst: no per-mode ratio assignment scales both mu and alpha onto the target");
    }
    PlanBuilder b;
    b.n_system = static_cast<int>(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (r[i] < 1.0) {
            b.ops.emplace_back(LossOp{static_cast<int>(i), r[i]});
            ++b.loss_steps;
        }
    }
    return finish(b, src, tgt, PlanBranch::Both, context);
}

SynthesisPlan synth_weak_single(const SpectralSummary &source, const SpectralSummary &target,
                                const ThermalContext &context) {
    FeasibilityVerdict v = check_weak_single(source, target);
    require_feasible(v, "synth_weak_single");
    const double eps = decision_tolerance(source, target);
    const double p = v.witness.at("p");
    const double q = v.witness.at("q");
    const double mu = source.mu[0];
    const double alpha = source.alpha[0];

    SynthesisPlan plan;
    if (alpha <= eps) {
        plan = synth_single_mode(source, p, 0.0, context);
    } else if (std::abs(mu) <= eps) {
        // Thermal-temperature mode: a plain loss step at ratio q.
        plan = synth_single_mode(source, q, 0.0, context);
        plan.diagnostics["degenerate_mu"] = 1.0;
    } else if (p - q <= 1e-12 || p <= 0.0) {
        plan = synth_single_mode(source, p, 0.0, context);
    } else {
        const double alpha_bar = target.alpha[0] / p;
        const double alpha_c = 0.5 * (alpha - alpha_bar);
        const double a = reduction_mixing(alpha, alpha_bar);
        PlanBuilder b;
        b.n_system = 1;
        int cat = b.add_catalyst(mu, alpha_c);
        b.ops.emplace_back(ReductionOp{0, cat, a});
        if (p < 1.0) {
            b.ops.emplace_back(LossOp{0, p});
            ++b.loss_steps;
        }
        plan = finish(b, source, target, PlanBranch::Both, context);
        plan.diagnostics["alpha_bar"] = alpha_bar;
        plan.diagnostics["mixing_a"] = a;
    }
    plan.expected_target = target;
    plan.diagnostics["p"] = p;
    plan.diagnostics["q"] = q;
    return plan;
}

SynthesisPlan synth_pair_t_transform(const std::vector<double> &mu_pair, const std::vector<double> &target,
                                     std::optional<double> catalyst_mu, const ThermalContext &context) {
    if (mu_pair.size() != 2 || target.size() != 2) {
        throw Error(ErrorCode::ModeCountMismatch, "synth_pair_t_transform: expects two-mode pairs");
    }
    const double mu1 = std::max(mu_pair[0], mu_pair[1]);
    const double mu2 = std::min(mu_pair[0], mu_pair[1]);
    const double t1 = std::max(target[0], target[1]);
    const double t2 = std::min(target[0], target[1]);
    const double eps = 1e-9 * std::max({1.0, std::abs(mu1), std::abs(mu2), std::abs(t1), std::abs(t2)});
    if (t1 > mu1 + eps || std::abs((t1 + t2) - (mu1 + mu2)) > eps) {
        throw Error(ErrorCode::Infeasible, "synth_pair_t_transform: target is not a T-transform of the source");
    }
    const double c = catalyst_mu.value_or(0.5 * (t1 + t2));
    PlanBuilder b;
    b.n_system = 2;
    if (mu1 - t1 > 0.0) {
        int cat = b.add_catalyst(c, 0.0);
        b.ops.emplace_back(PairOp{0, 1, cat, pair_t_unitary(mu1, mu2, t1, t2, c)});
        b.t_steps = 1;
    }
    SpectralSummary src{{mu1, mu2}, {0.0, 0.0}};
    SpectralSummary tgt{{t1, t2}, {0.0, 0.0}};
    SynthesisPlan plan = finish(b, src, tgt, PlanBranch::Both, context);
    plan.diagnostics["catalyst_mu"] = c;
    return plan;
}

SynthesisPlan synth_weak_M(const SpectralSummary &source, const SpectralSummary &target, bool with_bath,
                           const ThermalContext &context) {
    require_feasible(check_weak_M(source, target, with_bath), "synth_weak_M");
    const std::size_t n = std::max(source.n_modes(), target.n_modes());
    SpectralSummary src = padded_summary(source, n);
    SpectralSummary tgt = padded_summary(target, n);
    const double eps = decision_tolerance(src, tgt);
    PlanBuilder b;
    b.n_system = static_cast<int>(n);

    if (!with_bath) {
        std::vector<int> modes(n);
        std::iota(modes.begin(), modes.end(), 0);
        auto steps = t_transform_chain(OrderedVector(src.mu), OrderedVector(tgt.mu), eps);
        build_chain(b, modes, src.mu, steps, Lane::M, true);
        return finish(b, src, tgt, PlanBranch::MOnly, context);
    }

    struct Branch {
        double sign;
        std::vector<int> modes;       // source modes, largest magnitude first
        std::vector<double> from;     // magnitudes
        std::vector<double> to;       // target magnitudes
    };
    Branch plus{1.0, {}, {}, {}};
    Branch minus{-1.0, {}, {}, {}};
    std::deque<int> zero_pool;
    for (std::size_t i = 0; i < n; ++i) {
        if (src.mu[i] > 0.0) {
            plus.modes.push_back(static_cast<int>(i));
            plus.from.push_back(src.mu[i]);
        } else if (src.mu[i] == 0.0) {
            zero_pool.push_back(static_cast<int>(i));
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        if (src.mu[i] < 0.0) {
            minus.modes.push_back(static_cast<int>(i));
            minus.from.push_back(-src.mu[i]);
        }
    }
    ThermalSplit split = split_thermal(OrderedVector(tgt.mu));
    plus.to = split.plus.values();
    minus.to = split.minus.values();

    // A branch that does not need extra modes goes first; modes it brings to
    // zero are thermal and uncorrelated afterwards, so the other branch can
    // take them.
    std::vector<Branch *> order{&plus, &minus};
    if (plus.to.size() > plus.from.size()) std::swap(order[0], order[1]);

    for (Branch *br : order) {
        const std::size_t len = std::max(br->from.size(), br->to.size());
        if (len == 0) continue;
        std::vector<int> modes = br->modes;
        while (modes.size() < len) {
            if (zero_pool.empty()) {
                throw Error(ErrorCode::SolverFailure, "synth_weak_M: ran out of thermal modes to pad a branch");
            }
            modes.push_back(zero_pool.front());
            zero_pool.pop_front();
        }
        OrderedVector y = OrderedVector(br->from).padded(len);
        OrderedVector x = OrderedVector(br->to).padded(len);
        auto steps = weak_majorization_chain(y, x, eps);
        std::vector<double> values(len);
        for (std::size_t i = 0; i < len; ++i) values[i] = br->sign * y[i];
        std::vector<TransformStep> signed_steps = steps;
        build_chain(b, modes, values, signed_steps, Lane::M, true);
        for (std::size_t i = 0; i < len; ++i) {
            if (x[i] == 0.0) zero_pool.push_back(modes[i]);
        }
    }
    return finish(b, src, tgt, PlanBranch::MOnly, context);
}

SynthesisPlan synth_weak_A(const SpectralSummary &source, const SpectralSummary &target, bool with_bath,
                           const ThermalContext &context) {
    require_feasible(check_weak_A(source, target), "synth_weak_A");
    const std::size_t n = std::max(source.n_modes(), target.n_modes());
    SpectralSummary src = padded_summary(source, n);
    SpectralSummary tgt = padded_summary(target, n);
    const double eps = decision_tolerance(src, tgt);
    PlanBuilder b;
    b.n_system = static_cast<int>(n);
    std::vector<int> modes(n);
    std::iota(modes.begin(), modes.end(), 0);
    auto steps = weak_majorization_chain(OrderedVector(src.alpha), OrderedVector(tgt.alpha), eps);
    build_chain(b, modes, src.alpha, steps, Lane::A, with_bath);
    SynthesisPlan plan = finish(b, src, tgt, PlanBranch::AOnly, context);
    plan.diagnostics["with_bath"] = with_bath ? 1.0 : 0.0;
    return plan;
}

}  // namespace gtokit
