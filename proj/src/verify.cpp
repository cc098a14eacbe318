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

#include "gtokit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

namespace gtokit {

namespace {

int uniform_int(Rng &rng, int lo, int hi) {
    if (hi < lo) std::swap(lo, hi);
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double uniform(Rng &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

ModeDecomposition block_diag(const ModeDecomposition &x, const ModeDecomposition &y) {
    const int a = x.n_modes();
    const int b = y.n_modes();
    ModeDecomposition out = ModeDecomposition::thermal(a + b, x.context);
    out.m.topLeftCorner(a, a) = x.m;
    out.a.topLeftCorner(a, a) = x.a;
    out.m.bottomRightCorner(b, b) = y.m;
    out.a.bottomRightCorner(b, b) = y.a;
    if (x.first_moments.size() == 2 * a) out.first_moments.head(2 * a) = x.first_moments;
    if (y.first_moments.size() == 2 * b) out.first_moments.tail(2 * b) = y.first_moments;
    return out;
}

// Attach n_bath thermal modes, apply u to everything, trace the bath.
ModeDecomposition dilate(const ModeDecomposition &d, int n_bath, const ComplexMatrix &u) {
    GtoCircuit c(d.context);
    const int n = d.n_modes();
    if (n_bath > 0) c.attach_bath(n_bath);
    c.apply(PassiveUnitary(u));
    if (n_bath > 0) {
        std::vector<int> bath(static_cast<std::size_t>(n_bath));
        std::iota(bath.begin(), bath.end(), n);
        c.trace_out(bath);
    }
    return run_circuit(d, c);
}

std::vector<int> range_indices(int from, int count) {
    std::vector<int> v(static_cast<std::size_t>(std::max(count, 0)));
    std::iota(v.begin(), v.end(), from);
    return v;
}

// Solves X - K(X) = R with K(X) = u X u^dagger (hermitian) or u X u^T.
std::optional<ComplexMatrix> stein_solve(const ComplexMatrix &u, const ComplexMatrix &r, bool hermitian) {
    const Eigen::Index n = u.rows();
    ComplexMatrix left = hermitian ? ComplexMatrix(u.conjugate()) : u;
    ComplexMatrix kron(n * n, n * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            kron.block(i * n, j * n, n, n) = left(i, j) * u;
        }
    }
    ComplexMatrix sys = ComplexMatrix::Identity(n * n, n * n) - kron;
    Eigen::JacobiSVD<ComplexMatrix> svd(sys);
    const auto &sv = svd.singularValues();
    if (sv(sv.size() - 1) < 1e-6) {
        return std::nullopt;
    }
    Eigen::VectorXcd rhs = Eigen::Map<const Eigen::VectorXcd>(r.data(), n * n);
    Eigen::VectorXcd x = sys.fullPivLu().solve(rhs);
    ComplexMatrix out = Eigen::Map<ComplexMatrix>(x.data(), n, n);
    if (hermitian) {
        out = 0.5 * (out + out.adjoint()).eval();
    } else {
        out = 0.5 * (out + out.transpose()).eval();
    }
    return out;
}

// Catalyst state on modes [ns, ns + nc) of the dilation that the induced
// catalyst map leaves fixed, given the system state.
std::optional<ModeDecomposition> exact_catalyst(const ModeDecomposition &sys, int nc, const ComplexMatrix &u) {
    const int ns = sys.n_modes();
    ComplexMatrix ucc = u.block(ns, ns, nc, nc);
    ComplexMatrix ucs = u.block(ns, 0, nc, ns);
    auto m = stein_solve(ucc, ucs * sys.m * ucs.adjoint(), true);
    auto a = stein_solve(ucc, ucs * sys.a * ucs.transpose(), false);
    if (!m || !a) return std::nullopt;
    ModeDecomposition c = ModeDecomposition::thermal(nc, sys.context);
    c.m = *m;
    c.a = *a;
    return c;
}

void perturb(ModeDecomposition &c, double eps, Rng &rng) {
    if (eps <= 0.0) return;
    const Eigen::Index n = c.m.rows();
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix e(n, n);
    ComplexMatrix f(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            double a = g(rng);
            double b = g(rng);
            e(i, j) = Complex(a, b);
            double x = g(rng);
            double y = g(rng);
            f(i, j) = Complex(x, y);
        }
    }
    e = (e + e.adjoint()).eval();
    f = (f + f.transpose()).eval();
    c.m += eps * e / max_abs(e);
    c.a += eps * f / max_abs(f);
}

double trace_norm_hermitian(const ComplexMatrix &m) {
    double s = 0.0;
    for (double v : hermitian_eigendecomposition(m).eigenvalues) s += std::abs(v);
    return s;
}

double trace_norm(const ComplexMatrix &m) {
    auto sv = singular_values(m);
    return std::accumulate(sv.begin(), sv.end(), 0.0);
}

double refrigerator_gap(const SpectralSummary &s, const SpectralSummary &t) {
    ThermalSplit a = split_thermal(OrderedVector(s.mu));
    ThermalSplit b = split_thermal(OrderedVector(t.mu));
    return std::max({b.plus[0] - a.plus[0], b.minus[0] - a.minus[0], 0.0});
}

struct TrialResult {
    bool accepted = false;
    double violation = 0.0;
    double refrigerator = 0.0;
    double catalyst_residual = 0.0;
    bool check_refrigerator = true;
    std::string description;
};

template <class Fn>
void parallel_for(long n, Fn &&fn) {
    const unsigned threads = std::min<unsigned>(campaign_threads(), static_cast<unsigned>(std::max(n, 1L)));
    std::atomic<long> next{0};
    auto worker = [&] {
        for (long i = next++; i < n; i = next++) fn(i);
    };
    if (threads <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto &th : pool) th.join();
}

TrialResult necessity_trial(Theorem theorem, const DimensionRange &dims, std::uint64_t seed,
                            const CampaignOptions &opt) {
    Rng rng(seed);
    const ThermalContext &ctx = opt.context;
    TrialResult res;
    const bool single = theorem == Theorem::SingleMode || theorem == Theorem::WeakSingle;
    const int ns = single ? 1 : uniform_int(rng, std::max(dims.system_min, 1), std::max(dims.system_max, 1));
    const int nb = uniform_int(rng, std::max(dims.bath_min, 0), std::max(dims.bath_max, 0));
    ModeDecomposition sys = decompose_cm(random_physical_state(ns, ctx, rng));
    SpectralSummary before = spectral_summary(sys);

    const bool catalytic = theorem == Theorem::WeakSingle || theorem == Theorem::WeakM ||
                           theorem == Theorem::WeakA || theorem == Theorem::StrongApprox;
    int nc = 0;
    if (catalytic) {
        int hi = std::max(dims.catalyst_max, 1);
        if (theorem != Theorem::StrongApprox) hi = std::min(hi, ns + nb);
        nc = uniform_int(rng, std::min(std::max(dims.catalyst_min, 1), hi), hi);
    }
    ComplexMatrix u = haar_random_unitary(ns + nc + nb, rng);

    ModeDecomposition joint = sys;
    ModeDecomposition catalyst;
    if (theorem == Theorem::StrongApprox) {
        catalyst = decompose_cm(random_physical_state(nc, ctx, rng));
        joint = block_diag(sys, catalyst);
    } else if (catalytic) {
        auto c = exact_catalyst(sys, nc, u);
        if (!c) {
            res.description = "catalyst map has no unique fixed point";
            return res;
        }
        catalyst = *c;
        perturb(catalyst, opt.catalyst_perturbation, rng);
        catalyst.first_moments = RealVector::Zero(2 * nc);
        if (!is_physical(catalyst)) {
            res.description = "fixed-point catalyst is not physical";
            return res;
        }
        joint = block_diag(sys, catalyst);
    }

    ModeDecomposition out = dilate(joint, nb, u);
    ModeDecomposition sys_out = nc > 0 ? trace_out(out, range_indices(ns, nc)) : out;
    SpectralSummary after = spectral_summary(sys_out);

    if (catalytic && theorem != Theorem::StrongApprox) {
        ModeDecomposition cat_out = trace_out(out, range_indices(0, ns));
        res.catalyst_residual = std::max(max_abs(ComplexMatrix(cat_out.m - catalyst.m)),
                                         max_abs(ComplexMatrix(cat_out.a - catalyst.a)));
        if (res.catalyst_residual > opt.filter_tolerance) {
            res.description = "catalyst not returned within filter tolerance";
            return res;
        }
    }
    res.accepted = true;
    res.refrigerator = refrigerator_gap(before, after);

    switch (theorem) {
        case Theorem::NoCatalyst:
            res.violation = no_catalyst_violation(before, after);
            break;
        case Theorem::SingleMode:
            res.violation = check_single_mode_gto(before, after, 0.0).excess;
            break;
        case Theorem::WeakSingle:
            res.violation = check_weak_single(before, after, 0.0).excess;
            break;
        case Theorem::WeakM:
            res.violation = check_weak_M(before, after, nb > 0, 0.0).excess;
            break;
        case Theorem::WeakA:
            res.violation = check_weak_A(before, after, 0.0).excess;
            break;
        case Theorem::StrongApprox: {
            ComplexMatrix target_m = block_diag(sys_out, catalyst).m;
            ComplexMatrix target_a = block_diag(sys_out, catalyst).a;
            const double dm = trace_norm_hermitian(ComplexMatrix(target_m - out.m));
            const double da = trace_norm(ComplexMatrix(target_a - out.a));
            ThermalSplit a = split_thermal(OrderedVector(before.mu));
            ThermalSplit b = split_thermal(OrderedVector(after.mu));
            const double em = positive_excess(b.plus, a.plus) + positive_excess(b.minus, a.minus);
            const double ea = positive_excess(OrderedVector(after.alpha), OrderedVector(before.alpha));
            res.violation = std::max({em - dm, ea - da, 0.0});
            res.check_refrigerator = false;
            break;
        }
    }
    res.violation = std::max(res.violation, 0.0);
    return res;
}

}  // namespace

ModeDecomposition random_decoupled_state(int n_modes, const ThermalContext &context, Rng &rng) {
    const double nu = context.nu();
    std::vector<double> mu(static_cast<std::size_t>(n_modes));
    std::vector<double> alpha(static_cast<std::size_t>(n_modes));
    for (std::size_t i = 0; i < mu.size(); ++i) {
        mu[i] = uniform(rng, -(nu - 0.5), 3.0 * nu);
        double bound = std::sqrt(std::max((mu[i] + nu) * (mu[i] + nu) - 0.25, 0.0));
        alpha[i] = uniform(rng, 0.0, 1.0) * bound;
    }
    return ModeDecomposition::diagonal(mu, alpha, context);
}

SpectralSummary random_physical_summary(int n_modes, const ThermalContext &context, Rng &rng) {
    ModeDecomposition d = random_decoupled_state(n_modes, context, rng);
    SpectralSummary s;
    for (int i = 0; i < n_modes; ++i) {
        s.mu.push_back(d.m(i, i).real());
        s.alpha.push_back(d.a(i, i).real());
    }
    std::sort(s.mu.begin(), s.mu.end(), std::greater<>());
    std::sort(s.alpha.begin(), s.alpha.end(), std::greater<>());
    return s;
}

GaussianState random_physical_state(int n_modes, const ThermalContext &context, Rng &rng) {
    const double nu = context.nu();
    RealMatrix diag = RealMatrix::Zero(2 * n_modes, 2 * n_modes);
    RealMatrix squeeze = RealMatrix::Zero(2 * n_modes, 2 * n_modes);
    for (int i = 0; i < n_modes; ++i) {
        double v = uniform(rng, 0.5, 0.5 + 3.0 * nu);
        diag(2 * i, 2 * i) = v;
        diag(2 * i + 1, 2 * i + 1) = v;
        double r = uniform(rng, 0.0, 0.8);
        squeeze(2 * i, 2 * i) = std::exp(r);
        squeeze(2 * i + 1, 2 * i + 1) = std::exp(-r);
    }
    ComplexMatrix u1 = haar_random_unitary(n_modes, rng);
    ComplexMatrix u2 = haar_random_unitary(n_modes, rng);
    RealMatrix s = passive_to_symplectic(PassiveUnitary(u1)) * squeeze * passive_to_symplectic(PassiveUnitary(u2));
    GaussianState st;
    st.context = context;
    st.covariance = s * diag * s.transpose();
    st.covariance = 0.5 * (st.covariance + st.covariance.transpose()).eval();
    st.first_moments = RealVector(2 * n_modes);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int i = 0; i < 2 * n_modes; ++i) st.first_moments(i) = g(rng);
    return st;
}

std::string_view theorem_name(Theorem t) {
    switch (t) {
        case Theorem::SingleMode:
            return "single-mode";
        case Theorem::NoCatalyst:
            return "no-catalyst";
        case Theorem::WeakSingle:
            return "weak-single";
        case Theorem::StrongApprox:
            return "strong-approx";
        case Theorem::WeakM:
            return "weak-M";
        case Theorem::WeakA:
            return "weak-A";
    }
    return "unknown";
}

Theorem parse_theorem(std::string_view name) {
    for (Theorem t : {Theorem::SingleMode, Theorem::NoCatalyst, Theorem::WeakSingle, Theorem::StrongApprox,
                      Theorem::WeakM, Theorem::WeakA}) {
        if (theorem_name(t) == name) return t;
    }
    if (name == "strong-single") return Theorem::SingleMode;
    throw Error(ErrorCode::InvalidArgument, "unknown theorem '" + std::string(name) + "'");
}

unsigned campaign_threads() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("GTO_KIT_THREADS")) {
        char *end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

CampaignReport necessity_campaign(Theorem theorem, const DimensionRange &dims, long trials, std::uint64_t seed,
                                  const CampaignOptions &options) {
    const auto start = std::chrono::steady_clock::now();
    CampaignReport rep;
    rep.name = std::string(theorem_name(theorem));
    rep.trials = std::max(trials, 0L);
    std::vector<TrialResult> results(static_cast<std::size_t>(rep.trials));
    parallel_for(rep.trials, [&](long i) {
        results[static_cast<std::size_t>(i)] =
            necessity_trial(theorem, dims, derive_seed(seed, static_cast<std::uint64_t>(i)), options);
    });

    double refrigerator = 0.0;
    double cat_res = 0.0;
    long refrigerator_failures = 0;
    for (long i = 0; i < rep.trials; ++i) {
        const TrialResult &r = results[static_cast<std::size_t>(i)];
        if (!r.accepted) continue;
        ++rep.accepted;
        rep.max_violation = std::max(rep.max_violation, r.violation);
        cat_res = std::max(cat_res, r.catalyst_residual);
        if (r.check_refrigerator) {
            refrigerator = std::max(refrigerator, r.refrigerator);
            if (r.refrigerator > 1e-8) ++refrigerator_failures;
        }
        if (r.violation > options.margin && rep.failures.size() < 20) {
            std::ostringstream os;
            os.precision(6);
            os << "violation " << r.violation << " exceeds margin";
            rep.failures.push_back({derive_seed(seed, static_cast<std::uint64_t>(i)), os.str()});
        }
    }
    rep.stats["acceptance_rate"] = rep.trials > 0 ? static_cast<double>(rep.accepted) / rep.trials : 0.0;
    rep.stats["max_catalyst_residual"] = cat_res;
    rep.stats["filter_tolerance"] = options.filter_tolerance;
    rep.stats["catalyst_perturbation"] = options.catalyst_perturbation;
    rep.stats["margin"] = options.margin;
    if (theorem != Theorem::StrongApprox) {
        rep.stats["refrigerator_gap"] = refrigerator;
        rep.stats["refrigerator_failures"] = static_cast<double>(refrigerator_failures);
    }
    rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

RegionCloud reachable_region_single_mode(double mu_s, double alpha_s, long trials, std::uint64_t seed,
                                         const CampaignOptions &options) {
    if (mu_s == 0.0 || alpha_s == 0.0) {
        throw Error(ErrorCode::DegenerateInput, "reachable region needs mu_s != 0 and alpha_s != 0");
    }
    const ThermalContext &ctx = options.context;
    ModeDecomposition sys = ModeDecomposition::diagonal({mu_s}, {std::abs(alpha_s)}, ctx);
    if (!is_physical(sys)) {
        throw Error(ErrorCode::NotPhysical, "reachable region: source mode is not physical");
    }
    struct Sample {
        bool ok = false;
        RegionPoint point;
    };
    std::vector<Sample> samples(static_cast<std::size_t>(std::max(trials, 0L)));
    parallel_for(static_cast<long>(samples.size()), [&](long i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        Sample &out = samples[static_cast<std::size_t>(i)];
        const bool catalytic = uniform(rng, 0.0, 1.0) < 0.75;
        const int nb = uniform_int(rng, catalytic ? 0 : 1, 2);
        const int nc = catalytic ? 1 : 0;
        ComplexMatrix u = haar_random_unitary(1 + nc + nb, rng);
        ModeDecomposition joint = sys;
        ModeDecomposition catalyst;
        if (catalytic) {
            auto c = exact_catalyst(sys, 1, u);
            if (!c) return;
            catalyst = *c;
            catalyst.first_moments = RealVector::Zero(2);
            if (!is_physical(catalyst)) return;
            joint = block_diag(sys, catalyst);
        }
        ModeDecomposition res = dilate(joint, nb, u);
        if (catalytic) {
            ModeDecomposition cat_out = trace_out(res, {0});
            out.point.catalyst_residual = std::max(std::abs(cat_out.m(0, 0) - catalyst.m(0, 0)),
                                                   std::abs(cat_out.a(0, 0) - catalyst.a(0, 0)));
            if (out.point.catalyst_residual > options.filter_tolerance) return;
            res = trace_out(res, {1});
        }
        out.point.p = res.m(0, 0).real() / mu_s;
        out.point.q = std::abs(res.a(0, 0)) / std::abs(alpha_s);
        out.point.catalytic = catalytic;
        out.point.n_bath = nb;
        out.ok = true;
    });
    RegionCloud cloud;
    cloud.trials = static_cast<long>(samples.size());
    for (const auto &s : samples) {
        if (s.ok) {
            cloud.points.push_back(s.point);
        } else {
            ++cloud.rejected;
        }
    }
    return cloud;
}

namespace {

struct ExcessBoundResult {
    double violation = 0.0;
    double excess = 0.0;
    double distance = 0.0;
};

ExcessBoundResult excess_bound_trial(int max_length, double max_delta, std::uint64_t seed) {
    Rng rng(seed);
    const int len = uniform_int(rng, 1, std::max(max_length, 1));
    std::vector<double> z(static_cast<std::size_t>(len));
    std::vector<double> zt(z.size());
    for (auto &v : z) v = uniform(rng, -2.0, 2.0);
    std::sort(z.begin(), z.end(), std::greater<>());
    for (std::size_t i = 0; i < z.size(); ++i) {
        double drop = uniform(rng, 0.0, 1.0) < 0.3 ? 0.0 : uniform(rng, 0.0, 1.0);
        zt[i] = z[i] - drop;
    }
    std::sort(zt.begin(), zt.end(), std::greater<>());
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> w(z.size());
    double norm = 0.0;
    for (auto &v : w) {
        v = g(rng);
        norm += std::abs(v);
    }
    const double budget = uniform(rng, 0.0, max_delta);
    std::vector<double> zp(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) zp[i] = zt[i] + (norm > 0 ? budget * w[i] / norm : 0.0);
    std::sort(zp.begin(), zp.end(), std::greater<>());
    ExcessBoundResult r;
    for (std::size_t i = 0; i < z.size(); ++i) {
        r.distance += std::abs(zt[i] - zp[i]);
        r.excess += std::max(zp[i] - z[i], 0.0);
    }
    r.violation = r.excess - r.distance;
    return r;
}

}  // namespace

CampaignReport excess_bound_campaign(long trials, int max_length, double max_delta, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    CampaignReport rep;
    rep.name = "excess-bound";
    rep.trials = std::max(trials, 0L);
    std::vector<ExcessBoundResult> results(static_cast<std::size_t>(rep.trials));
    parallel_for(rep.trials, [&](long i) {
        results[static_cast<std::size_t>(i)] =
            excess_bound_trial(max_length, max_delta, derive_seed(seed, static_cast<std::uint64_t>(i)));
    });
    rep.max_violation = 0.0;
    for (long i = 0; i < rep.trials; ++i) {
        const auto &r = results[static_cast<std::size_t>(i)];
        ++rep.accepted;
        rep.max_violation = std::max(rep.max_violation, r.violation);
        if (r.violation > 1e-12 && rep.failures.size() < 20) {
            rep.failures.push_back({derive_seed(seed, static_cast<std::uint64_t>(i)),
                                    "excess exceeds distance by " + std::to_string(r.violation)});
        }
    }
    rep.max_violation = std::max(rep.max_violation, 0.0);
    rep.stats["max_delta"] = max_delta;
    rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

CampaignReport approx_catalyst_probe(const SpectralSummary &source, const SpectralSummary &target,
                                     const std::vector<double> &delta_grid, long trials, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    CampaignReport rep;
    rep.name = "approx-catalyst";
    ThermalSplit a = split_thermal(OrderedVector(source.mu));
    ThermalSplit b = split_thermal(OrderedVector(target.mu));
    const double em = positive_excess(b.plus, a.plus) + positive_excess(b.minus, a.minus);
    const double ea = positive_excess(OrderedVector(target.alpha), OrderedVector(source.alpha));
    const double need = std::max(em, ea);
    const double eps = decision_tolerance(source, target) * 2.0 * static_cast<double>(
                           std::max<std::size_t>({source.n_modes(), target.n_modes(), 1}));
    double boundary = -1.0;
    long disagreements = 0;
    std::uint64_t stream = 0;
    for (double delta : delta_grid) {
        FeasibilityVerdict v = check_strong_approx(source, target, delta);
        const bool expected = need <= delta;
        if (v.feasible && boundary < 0.0) boundary = delta;
        if (v.feasible != expected && std::abs(delta - need) > eps) {
            ++disagreements;
            rep.failures.push_back({0, "decider disagrees with excess at delta " + std::to_string(delta)});
        }
        if (trials > 0) {
            CampaignReport sub = excess_bound_campaign(trials, 6, delta, derive_seed(seed, stream++));
            rep.trials += sub.trials;
            rep.accepted += sub.accepted;
            rep.max_violation = std::max(rep.max_violation, sub.max_violation);
            for (auto &f : sub.failures) {
                if (rep.failures.size() < 20) rep.failures.push_back(f);
            }
        }
    }
    rep.stats["m_excess"] = em;
    rep.stats["a_excess"] = ea;
    rep.stats["boundary_delta"] = boundary;
    rep.stats["grid_disagreements"] = static_cast<double>(disagreements);
    rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<LorenzRow> emit_lorenz_data(const std::vector<std::vector<double>> &series) {
    std::vector<LorenzRow> rows;
    for (std::size_t s = 0; s < series.size(); ++s) {
        std::vector<double> curve = lorenz_curve(OrderedVector(series[s]));
        for (std::size_t k = 0; k < curve.size(); ++k) {
            rows.push_back({s, k + 1, curve[k]});
        }
    }
    return rows;
}

std::string lorenz_csv(const std::vector<LorenzRow> &rows) {
    std::ostringstream os;
    os.precision(17);
    os << "series,k,partial_sum\n";
    for (const auto &r : rows) {
        os << r.series << ',' << r.k << ',' << r.partial_sum << '\n';
    }
    return os.str();
}

double no_catalyst_violation(const SpectralSummary &s, const SpectralSummary &t) {
    ThermalSplit a = split_thermal(OrderedVector(s.mu));
    ThermalSplit b = split_thermal(OrderedVector(t.mu));
    OrderedVector as(s.alpha);
    OrderedVector at(t.alpha);
    double worst = 0.0;
    auto scan = [&worst](const OrderedVector &xp, const OrderedVector &x) {
        std::size_t n = std::max(xp.size(), x.size());
        for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, xp[i] - x[i]);
    };
    scan(b.plus, a.plus);
    scan(b.minus, a.minus);
    scan(at, as);
    return worst;
}

}  // namespace gtokit
