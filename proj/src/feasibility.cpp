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

#include "gtokit/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gtokit {

std::string_view claim_name(Claim c) {
    switch (c) {
        case Claim::None:
            return "none";
        case Claim::TransformationExists:
            return "transformation-exists";
        case Claim::BranchRealizable:
            return "branch-realizable";
        case Claim::NecessaryOnly:
            return "necessary-conditions-pass";
    }
    return "unknown";
}

namespace {

void require_shape(const SpectralSummary &s, const char *what) {
    if (s.mu.size() != s.alpha.size()) {
        throw Error(ErrorCode::ShapeMismatch, std::string(what) + ": mu and alpha lengths differ");
    }
}

void require_single(const SpectralSummary &s, const SpectralSummary &t, const char *what) {
    require_shape(s, what);
    require_shape(t, what);
    if (s.n_modes() != 1 || t.n_modes() != 1) {
        throw Error(ErrorCode::ModeCountMismatch, std::string(what) + ": expects single-mode summaries");
    }
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

FeasibilityVerdict fail(std::string why, double excess) {
    FeasibilityVerdict v;
    v.feasible = false;
    v.claim = Claim::None;
    v.violation = std::move(why);
    v.excess = std::max(excess, 0.0);
    return v;
}

std::size_t modes_of(const SpectralSummary &s, const SpectralSummary &t) {
    return std::max<std::size_t>({s.n_modes(), t.n_modes(), 1});
}

// First index with xp_i > x_i + slack, or npos.
std::size_t first_breach(const OrderedVector &xp, const OrderedVector &x, double slack) {
    std::size_t n = std::max(xp.size(), x.size());
    OrderedVector a = xp.padded(n);
    OrderedVector b = x.padded(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] - (b[i] + slack) > 0.0) return i;
    }
    return std::string::npos;
}

}  // namespace

double decision_tolerance(const SpectralSummary &s, const SpectralSummary &t, double rel_tol) {
    double scale = 1.0;
    for (const auto *v : {&s.mu, &s.alpha, &t.mu, &t.alpha}) {
        for (double x : *v) scale = std::max(scale, std::abs(x));
    }
    return rel_tol * scale;
}

double slack_excess(const OrderedVector &xp, const OrderedVector &x, double slack) {
    std::size_t n = std::max(xp.size(), x.size());
    OrderedVector a = xp.padded(n);
    OrderedVector b = x.padded(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        total += std::max(a[i] - (b[i] + slack), 0.0);
    }
    return total;
}

double partial_sum_gap(const OrderedVector &y, const OrderedVector &x) {
    std::size_t n = std::max(y.size(), x.size());
    OrderedVector a = y.padded(n);
    OrderedVector b = x.padded(n);
    double sy = 0.0;
    double sx = 0.0;
    double gap = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        sy += a[k];
        sx += b[k];
        gap = std::max(gap, sx - sy);
    }
    return gap;
}

FeasibilityVerdict check_single_mode_gto(const SpectralSummary &s, const SpectralSummary &t, double rel_tol) {
    require_single(s, t, "check_single_mode_gto");
    const double eps = decision_tolerance(s, t, rel_tol);
    const double mu = s.mu[0];
    const double al = s.alpha[0];
    const double mup = t.mu[0];
    const double alp = t.alpha[0];
    const bool mu_zero = std::abs(mu) <= eps;
    const bool al_zero = std::abs(al) <= eps;

    double p = 1.0;
    if (mu_zero && al_zero) {
        if (std::abs(mup) > eps || std::abs(alp) > eps) {
            return fail("source is thermal but target is not", std::max(std::abs(mup), std::abs(alp)));
        }
    } else if (!mu_zero) {
        p = mup / mu;
        if (p * std::abs(mu) < -eps || (p - 1.0) * std::abs(mu) > eps) {
            return fail("mu'/mu = " + fmt(p) + " outside [0, 1]", std::max(-p, p - 1.0) * std::abs(mu));
        }
        p = std::clamp(p, 0.0, 1.0);
        if (std::abs(alp - p * al) > eps) {
            return fail("alpha' = " + fmt(alp) + " differs from p alpha = " + fmt(p * al),
                        std::abs(alp - p * al));
        }
    } else {
        if (std::abs(mup) > eps) {
            return fail("mu = 0 forces mu' = 0", std::abs(mup));
        }
        p = alp / al;
        if (p * al < -eps || (p - 1.0) * al > eps) {
            return fail("alpha'/alpha = " + fmt(p) + " outside [0, 1]", std::max(-p, p - 1.0) * al);
        }
        p = std::clamp(p, 0.0, 1.0);
    }
    FeasibilityVerdict v;
    v.feasible = true;
    v.claim = Claim::TransformationExists;
    v.witness["p"] = p;
    v.branches["M"] = true;
    v.branches["A"] = true;
    return v;
}

FeasibilityVerdict check_weak_single(const SpectralSummary &s, const SpectralSummary &t, double rel_tol) {
    require_single(s, t, "check_weak_single");
    const double eps = decision_tolerance(s, t, rel_tol);
    const double mu = s.mu[0];
    const double al = s.alpha[0];
    const double mup = t.mu[0];
    const double alp = t.alpha[0];
    const bool mu_zero = std::abs(mu) <= eps;
    const bool al_zero = std::abs(al) <= eps;

    double p = 1.0;
    double q = 1.0;
    if (!mu_zero) {
        p = mup / mu;
        if (p * std::abs(mu) < -eps || (p - 1.0) * std::abs(mu) > eps) {
            return fail("mu'/mu = " + fmt(p) + " outside [0, 1]", std::max(-p, p - 1.0) * std::abs(mu));
        }
        p = std::clamp(p, 0.0, 1.0);
    } else if (std::abs(mup) > eps) {
        return fail("mu = 0 forces mu' = 0", std::abs(mup));
    }
    if (!al_zero) {
        q = alp / al;
        if (q * al < -eps) {
            return fail("alpha' is negative", -alp);
        }
        // q <= p, measured on the alpha scale.
        if (alp - p * al > eps) {
            return fail("alpha'/alpha = " + fmt(q) + " exceeds p = " + fmt(p), alp - p * al);
        }
        q = std::clamp(q, 0.0, p);
    } else {
        if (std::abs(alp) > eps) {
            return fail("alpha = 0 forces alpha' = 0", std::abs(alp));
        }
        q = p;
    }
    FeasibilityVerdict v;
    v.feasible = true;
    v.claim = Claim::TransformationExists;
    v.witness["p"] = p;
    v.witness["q"] = q;
    v.branches["M"] = true;
    v.branches["A"] = true;
    return v;
}

FeasibilityVerdict check_no_catalyst(const SpectralSummary &s, const SpectralSummary &t, double rel_tol) {
    return check_strong_approx(s, t, 0.0, rel_tol);
}

FeasibilityVerdict check_strong_approx(const SpectralSummary &s, const SpectralSummary &t, double delta,
                                       double rel_tol) {
    if (!(delta >= 0.0)) {
        throw Error(ErrorCode::NegativeDelta, "check_strong_approx: delta must be >= 0");
    }
    require_shape(s, "check_strong_approx");
    require_shape(t, "check_strong_approx");
    const double eps = decision_tolerance(s, t, rel_tol);
    ThermalSplit src = split_thermal(OrderedVector(s.mu));
    ThermalSplit dst = split_thermal(OrderedVector(t.mu));
    OrderedVector a_src(s.alpha);
    OrderedVector a_dst(t.alpha);

    const double plus = slack_excess(dst.plus, src.plus, eps);
    const double minus = slack_excess(dst.minus, src.minus, eps);
    const double alpha = slack_excess(a_dst, a_src, eps);
    const bool m_ok = plus + minus <= delta;
    const bool a_ok = alpha <= delta;

    FeasibilityVerdict v;
    v.branches["M"] = m_ok;
    v.branches["A"] = a_ok;
    v.witness["delta"] = delta;
    v.witness["m_excess"] = positive_excess(dst.plus, src.plus) + positive_excess(dst.minus, src.minus);
    v.witness["a_excess"] = positive_excess(a_dst, a_src);
    if (m_ok && a_ok) {
        v.feasible = true;
        v.claim = Claim::NecessaryOnly;
        return v;
    }
    v.feasible = false;
    v.claim = Claim::None;
    v.excess = std::max(plus + minus - delta, alpha - delta);
    if (!m_ok) {
        std::size_t i = first_breach(dst.plus, src.plus, eps);
        if (delta == 0.0 && i != std::string::npos) {
            v.violation = "mu'+ entry " + std::to_string(i) + " = " + fmt(dst.plus[i]) + " exceeds mu+ = " +
                          fmt(src.plus[i]);
        } else if (delta == 0.0) {
            i = first_breach(dst.minus, src.minus, eps);
            v.violation = "mu'- entry " + std::to_string(i) + " = " + fmt(dst.minus[i]) + " exceeds mu- = " +
                          fmt(src.minus[i]);
        } else {
            v.violation = "M excess " + fmt(plus + minus) + " exceeds delta " + fmt(delta);
        }
    } else if (delta == 0.0) {
        std::size_t i = first_breach(a_dst, a_src, eps);
        v.violation = "alpha' entry " + std::to_string(i) + " = " + fmt(a_dst[i]) + " exceeds alpha = " +
                      fmt(a_src[i]);
    } else {
        v.violation = "A excess " + fmt(alpha) + " exceeds delta " + fmt(delta);
    }
    return v;
}

FeasibilityVerdict check_weak_M(const SpectralSummary &s, const SpectralSummary &t, bool with_bath,
                                double rel_tol) {
    require_shape(s, "check_weak_M");
    require_shape(t, "check_weak_M");
    const double eps = decision_tolerance(s, t, rel_tol);
    const auto n = static_cast<double>(modes_of(s, t));
    FeasibilityVerdict v;
    v.branches["A"] = false;
    if (!with_bath) {
        OrderedVector y(s.mu);
        OrderedVector x(t.mu);
        bool ok = majorizes(y, x, eps);
        v.branches["M"] = ok;
        if (!ok) {
            double gap = partial_sum_gap(y, x);
            double drift = std::abs(y.sum() - x.sum());
            v.violation = gap > eps ? "a partial sum of mu' exceeds that of mu by " + fmt(gap)
                                    : "sum of mu' differs from sum of mu by " + fmt(drift);
            v.excess = std::max(gap, drift);
            return v;
        }
        v.witness["catalyst_modes_max"] = n - 1.0;
        v.witness["bath_modes_max"] = 0.0;
    } else {
        ThermalSplit src = split_thermal(OrderedVector(s.mu));
        ThermalSplit dst = split_thermal(OrderedVector(t.mu));
        bool plus_ok = weak_majorizes(src.plus, dst.plus, eps);
        bool minus_ok = weak_majorizes(src.minus, dst.minus, eps);
        v.branches["M"] = plus_ok && minus_ok;
        if (!plus_ok || !minus_ok) {
            double gp = partial_sum_gap(src.plus, dst.plus);
            double gm = partial_sum_gap(src.minus, dst.minus);
            v.violation = !plus_ok ? "mu'+ is not weakly majorized by mu+ (gap " + fmt(gp) + ")"
                                   : "mu'- is not weakly majorized by mu- (gap " + fmt(gm) + ")";
            v.excess = std::max(gp, gm);
            return v;
        }
        v.witness["catalyst_modes_max"] = n - 1.0;
        v.witness["bath_modes_max"] = n;
    }
    v.feasible = true;
    v.claim = Claim::BranchRealizable;
    return v;
}

FeasibilityVerdict check_weak_A(const SpectralSummary &s, const SpectralSummary &t, double rel_tol) {
    require_shape(s, "check_weak_A");
    require_shape(t, "check_weak_A");
    const double eps = decision_tolerance(s, t, rel_tol);
    const auto n = static_cast<double>(modes_of(s, t));
    OrderedVector y(s.alpha);
    OrderedVector x(t.alpha);
    FeasibilityVerdict v;
    v.branches["M"] = false;
    bool ok = weak_majorizes(y, x, eps);
    v.branches["A"] = ok;
    if (!ok) {
        double gap = partial_sum_gap(y, x);
        v.violation = "alpha' is not weakly majorized by alpha (gap " + fmt(gap) + ")";
        v.excess = gap;
        return v;
    }
    v.feasible = true;
    v.claim = Claim::BranchRealizable;
    v.witness["catalyst_modes_max_without_bath"] = 2.0 * n - 1.0;
    v.witness["catalyst_modes_max_with_bath"] = n;
    v.witness["bath_modes_max"] = n - 1.0;
    return v;
}

}  // namespace gtokit
