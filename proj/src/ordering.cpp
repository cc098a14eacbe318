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

#include "gtokit/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace gtokit {

OrderedVector::OrderedVector(std::vector<double> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end(), std::greater<>());
}

double OrderedVector::sum() const {
    return std::accumulate(values_.begin(), values_.end(), 0.0);
}

OrderedVector OrderedVector::padded(std::size_t n) const {
    std::vector<double> v = values_;
    if (v.size() < n) {
        v.resize(n, 0.0);
    }
    return OrderedVector(std::move(v));
}

namespace {

std::pair<std::vector<double>, std::vector<double>> pad_pair(const OrderedVector &a, const OrderedVector &b) {
    std::size_t n = std::max(a.size(), b.size());
    return {a.padded(n).values(), b.padded(n).values()};
}

}  // namespace

bool elementwise_leq(const OrderedVector &x, const OrderedVector &y, double tol) {
    auto [xs, ys] = pad_pair(x, y);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] > ys[i] + tol) {
            return false;
        }
    }
    return true;
}

bool weak_majorizes(const OrderedVector &y, const OrderedVector &x, double tol) {
    auto [ys, xs] = pad_pair(y, x);
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        sx += xs[k];
        sy += ys[k];
        if (sx > sy + tol) {
            return false;
        }
    }
    return true;
}

bool majorizes(const OrderedVector &y, const OrderedVector &x, double tol) {
    auto [ys, xs] = pad_pair(y, x);
    return weak_majorizes(y, x, tol) &&
           std::abs(std::accumulate(xs.begin(), xs.end(), 0.0) - std::accumulate(ys.begin(), ys.end(), 0.0)) <= tol;
}

double g_a(const OrderedVector &x, double a) {
    double total = 0.0;
    for (double v : x.values()) {
        total += std::max(v - a, 0.0);
    }
    return total;
}

bool weak_majorizes_by_ga(const OrderedVector &y, const OrderedVector &x, double tol) {
    auto [ys, xs] = pad_pair(y, x);
    OrderedVector yp(ys);
    OrderedVector xp(xs);
    // g_a(y) - g_a(x) is piecewise linear in a with kinks only at entries,
    // constant below the smallest entry and zero above the largest.
    for (const auto *list : {&xs, &ys}) {
        for (double a : *list) {
            if (g_a(xp, a) > g_a(yp, a) + tol) {
                return false;
            }
        }
    }
    return true;
}

bool majorizes_by_ga(const OrderedVector &y, const OrderedVector &x, double tol) {
    auto [ys, xs] = pad_pair(y, x);
    if (!weak_majorizes_by_ga(y, x, tol)) {
        return false;
    }
    // Sum equality through g_a at a point below every entry.
    double floor = 0.0;
    for (double v : xs) floor = std::min(floor, v);
    for (double v : ys) floor = std::min(floor, v);
    floor -= 1.0;
    double n = static_cast<double>(xs.size());
    double sx = g_a(OrderedVector(xs), floor) + n * floor;
    double sy = g_a(OrderedVector(ys), floor) + n * floor;
    return std::abs(sx - sy) <= tol;
}

ThermalSplit split_thermal(const OrderedVector &mu, double tol) {
    std::vector<double> plus;
    std::vector<double> minus;
    for (double v : mu.values()) {
        if (v > tol) {
            plus.push_back(v);
        } else if (v < -tol) {
            minus.push_back(-v);
        }
    }
    return {OrderedVector(std::move(plus)), OrderedVector(std::move(minus))};
}

double positive_excess(const OrderedVector &xp, const OrderedVector &x) {
    auto [ps, xs] = pad_pair(xp, x);
    double total = 0.0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        total += std::max(ps[i] - xs[i], 0.0);
    }
    return total;
}

std::vector<double> lorenz_curve(const OrderedVector &x) {
    std::vector<double> out(x.size());
    std::partial_sum(x.values().begin(), x.values().end(), out.begin());
    return out;
}

TransformStep TransformStep::t_step(std::size_t j, std::size_t k, double t) {
    if (j == k) {
        throw Error(ErrorCode::InvalidArgument, "T-step needs two distinct indices");
    }
    if (!(t >= 0.0 && t <= 1.0)) {
        throw Error(ErrorCode::ParameterOutOfRange, "T-step parameter outside [0, 1]");
    }
    return {Kind::T, j, k, t};
}

TransformStep TransformStep::l_step(std::size_t i, double r) {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw Error(ErrorCode::ParameterOutOfRange, "L-step parameter outside [0, 1]");
    }
    return {Kind::L, i, i, r};
}

std::vector<double> apply_steps(std::vector<double> values, const std::vector<TransformStep> &steps) {
    for (const auto &step : steps) {
        std::size_t hi = std::max(step.first, step.second);
        if (hi >= values.size()) {
            throw Error(ErrorCode::IndexOutOfRange, "apply_steps: step index beyond vector length");
        }
        if (step.kind == TransformStep::Kind::T) {
            double a = values[step.first];
            double b = values[step.second];
            double t = step.parameter;
            values[step.first] = t * a + (1.0 - t) * b;
            values[step.second] = (1.0 - t) * a + t * b;
        } else {
            values[step.first] *= step.parameter;
        }
    }
    return values;
}

std::vector<TransformStep> t_transform_chain(const OrderedVector &y, const OrderedVector &x, double tol) {
    if (!majorizes(y, x, tol)) {
        throw Error(ErrorCode::NotMajorized, "t_transform_chain: target is not majorized by source");
    }
    auto [w, xs] = pad_pair(y, x);
    const std::size_t n = w.size();
    double scale = 1.0;
    for (double v : w) scale = std::max(scale, std::abs(v));
    const double eps = 1e-13 * scale;

    std::vector<TransformStep> steps;
    while (steps.size() < n) {
        std::size_t j = n;
        for (std::size_t i = n; i-- > 0;) {
            if (w[i] > xs[i] + eps) {
                j = i;
                break;
            }
        }
        if (j == n) {
            break;
        }
        std::size_t k = n;
        for (std::size_t i = j + 1; i < n; ++i) {
            if (w[i] < xs[i] - eps) {
                k = i;
                break;
            }
        }
        if (k == n) {
            break;  // residual below eps
        }
        double above = w[j] - xs[j];
        double below = xs[k] - w[k];
        double delta = std::min(above, below);
        double t = std::clamp(1.0 - delta / (w[j] - w[k]), 0.0, 1.0);
        steps.push_back(TransformStep::t_step(j, k, t));
        if (above <= below) {
            w[j] = xs[j];
            w[k] += delta;
        } else {
            w[k] = xs[k];
            w[j] -= delta;
        }
        if (std::abs(w[k] - xs[k]) <= eps) w[k] = xs[k];
        if (std::abs(w[j] - xs[j]) <= eps) w[j] = xs[j];
    }
    return steps;
}

OrderedVector weak_majorization_intermediate(const OrderedVector &y, const OrderedVector &x, double tol) {
    auto [ys, xs] = pad_pair(y, x);
    for (std::size_t i = 0; i < ys.size(); ++i) {
        if (ys[i] < -tol || xs[i] < -tol) {
            throw Error(ErrorCode::NegativeEntry, "weak majorization chains need non-negative entries");
        }
    }
    if (!weak_majorizes(y, x, tol)) {
        throw Error(ErrorCode::NotWeaklyMajorized, "target is not weakly majorized by source");
    }
    const std::size_t n = xs.size();
    // slack_k = Y_k - X_k; raising x from the front by the running minimum of
    // the remaining slack keeps every partial sum under y and ends on equal
    // totals.
    std::vector<double> slack(n);
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        sx += xs[k];
        sy += ys[k];
        slack[k] = sy - sx;
    }
    std::vector<double> lift(n);
    double running = 0.0;
    for (std::size_t k = n; k-- > 0;) {
        running = (k + 1 == n) ? slack[k] : std::min(running, slack[k]);
        lift[k] = std::max(running, 0.0);
    }
    std::vector<double> u(n);
    double prev = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        u[k] = xs[k] + std::max(lift[k] - prev, 0.0);
        prev = lift[k];
    }
    return OrderedVector(std::move(u));
}

std::vector<TransformStep> weak_majorization_chain(const OrderedVector &y, const OrderedVector &x, double tol) {
    OrderedVector u = weak_majorization_intermediate(y, x, tol);
    auto [ys, xs] = pad_pair(y, x);
    std::vector<TransformStep> steps = t_transform_chain(OrderedVector(ys), u, tol);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double ui = u[i];
        double xi = std::max(xs[i], 0.0);
        if (ui <= 0.0) {
            continue;
        }
        double r = std::clamp(xi / ui, 0.0, 1.0);
        if (r < 1.0 - 1e-15) {
            steps.push_back(TransformStep::l_step(i, r));
        }
    }
    return steps;
}

}  // namespace gtokit
