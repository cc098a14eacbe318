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

#ifndef GTOKIT_ORDERING_HPP
#define GTOKIT_ORDERING_HPP

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "gtokit/error.hpp"

namespace gtokit {

inline constexpr double kOrderingTolerance = 1e-9;

/// A non-increasing list of reals. Construction sorts; comparisons zero-pad
/// the shorter operand.
class OrderedVector {
   public:
    OrderedVector() = default;
    explicit OrderedVector(std::vector<double> values);
    OrderedVector(std::initializer_list<double> values) : OrderedVector(std::vector<double>(values)) {}

    const std::vector<double> &values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    double operator[](std::size_t i) const { return i < values_.size() ? values_[i] : 0.0; }
    double sum() const;

    /// Copy extended with zeros to length n (re-sorted, since zeros may
    /// belong above negative entries).
    OrderedVector padded(std::size_t n) const;

   private:
    std::vector<double> values_;
};

bool elementwise_leq(const OrderedVector &x, const OrderedVector &y, double tol = kOrderingTolerance);

/// True iff every partial sum of x is bounded by the matching partial sum
/// of y (x is weakly majorized by y).
bool weak_majorizes(const OrderedVector &y, const OrderedVector &x, double tol = kOrderingTolerance);
bool majorizes(const OrderedVector &y, const OrderedVector &x, double tol = kOrderingTolerance);

/// g_a(x) = sum_i [x_i - a]_+.
double g_a(const OrderedVector &x, double a);

/// Same predicates decided through g_a at every breakpoint a drawn from the
/// entries of both vectors.
bool weak_majorizes_by_ga(const OrderedVector &y, const OrderedVector &x, double tol = kOrderingTolerance);
bool majorizes_by_ga(const OrderedVector &y, const OrderedVector &x, double tol = kOrderingTolerance);

struct ThermalSplit {
    OrderedVector plus;   // positive entries
    OrderedVector minus;  // magnitudes of negative entries
};

ThermalSplit split_thermal(const OrderedVector &mu, double tol = 0.0);

/// sum_i [xp_i - x_i]_+ after zero padding.
double positive_excess(const OrderedVector &xp, const OrderedVector &x);

std::vector<double> lorenz_curve(const OrderedVector &x);

struct TransformStep {
    enum class Kind { T, L };

    Kind kind = Kind::T;
    std::size_t first = 0;   // T: pair (first, second); L: the scaled entry
    std::size_t second = 0;
    double parameter = 1.0;  // t for T, r for L; both in [0, 1]

    static TransformStep t_step(std::size_t j, std::size_t k, double t);
    static TransformStep l_step(std::size_t i, double r);
};

/// Applies the steps in order to a working copy of values (index positions,
/// no re-sorting between steps).
std::vector<double> apply_steps(std::vector<double> values, const std::vector<TransformStep> &steps);

/// T-transforms taking y to x, for x majorized by y. At most n - 1 steps.
std::vector<TransformStep> t_transform_chain(const OrderedVector &y, const OrderedVector &x,
                                             double tol = kOrderingTolerance);

/// Intermediate u with x <= u and u majorized by y, for non-negative x
/// weakly majorized by y.
OrderedVector weak_majorization_intermediate(const OrderedVector &y, const OrderedVector &x,
                                             double tol = kOrderingTolerance);

/// T-transforms followed by L-transforms taking y to x, for non-negative x
/// weakly majorized by y.
std::vector<TransformStep> weak_majorization_chain(const OrderedVector &y, const OrderedVector &x,
                                                   double tol = kOrderingTolerance);

}  // namespace gtokit

#endif
