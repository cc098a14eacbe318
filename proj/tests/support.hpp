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

// Shared helpers for the test suites: random inputs and independent oracles.

#ifndef GTOKIT_TESTS_SUPPORT_HPP
#define GTOKIT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "gtokit/gaussian.hpp"
#include "gtokit/numerics.hpp"

namespace gtokit::testing {

inline ComplexMatrix random_complex(int rows, int cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = Complex(g(rng), g(rng));
    return m;
}

inline ComplexMatrix random_hermitian(int n, std::mt19937_64 &rng) {
    ComplexMatrix g = random_complex(n, n, rng);
    return 0.5 * (g + g.adjoint());
}

inline ComplexMatrix random_symmetric(int n, std::mt19937_64 &rng) {
    ComplexMatrix g = random_complex(n, n, rng);
    return 0.5 * (g + g.transpose());
}

// Real roots of det(m - x I) for Hermitian m, found by sign scanning and
// bisection on the determinant alone. Assumes simple eigenvalues.
inline std::vector<double> charpoly_roots(const ComplexMatrix &m) {
    const int n = static_cast<int>(m.rows());
    auto det = [&](double x) {
        ComplexMatrix s = m - x * ComplexMatrix::Identity(n, n);
        return Eigen::PartialPivLU<ComplexMatrix>(s).determinant().real();
    };
    double bound = 0.0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, m.row(i).cwiseAbs().sum());
    bound += 1.0;
    const int grid = 20000;
    std::vector<double> roots;
    double x0 = -bound;
    double f0 = det(x0);
    for (int k = 1; k <= grid; ++k) {
        double x1 = -bound + 2.0 * bound * k / grid;
        double f1 = det(x1);
        if (f0 == 0.0) {
            roots.push_back(x0);
        } else if ((f0 < 0.0) != (f1 < 0.0)) {
            double lo = x0, hi = x1, flo = f0;
            for (int it = 0; it < 200 && hi - lo > 1e-15 * bound; ++it) {
                double mid = 0.5 * (lo + hi);
                double fm = det(mid);
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        x0 = x1;
        f0 = f1;
    }
    std::sort(roots.rbegin(), roots.rend());
    return roots;
}

inline std::vector<double> svd_oracle(const ComplexMatrix &a) {
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    std::vector<double> s(svd.singularValues().data(), svd.singularValues().data() + svd.singularValues().size());
    std::sort(s.rbegin(), s.rend());
    return s;
}

inline double max_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double d = a.size() == b.size() ? 0.0 : INFINITY;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

inline std::vector<double> sorted_desc(std::vector<double> v) {
    std::sort(v.rbegin(), v.rend());
    return v;
}

// Random descending vector with entries in [lo, hi]; occasionally with ties
// and exact zeros so that boundary cases appear.
inline std::vector<double> random_vector(std::size_t n, double lo, double hi, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::uniform_int_distribution<int> coin(0, 9);
    std::vector<double> v(n);
    for (auto &x : v) {
        int c = coin(rng);
        x = c == 0 ? 0.0 : u(rng);
    }
    if (n > 1 && coin(rng) == 0) v[1] = v[0];
    return sorted_desc(v);
}

// Dyadic-valued vector: sums and comparisons are exact in binary floating
// point, so predicates can be compared without tolerance effects.
inline std::vector<double> dyadic_vector(std::size_t n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> u(0, 64);
    std::vector<double> v(n);
    for (auto &x : v) x = u(rng) / 16.0;
    return sorted_desc(v);
}

}  // namespace gtokit::testing

#endif
