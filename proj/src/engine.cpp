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

#include "gtokit/engine.hpp"

#include <algorithm>
#include <set>

namespace gtokit {

GtoCircuit &GtoCircuit::attach_bath(int count) {
    if (count < 1) {
        throw Error(ErrorCode::InvalidArgument, "attach_bath: count must be >= 1");
    }
    steps_.emplace_back(AttachBath{count});
    return *this;
}

GtoCircuit &GtoCircuit::apply(PassiveUnitary u) {
    steps_.emplace_back(ApplyPassive{std::move(u)});
    return *this;
}

GtoCircuit &GtoCircuit::trace_out(std::vector<int> modes) {
    steps_.emplace_back(TraceOut{std::move(modes)});
    return *this;
}

GtoCircuit &GtoCircuit::append(const GtoCircuit &other) {
    steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
    return *this;
}

namespace {

std::vector<int> kept_indices(int n, const std::vector<int> &removed) {
    std::set<int> drop;
    for (int i : removed) {
        if (i < 0 || i >= n) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "trace_out: mode " + std::to_string(i) + " not in 0.." + std::to_string(n - 1));
        }
        drop.insert(i);
    }
    std::vector<int> keep;
    for (int i = 0; i < n; ++i) {
        if (!drop.count(i)) keep.push_back(i);
    }
    return keep;
}

}  // namespace

int GtoCircuit::output_modes(int input_modes) const {
    int n = input_modes;
    for (const auto &step : steps_) {
        if (const auto *b = std::get_if<AttachBath>(&step)) {
            n += b->count;
        } else if (const auto *p = std::get_if<ApplyPassive>(&step)) {
            if (p->unitary.n_modes() != n) {
                throw Error(ErrorCode::DimensionMismatch, "circuit: passive step acts on " +
                                                              std::to_string(p->unitary.n_modes()) +
                                                              " modes, state has " + std::to_string(n));
            }
        } else {
            n = static_cast<int>(kept_indices(n, std::get<TraceOut>(step).modes).size());
        }
    }
    return n;
}

ModeDecomposition attach_bath(const ModeDecomposition &d, int k) {
    if (k < 1) {
        throw Error(ErrorCode::InvalidArgument, "attach_bath: count must be >= 1");
    }
    const int n = d.n_modes();
    ModeDecomposition out;
    out.context = d.context;
    out.m = ComplexMatrix::Zero(n + k, n + k);
    out.a = ComplexMatrix::Zero(n + k, n + k);
    out.m.topLeftCorner(n, n) = d.m;
    out.a.topLeftCorner(n, n) = d.a;
    out.first_moments = RealVector::Zero(2 * (n + k));
    if (d.first_moments.size() == 2 * n) {
        out.first_moments.head(2 * n) = d.first_moments;
    }
    return out;
}

ModeDecomposition apply_passive(const ModeDecomposition &d, const PassiveUnitary &u) {
    if (u.n_modes() != d.n_modes()) {
        throw Error(ErrorCode::DimensionMismatch, "apply_passive: unitary size differs from mode count");
    }
    const ComplexMatrix &w = u.matrix();
    ModeDecomposition out;
    out.context = d.context;
    out.m = w * d.m * w.adjoint();
    out.a = w * d.a * w.transpose();
    out.m = 0.5 * (out.m + out.m.adjoint()).eval();
    out.a = 0.5 * (out.a + out.a.transpose()).eval();
    if (d.first_moments.size() == 2 * d.n_modes()) {
        out.first_moments = passive_to_symplectic(u) * d.first_moments;
    } else {
        out.first_moments = RealVector::Zero(2 * d.n_modes());
    }
    return out;
}

ModeDecomposition trace_out(const ModeDecomposition &d, const std::vector<int> &modes) {
    std::vector<int> keep = kept_indices(d.n_modes(), modes);
    const int k = static_cast<int>(keep.size());
    ModeDecomposition out;
    out.context = d.context;
    out.m.resize(k, k);
    out.a.resize(k, k);
    out.first_moments = RealVector::Zero(2 * k);
    const bool has_moments = d.first_moments.size() == 2 * d.n_modes();
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            out.m(i, j) = d.m(keep[i], keep[j]);
            out.a(i, j) = d.a(keep[i], keep[j]);
        }
        if (has_moments) {
            out.first_moments(2 * i) = d.first_moments(2 * keep[i]);
            out.first_moments(2 * i + 1) = d.first_moments(2 * keep[i] + 1);
        }
    }
    return out;
}

ModeDecomposition run_circuit(const ModeDecomposition &initial, const GtoCircuit &circuit) {
    if (!(initial.context == circuit.context())) {
        throw Error(ErrorCode::InvalidArgument, "circuit and state use different thermal contexts");
    }
    circuit.output_modes(initial.n_modes());
    ModeDecomposition d = initial;
    for (const auto &step : circuit.steps()) {
        if (const auto *b = std::get_if<AttachBath>(&step)) {
            d = attach_bath(d, b->count);
        } else if (const auto *p = std::get_if<ApplyPassive>(&step)) {
            d = apply_passive(d, p->unitary);
        } else {
            d = trace_out(d, std::get<TraceOut>(step).modes);
        }
    }
    return d;
}

CircuitResult apply_circuit(const GaussianState &initial, const GtoCircuit &circuit, Tolerance tol) {
    ModeDecomposition d = run_circuit(decompose_cm(initial, tol), circuit);
    CircuitResult result;
    result.final_state = reconstruct_cm(d);
    result.diagnostics["physicality_residual"] =
        d.n_modes() > 0 ? physicality_residual(result.final_state.covariance) : 0.0;
    result.diagnostics["steps"] = static_cast<double>(circuit.steps().size());
    return result;
}

GtoCircuit sample_random_gto(int n_system, int n_bath, std::uint64_t seed, const ThermalContext &context) {
    if (n_system < 1 || n_bath < 0) {
        throw Error(ErrorCode::InvalidArgument, "sample_random_gto: need n_system >= 1 and n_bath >= 0");
    }
    GtoCircuit circuit(context);
    const int total = n_system + n_bath;
    if (n_bath > 0) {
        circuit.attach_bath(n_bath);
    }
    circuit.apply(PassiveUnitary(haar_random_unitary(total, seed)));
    if (n_bath > 0) {
        std::vector<int> bath(static_cast<std::size_t>(n_bath));
        for (int i = 0; i < n_bath; ++i) bath[static_cast<std::size_t>(i)] = n_system + i;
        circuit.trace_out(std::move(bath));
    }
    return circuit;
}

}  // namespace gtokit
