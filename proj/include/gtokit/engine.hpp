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

#ifndef GTOKIT_ENGINE_HPP
#define GTOKIT_ENGINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gtokit/gaussian.hpp"

namespace gtokit {

struct AttachBath {
    int count = 1;
};

struct ApplyPassive {
    PassiveUnitary unitary;
};

struct TraceOut {
    std::vector<int> modes;
};

using CircuitStep = std::variant<AttachBath, ApplyPassive, TraceOut>;

/// Thermal operation as an ordered list of bath attachments, passive
/// unitaries and partial traces.
class GtoCircuit {
   public:
    GtoCircuit() = default;
    explicit GtoCircuit(ThermalContext context) : context_(context) {}

    const ThermalContext &context() const { return context_; }
    const std::vector<CircuitStep> &steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }

    GtoCircuit &attach_bath(int count);
    GtoCircuit &apply(PassiveUnitary u);
    GtoCircuit &trace_out(std::vector<int> modes);
    GtoCircuit &append(const GtoCircuit &other);

    /// Mode count after the last step; throws if any step is inconsistent
    /// with the running count.
    int output_modes(int input_modes) const;

   private:
    ThermalContext context_;
    std::vector<CircuitStep> steps_;
};

struct CircuitResult {
    GaussianState final_state;
    std::optional<bool> catalyst_block_restored;
    std::map<std::string, double> diagnostics;
};

ModeDecomposition attach_bath(const ModeDecomposition &d, int k);
ModeDecomposition apply_passive(const ModeDecomposition &d, const PassiveUnitary &u);
ModeDecomposition trace_out(const ModeDecomposition &d, const std::vector<int> &modes);

/// Runs every step at the M/A level.
ModeDecomposition run_circuit(const ModeDecomposition &initial, const GtoCircuit &circuit);

/// Runs the circuit and reports the physicality residual of the output
/// (key "physicality_residual") together with the step count.
CircuitResult apply_circuit(const GaussianState &initial, const GtoCircuit &circuit,
                            Tolerance tol = kDefaultTolerance);

/// AttachBath(n_bath), one Haar unitary on all modes, TraceOut(bath).
GtoCircuit sample_random_gto(int n_system, int n_bath, std::uint64_t seed,
                             const ThermalContext &context = ThermalContext());

}  // namespace gtokit

#endif
