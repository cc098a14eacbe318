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

#ifndef GTOKIT_IO_HPP
#define GTOKIT_IO_HPP

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "gtokit/synthesis.hpp"
#include "gtokit/verify.hpp"

namespace gtokit {

using Json = nlohmann::ordered_json;

/// Either a full state ({"omega","beta","n_modes","first_moments",
/// "covariance"}) or a spectral document ({"mu","alpha"} with optional
/// omega/beta, default 1).
struct StateDocument {
    ThermalContext context;
    SpectralSummary summary;
    std::optional<GaussianState> state;
};

StateDocument state_document_from_json(const Json &j);
Json state_to_json(const GaussianState &s);
Json summary_to_json(const SpectralSummary &s, const ThermalContext &context);

Json circuit_to_json(const GtoCircuit &c);
GtoCircuit circuit_from_json(const Json &j, const ThermalContext &fallback = ThermalContext());

Json plan_to_json(const SynthesisPlan &p);
SynthesisPlan plan_from_json(const Json &j);

Json verdict_to_json(const FeasibilityVerdict &v);
Json simulation_to_json(const SimulationReport &r, const ThermalContext &context);
Json report_to_json(const CampaignReport &r);
Json region_to_json(const RegionCloud &c);

Json parse_json(const std::string &text);
std::string dump_json(const Json &j);

}  // namespace gtokit

#endif
