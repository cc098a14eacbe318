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

#include "gtokit/io.hpp"

namespace gtokit {

namespace {

[[noreturn]] void parse_fail(const std::string &what) {
    throw Error(ErrorCode::ParseError, what);
}

const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        parse_fail(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

double number(const Json &j, const char *what) {
    if (!j.is_number()) parse_fail(std::string(what) + " must be a number");
    return j.get<double>();
}

std::vector<double> numbers(const Json &j, const char *what) {
    if (!j.is_array()) parse_fail(std::string(what) + " must be an array of numbers");
    std::vector<double> out;
    for (const auto &v : j) out.push_back(number(v, what));
    return out;
}

RealMatrix real_matrix(const Json &j, const char *what) {
    if (!j.is_array()) parse_fail(std::string(what) + " must be an array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    RealMatrix m(rows, rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        std::vector<double> row = numbers(j[static_cast<std::size_t>(r)], what);
        if (static_cast<Eigen::Index>(row.size()) != rows) parse_fail(std::string(what) + " must be square");
        for (Eigen::Index c = 0; c < rows; ++c) m(r, c) = row[static_cast<std::size_t>(c)];
    }
    return m;
}

Json matrix_json(const RealMatrix &m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json vector_json(const std::vector<double> &v) {
    Json a = Json::array();
    for (double x : v) a.push_back(x);
    return a;
}

ThermalContext context_from(const Json &j, const ThermalContext &fallback) {
    double omega = j.contains("omega") ? number(j.at("omega"), "omega") : fallback.omega();
    double beta = j.contains("beta") ? number(j.at("beta"), "beta") : fallback.beta();
    return ThermalContext(omega, beta);
}

Json map_json(const std::map<std::string, double> &m) {
    Json o = Json::object();
    for (const auto &[k, v] : m) o[k] = v;
    return o;
}

}  // namespace

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
}

std::string dump_json(const Json &j) {
    return j.dump(2) + "\n";
}

StateDocument state_document_from_json(const Json &j) {
    StateDocument doc;
    doc.context = context_from(j, ThermalContext());
    if (j.contains("covariance")) {
        GaussianState s;
        s.context = doc.context;
        s.covariance = real_matrix(j.at("covariance"), "covariance");
        const Eigen::Index dim = s.covariance.rows();
        if (j.contains("n_modes") && j.at("n_modes").get<Eigen::Index>() * 2 != dim) {
            throw Error(ErrorCode::ShapeMismatch, "n_modes does not match the covariance size");
        }
        s.first_moments = RealVector::Zero(dim);
        if (j.contains("first_moments")) {
            std::vector<double> r = numbers(j.at("first_moments"), "first_moments");
            if (static_cast<Eigen::Index>(r.size()) != dim) {
                throw Error(ErrorCode::ShapeMismatch, "first_moments length does not match the covariance size");
            }
            for (Eigen::Index i = 0; i < dim; ++i) s.first_moments(i) = r[static_cast<std::size_t>(i)];
        }
        doc.summary = spectral_summary(decompose_cm(s));
        doc.state = std::move(s);
        return doc;
    }
    doc.summary.mu = numbers(field(j, "mu"), "mu");
    doc.summary.alpha = numbers(field(j, "alpha"), "alpha");
    if (doc.summary.mu.size() != doc.summary.alpha.size()) {
        throw Error(ErrorCode::ShapeMismatch, "mu and alpha must have the same length");
    }
    for (double a : doc.summary.alpha) {
        if (a < 0.0) throw Error(ErrorCode::InvalidArgument, "alpha entries must be non-negative");
    }
    std::sort(doc.summary.mu.begin(), doc.summary.mu.end(), std::greater<>());
    std::sort(doc.summary.alpha.begin(), doc.summary.alpha.end(), std::greater<>());
    return doc;
}

Json state_to_json(const GaussianState &s) {
    Json j;
    j["omega"] = s.context.omega();
    j["beta"] = s.context.beta();
    j["n_modes"] = s.n_modes();
    std::vector<double> r(s.first_moments.data(), s.first_moments.data() + s.first_moments.size());
    j["first_moments"] = vector_json(r);
    j["covariance"] = matrix_json(s.covariance);
    return j;
}

Json summary_to_json(const SpectralSummary &s, const ThermalContext &context) {
    Json j;
    j["omega"] = context.omega();
    j["beta"] = context.beta();
    j["mu"] = vector_json(s.mu);
    j["alpha"] = vector_json(s.alpha);
    return j;
}

Json circuit_to_json(const GtoCircuit &c) {
    Json steps = Json::array();
    for (const auto &step : c.steps()) {
        Json s;
        if (const auto *b = std::get_if<AttachBath>(&step)) {
            s["type"] = "attach_bath";
            s["modes"] = b->count;
        } else if (const auto *p = std::get_if<ApplyPassive>(&step)) {
            s["type"] = "passive";
            s["re"] = matrix_json(p->unitary.matrix().real());
            s["im"] = matrix_json(p->unitary.matrix().imag());
        } else {
            s["type"] = "trace_out";
            s["modes"] = std::get<TraceOut>(step).modes;
        }
        steps.push_back(std::move(s));
    }
    Json j;
    j["omega"] = c.context().omega();
    j["beta"] = c.context().beta();
    j["steps"] = std::move(steps);
    return j;
}

GtoCircuit circuit_from_json(const Json &j, const ThermalContext &fallback) {
    GtoCircuit c(context_from(j, fallback));
    const Json &steps = field(j, "steps");
    if (!steps.is_array()) parse_fail("steps must be an array");
    for (const auto &s : steps) {
        const std::string type = field(s, "type").get<std::string>();
        if (type == "attach_bath") {
            c.attach_bath(field(s, "modes").get<int>());
        } else if (type == "passive") {
            RealMatrix re = real_matrix(field(s, "re"), "re");
            RealMatrix im = real_matrix(field(s, "im"), "im");
            if (re.rows() != im.rows()) parse_fail("passive step: re and im sizes differ");
            ComplexMatrix u(re.rows(), re.cols());
            u.real() = re;
            u.imag() = im;
            c.apply(PassiveUnitary(u));
        } else if (type == "trace_out") {
            c.trace_out(field(s, "modes").get<std::vector<int>>());
        } else {
            parse_fail("unknown step type '" + type + "'");
        }
    }
    return c;
}

Json plan_to_json(const SynthesisPlan &p) {
    Json j;
    j["omega"] = p.circuit.context().omega();
    j["beta"] = p.circuit.context().beta();
    j["n_system"] = p.n_system();
    j["branch"] = std::string(plan_branch_name(p.branch));
    j["joint_catalyst_return"] = p.joint_catalyst_return;
    j["source"] = {{"mu", vector_json(p.source.mu)}, {"alpha", vector_json(p.source.alpha)}};
    j["expected_target"] = {{"mu", vector_json(p.expected_target.mu)},
                            {"alpha", vector_json(p.expected_target.alpha)}};
    if (p.catalyst) {
        j["catalyst"] = {{"n_modes", p.catalyst->n_modes()},
                         {"mu", vector_json(p.catalyst->mu)},
                         {"alpha", vector_json(p.catalyst->alpha)},
                         {"role", p.catalyst->role == CatalystRole::Strong ? "strong" : "weak"}};
    } else {
        j["catalyst"] = nullptr;
    }
    j["circuit"] = circuit_to_json(p.circuit);
    j["diagnostics"] = map_json(p.diagnostics);
    return j;
}

SynthesisPlan plan_from_json(const Json &j) {
    SynthesisPlan p;
    ThermalContext ctx = context_from(j, ThermalContext());
    p.circuit = circuit_from_json(field(j, "circuit"), ctx);
    const Json &src = field(j, "source");
    p.source = {numbers(field(src, "mu"), "source.mu"), numbers(field(src, "alpha"), "source.alpha")};
    const Json &tgt = field(j, "expected_target");
    p.expected_target = {numbers(field(tgt, "mu"), "expected_target.mu"),
                         numbers(field(tgt, "alpha"), "expected_target.alpha")};
    if (p.source.mu.size() != p.source.alpha.size()) {
        throw Error(ErrorCode::ShapeMismatch, "plan source: mu and alpha lengths differ");
    }
    if (j.contains("n_system") && j.at("n_system").get<std::size_t>() != p.source.mu.size()) {
        throw Error(ErrorCode::ShapeMismatch, "plan n_system does not match the source");
    }
    const std::string branch = j.value("branch", std::string("both"));
    if (branch == "both") {
        p.branch = PlanBranch::Both;
    } else if (branch == "M") {
        p.branch = PlanBranch::MOnly;
    } else if (branch == "A") {
        p.branch = PlanBranch::AOnly;
    } else {
        parse_fail("unknown plan branch '" + branch + "'");
    }
    p.joint_catalyst_return = j.value("joint_catalyst_return", true);
    if (j.contains("catalyst") && !j.at("catalyst").is_null()) {
        const Json &c = j.at("catalyst");
        CatalystSpec spec;
        spec.mu = numbers(field(c, "mu"), "catalyst.mu");
        spec.alpha = numbers(field(c, "alpha"), "catalyst.alpha");
        if (spec.mu.size() != spec.alpha.size()) {
            throw Error(ErrorCode::ShapeMismatch, "catalyst: mu and alpha lengths differ");
        }
        spec.role = c.value("role", std::string("weak")) == "strong" ? CatalystRole::Strong : CatalystRole::Weak;
        p.catalyst = std::move(spec);
    }
    if (j.contains("diagnostics")) {
        for (const auto &[k, v] : j.at("diagnostics").items()) p.diagnostics[k] = v.get<double>();
    }
    return p;
}

Json verdict_to_json(const FeasibilityVerdict &v) {
    Json j;
    j["feasible"] = v.feasible;
    j["claim"] = std::string(claim_name(v.claim));
    j["branches"] = Json::object();
    for (const auto &[k, b] : v.branches) j["branches"][k] = b;
    j["witness"] = map_json(v.witness);
    j["violation"] = v.violation ? Json(*v.violation) : Json(nullptr);
    j["excess"] = v.excess;
    return j;
}

Json simulation_to_json(const SimulationReport &r, const ThermalContext &context) {
    Json j;
    j["ok"] = r.ok;
    j["achieved"] = summary_to_json(r.achieved, context);
    j["target_residual"] = r.target_residual;
    j["catalyst_restored"] = r.catalyst_restored;
    j["catalyst_residual"] = r.catalyst_residual;
    j["catalyst_local_residual"] = r.catalyst_local_residual;
    j["system_catalyst_correlation"] = r.system_catalyst_correlation;
    j["physicality_residual"] = r.physicality_residual;
    j["catalyst_physicality_residual"] = r.catalyst_physicality_residual;
    return j;
}

Json report_to_json(const CampaignReport &r) {
    Json j;
    j["campaign"] = r.name;
    j["trials"] = r.trials;
    j["accepted"] = r.accepted;
    j["max_violation"] = r.max_violation;
    Json f = Json::array();
    for (const auto &x : r.failures) f.push_back({{"seed", x.seed}, {"description", x.description}});
    j["failures"] = std::move(f);
    j["stats"] = map_json(r.stats);
    j["runtime_seconds"] = r.runtime_seconds;
    return j;
}

Json region_to_json(const RegionCloud &c) {
    Json pts = Json::array();
    for (const auto &p : c.points) {
        pts.push_back({{"p", p.p}, {"q", p.q}, {"catalytic", p.catalytic}, {"n_bath", p.n_bath},
                       {"catalyst_residual", p.catalyst_residual}});
    }
    Json j;
    j["trials"] = c.trials;
    j["rejected"] = c.rejected;
    j["points"] = std::move(pts);
    return j;
}

}  // namespace gtokit
