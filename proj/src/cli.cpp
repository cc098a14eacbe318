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

#include "gtokit/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gtokit/io.hpp"

namespace gtokit::cli {

namespace {

struct Options {
    std::string theorem;
    std::string mode;
    std::string source;
    std::string target;
    std::string plan;
    std::string circuit;
    std::string state;
    std::string out;
    std::string format = "json";
    std::string component = "mu";
    std::vector<std::string> inputs;
    std::vector<double> deltas;
    double delta = 0.0;
    bool with_bath = false;
    std::optional<double> p;
    double phase = 0.0;
    std::optional<double> catalyst_mu;
    double mu = 0.0;
    double alpha = 0.0;
    double omega = 1.0;
    double beta = 1.0;
    long trials = 1000;
    std::uint64_t seed = 0;
    int system_max = 3;
    int bath_max = 3;
    int catalyst_max = 2;
    double filter = 1e-8;
    double perturbation = 0.0;
    double margin = 1e-9;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string &text, const Options &o, std::ostream &out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        throw Error(ErrorCode::InvalidArgument, "cannot write '" + o.out + "'");
    }
    f << text;
}

StateDocument load_state(const std::string &path) {
    return state_document_from_json(parse_json(read_file(path)));
}

void require_format(const Options &o, bool csv_allowed) {
    if (o.format != "json" && !(csv_allowed && o.format == "csv")) {
        throw Error(ErrorCode::InvalidArgument, "unsupported --format '" + o.format + "'");
    }
}

int do_check(const Options &o, std::ostream &out) {
    StateDocument s = load_state(o.source);
    StateDocument t = load_state(o.target);
    FeasibilityVerdict v;
    const std::string &th = o.theorem;
    if (th == "single-mode" || th == "strong-single") {
        v = check_single_mode_gto(s.summary, t.summary);
    } else if (th == "weak-single") {
        v = check_weak_single(s.summary, t.summary);
    } else if (th == "no-catalyst") {
        v = check_no_catalyst(s.summary, t.summary);
    } else if (th == "strong-approx") {
        v = check_strong_approx(s.summary, t.summary, o.delta);
    } else if (th == "weak-M") {
        v = check_weak_M(s.summary, t.summary, o.with_bath);
    } else if (th == "weak-A") {
        v = check_weak_A(s.summary, t.summary);
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown theorem '" + th + "'");
    }
    Json j;
    j["theorem"] = th;
    j.update(verdict_to_json(v));
    emit(dump_json(j), o, out);
    return v.feasible ? kExitOk : kExitInfeasible;
}

SynthesisPlan build_plan(const Options &o) {
    StateDocument s = load_state(o.source);
    const ThermalContext ctx = s.context;
    auto target = [&]() {
        if (o.target.empty()) {
            throw Error(ErrorCode::InvalidArgument, "synth --mode " + o.mode + " needs --target");
        }
        return load_state(o.target).summary;
    };
    const std::string &m = o.mode;
    if (m == "single-mode") {
        double p = 0.0;
        if (o.p) {
            p = *o.p;
        } else {
            FeasibilityVerdict v = check_single_mode_gto(s.summary, target());
            if (!v.feasible) throw Error(ErrorCode::Infeasible, v.violation.value_or("infeasible"));
            p = v.witness.at("p");
        }
        return synth_single_mode(s.summary, p, o.phase, ctx);
    }
    if (m == "no-catalyst") return synth_no_catalyst(s.summary, target(), ctx);
    if (m == "weak-single") return synth_weak_single(s.summary, target(), ctx);
    if (m == "pair-t") return synth_pair_t_transform(s.summary.mu, target().mu, o.catalyst_mu, ctx);
    if (m == "weak-M") return synth_weak_M(s.summary, target(), o.with_bath, ctx);
    if (m == "weak-A") return synth_weak_A(s.summary, target(), o.with_bath, ctx);
    throw Error(ErrorCode::InvalidArgument, "unknown synthesis mode '" + m + "'");
}

int do_synth(const Options &o, std::ostream &out) {
    emit(dump_json(plan_to_json(build_plan(o))), o, out);
    return kExitOk;
}

int do_simulate(const Options &o, std::ostream &out) {
    if (!o.plan.empty()) {
        SynthesisPlan plan = plan_from_json(parse_json(read_file(o.plan)));
        SimulationReport r = simulate_plan(plan);
        emit(dump_json(simulation_to_json(r, plan.circuit.context())), o, out);
        return r.ok ? kExitOk : kExitInfeasible;
    }
    if (o.circuit.empty() || o.state.empty()) {
        throw Error(ErrorCode::InvalidArgument, "simulate needs --plan, or --circuit with --state");
    }
    StateDocument s = load_state(o.state);
    GaussianState initial = s.state ? *s.state
                                    : reconstruct_cm(ModeDecomposition::diagonal(s.summary.mu, s.summary.alpha,
                                                                                 s.context));
    GtoCircuit c = circuit_from_json(parse_json(read_file(o.circuit)), s.context);
    CircuitResult r = apply_circuit(initial, c);
    Json j;
    j["final_state"] = state_to_json(r.final_state);
    j["summary"] = summary_to_json(spectral_summary(decompose_cm(r.final_state)), s.context);
    Json d = Json::object();
    for (const auto &[k, v] : r.diagnostics) d[k] = v;
    j["diagnostics"] = d;
    emit(dump_json(j), o, out);
    return kExitOk;
}

int do_sample_region(const Options &o, std::ostream &out) {
    require_format(o, true);
    CampaignOptions opt;
    opt.context = ThermalContext(o.omega, o.beta);
    opt.filter_tolerance = o.filter;
    RegionCloud cloud = reachable_region_single_mode(o.mu, o.alpha, o.trials, o.seed, opt);
    if (o.format == "csv") {
        std::ostringstream os;
        os.precision(17);
        os << "p,q,catalytic,n_bath\n";
        for (const auto &p : cloud.points) {
            os << p.p << ',' << p.q << ',' << (p.catalytic ? 1 : 0) << ',' << p.n_bath << '\n';
        }
        emit(os.str(), o, out);
    } else {
        emit(dump_json(region_to_json(cloud)), o, out);
    }
    return kExitOk;
}

int do_verify(const Options &o, std::ostream &out) {
    require_format(o, false);
    CampaignReport rep;
    if (o.theorem == "excess-bound") {
        rep = excess_bound_campaign(o.trials, 6, o.delta > 0.0 ? o.delta : 1.0, o.seed);
    } else if (o.theorem == "approx") {
        if (o.source.empty() || o.target.empty()) {
            throw Error(ErrorCode::InvalidArgument, "verify --theorem approx needs --source and --target");
        }
        std::vector<double> grid = o.deltas.empty() ? std::vector<double>{0.0, 0.01, 0.1, 1.0} : o.deltas;
        rep = approx_catalyst_probe(load_state(o.source).summary, load_state(o.target).summary, grid, o.trials,
                                    o.seed);
    } else {
        DimensionRange dims;
        dims.system_max = o.system_max;
        dims.bath_max = o.bath_max;
        dims.catalyst_max = o.catalyst_max;
        CampaignOptions opt;
        opt.context = ThermalContext(o.omega, o.beta);
        opt.filter_tolerance = o.filter;
        opt.catalyst_perturbation = o.perturbation;
        opt.margin = o.margin;
        rep = necessity_campaign(parse_theorem(o.theorem), dims, o.trials, o.seed, opt);
    }
    emit(dump_json(report_to_json(rep)), o, out);
    return rep.failures.empty() ? kExitOk : kExitInfeasible;
}

int do_lorenz(const Options &o, std::ostream &out) {
    require_format(o, true);
    if (o.component != "mu" && o.component != "alpha") {
        throw Error(ErrorCode::InvalidArgument, "--component must be mu or alpha");
    }
    std::vector<std::vector<double>> series;
    for (const auto &path : o.inputs) {
        StateDocument d = load_state(path);
        series.push_back(o.component == "mu" ? d.summary.mu : d.summary.alpha);
    }
    auto rows = emit_lorenz_data(series);
    if (o.format == "csv") {
        emit(lorenz_csv(rows), o, out);
    } else {
        Json a = Json::array();
        for (const auto &r : rows) a.push_back({{"series", r.series}, {"k", r.k}, {"partial_sum", r.partial_sum}});
        emit(dump_json(Json{{"component", o.component}, {"rows", a}}), o, out);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Gaussian thermal operation toolkit", "gtokit"};
    app.require_subcommand(1);

    auto *check = app.add_subcommand("check", "Decide feasibility of a transformation");
    check->add_option("--theorem", o.theorem, "single-mode|strong-single|weak-single|no-catalyst|strong-approx|weak-M|weak-A")
        ->required();
    check->add_option("--source", o.source, "Source state or spectral JSON")->required();
    check->add_option("--target", o.target, "Target state or spectral JSON")->required();
    check->add_option("--delta", o.delta, "Trace-norm budget for strong-approx");
    check->add_flag("--with-bath", o.with_bath, "weak-M: allow a thermal bath");
    check->add_option("--out", o.out);

    auto *synth = app.add_subcommand("synth", "Build a circuit realizing a feasible target");
    synth->add_option("--mode", o.mode, "single-mode|no-catalyst|weak-single|pair-t|weak-M|weak-A")->required();
    synth->add_option("--source", o.source)->required();
    synth->add_option("--target", o.target);
    synth->add_flag("--with-bath", o.with_bath);
    synth->add_option("--p", o.p, "single-mode transmissivity");
    synth->add_option("--phase", o.phase, "single-mode phase rotation");
    synth->add_option("--catalyst-mu", o.catalyst_mu, "pair-t catalyst value");
    synth->add_option("--out", o.out);

    auto *simulate = app.add_subcommand("simulate", "Run a plan or a circuit forward");
    simulate->add_option("--plan", o.plan);
    simulate->add_option("--circuit", o.circuit);
    simulate->add_option("--state", o.state);
    simulate->add_option("--out", o.out);

    auto *region = app.add_subcommand("sample-region", "Sample the single-mode weak-catalytic reachable region");
    region->add_option("--mu", o.mu)->required();
    region->add_option("--alpha", o.alpha)->required();
    region->add_option("--trials", o.trials);
    region->add_option("--seed", o.seed)->required();
    region->add_option("--filter", o.filter);
    region->add_option("--omega", o.omega);
    region->add_option("--beta", o.beta);
    region->add_option("--format", o.format);
    region->add_option("--out", o.out);

    auto *verify = app.add_subcommand("verify", "Monte-Carlo necessity campaigns");
    verify->add_option("--theorem", o.theorem,
                       "single-mode|no-catalyst|weak-single|strong-approx|weak-M|weak-A|excess-bound|approx")
        ->required();
    verify->add_option("--trials", o.trials);
    verify->add_option("--seed", o.seed)->required();
    verify->add_option("--n-system-max", o.system_max);
    verify->add_option("--n-bath-max", o.bath_max);
    verify->add_option("--n-catalyst-max", o.catalyst_max);
    verify->add_option("--filter", o.filter);
    verify->add_option("--perturbation", o.perturbation);
    verify->add_option("--margin", o.margin);
    verify->add_option("--delta", o.delta, "excess-bound: largest budget");
    verify->add_option("--deltas", o.deltas, "approx: budget grid");
    verify->add_option("--source", o.source);
    verify->add_option("--target", o.target);
    verify->add_option("--omega", o.omega);
    verify->add_option("--beta", o.beta);
    verify->add_option("--format", o.format);
    verify->add_option("--out", o.out);

    auto *lorenz = app.add_subcommand("lorenz", "Partial-sum curves of spectral summaries");
    lorenz->add_option("--input", o.inputs, "State or spectral JSON files")->required();
    lorenz->add_option("--component", o.component, "mu|alpha");
    lorenz->add_option("--format", o.format);
    lorenz->add_option("--out", o.out);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (check->parsed()) return do_check(o, out);
        if (synth->parsed()) return do_synth(o, out);
        if (simulate->parsed()) return do_simulate(o, out);
        if (region->parsed()) return do_sample_region(o, out);
        if (verify->parsed()) return do_verify(o, out);
        if (lorenz->parsed()) return do_lorenz(o, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        if (e.code() == ErrorCode::Infeasible || e.code() == ErrorCode::RatioConflict) {
            out << dump_json(Json{{"feasible", false},
                                  {"error", std::string(error_code_name(e.code()))},
                                  {"message", e.what()}});
            return kExitInfeasible;
        }
        return kExitInputError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace gtokit::cli
