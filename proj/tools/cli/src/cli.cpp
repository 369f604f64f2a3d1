// Copyright 2026 The qcommbench Authors
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


#include "qcb/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <cmath>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "qcb/counts_io.hpp"
#include "qcb/error.hpp"
#include "qcb/fixtures.hpp"
#include "qcb/qasm.hpp"
#include "qcb/report.hpp"

namespace qcb::cli {
namespace {

namespace fs = std::filesystem;

/// Bad flag combinations detected after CLI11 has parsed.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Common {
    RunConfig cfg;
    std::string backend;
    std::string output;
    unsigned threads = 0;
    bool keep_idle = false;
    bool verbose = false;
};

struct SweepFlags {
    std::string swaps;
    std::string delay;
};

struct Context {
    PlanFile plan_file;
    std::optional<DeviceGraph> graph;
    NoiseModel noise;
    RunSettings settings;
};

void add_common(CLI::App *sub, Common &c) {
    sub->add_option("--device", c.cfg.device, "Bundled device name or device JSON file");
    sub->add_option("--noise", c.cfg.noise, "Bundled noise pack name or noise JSON file");
    sub->add_option("--plan", c.cfg.plan, "Experiment plan JSON file")->check(CLI::ExistingFile);
    sub->add_option("--backend", c.backend, "Simulation backend")
        ->check(CLI::IsMember({"density", "trajectory"}));
    sub->add_option("--shots", c.cfg.shots, "Shots per cell")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.cfg.seed, "Base RNG seed");
    sub->add_option("--output", c.output, "CSV output file");
    sub->add_option("--out-dir", c.cfg.output_dir,
                    fmt::format("Output directory (default: ${} or stdout)", kOutputDirEnv));
    sub->add_option("--threads", c.threads, "Trajectory worker threads (0: hardware concurrency)");
    sub->add_flag("--keep-idle", c.keep_idle, "Keep unused qubits in the density matrix");
    sub->add_flag("-v,--verbose", c.verbose, "Report progress on stderr");
}

void add_sweep(CLI::App *sub, SweepFlags &s) {
    auto *sw = sub->add_option("--swaps", s.swaps, "SWAP-count sweep, e.g. 0..14:2");
    auto *dl = sub->add_option("--delay", s.delay, "Delay sweep, e.g. 0..6us or 0..2000ns:500");
    sw->excludes(dl);
}

std::optional<SweepSpec> sweep_from(const SweepFlags &s, const PlanFile &pf) {
    if (!s.swaps.empty()) {
        return parse_sweep(s.swaps, SweepAxis::Swaps);
    }
    if (!s.delay.empty()) {
        return parse_sweep(s.delay, SweepAxis::Delay);
    }
    return pf.sweep;
}

std::string output_dir(const Common &c) {
    if (!c.cfg.output_dir.empty()) {
        return c.cfg.output_dir;
    }
    if (const char *env = std::getenv(kOutputDirEnv); env && *env) {
        return env;
    }
    return {};
}

/// Names from the plan are resolved next to the plan file.
std::string near_plan(const std::string &value, const Common &c) {
    if (c.cfg.plan.empty() || fs::path(value).is_absolute()) {
        return value;
    }
    const fs::path candidate = fs::path(c.cfg.plan).parent_path() / value;
    return fs::exists(candidate) ? candidate.string() : value;
}

Context load_context(const Common &c, Protocol protocol, const std::string &default_device) {
    Context ctx;
    if (!c.cfg.plan.empty()) {
        ctx.plan_file = load_plan(c.cfg.plan);
    } else {
        ctx.plan_file.plan.protocol = protocol;
    }
    const PlanFile &pf = ctx.plan_file;

    std::string device = default_device;
    if (!c.cfg.device.empty()) {
        device = c.cfg.device;
    } else if (pf.device) {
        device = near_plan(*pf.device, c);
    }
    ctx.graph = resolve_device(device);

    std::string noise = "ibmqx5-2018";
    if (!c.cfg.noise.empty()) {
        noise = c.cfg.noise;
    } else if (pf.noise) {
        noise = near_plan(*pf.noise, c);
    }
    ctx.noise = resolve_noise(noise);

    RunSettings &rs = ctx.settings;
    rs.backend = !c.backend.empty() ? backend_from_string(c.backend) : pf.backend.value_or(Backend::Density);
    rs.aggregate = pf.aggregate.value_or(QberAggregate::Mean);
    rs.sim.retire_idle_qubits = c.keep_idle ? false : pf.retire_idle_qubits.value_or(true);
    rs.sim.threads = c.threads;

    ExperimentPlan &p = ctx.plan_file.plan;
    if (c.cfg.shots) {
        p.shots = *c.cfg.shots;
    }
    if (c.cfg.seed) {
        p.seed = *c.cfg.seed;
    }
    return ctx;
}

RoutePlan route_plan(const NamedRoute &r) {
    RoutePlan plan;
    plan.path = r.path;
    plan.return_path = r.return_kind;
    return plan;
}

/// Route precedence: --route, plan route name, plan route object, then
/// "upper-row" when a SWAP sweep needs one and the device has it.
void pick_route(Context &ctx, const std::string &flag, const std::optional<SweepSpec> &sweep) {
    ExperimentPlan &p = ctx.plan_file.plan;
    if (!flag.empty()) {
        p.route = route_plan(ctx.graph->route(flag));
    } else if (ctx.plan_file.route_name) {
        p.route = route_plan(ctx.graph->route(*ctx.plan_file.route_name));
    } else if (!p.route && sweep && sweep->axis == SweepAxis::Swaps && ctx.graph->routes().count("upper-row")) {
        p.route = route_plan(ctx.graph->route("upper-row"));
    }
}

/// Explicit flags win, then the plan. Otherwise the single-qubit delay run
/// uses Q1 (clear of the stored-qubit drift) and everything else (Q0, Q1).
void pick_pair(Context &ctx, const std::string &carrier, const std::string &partner,
               const std::optional<SweepSpec> &sweep) {
    ExperimentPlan &p = ctx.plan_file.plan;
    if (!ctx.plan_file.pair_given) {
        const bool delay_single =
            p.protocol == Protocol::Bb84Single && sweep && sweep->axis == SweepAxis::Delay;
        p.carrier = delay_single ? "Q1" : "Q0";
        p.partner = delay_single ? "Q0" : "Q1";
    }
    if (!carrier.empty()) {
        p.carrier = carrier;
    }
    if (!partner.empty()) {
        p.partner = partner;
    }
}

void write_csv(const std::vector<ReportRow> &rows, const Common &c, const std::string &name, std::ostream &out,
               std::ostream &err) {
    std::string path = c.output;
    if (path.empty()) {
        if (const std::string dir = output_dir(c); !dir.empty()) {
            path = (fs::path(dir) / (name + ".csv")).string();
        }
    }
    if (path.empty()) {
        out << format_csv(rows);
        return;
    }
    emit_csv(rows, path);
    if (c.verbose) {
        err << "wrote " << path << "\n";
    }
}

std::string backend_tag(const RunSettings &rs) {
    return std::string(to_string(rs.backend));
}

int cmd_sdc_sweep(const Common &c, const SweepFlags &sf, const std::string &route, bool correct,
                  std::optional<double> t_osc, std::ostream &out, std::ostream &err) {
    Context ctx = load_context(c, Protocol::Sdc, "ibmqx5");
    ExperimentPlan &p = ctx.plan_file.plan;
    if (p.protocol != Protocol::Sdc) {
        throw Error("sdc-sweep: plan protocol is " + std::string(to_string(p.protocol)));
    }
    const auto sweep = sweep_from(sf, ctx.plan_file);
    if (!sweep) {
        throw UsageError("sdc-sweep: give --swaps or --delay (or a plan sweep)");
    }
    pick_route(ctx, route, sweep);
    p.mitigation.phase_correction = p.mitigation.phase_correction || correct;
    if (t_osc) {
        p.correction_t_osc_us = *t_osc;
    }
    p.validate();
    if (c.verbose) {
        err << fmt::format("sdc-sweep: device {} noise {} backend {} points {}\n", ctx.graph->name(),
                           ctx.noise.name, backend_tag(ctx.settings), sweep->values.size());
    }
    const auto points = run_sdc_sweep(p, *sweep, *ctx.graph, ctx.noise, ctx.settings);
    write_csv(sdc_rows(points, p.shots, p.seed, backend_tag(ctx.settings)), c, "sdc-sweep", out, err);
    return kExitOk;
}

Protocol variant_protocol(const std::string &variant) {
    return variant == "dualrail" ? Protocol::Bb84DualRail : Protocol::Bb84Single;
}

int cmd_bb84(const Common &c, const SweepFlags &sf, const std::string &variant, const std::string &carrier,
             const std::string &partner, const std::string &aggregate, bool correct, std::optional<double> t_osc,
             std::ostream &out, std::ostream &err) {
    const Protocol requested = variant.empty() ? Protocol::Bb84Single : variant_protocol(variant);
    Context ctx = load_context(c, requested, "ibmqx4");
    ExperimentPlan &p = ctx.plan_file.plan;
    if (c.cfg.plan.empty() || !variant.empty()) {
        p.protocol = requested;
    }
    if (p.protocol == Protocol::Sdc) {
        throw Error("bb84: plan protocol is sdc");
    }
    p.mitigation.dual_rail = p.protocol == Protocol::Bb84DualRail;
    const auto sweep = sweep_from(sf, ctx.plan_file);
    if (!sweep) {
        throw UsageError("bb84: give --swaps or --delay (or a plan sweep)");
    }
    pick_pair(ctx, carrier, partner, sweep);
    p.mitigation.phase_correction = p.mitigation.phase_correction || correct;
    if (t_osc) {
        p.correction_t_osc_us = *t_osc;
    }
    if (!aggregate.empty()) {
        ctx.settings.aggregate = aggregate_from_string(aggregate);
    }
    p.validate();
    if (c.verbose) {
        err << fmt::format("bb84: {} on {}/{} device {} noise {} backend {} points {}\n", to_string(p.protocol),
                           p.carrier, p.partner, ctx.graph->name(), ctx.noise.name, backend_tag(ctx.settings),
                           sweep->values.size());
    }
    const auto points = run_bb84_sweep(p, *sweep, *ctx.graph, ctx.noise, ctx.settings);
    write_csv(bb84_rows(points, p.shots, p.seed, backend_tag(ctx.settings)), c, std::string(to_string(p.protocol)),
              out, err);
    return kExitOk;
}

int cmd_replay(const Common &c, const std::string &table, double f_ec, std::ostream &out, std::ostream &err) {
    std::vector<std::string> log;
    const auto rows = replay_fixture(table, &log, f_ec);
    if (c.verbose) {
        for (const auto &line : log) {
            err << line << "\n";
        }
    }
    write_csv(rows, c, "replay-" + table, out, err);
    return kExitOk;
}

int cmd_score(const Common &c, const std::string &counts, const std::string &protocol, const std::string &aggregate,
              double f_ec, std::ostream &out, std::ostream &err) {
    const CountsDocument doc = load_counts(counts);
    std::string name = protocol;
    if (name.empty()) {
        if (!doc.protocol) {
            throw UsageError("score: the counts file names no protocol; pass --protocol");
        }
        name = *doc.protocol;
    }
    RunSettings rs;
    rs.f_ec = f_ec;
    if (!aggregate.empty()) {
        rs.aggregate = aggregate_from_string(aggregate);
    }
    write_csv(score_counts(doc, protocol_from_string(name), rs), c, "score", out, err);
    return kExitOk;
}

std::string cell_tag(const std::string &label) {
    std::string tag = label;
    std::replace(tag.begin(), tag.end(), '+', 'p');
    return tag;
}

int cmd_export_qasm(const Common &c, const SweepFlags &sf, const std::string &protocol, const std::string &route,
                    const std::string &carrier, const std::string &partner, bool correct,
                    std::optional<double> t_osc, std::ostream &out, std::ostream &err) {
    const std::string dir = output_dir(c);
    if (dir.empty()) {
        throw UsageError(fmt::format("export-qasm: give --out-dir or set {}", kOutputDirEnv));
    }
    Protocol proto = protocol.empty() ? Protocol::Sdc : protocol_from_string(protocol);
    if (protocol.empty() && !c.cfg.plan.empty()) {
        proto = load_plan(c.cfg.plan).plan.protocol;
    }
    Context ctx = load_context(c, proto, proto == Protocol::Sdc ? "ibmqx5" : "ibmqx4");
    ExperimentPlan &p = ctx.plan_file.plan;
    p.protocol = proto;
    p.mitigation.dual_rail = proto == Protocol::Bb84DualRail;
    p.mitigation.phase_correction = p.mitigation.phase_correction || correct;
    if (t_osc) {
        p.correction_t_osc_us = *t_osc;
    }
    const auto sweep = sweep_from(sf, ctx.plan_file);
    if (proto == Protocol::Sdc) {
        pick_route(ctx, route, sweep);
    } else {
        pick_pair(ctx, carrier, partner, sweep);
    }
    p.validate();

    std::vector<ExperimentPlan> plans;
    std::vector<std::string> tags;
    const GateDurations &dur = ctx.noise.durations;
    if (!sweep) {
        plans.push_back(p);
        tags.push_back("point");
    } else {
        for (double v : sweep->values) {
            plans.push_back(proto == Protocol::Sdc ? sdc_point_plan(p, sweep->axis, v, dur)
                                                   : bb84_point_plan(p, sweep->axis, v, dur));
            tags.push_back(sweep->axis == SweepAxis::Swaps
                               ? fmt::format("swaps{:02}", static_cast<long long>(std::llround(v)))
                               : fmt::format("gates{:04}", plans.back().delay_gates));
        }
    }

    fs::create_directories(dir);
    for (std::size_t i = 0; i < plans.size(); ++i) {
        std::vector<std::pair<std::string, Circuit>> cells;
        if (proto == Protocol::Sdc) {
            for (const auto &in : SdcInput::all()) {
                cells.emplace_back(in.label(), build_sdc_circuit(plans[i], in, *ctx.graph, dur));
            }
        } else {
            for (const auto &sym : Bb84Symbol::all()) {
                cells.emplace_back(cell_tag(sym.label()), proto == Protocol::Bb84Single
                                                               ? build_bb84_single(plans[i], sym, *ctx.graph, dur)
                                                               : build_bb84_dualrail(plans[i], sym, *ctx.graph, dur));
            }
        }
        for (const auto &[label, circuit] : cells) {
            const fs::path path = fs::path(dir) / fmt::format("{}_{}_{}.qasm", to_string(proto), tags[i], label);
            std::ofstream f(path, std::ios::binary);
            f << export_qasm(circuit);
            if (!f) {
                throw Error("export-qasm: cannot write " + path.string());
            }
            out << path.string() << "\n";
        }
    }
    if (c.verbose) {
        err << fmt::format("export-qasm: {} files\n", plans.size() * 4);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Noisy simulation benchmarks for superdense coding and BB84 on small devices", "qcbench"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "qcbench 0.1.0");

    Common common;
    SweepFlags sweep;
    std::string route;
    std::string variant;
    std::string carrier;
    std::string partner;
    std::string aggregate;
    std::string table;
    std::string counts;
    std::string protocol;
    bool correct = false;
    std::optional<double> t_osc;
    double f_ec = 1.15;

    auto add_correction = [&](CLI::App *sub) {
        sub->add_flag("--correct-phase", correct, "Insert the drift phase correction after the delay");
        sub->add_option("--correction-t-osc", t_osc, "Oscillation period (us) assumed by the correction")
            ->check(CLI::PositiveNumber);
    };
    auto add_pair = [&](CLI::App *sub) {
        sub->add_option("--carrier", carrier, "BB84 carrier qubit (dual-rail rail 0)");
        sub->add_option("--partner", partner, "BB84 SWAP partner (dual-rail rail 1)");
    };

    auto *sdc = app.add_subcommand("sdc-sweep", "Mutual information of superdense coding over a sweep");
    add_common(sdc, common);
    add_sweep(sdc, sweep);
    sdc->add_option("--route", route, "Named device route");
    add_correction(sdc);

    auto *bb84 = app.add_subcommand("bb84", "QBER and secret key rate of BB84 over a sweep");
    add_common(bb84, common);
    add_sweep(bb84, sweep);
    bb84->add_option("--variant", variant, "Encoding")->check(CLI::IsMember({"single", "dualrail"}));
    add_pair(bb84);
    bb84->add_option("--aggregate", aggregate, "QBER aggregate")
        ->check(CLI::IsMember({"mean", "accepted-weighted"}));
    add_correction(bb84);

    auto *replay = app.add_subcommand("replay-fixture", "Metrics computed from an embedded reference table");
    add_common(replay, common);
    replay->add_option("--table", table, "Table id")->required()->check(CLI::IsMember(fixture_ids()));
    replay->add_option("--f-ec", f_ec, "Error-correction inefficiency")->check(CLI::Range(1.0, 10.0));

    auto *qasm = app.add_subcommand("export-qasm", "One OpenQASM 2.0 file per cell and sweep point");
    add_common(qasm, common);
    add_sweep(qasm, sweep);
    qasm->add_option("--protocol", protocol, "Protocol")
        ->check(CLI::IsMember({"sdc", "bb84-single", "bb84-dualrail"}));
    qasm->add_option("--route", route, "Named device route (sdc)");
    add_pair(qasm);
    add_correction(qasm);

    auto *score = app.add_subcommand("score", "Metrics from a measured counts file");
    add_common(score, common);
    score->add_option("--counts", counts, "Counts JSON file")->required()->check(CLI::ExistingFile);
    score->add_option("--protocol", protocol, "Protocol (default: from the counts file)")
        ->check(CLI::IsMember({"sdc", "bb84-single", "bb84-dualrail"}));
    score->add_option("--aggregate", aggregate, "QBER aggregate")
        ->check(CLI::IsMember({"mean", "accepted-weighted"}));
    score->add_option("--f-ec", f_ec, "Error-correction inefficiency")->check(CLI::Range(1.0, 10.0));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sdc->parsed()) {
            return cmd_sdc_sweep(common, sweep, route, correct, t_osc, out, err);
        }
        if (bb84->parsed()) {
            return cmd_bb84(common, sweep, variant, carrier, partner, aggregate, correct, t_osc, out, err);
        }
        if (replay->parsed()) {
            return cmd_replay(common, table, f_ec, out, err);
        }
        if (qasm->parsed()) {
            return cmd_export_qasm(common, sweep, protocol, route, carrier, partner, correct, t_osc, out, err);
        }
        return cmd_score(common, counts, protocol, aggregate, f_ec, out, err);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}

}  // namespace qcb::cli
