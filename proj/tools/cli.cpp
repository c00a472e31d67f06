// Copyright 2026 The qdyn Authors
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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qdyn/verify.hpp"

#ifndef QDYN_VERSION
#define QDYN_VERSION "unknown"
#endif

namespace qdyn::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

double number_of(const json &v, const char *what) {
    if (!v.is_number()) throw ConfigError(std::string(what) + " must be a number");
    return v.get<double>();
}

InitialState werner_initial(const json &v) {
    const double alpha = number_of(v, "initial (Werner alpha)");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("initial: Werner alpha must lie in [0, 1]");
    return BellDiagonalParams{-alpha, -alpha, -alpha};
}

InitialState bell_initial(const json &v) {
    if (!v.is_array() || v.size() != 3) throw ConfigError("initial: Bell-diagonal form needs [c1, c2, c3]");
    return BellDiagonalParams{number_of(v[0], "c1"), number_of(v[1], "c2"), number_of(v[2], "c3")};
}

InitialState matrix_initial(const json &v) {
    if (!v.is_array() || v.size() != 4) throw ConfigError("initial: c-matrix must be 4x4");
    GeneralTwoQubitParams params;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!v[i].is_array() || v[i].size() != 4) throw ConfigError("initial: c-matrix must be 4x4");
        for (std::size_t j = 0; j < 4; ++j) params.c[i][j] = number_of(v[i][j], "c-matrix entry");
    }
    if (params.c[0][0] != 1.0) throw ConfigError("initial: c-matrix entry [0][0] must be 1");
    return params;
}

InitialState parse_initial(const json &v) {
    if (v.is_number()) return werner_initial(v);
    if (v.is_array()) {
        if (!v.empty() && v[0].is_array()) return matrix_initial(v);
        return bell_initial(v);
    }
    if (v.is_object() && v.size() == 1) {
        const auto &[key, value] = *v.items().begin();
        if (key == "werner") return werner_initial(value);
        if (key == "bell_diagonal") return bell_initial(value);
        if (key == "c_matrix") return matrix_initial(value);
    }
    throw ConfigError("initial: expected a Werner alpha, [c1, c2, c3], a 4x4 c-matrix, or "
                      "{\"werner\" | \"bell_diagonal\" | \"c_matrix\": ...}");
}

std::vector<std::string> string_list(const json &v, const char *what) {
    if (!v.is_array() || v.empty()) throw ConfigError(std::string(what) + " must be a non-empty array");
    std::vector<std::string> out;
    for (const auto &e : v) {
        if (!e.is_string()) throw ConfigError(std::string(what) + " entries must be strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

// CLI11 reports help requests as errors too; only real parse failures map
// to the usage exit code.
int parse_failure(const CLI::App &app, const CLI::ParseError &e, std::ostream &out, std::ostream &err) {
    const int code = app.exit(e, out, err);
    return code == static_cast<int>(CLI::ExitCodes::Success) ? kOk : kUsage;
}

std::string transitions_value(std::optional<double> p) {
    if (!p) return "none";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9f", *p);
    return buf;
}

struct SweepFlags {
    std::string config_path;
    Tolerances tol{};
    OptimizerSettings optimizer{};
    bool serial = false;
};

int cmd_sweep(const SweepFlags &flags, std::ostream &out, std::ostream &err) {
    const auto start = std::chrono::steady_clock::now();
    json doc;
    SweepJob job;
    try {
        std::ifstream in(flags.config_path);
        if (!in) throw ConfigError("cannot read config file " + flags.config_path);
        doc = json::parse(in);
        job = parse_sweep_config(doc);
        job.config.tolerances = flags.tol;
        job.config.optimizer = flags.optimizer;
        validate_config(job.config);
    } catch (const json::exception &e) {
        err << "qdyn sweep: malformed config: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument &e) {
        err << "qdyn sweep: invalid config: " << e.what() << "\n";
        return kUsage;
    }

    std::vector<Trajectory> trajectories;
    try {
        trajectories = flags.serial ? sweep_serial(job.config) : sweep(job.config);
    } catch (const InvalidStateError &e) {
        err << "qdyn sweep: invalid initial state: " << e.what() << "\n";
        return kInvalidState;
    } catch (const SweepError &e) {
        err << "qdyn sweep: state validation failed " << e.what() << "\n";
        return kInvalidState;
    } catch (const std::invalid_argument &e) {
        err << "qdyn sweep: invalid config: " << e.what() << "\n";
        return kUsage;
    }

    std::error_code ec;
    fs::create_directories(job.out_dir, ec);
    if (ec) {
        err << "qdyn sweep: cannot create " << job.out_dir << ": " << ec.message() << "\n";
        return kUsage;
    }
    const std::string stem(to_string(job.config.channel));
    json files = json::object();
    for (const auto &t : trajectories) {
        const std::string part(to_string(t.partition));
        const auto path = job.out_dir / (stem + "_" + part + ".csv");
        write_atomically(path, trajectory_csv(t));
        files[part] = path.string();
        out << path.string() << "\n";
    }

    const auto &o = job.config.optimizer;
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    json manifest = {
        {"version", QDYN_VERSION},
        {"config", doc},
        {"tolerances",
         {{"hermiticity", flags.tol.hermiticity},
          {"trace", flags.tol.trace},
          {"positivity", flags.tol.positivity},
          {"roundoff_clamp", kRoundoffClamp},
          {"simplex_iterations", o.simplex.max_iterations},
          {"simplex_ftol", o.simplex.ftol},
          {"simplex_xtol", o.simplex.xtol},
          {"one_side_grid", {o.one_side_theta, o.one_side_phi}},
          {"two_side_grid", {o.two_side_theta, o.two_side_phi}}}},
        {"duration_seconds", elapsed.count()},
        {"files", files},
    };
    const auto manifest_path = job.out_dir / "manifest.json";
    write_atomically(manifest_path, manifest.dump(2) + "\n");
    out << manifest_path.string() << "\n";
    return kOk;
}

struct VerifyFlags {
    std::string channel;
    std::string fault;
    OracleSuiteOptions suite{};
};

int cmd_verify(VerifyFlags flags, std::ostream &out, std::ostream &err) {
    if (!flags.channel.empty()) flags.suite.only = parse_channel(flags.channel);
    if (!flags.fault.empty()) {
        const auto colon = flags.fault.find(':');
        const auto kind = parse_channel(flags.fault.substr(0, colon));
        const auto part = colon == std::string::npos ? std::nullopt
                                                     : parse_bipartition(flags.fault.substr(colon + 1));
        if (!kind || !part) {
            err << "qdyn verify: fault must be CHANNEL:PARTITION\n";
            return kUsage;
        }
        flags.suite.fault = OracleFault{*kind, *part};
    }

    const auto checks = run_oracle_suite(flags.suite);
    json report = json::array();
    bool all_pass = true;
    for (const auto &c : checks) {
        report.push_back({{"channel", to_string(c.kind)},
                          {"partition", to_string(c.part)},
                          {"max_deviation", c.max_deviation},
                          {"pass", c.pass}});
        if (!c.pass) {
            all_pass = false;
            err << "oracle mismatch: " << to_string(c.kind) << " " << to_string(c.part)
                << " max deviation " << c.max_deviation << "\n";
        }
    }
    const json doc = {{"tolerance", flags.suite.tolerance}, {"pass", all_pass}, {"checks", report}};
    out << doc.dump(2) << "\n";
    return all_pass ? kOk : kOracleMismatch;
}

struct TransitionFlags {
    std::string channel = "amplitude-damping";
    double alpha = 0.0;
    std::string partition = "AB";
    std::string event = "death";
    TransitionOptions opts{};
};

int cmd_transitions(const TransitionFlags &flags, std::ostream &out) {
    const auto kind = parse_channel(flags.channel);
    const auto part = parse_bipartition(flags.partition);
    const auto dir = flags.event == "death" ? TransitionDirection::Death : TransitionDirection::Birth;
    const auto p = find_transition(*kind, BellDiagonalParams{-flags.alpha, -flags.alpha, -flags.alpha}, *part,
                                   dir, flags.opts);
    out << transitions_value(p) << "\n";
    return kOk;
}

std::vector<std::string> channel_names() {
    std::vector<std::string> out;
    for (auto k : kAllChannels) out.emplace_back(to_string(k));
    return out;
}

std::vector<std::string> partition_names() {
    std::vector<std::string> out;
    for (auto b : kAllBipartitions) out.emplace_back(to_string(b));
    return out;
}

}  // namespace

SweepJob parse_sweep_config(const json &doc) {
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    static const std::vector<std::string> known = {"channel",    "initial",  "p_points",
                                                   "partitions", "measures", "out_dir"};
    for (const auto &[key, _] : doc.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ConfigError("unknown config key '" + key + "'");

    SweepJob job;
    if (!doc.contains("channel") || !doc["channel"].is_string()) throw ConfigError("channel: string required");
    const auto kind = parse_channel(doc["channel"].get<std::string>());
    if (!kind) throw ConfigError("channel: unknown channel '" + doc["channel"].get<std::string>() + "'");
    job.config.channel = *kind;

    if (!doc.contains("initial")) throw ConfigError("initial: required");
    job.config.initial = parse_initial(doc["initial"]);

    std::int64_t points = 101;
    if (doc.contains("p_points")) {
        if (!doc["p_points"].is_number_integer()) throw ConfigError("p_points must be an integer");
        points = doc["p_points"].get<std::int64_t>();
        if (points < 1 || points > 100000) throw ConfigError("p_points must lie in [1, 100000]");
    }
    job.config.p_grid = uniform_p_grid(static_cast<std::size_t>(points));

    if (doc.contains("partitions")) {
        for (const auto &name : string_list(doc["partitions"], "partitions")) {
            const auto part = parse_bipartition(name);
            if (!part) throw ConfigError("partitions: unknown partition '" + name + "'");
            if (std::find(job.config.partitions.begin(), job.config.partitions.end(), *part) !=
                job.config.partitions.end())
                throw ConfigError("partitions: duplicate '" + name + "'");
            job.config.partitions.push_back(*part);
        }
    } else {
        job.config.partitions.assign(kAllBipartitions.begin(), kAllBipartitions.end());
    }

    if (doc.contains("measures")) {
        MeasureSet set;
        for (const auto &name : string_list(doc["measures"], "measures")) {
            const auto m = parse_measure(name);
            if (!m) throw ConfigError("measures: unknown measure '" + name + "'");
            set.add(*m);
        }
        job.config.measures = set;
    }

    job.out_dir = "qdyn_out";
    if (doc.contains("out_dir")) {
        if (!doc["out_dir"].is_string() || doc["out_dir"].get<std::string>().empty())
            throw ConfigError("out_dir must be a non-empty string");
        job.out_dir = doc["out_dir"].get<std::string>();
    }
    return job;
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string csv_header() {
    return "p,mutual_info,classical_two_side,quantum_two_side,discord,classical_hv,concurrence,negativity";
}

std::string trajectory_csv(const Trajectory &t) {
    std::ostringstream os;
    os << csv_header() << "\n";
    for (const auto &row : t.rows) {
        const auto &r = row.report;
        for (double v : {row.p, r.mutual_info, r.classical_two_side, r.quantum_two_side, r.discord_b_measured,
                         r.classical_hv_b_measured, r.concurrence})
            os << format_number(v) << ",";
        os << format_number(r.negativity) << "\n";
    }
    return os.str();
}

void write_atomically(const fs::path &path, const std::string &contents) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + tmp.string());
        f << contents;
        f.flush();
        if (!f) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Decoherence dynamics of two-qubit correlations", "qdyn"};
    app.set_version_flag("--version", QDYN_VERSION);
    app.require_subcommand(1);

    SweepFlags sweep_flags;
    auto *sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep and write one CSV per partition");
    sweep_cmd->add_option("config", sweep_flags.config_path, "JSON config file")->required();
    sweep_cmd->add_option("--hermiticity-tol", sweep_flags.tol.hermiticity, "Initial-state hermiticity tolerance")
        ->capture_default_str();
    sweep_cmd->add_option("--trace-tol", sweep_flags.tol.trace, "Initial-state trace tolerance")
        ->capture_default_str();
    sweep_cmd->add_option("--positivity-tol", sweep_flags.tol.positivity, "Initial-state positivity tolerance")
        ->capture_default_str();
    auto &opt = sweep_flags.optimizer;
    sweep_cmd->add_option("--one-side-theta", opt.one_side_theta, "One-side grid polar points")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--one-side-phi", opt.one_side_phi, "One-side grid azimuthal points")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--two-side-theta", opt.two_side_theta, "Two-side grid polar points per side")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--two-side-phi", opt.two_side_phi, "Two-side grid azimuthal points per side")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--simplex-iterations", opt.simplex.max_iterations, "Nelder-Mead iteration cap")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--simplex-ftol", opt.simplex.ftol, "Nelder-Mead value tolerance")->capture_default_str();
    sweep_cmd->add_option("--simplex-xtol", opt.simplex.xtol, "Nelder-Mead step tolerance")->capture_default_str();
    sweep_cmd->add_flag("--serial", sweep_flags.serial, "Use the serial reference sweep");

    VerifyFlags verify_flags;
    auto *verify_cmd = app.add_subcommand("verify", "Check the closed-form reduced states against the dilation");
    verify_cmd->add_option("--channel", verify_flags.channel, "Restrict to one channel")
        ->check(CLI::IsMember(channel_names()));
    verify_cmd->add_option("--draws", verify_flags.suite.draws, "Random Bell-diagonal states per cell")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--p-points", verify_flags.suite.p_points, "Uniform p grid size")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", verify_flags.suite.seed, "Sampling seed")->capture_default_str();
    verify_cmd->add_option("--tolerance", verify_flags.suite.tolerance, "Max entry deviation")
        ->capture_default_str();
    verify_cmd->add_option("--inject-fault", verify_flags.fault, "Flip a coherence sign in one cell")->group("");

    TransitionFlags tr_flags;
    auto *tr_cmd = app.add_subcommand("transitions", "Locate entanglement sudden death or birth for a Werner state");
    tr_cmd->add_option("--channel", tr_flags.channel, "Channel")
        ->capture_default_str()
        ->check(CLI::IsMember(channel_names()));
    tr_cmd->add_option("--alpha", tr_flags.alpha, "Werner parameter")->required()->check(CLI::Range(0.0, 1.0));
    tr_cmd->add_option("--partition", tr_flags.partition, "Bipartition")
        ->capture_default_str()
        ->check(CLI::IsMember(partition_names()));
    tr_cmd->add_option("--event", tr_flags.event, "death or birth")
        ->capture_default_str()
        ->check(CLI::IsMember({"death", "birth"}));
    tr_cmd->add_option("--scan-points", tr_flags.opts.scan_points, "Coarse scan size")
        ->capture_default_str()
        ->check(CLI::Range(2, 10000000));
    tr_cmd->add_option("--bisection-interval", tr_flags.opts.interval, "Final bracket width")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    tr_cmd->add_option("--endpoint-tol", tr_flags.opts.endpoint, "Roots this close to 0 or 1 count as none")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);

    std::vector<const char *> argv;
    argv.push_back("qdyn");
    for (const auto &a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        return parse_failure(app, e, out, err);
    }

    try {
        if (*sweep_cmd) return cmd_sweep(sweep_flags, out, err);
        if (*verify_cmd) return cmd_verify(verify_flags, out, err);
        return cmd_transitions(tr_flags, out);
    } catch (const std::exception &e) {
        err << "qdyn: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace qdyn::cli
