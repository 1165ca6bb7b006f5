// Copyright 2026 The NLA Simulator Authors
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

#include "experiment.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <thread>

#include "acceptance.hpp"
#include "nla/applications.hpp"

namespace nlasim {

namespace {

using nla::applications::SkrScenario;
using nla::applications::TmsvParams;
using nla::detectors::DetectorModel;
using nla::protocols::AmplifierConfig;
using nla::protocols::OperatingPoint;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

struct ParamSpec {
    const char* name;
    double lo;
    double hi;
    bool lo_open;
    bool has_default;
    double fallback;
    const char* help;
};

// Order here is also the CLI flag order.
const std::vector<ParamSpec>& param_specs() {
    static const std::vector<ParamSpec> specs = {
        {"alpha2", 0.0, 1.0, false, false, 0.0, "vacuum weight of the input qubit"},
        {"beta2", 0.0, 1.0, false, false, 0.0, "single-photon weight of the input qubit"},
        {"gamma", 0.0, 1.0, false, true, 0.5, "channel survivability"},
        {"gamma2", 0.0, 1.0, false, false, 0.0, "second (resource-side) survivability, skr only"},
        {"t", 0.0, 1.0, false, true, 0.5, "tunable splitter transmissivity"},
        {"eta", 0.0, 1.0, false, true, 1.0, "detector efficiency"},
        {"mu", 0.0, 1.0, false, true, 0.0, "detector dark-count probability"},
        {"eta2", 0.0, 1.0, false, false, 0.0, "second detector efficiency (defaults to --eta)"},
        {"mu2", 0.0, 1.0, false, false, 0.0, "second detector dark counts (defaults to --mu)"},
        {"ns", 0.0, kInf, false, true, 0.01, "pair-source mean photon number"},
        {"atten-db-km", 0.0, kInf, true, true, 0.6, "link attenuation in dB/km"},
        {"distance", 0.0, kInf, false, true, 0.0, "total link distance in km"},
        {"k", 1.0, 2.0, false, true, 1.0, "repeater links in the PLOB reference (1 or 2)"},
    };
    return specs;
}

const ParamSpec& spec_of(const std::string& name) {
    for (const auto& s : param_specs()) {
        if (name == s.name) return s;
    }
    throw ConfigError("unknown parameter '" + name + "'");
}

bool skr_explicit(const ExperimentConfig& c) { return c.has("gamma2"); }

std::string amplitude_param(const ExperimentConfig& c) { return c.has("beta2") ? "beta2" : "alpha2"; }

// Swept/fixed parameters of an experiment, in sweep order (last varies fastest).
std::vector<std::string> experiment_params(const ExperimentConfig& c) {
    switch (c.experiment) {
        case Experiment::Gain: return {amplitude_param(c), "gamma", "t"};
        case Experiment::Psucc: return {amplitude_param(c), "gamma", "t", "eta", "mu", "eta2", "mu2"};
        case Experiment::Sensing: return {"ns", "gamma", "t", "eta", "mu", "eta2", "mu2"};
        case Experiment::Entangle: return {"eta", "mu", "eta2", "mu2"};
        case Experiment::Skr:
            if (skr_explicit(c)) return {"gamma", "gamma2", "t", "ns", "eta", "mu", "eta2", "mu2", "k"};
            return {"atten-db-km", "distance", "t", "ns", "eta", "mu", "eta2", "mu2", "k"};
        case Experiment::Verify: return {};
    }
    return {};
}

Range fixed(double v) { return Range{v, v, 1}; }

// Value list for a parameter: given, defaulted, or mirrored (eta2/mu2 follow eta/mu).
bool mirrored(const ExperimentConfig& c, const std::string& name) {
    return (name == "eta2" || name == "mu2") && !c.has(name);
}

Range effective(const ExperimentConfig& c, const std::string& name) {
    auto it = c.params.find(name);
    if (it != c.params.end()) return it->second;
    const ParamSpec& s = spec_of(name);
    if (!s.has_default) throw ConfigError("parameter '" + name + "' is required");
    return fixed(s.fallback);
}

std::vector<OperatingPoint> selected_ops(OpSelection sel) {
    switch (sel) {
        case OpSelection::One: return {OperatingPoint::OP1};
        case OpSelection::Two: return {OperatingPoint::OP2};
        case OpSelection::Both: return {OperatingPoint::OP1, OperatingPoint::OP2};
        case OpSelection::Avg: return {};
    }
    return {};
}

bool wants_avg(OpSelection sel) { return sel == OpSelection::Both || sel == OpSelection::Avg; }

void op_columns(std::vector<std::string>& cols, const std::string& stem, OpSelection sel, bool avg) {
    for (auto op : selected_ops(sel)) cols.push_back(stem + (op == OperatingPoint::OP1 ? "_op1" : "_op2"));
    if (avg && wants_avg(sel)) cols.push_back(stem + "_avg");
}

void op_values(std::vector<double>& row, double v1, double v2, OpSelection sel, bool avg) {
    for (auto op : selected_ops(sel)) row.push_back(op == OperatingPoint::OP1 ? v1 : v2);
    if (avg && wants_avg(sel)) row.push_back(0.5 * (v1 + v2));
}

std::vector<std::string> result_columns(const ExperimentConfig& c) {
    std::vector<std::string> cols;
    switch (c.experiment) {
        case Experiment::Gain:
            op_columns(cols, "gain", c.op, true);
            break;
        case Experiment::Psucc:
            op_columns(cols, "psucc", c.op, true);
            cols.push_back("psucc_qs");
            break;
        case Experiment::Sensing:
            op_columns(cols, "psucc", c.op, true);
            op_columns(cols, "gain", c.op, false);
            op_columns(cols, "restore_t", c.op, false);
            cols.push_back("truncation_weight");
            break;
        case Experiment::Entangle:
            op_columns(cols, "psucc", c.op, true);
            op_columns(cols, "fidelity", c.op, false);
            break;
        case Experiment::Skr:
            if (!skr_explicit(c)) cols.push_back("l_att_km");
            cols.push_back("chi");
            cols.push_back("gamma_half");
            op_columns(cols, "skr", c.op, true);
            cols.push_back("skr_qs");
            cols.push_back("plob");
            break;
        case Experiment::Verify:
            break;
    }
    return cols;
}

double value_or_nan(const std::optional<double>& v) { return v ? *v : kNaN; }

double restore_or_nan(const TmsvParams& tm, double gamma, OperatingPoint op) {
    try {
        return nla::applications::full_restoration_t(tm, gamma, op);
    } catch (const nla::DomainError&) {
        return kNaN;
    }
}

using Point = std::map<std::string, double>;

std::vector<double> evaluate(const ExperimentConfig& c, const Point& p) {
    std::vector<double> row;
    const DetectorModel d1{p.at("eta"), p.at("mu")};
    const DetectorModel d2{p.at("eta2"), p.at("mu2")};
    switch (c.experiment) {
        case Experiment::Gain: {
            auto cfg = AmplifierConfig::from_alpha2(p.at("alpha2"), p.at("gamma"), p.at("t"));
            auto r = nla::protocols::oneway_run(cfg);
            op_values(row, value_or_nan(r.gain(OperatingPoint::OP1)),
                      value_or_nan(r.gain(OperatingPoint::OP2)), c.op, true);
            break;
        }
        case Experiment::Psucc: {
            auto cfg = AmplifierConfig::from_alpha2(p.at("alpha2"), p.at("gamma"), p.at("t"), d1, d2);
            auto r = nla::protocols::oneway_run(cfg);
            op_values(row, r.success_probability(OperatingPoint::OP1),
                      r.success_probability(OperatingPoint::OP2), c.op, true);
            row.push_back(nla::protocols::qs_nla_run(cfg).success_probability);
            break;
        }
        case Experiment::Sensing: {
            const TmsvParams tm{p.at("ns")};
            auto r = nla::applications::sensing_restore(tm, p.at("gamma"), p.at("t"), d1, d2);
            op_values(row, r.success[0], r.success[1], c.op, true);
            op_values(row, value_or_nan(r.gain[0]), value_or_nan(r.gain[1]), c.op, false);
            op_values(row, restore_or_nan(tm, p.at("gamma"), OperatingPoint::OP1),
                      restore_or_nan(tm, p.at("gamma"), OperatingPoint::OP2), c.op, false);
            row.push_back(r.input.weight);
            break;
        }
        case Experiment::Entangle: {
            auto r = nla::applications::remote_entangle(d1, d2);
            op_values(row, r.protocol.branches[0].success_probability,
                      r.protocol.branches[1].success_probability, c.op, true);
            op_values(row, r.fidelity[0], r.fidelity[1], c.op, false);
            break;
        }
        case Experiment::Skr: {
            const TmsvParams tm{p.at("ns")};
            const int k = static_cast<int>(p.at("k"));
            nla::applications::SkrResult r;
            if (skr_explicit(c)) {
                r = nla::applications::skr_protocol(tm, p.at("gamma"), p.at("gamma2"), p.at("t"), d1, d2);
                r.plob = r.chi > 0.0 ? nla::applications::plob_bound(r.chi, k) : 0.0;
            } else {
                SkrScenario s;
                s.link = {p.at("atten-db-km"), p.at("distance")};
                s.t = p.at("t");
                s.tmsv = tm;
                s.detector1 = d1;
                s.detector2 = d2;
                s.repeater_links = k;
                r = nla::applications::skr_protocol(s);
                row.push_back(s.link.attenuation_length_km());
            }
            row.push_back(r.chi);
            row.push_back(std::sqrt(r.chi));
            op_values(row, r.skr[0], r.skr[1], c.op, true);
            row.push_back(nla::applications::skr_from_success(r.qs_success));
            row.push_back(r.plob);
            break;
        }
        case Experiment::Verify:
            break;
    }
    return row;
}

std::vector<std::string> column_names(const std::string& param) {
    if (param == "alpha2" || param == "beta2") return {"alpha2", "beta2"};
    if (param == "atten-db-km") return {"atten_db_km"};
    if (param == "distance") return {"distance_km"};
    return {param};
}

int write_report(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
    const auto results = run_acceptance();
    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.out_path.empty()) {
        file.open(config.out_path);
        if (!file) {
            err << "error: cannot write '" << config.out_path << "'\n";
            return 1;
        }
        sink = &file;
    }
    bool ok = true;
    for (const auto& r : results) {
        *sink << format_line(r) << '\n';
        ok = ok && r.passed;
    }
    *sink << (ok ? "all criteria passed" : "some criteria failed") << '\n';
    return ok ? 0 : 2;
}

}  // namespace

std::string to_string(Experiment e) {
    switch (e) {
        case Experiment::Gain: return "gain";
        case Experiment::Psucc: return "psucc";
        case Experiment::Skr: return "skr";
        case Experiment::Sensing: return "sensing";
        case Experiment::Entangle: return "entangle";
        case Experiment::Verify: return "verify";
    }
    return "?";
}

std::string to_string(OpSelection op) {
    switch (op) {
        case OpSelection::One: return "1";
        case OpSelection::Two: return "2";
        case OpSelection::Both: return "both";
        case OpSelection::Avg: return "avg";
    }
    return "?";
}

OpSelection parse_op(const std::string& text) {
    if (text == "1") return OpSelection::One;
    if (text == "2") return OpSelection::Two;
    if (text == "both") return OpSelection::Both;
    if (text == "avg") return OpSelection::Avg;
    throw ConfigError("op: expected 1, 2, both or avg, got '" + text + "'");
}

std::vector<double> Range::values() const {
    if (count <= 1) return {start};
    std::vector<double> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        v[static_cast<std::size_t>(i)] =
            i == count - 1 ? stop : start + (stop - start) * static_cast<double>(i) / (count - 1);
    }
    return v;
}

std::string Range::text() const {
    if (!swept()) return format_number(start);
    return format_number(start) + ":" + format_number(stop) + ":" + std::to_string(count);
}

Range parse_range(const std::string& field, const std::string& text) {
    std::vector<std::string> parts;
    std::size_t from = 0;
    while (true) {
        const auto colon = text.find(':', from);
        parts.push_back(text.substr(from, colon == std::string::npos ? std::string::npos : colon - from));
        if (colon == std::string::npos) break;
        from = colon + 1;
    }
    auto number = [&](const std::string& s) {
        try {
            double v = parse_number(s);
            if (!std::isfinite(v)) throw std::invalid_argument("non-finite");
            return v;
        } catch (const std::exception&) {
            throw ConfigError(field + ": '" + s + "' is not a finite number");
        }
    };
    if (parts.size() == 1) return fixed(number(parts[0]));
    if (parts.size() != 3) throw ConfigError(field + ": expected a value or start:stop:count, got '" + text + "'");
    Range r{number(parts[0]), number(parts[1]), 0};
    try {
        std::size_t used = 0;
        long n = std::stol(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument("trailing");
        if (n > 1000000) throw ConfigError(field + ": sweep count too large");
        r.count = static_cast<int>(n);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError(field + ": count '" + parts[2] + "' is not an integer");
    }
    if (r.count < 2) throw ConfigError(field + ": a swept range needs at least 2 steps");
    return r;
}

void validate(const ExperimentConfig& c) {
    if (c.experiment == Experiment::Verify) return;
    if (c.has("alpha2") && c.has("beta2")) throw ConfigError("alpha2/beta2: give exactly one, not both");
    const bool needs_amplitude = c.experiment == Experiment::Gain || c.experiment == Experiment::Psucc;
    if (needs_amplitude && !c.has("alpha2") && !c.has("beta2")) {
        throw ConfigError("alpha2/beta2: exactly one must be given");
    }
    if (c.has("gamma2") && c.experiment != Experiment::Skr) {
        throw ConfigError("gamma2: only the skr experiment has a second loss");
    }
    if (c.experiment == Experiment::Skr && skr_explicit(c) && !c.has("gamma")) {
        throw ConfigError("gamma: required together with gamma2");
    }
    const auto used = experiment_params(c);
    for (const auto& [name, range] : c.params) {
        if (std::find(used.begin(), used.end(), name) == used.end()) {
            throw ConfigError(name + ": not used by the " + to_string(c.experiment) + " experiment");
        }
        const ParamSpec& s = spec_of(name);
        for (double v : {range.start, range.stop}) {
            const bool low_bad = s.lo_open ? !(v > s.lo) : !(v >= s.lo);
            if (low_bad || !(v <= s.hi)) {
                throw ConfigError(name + ": value " + format_number(v) + " is out of range");
            }
        }
        if (name == "k") {
            for (double v : range.values()) {
                if (v != 1.0 && v != 2.0) throw ConfigError("k: must be 1 or 2");
            }
        }
    }
}

CsvTable run_experiment(const ExperimentConfig& c) {
    validate(c);
    CsvTable table;
    table.meta.emplace_back("tool", "nlasim");
    table.meta.emplace_back("version", kToolVersion);
    table.meta.emplace_back("experiment", to_string(c.experiment));
    table.meta.emplace_back("op", to_string(c.op));
    table.meta.emplace_back("seed", std::to_string(c.seed));

    const auto names = experiment_params(c);
    std::vector<std::vector<double>> axes;
    for (const auto& n : names) {
        if (mirrored(c, n)) {
            table.meta.emplace_back(n, n == "eta2" ? "eta" : "mu");
            axes.push_back({});
            continue;
        }
        const Range r = effective(c, n);
        table.meta.emplace_back(n, r.text());
        axes.push_back(r.values());
    }
    if (c.experiment == Experiment::Skr && !skr_explicit(c)) {
        const Range a = effective(c, "atten-db-km");
        if (!a.swept()) {
            table.meta.emplace_back("attenuation_length_km",
                                    format_number(nla::channels::attenuation_length_km(a.start)));
        }
        table.meta.emplace_back("distance_convention", "total end-to-end, split at the midpoint");
    }

    for (const auto& n : names) {
        for (const auto& col : column_names(n)) table.columns.push_back(col);
    }
    for (const auto& col : result_columns(c)) table.columns.push_back(col);

    // Cartesian product, last axis fastest; mirrored axes copy their source.
    std::vector<Point> points(1);
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (axes[i].empty()) continue;
        std::vector<Point> next;
        next.reserve(points.size() * axes[i].size());
        for (const auto& p : points) {
            for (double v : axes[i]) {
                Point q = p;
                q[names[i]] = v;
                next.push_back(std::move(q));
            }
        }
        points = std::move(next);
    }
    for (auto& p : points) {
        if (!p.count("eta")) p["eta"] = 1.0;
        if (!p.count("mu")) p["mu"] = 0.0;
        if (!p.count("eta2")) p["eta2"] = p["eta"];
        if (!p.count("mu2")) p["mu2"] = p["mu"];
        if (p.count("beta2")) p["alpha2"] = 1.0 - p["beta2"];
        if (p.count("alpha2") && !p.count("beta2")) p["beta2"] = 1.0 - p["alpha2"];
    }

    // Points are independent; rows land at their sweep index.
    std::vector<std::vector<double>> results(points.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                results[i] = evaluate(c, points[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_lock);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), points.size());
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<double> row;
        for (const auto& n : names) {
            if (n == "alpha2" || n == "beta2") {
                row.push_back(points[i].at("alpha2"));
                row.push_back(points[i].at("beta2"));
            } else {
                row.push_back(points[i].at(n));
            }
        }
        row.insert(row.end(), results[i].begin(), results[i].end());
        table.rows.push_back(std::move(row));
    }
    return table;
}

int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.experiment == Experiment::Verify) return write_report(config, out, err);
        const CsvTable table = run_experiment(config);
        if (config.out_path.empty()) {
            write_csv(out, table);
            return 0;
        }
        std::ofstream file(config.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << config.out_path << "'\n";
            return 1;
        }
        write_csv(file, table);
        file.close();
        if (!file) {
            err << "error: failed while writing '" << config.out_path << "'\n";
            return 1;
        }
        return 0;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return 1;
    } catch (const nla::Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Noiseless linear amplifier experiment runner", "nlasim"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    struct Flags {
        std::map<std::string, std::string> values;
        std::string op = "both";
        std::string out;
        std::uint64_t seed = 0;
    };
    std::map<std::string, Flags> flags;
    std::map<std::string, CLI::App*> subs;
    const std::vector<std::pair<Experiment, const char*>> experiments = {
        {Experiment::Gain, "gain curves against t"},
        {Experiment::Psucc, "success probability with imperfect detectors"},
        {Experiment::Skr, "secret key rate against distance"},
        {Experiment::Sensing, "idler restoration for a truncated pair source"},
        {Experiment::Entangle, "remote entanglement of photon-transmon pairs"},
        {Experiment::Verify, "run the acceptance suite"},
    };
    for (const auto& [e, desc] : experiments) {
        const std::string name = to_string(e);
        CLI::App* sub = app.add_subcommand(name, desc);
        subs[name] = sub;
        Flags& f = flags[name];
        if (e != Experiment::Verify) {
            for (const auto& s : param_specs()) {
                sub->add_option(std::string("--") + s.name, f.values[s.name],
                                std::string(s.help) + " (value or start:stop:count)");
            }
            sub->add_option("--op", f.op, "operating point: 1, 2, both or avg");
        }
        sub->add_option("--out", f.out, "output path (default: standard output)");
        sub->add_option("--seed", f.seed, "reserved; every computation is deterministic");
    }

    std::vector<std::string> argv_store{"nlasim"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    ExperimentConfig config;
    try {
        for (const auto& [e, desc] : experiments) {
            const std::string name = to_string(e);
            CLI::App* sub = subs[name];
            if (!sub->parsed()) continue;
            config.experiment = e;
            const Flags& f = flags[name];
            if (e != Experiment::Verify) {
                for (const auto& s : param_specs()) {
                    if (sub->get_option(std::string("--") + s.name)->count() > 0) {
                        config.params[s.name] = parse_range(s.name, f.values.at(s.name));
                    }
                }
                config.op = parse_op(f.op);
            }
            config.out_path = f.out;
            config.seed = f.seed;
        }
        validate(config);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return 1;
    }
    return run(config, out, err);
}

}  // namespace nlasim
