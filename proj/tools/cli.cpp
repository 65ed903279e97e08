// Copyright 2026 The graylap Authors
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
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "graylap/adiabatic.hpp"
#include "graylap/builders.hpp"
#include "graylap/circuit.hpp"
#include "graylap/csv.hpp"
#include "graylap/ho.hpp"
#include "graylap/trotter.hpp"
#include "graylap/version.hpp"

namespace graylap::cli {

namespace {

using nlohmann::json;

// Validation failure detected by the CLI itself; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_real(const std::string &text) {
    double v = 0.0;
    const auto *end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end) {
        throw UsageError("not a number: '" + text + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        parts.push_back(item);
    }
    return parts;
}

int resolve_threads() {
    if (const char *env = std::getenv("GRAYLAP_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) {
            return t;
        }
    }
    return 0;
}

json conventions(PolarityConvention polarity = PolarityConvention::Resolved) {
    return {{"bit_order", std::string(to_string(kDefaultBitOrder))},
            {"polarity_map", std::string(to_string(polarity))},
            {"rotation", "ROTX(t)=exp(i t X)"},
            {"u1_order", "exp(i l G_0)...exp(i l G_{n-1}), G_{n-1} acts first"}};
}

json metadata(const std::string &command, const json &config, const json &conv) {
    return {{"tool", "graylap"},
            {"version", kVersion},
            {"command", command},
            {"config", config},
            {"conventions", conv}};
}

// Writes to --out or to the fallback stream.
class Sink {
  public:
    Sink(const std::string &path, std::ostream &fallback) : path_(path), fallback_(fallback) {
        if (path != "-") {
            file_.open(path);
            if (!file_) {
                throw UsageError("cannot open output file '" + path + "'");
            }
        }
    }
    std::ostream &stream() { return path_ == "-" ? fallback_ : file_; }
    [[nodiscard]] bool is_file() const { return path_ != "-"; }
    [[nodiscard]] const std::string &path() const { return path_; }

  private:
    std::string path_;
    std::ostream &fallback_;
    std::ofstream file_;
};

void write_json_sidecar(const std::string &path, const json &j) {
    std::ofstream f(path);
    if (!f) {
        throw UsageError("cannot open '" + path + "'");
    }
    f << j.dump(2) << '\n';
}

// --- trotter-sweep --------------------------------------------------------

struct SweepArgs {
    std::string code = "brgc";
    int n_min = 3;
    int n_max = 8;
    std::string lambdas = "log:1e-3:1e-1:13";
    std::string out = "-";
    std::string format = "csv";
};

int cmd_trotter_sweep(const SweepArgs &a, std::ostream &out) {
    const CodeKind code = parse_code_kind(a.code);
    if (a.n_min > a.n_max) {
        throw UsageError("--n-min exceeds --n-max");
    }
    std::vector<int> ns;
    for (int n = a.n_min; n <= a.n_max; ++n) {
        ns.push_back(n);
    }
    const auto lambdas = parse_real_list(a.lambdas);
    const auto reports = trotter_error_sweep(code, ns, lambdas, resolve_threads());

    const json config{{"code", a.code}, {"n_min", a.n_min}, {"n_max", a.n_max}, {"lambdas", lambdas}};
    const json meta = metadata("trotter-sweep", config, conventions());
    Sink sink(a.out, out);
    if (a.format == "json") {
        json rows = json::array();
        for (const auto &r : reports) {
            rows.push_back({{"n", r.n},
                            {"lambda", r.lambda},
                            {"code", std::string(to_string(r.code))},
                            {"error", r.error_exact},
                            {"bound_loose", r.bound_loose},
                            {"bound_tight", r.bound_tight}});
        }
        sink.stream() << json{{"metadata", meta}, {"rows", rows}}.dump(2) << '\n';
    } else {
        csv::write_comment(sink.stream(), meta.dump());
        write_trotter_csv(sink.stream(), reports);
    }
    return kExitOk;
}

// --- build-circuit --------------------------------------------------------

struct BuildArgs {
    std::string encoding = "brgc";
    int n = 4;
    double lambda = 0.1;
    std::string out = "-";
    std::string format = "json";
    std::string polarity = "resolved";
    bool decompose_ccx = false;
    bool cancel = false;
};

json metrics_json(const CircuitMetrics &m) {
    return {{"gate_count", m.gate_count}, {"depth", m.depth}, {"width", m.width}, {"counts", m.counts}};
}

int cmd_build_circuit(const BuildArgs &a, std::ostream &out, std::ostream &err) {
    BuilderConfig cfg;
    cfg.n = a.n;
    cfg.lambda = a.lambda;
    if (a.polarity == "resolved") {
        cfg.polarity = PolarityConvention::Resolved;
    } else if (a.polarity == "as-printed") {
        cfg.polarity = PolarityConvention::AsPrinted;
    } else {
        throw UsageError("--polarity must be resolved or as-printed");
    }
    if (!std::isfinite(a.lambda)) {
        throw UsageError("--lambda must be finite");
    }

    Circuit c = [&]() {
        if (a.encoding == "brgc") {
            return build_brgc_step(cfg);
        }
        if (a.encoding == "brgc-multicontrol") {
            return build_brgc_multicontrol_reference(cfg);
        }
        if (a.encoding == "binary") {
            return build_binary_step(a.n, a.lambda);
        }
        if (a.encoding == "qft") {
            return build_qft(a.n);
        }
        throw UsageError("unknown --encoding '" + a.encoding + "'");
    }();
    if (a.decompose_ccx) {
        c = decompose_ccx_to_two_qubit(c);
    }
    if (a.cancel) {
        c = cancel_adjacent_inverses(c);
    }

    std::string payload;
    if (a.format == "qasm") {
        try {
            payload = to_qasm3(c);
        } catch (const InvalidInput &e) {
            throw UsageError(std::string("unsupported export: ") + e.what());
        }
    } else {
        payload = to_json(c).dump(2) + "\n";
    }

    const json config{{"encoding", a.encoding},      {"n", a.n},           {"lambda", a.lambda},
                      {"format", a.format},          {"polarity", a.polarity},
                      {"decompose_ccx", a.decompose_ccx}, {"cancel", a.cancel}};
    json side = metadata("build-circuit", config, conventions(cfg.polarity));
    side["metrics"] = metrics_json(metrics(c));

    Sink sink(a.out, out);
    sink.stream() << payload;
    if (sink.is_file()) {
        write_json_sidecar(a.out + ".metrics.json", side);
    } else {
        err << side.dump() << '\n';
    }
    return kExitOk;
}

// --- adiabatic ------------------------------------------------------------

struct AdiabaticArgs {
    int n = 2;
    double a_fm = 5.0;
    double mass_mev = 140.0;
    double v0_mev = -10.0;
    double l_fm = 0.0; // 0: N * a
    double t_mevinv = 10.0;
    int steps = 2000;
    std::string evolvers = "brgc,binary,qft";
    std::string ramp = "nested-sin2";
    std::string out = "-";
    std::string format = "csv";
};

int cmd_adiabatic(const AdiabaticArgs &a, std::ostream &out) {
    const LatticeSpec spec{a.n, PhysicalUnits(a.mass_mev, a.a_fm)};
    const double length = a.l_fm > 0.0 ? a.l_fm : static_cast<double>(spec.sites()) * a.a_fm;
    const Potential pot = step_well(spec, a.v0_mev, length);
    const Schedule schedule{a.t_mevinv, a.steps, parse_ramp(a.ramp)};

    std::vector<Evolver> evolvers{Evolver::ExactMagnus};
    for (const auto &name : split(a.evolvers, ',')) {
        const Evolver e = parse_evolver(name);
        if (std::find(evolvers.begin(), evolvers.end(), e) == evolvers.end()) {
            evolvers.push_back(e);
        }
    }

    std::vector<EvolutionTrace> traces(evolvers.size());
    std::vector<std::string> failures(evolvers.size());
    const int threads = resolve_threads() > 0 ? resolve_threads() : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(evolvers.size()); ++i) {
        try {
            traces[static_cast<std::size_t>(i)] = evolve(spec, pot, schedule, evolvers[static_cast<std::size_t>(i)]);
        } catch (const std::exception &e) {
            failures[static_cast<std::size_t>(i)] = e.what();
        }
    }
    for (const auto &f : failures) {
        if (!f.empty()) {
            throw InvalidInput(f);
        }
    }

    const EvolutionTrace &exact = traces.front();
    json summary = json::object();
    for (std::size_t i = 1; i < traces.size(); ++i) {
        const auto &fin = traces[i].records.back();
        const auto &ref = exact.records.back();
        summary[std::string(to_string(traces[i].evolver))] = {
            {"final_expT_MeV", fin.exp_t},
            {"final_expV_MeV", fin.exp_v},
            {"rel_err_T", relative_error(fin.exp_t, ref.exp_t)},
            {"rel_err_V", relative_error(fin.exp_v, ref.exp_v)},
            {"deviation_MeV", trace_deviation(traces[i], exact)}};
    }
    summary["commutator_TV_norm_MeV2"] = commutator_TV_norm(spec, pot);
    summary["fd_error_scale_MeV2"] = 2.0 * std::pow(spec.units.hopping_scale(), 2);

    json config = describe(spec, pot, schedule);
    config["evolvers"] = a.evolvers;
    const json meta = metadata("adiabatic", config, conventions());

    Sink sink(a.out, out);
    if (a.format == "json") {
        json jt = json::array();
        for (const auto &t : traces) {
            json recs = json::array();
            for (const auto &r : t.records) {
                recs.push_back({r.step, r.time, r.exp_t, r.exp_v});
            }
            jt.push_back({{"evolver", std::string(to_string(t.evolver))},
                          {"columns", {"step", "time_MeVinv", "expT_MeV", "expV_MeV"}},
                          {"records", recs}});
        }
        sink.stream() << json{{"metadata", meta}, {"summary", summary}, {"traces", jt}}.dump(2) << '\n';
    } else {
        csv::write_comment(sink.stream(), meta.dump());
        write_trace_csv(sink.stream(), traces);
        csv::write_comment(sink.stream(), "summary: " + summary.dump());
        if (sink.is_file()) {
            write_json_sidecar(a.out + ".config.json", meta);
        }
    }
    return kExitOk;
}

// --- ho-scan --------------------------------------------------------------

struct HoArgs {
    std::string lambdas = "10,100,1000";
    std::string out = "-";
    std::string format = "csv";
};

int cmd_ho_scan(const HoArgs &a, std::ostream &out) {
    const auto cutoffs = parse_int_list(a.lambdas);
    for (int c : cutoffs) {
        if (c < 2) {
            throw UsageError("cutoff " + std::to_string(c) + " is below 2");
        }
    }
    const auto rows = ho_scan(cutoffs);
    const json meta = metadata("ho-scan", {{"lambdas", cutoffs}},
                               {{"ho_comm_matrix", "Lambda x Lambda, states 0..Lambda-1"},
                                {"oracle", "[P^2,X^2] from ladder operators, oscillator units"}});
    Sink sink(a.out, out);
    if (a.format == "json") {
        json jr = json::array();
        for (const auto &r : rows) {
            jr.push_back({{"Lambda", r.cutoff}, {"max_eig", r.max_eig}, {"oracle_norm", r.oracle_norm}});
        }
        sink.stream() << json{{"metadata", meta}, {"rows", jr}}.dump(2) << '\n';
    } else {
        csv::write_comment(sink.stream(), meta.dump());
        write_ho_csv(sink.stream(), rows);
    }
    return kExitOk;
}

} // namespace

std::vector<double> parse_real_list(const std::string &text) {
    std::vector<double> values;
    if (text.rfind("log:", 0) == 0) {
        const auto parts = split(text.substr(4), ':');
        if (parts.size() != 3) {
            throw UsageError("log range must be log:LO:HI:COUNT");
        }
        const double lo = parse_real(parts[0]);
        const double hi = parse_real(parts[1]);
        const double count = parse_real(parts[2]);
        if (!(lo > 0.0) || !(hi >= lo) || count < 1 || count != std::floor(count)) {
            throw UsageError("log range needs 0 < LO <= HI and integer COUNT >= 1");
        }
        const int m = static_cast<int>(count);
        for (int i = 0; i < m; ++i) {
            const double f = m == 1 ? 0.0 : static_cast<double>(i) / (m - 1);
            values.push_back(std::pow(10.0, std::log10(lo) + f * (std::log10(hi) - std::log10(lo))));
        }
        return values;
    }
    for (const auto &p : split(text, ',')) {
        values.push_back(parse_real(p));
    }
    if (values.empty()) {
        throw UsageError("empty list");
    }
    return values;
}

std::vector<int> parse_int_list(const std::string &text) {
    std::vector<int> values;
    for (const auto &p : split(text, ',')) {
        int v = 0;
        const auto *end = p.data() + p.size();
        const auto res = std::from_chars(p.data(), end, v);
        if (res.ec != std::errc{} || res.ptr != end) {
            throw UsageError("not an integer: '" + p + "'");
        }
        values.push_back(v);
    }
    if (values.empty()) {
        throw UsageError("empty list");
    }
    return values;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Gray-code lattice Laplacian: Trotter errors, circuits, adiabatic runs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    SweepArgs sweep;
    auto *s = app.add_subcommand("trotter-sweep", "Product-formula error against the exact exponential");
    s->add_option("--code", sweep.code, "brgc or binary")->check(CLI::IsMember({"brgc", "binary"}));
    s->add_option("--n-min", sweep.n_min, "Smallest qubit count");
    s->add_option("--n-max", sweep.n_max, "Largest qubit count");
    s->add_option("--lambdas", sweep.lambdas, "Comma list or log:LO:HI:COUNT");
    s->add_option("--out", sweep.out, "Output path, - for stdout");
    s->add_option("--format", sweep.format)->check(CLI::IsMember({"csv", "json"}));

    BuildArgs build;
    auto *b = app.add_subcommand("build-circuit", "Emit one kinetic Trotter-step circuit");
    b->add_option("--encoding", build.encoding)->check(CLI::IsMember({"brgc", "brgc-multicontrol", "binary", "qft"}));
    b->add_option("--n", build.n, "System qubits");
    b->add_option("--lambda", build.lambda, "Step parameter dt/(2Ma^2)");
    b->add_option("--out", build.out, "Output path, - for stdout");
    b->add_option("--format", build.format)->check(CLI::IsMember({"json", "qasm"}));
    b->add_option("--polarity", build.polarity, "resolved or as-printed");
    b->add_flag("--decompose-ccx", build.decompose_ccx, "Rewrite Toffolis as five two-qubit gates");
    b->add_flag("--cancel", build.cancel, "Run the adjacent-inverse cancellation pass");

    AdiabaticArgs adia;
    auto *ad = app.add_subcommand("adiabatic", "Switch on a step potential and trace <T>, <V>");
    ad->add_option("--n", adia.n);
    ad->add_option("--a-fm", adia.a_fm);
    ad->add_option("--mass-mev", adia.mass_mev);
    ad->add_option("--v0-mev", adia.v0_mev);
    ad->add_option("--L-fm", adia.l_fm, "Box length; default N*a");
    ad->add_option("--t-mevinv", adia.t_mevinv);
    ad->add_option("--steps", adia.steps);
    ad->add_option("--evolvers", adia.evolvers, "Subset of brgc,binary,qft; exact is always run");
    ad->add_option("--ramp", adia.ramp)->check(CLI::IsMember({"nested-sin2", "sin2", "linear"}));
    ad->add_option("--out", adia.out);
    ad->add_option("--format", adia.format)->check(CLI::IsMember({"csv", "json"}));

    HoArgs ho;
    auto *h = app.add_subcommand("ho-scan", "Spectral growth of [P^2, X^2] with the cutoff");
    h->add_option("--lambdas", ho.lambdas, "Comma list of cutoffs");
    h->add_option("--out", ho.out);
    h->add_option("--format", ho.format)->check(CLI::IsMember({"csv", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (const int t = resolve_threads(); t > 0) {
        omp_set_num_threads(t);
    }
    try {
        if (s->parsed()) {
            return cmd_trotter_sweep(sweep, out);
        }
        if (b->parsed()) {
            return cmd_build_circuit(build, out, err);
        }
        if (ad->parsed()) {
            return cmd_adiabatic(adia, out);
        }
        return cmd_ho_scan(ho, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidInput &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

} // namespace graylap::cli
