#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "memsim/analysis.hpp"
#include "memsim/circuit.hpp"
#include "memsim/errors.hpp"
#include "memsim/format.hpp"
#include "memsim/netlist.hpp"
#include "memsim/run.hpp"
#include "output.hpp"

#ifndef MEMSIM_VERSION
#define MEMSIM_VERSION "0.0.0"
#endif

namespace memsim::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct Common {
    double t_max = 3.0;
    std::uint64_t seed = 1;
    std::string out = "memsim-out";
    bool full = false;
    std::vector<std::string> params;
    std::string x_init;
    double smooth = 0.0;
    double stride = 1e-3;
    double rel_tol = 1e-6;
    double abs_tol = 1e-9;
    double limit_window = 0.0;
};

void add_common(CLI::App* app, Common& c, bool simulation = true) {
    app->add_option("--out", c.out, "Output directory")->capture_default_str();
    app->add_option("--param", c.params, "Override a device parameter, name=value (repeatable)");
    if (!simulation) return;
    app->add_option("--tmax", c.t_max, "Simulated time limit in seconds")->capture_default_str();
    app->add_option("--seed", c.seed, "Seed for the initial memristor states")->capture_default_str();
    app->add_flag("--full", c.full, "Write every state component instead of the probes");
    app->add_option("--x-init", c.x_init, "Initial memristor state range lo,hi (default 0.18,0.22)");
    app->add_option("--smooth", c.smooth, "Replace step functions by logistics of slope 1/eps");
    app->add_option("--stride", c.stride, "Seconds between trajectory samples; 0 keeps every step")
        ->capture_default_str();
    app->add_option("--rel-tol", c.rel_tol, "Relative integration tolerance")->capture_default_str();
    app->add_option("--abs-tol", c.abs_tol, "Absolute integration tolerance")->capture_default_str();
    app->add_option("--limit-window", c.limit_window,
                    "Window for limit-cycle detection in seconds (default tmax/3)");
}

double parse_number(std::string_view text, const std::string& what) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value))
        throw UsageError(what + ": expected a number, got '" + std::string(text) + "'");
    return value;
}

DeviceParams apply_overrides(DeviceParams p, const std::vector<std::string>& overrides) {
    for (const auto& item : overrides) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("--param expects name=value, got '" + item + "'");
        const std::string name = item.substr(0, eq);
        if (!DeviceParams::is_known(name)) throw UsageError("unknown parameter '" + name + "'");
        p.set(name, parse_number(std::string_view(item).substr(eq + 1), "--param " + name));
    }
    p.validate();
    return p;
}

SolverConfig make_config(const Common& c) {
    SolverConfig cfg;
    cfg.t_max = c.t_max;
    cfg.seed = c.seed;
    cfg.rel_tol = c.rel_tol;
    cfg.abs_tol = c.abs_tol;
    if (!c.x_init.empty()) {
        const auto comma = c.x_init.find(',');
        if (comma == std::string::npos) throw UsageError("--x-init expects lo,hi");
        cfg.x_init_lo = parse_number(std::string_view(c.x_init).substr(0, comma), "--x-init");
        cfg.x_init_hi = parse_number(std::string_view(c.x_init).substr(comma + 1), "--x-init");
    }
    if (c.smooth != 0.0) cfg.smoothing_eps = c.smooth;
    if (c.stride < 0.0) throw UsageError("--stride must be >= 0");
    cfg.validate();
    return cfg;
}

double limit_window(const Common& c) { return c.limit_window > 0.0 ? c.limit_window : c.t_max / 3.0; }

json params_json(const DeviceParams& p) {
    json out = json::object();
    for (auto name : DeviceParams::names) out[std::string(name)] = p.get(name);
    return out;
}

json config_json(const SolverConfig& cfg, const Common& c) {
    json out;
    out["t_max"] = cfg.t_max;
    out["rel_tol"] = cfg.rel_tol;
    out["abs_tol"] = cfg.abs_tol;
    out["dt_init"] = cfg.dt_init;
    out["dt_min"] = cfg.dt_min;
    out["dt_max"] = cfg.dt_max;
    out["x_init"] = {cfg.x_init_lo, cfg.x_init_hi};
    out["s_init"] = cfg.s_init;
    out["smoothing_eps"] = cfg.smoothing_eps ? json(*cfg.smoothing_eps) : json(nullptr);
    out["stride"] = c.stride;
    out["limit_window"] = limit_window(c);
    return out;
}

// The invocation with the output directory removed, so that replaying a
// manifest can redirect it.
std::vector<std::string> strip_out(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < args.size(); ++k) {
        if (args[k] == "--out") {
            ++k;
            continue;
        }
        if (args[k].rfind("--out=", 0) == 0) continue;
        out.push_back(args[k]);
    }
    return out;
}

json base_manifest(const std::vector<std::string>& args, const std::string& command) {
    json m;
    m["tool"] = "memsim";
    m["version"] = MEMSIM_VERSION;
    m["command"] = command;
    m["argv"] = strip_out(args);
    return m;
}

void write_manifest(const fs::path& dir, const json& m) { write_text(dir / "manifest.json", m.dump(2) + "\n"); }

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int exit_code(const RunVerdict& v) {
    switch (v.kind) {
        case RunVerdict::Kind::Solved: return kExitSolved;
        case RunVerdict::Kind::NonConvergent: return kExitNonConvergent;
        case RunVerdict::Kind::Failed: return kExitError;
    }
    return kExitError;
}

void report_failure(const RunVerdict& v, const RunResult& r) {
    if (v.kind == RunVerdict::Kind::Failed)
        std::cerr << "memsim: numerical failure; last good state at t=" << format_double(r.final_state.t)
                  << "\n" << v.message << "\n";
}

// ---- run -------------------------------------------------------------------

int cmd_run(const std::vector<std::string>& args, const std::string& netlist_path, const Common& c) {
    const std::string text = read_file(netlist_path);
    Netlist netlist;
    try {
        netlist = parse_netlist(text);
    } catch (const ParseError& e) {
        std::cerr << netlist_path << ":" << e.line() << ":" << e.column() << ": error: " << e.detail() << "\n";
        return kExitError;
    }
    const DeviceParams params = apply_overrides(resolve_params(netlist), c.params);
    const Circuit circuit = assemble(netlist, params);
    const SolverConfig cfg = make_config(c);
    const CompiledSystem sys = compile(circuit, cfg.smoothing_eps);
    const auto probes = probe_names(netlist, circuit);

    RunOptions opt;
    opt.output_stride = c.stride;
    const RunResult result = run(sys, cfg, opt);
    const RunVerdict verdict = make_verdict(result, sys, probes, limit_window(c));

    const fs::path dir(c.out);
    fs::create_directories(dir);
    write_trajectory_csv(dir / "trajectory.csv", result.trajectory, sys, probes, c.full);

    Summary s;
    add_verdict(s, verdict, result);
    s.write(dir / "summary.txt");

    const std::string canonical = to_text(netlist);
    json m = base_manifest(args, "run");
    m["seed"] = cfg.seed;
    m["params"] = params_json(params);
    m["solver"] = config_json(cfg, c);
    m["netlist"] = canonical;
    m["netlist_hash"] = fnv1a_hex(canonical);
    write_manifest(dir, m);

    report_failure(verdict, result);
    return exit_code(verdict);
}

// ---- gate ------------------------------------------------------------------

struct GateArgs {
    std::string kind;
    std::string mode = "direct";
    std::vector<std::string> clamps;
    double segment = 0.0;
};

// Terminal names accepted by --clamp, mapped to node names.
std::string terminal_node(const std::string& t) {
    if (t == "1" || t == "2" || t == "o") return t;
    throw UsageError("unknown gate terminal '" + t + "' (expected 1, 2 or o)");
}

int cmd_gate(const std::vector<std::string>& args, const GateArgs& g, const Common& c) {
    const GateKind kind = parse_gate_kind(g.kind);
    if (g.mode != "direct" && g.mode != "reverse") throw UsageError("--mode must be direct or reverse");

    std::map<std::string, bool> clamps;
    for (const auto& item : g.clamps) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("--clamp expects terminal=0|1, got '" + item + "'");
        const std::string node = terminal_node(item.substr(0, eq));
        const std::string lit = item.substr(eq + 1);
        if (lit != "0" && lit != "1") throw UsageError("--clamp level must be 0 or 1, got '" + lit + "'");
        const bool value = lit == "1";
        if (auto it = clamps.find(node); it != clamps.end() && it->second != value)
            throw UsageError("contradictory clamps on terminal " + node);
        clamps[node] = value;
    }

    const bool direct = g.mode == "direct";
    if (direct) {
        if (clamps.count("o")) throw UsageError("direct mode drives the inputs; the output cannot be clamped");
        if (clamps.size() == 1) throw UsageError("direct mode needs both inputs clamped, or none for the full sweep");
    } else {
        if (!clamps.count("o")) throw UsageError("reverse mode needs the output clamped (--clamp o=0|1)");
        if (clamps.size() != 1) throw UsageError("reverse mode clamps only the output");
    }

    Netlist netlist;
    netlist.gates.push_back({{kind, {"1", "2", "o"}}, 1});
    const bool sweep = direct && clamps.empty();
    if (sweep) {
        clamps["1"] = false;
        clamps["2"] = false;
    }
    for (const auto& [node, value] : clamps) netlist.clamps.push_back({{node, value}, 0});

    const DeviceParams params = apply_overrides({}, c.params);
    const Circuit circuit = assemble(netlist, params);
    const SolverConfig cfg = make_config(c);
    const CompiledSystem sys = compile(circuit, cfg.smoothing_eps);
    const auto probes = probe_names(netlist, circuit);

    // Direct sweep: the four input pairs in truth-table order, each held for
    // one segment.
    ClampSchedule schedule;
    std::vector<double> starts{0.0};
    if (sweep) {
        const double seg = g.segment > 0.0 ? g.segment : c.t_max / 4.0;
        if (!(seg > 0.0)) throw UsageError("direct sweep needs --tmax > 0 or --segment > 0");
        const std::size_t n1 = circuit.node_index("1"), n2 = circuit.node_index("2");
        const double vc = params.dcg.v_c;
        std::vector<ClampEvent> events;
        starts.clear();
        for (int row = 0; row < 4; ++row) {
            const double t = row * seg;
            starts.push_back(t);
            events.push_back({t, n1, (row & 2) ? vc : -vc});
            events.push_back({t, n2, (row & 1) ? vc : -vc});
        }
        schedule = ClampSchedule(events);
    }

    RunOptions opt;
    opt.output_stride = c.stride;
    if (sweep) opt.schedule = &schedule;
    const RunResult result = run(sys, cfg, opt);
    const RunVerdict verdict = make_verdict(result, sys, probes, limit_window(c));

    const fs::path dir(c.out);
    fs::create_directories(dir);
    write_trajectory_csv(dir / "trajectory.csv", result.trajectory, sys, probes, c.full);

    Summary s;
    s.add("gate", std::string(to_string(kind)));
    s.add("mode", g.mode);
    add_verdict(s, verdict, result);
    if (verdict.kind == RunVerdict::Kind::Solved) {
        std::array<int, 3> lv{};
        for (const auto& [name, bit] : verdict.probe_bits)
            lv[name == "1" ? 0 : name == "2" ? 1 : 2] = bit ? 1 : -1;
        s.add("consistent", validate_truth_table(kind, lv));
    }
    if (sweep) {
        const auto n1 = circuit.node_index("1"), n2 = circuit.node_index("2");
        const EquilibriumCriterion crit;
        for (std::size_t k = 0; k < starts.size(); ++k) {
            const double t0 = starts[k];
            const double t1 = k + 1 < starts.size() ? starts[k + 1] : c.t_max;
            std::vector<double> at(circuit.nodes.size(), 0.0);
            schedule.apply(circuit, t0, at);
            const bool a = at[n1] > 0.0, b = at[n2] > 0.0;
            const std::string key = "segment." + std::to_string(k);
            s.add(key + ".inputs", std::to_string(a) + "," + std::to_string(b));
            const auto eq = detect_equilibrium(result.trajectory, crit, params.dcg.v_c, t0, t1);
            s.add(key + ".settled", eq.has_value());
            if (eq) {
                s.add(key + ".settle_time", eq->t_star - t0);
                const bool out = eq->bits[0] == 1;
                s.add(key + ".output", out);
                s.add(key + ".consistent", out == evaluate_gate(kind, a, b));
            }
        }
    }
    s.write(dir / "summary.txt");

    json m = base_manifest(args, "gate");
    m["seed"] = cfg.seed;
    m["params"] = params_json(params);
    m["solver"] = config_json(cfg, c);
    const std::string canonical = to_text(netlist);
    m["netlist"] = canonical;
    m["netlist_hash"] = fnv1a_hex(canonical);
    if (sweep) {
        json ev = json::array();
        for (const auto& e : schedule.events())
            ev.push_back({{"t", e.t}, {"node", circuit.nodes[e.node].name}, {"level", e.level}});
        m["schedule"] = ev;
    }
    write_manifest(dir, m);

    report_failure(verdict, result);
    return exit_code(verdict);
}

// ---- multiplier ------------------------------------------------------------

struct MultiplierRun {
    std::uint64_t seed = 0;
    RunVerdict verdict;
    std::optional<std::pair<int, int>> factors;
};

int cmd_multiplier(const std::vector<std::string>& args, int product, int runs, const Common& c) {
    static constexpr int kRepresentable[] = {1, 2, 3, 4, 6, 9};
    if (std::find(std::begin(kRepresentable), std::end(kRepresentable), product) == std::end(kRepresentable))
        throw UsageError("product " + std::to_string(product) +
                         " is not a product of two 2-bit factors (choose 1, 2, 3, 4, 6 or 9)");
    if (runs < 1) throw UsageError("--runs must be >= 1");

    const DeviceParams params = apply_overrides({}, c.params);
    const Circuit circuit = build_multiplier(product, params);
    const SolverConfig base = make_config(c);
    const CompiledSystem sys = compile(circuit, base.smoothing_eps);
    const std::vector<std::string> probes(kMultiplierProbes.begin(), kMultiplierProbes.end());
    const fs::path dir(c.out);
    fs::create_directories(dir);

    std::vector<MultiplierRun> results(static_cast<std::size_t>(runs));
    auto one = [&](std::size_t k) {
        SolverConfig cfg = base;
        cfg.seed = base.seed + k;
        RunOptions opt;
        opt.output_stride = c.stride;
        const RunResult r = run(sys, cfg, opt);
        MultiplierRun out;
        out.seed = cfg.seed;
        out.verdict = make_verdict(r, sys, probes, limit_window(c));

        const fs::path run_dir = dir / ("run_" + std::to_string(cfg.seed));
        fs::create_directories(run_dir);
        write_trajectory_csv(run_dir / "trajectory.csv", r.trajectory, sys, probes, c.full);
        Summary s;
        s.add("seed", std::to_string(cfg.seed));
        add_verdict(s, out.verdict, r);
        if (out.verdict.kind == RunVerdict::Kind::Solved) {
            std::array<double, 4> v{};
            const auto nv = r.trajectory.node_voltages(r.trajectory.size() - 1);
            for (std::size_t p = 0; p < 4; ++p) v[p] = nv[circuit.node_index(kMultiplierProbes[p])];
            try {
                out.factors = decode_factors(v, params.dcg.v_c);
                s.add("factors", std::to_string(out.factors->first) + "*" + std::to_string(out.factors->second));
                s.add("product_ok", out.factors->first * out.factors->second == product);
            } catch (const NotConverged& e) {
                s.add("factors", std::string("undecodable"));
            }
        }
        s.write(run_dir / "summary.txt");
        results[k] = std::move(out);
    };

    // Independent seeded runs; each writes only its own directory.
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), results.size()));
    {
        std::mutex mu;
        std::size_t next = 0;
        std::exception_ptr failure;
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t k;
                    {
                        std::lock_guard lock(mu);
                        if (failure || next >= results.size()) return;
                        k = next++;
                    }
                    try {
                        one(k);
                    } catch (...) {
                        std::lock_guard lock(mu);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        pool.clear();
        if (failure) std::rethrow_exception(failure);
    }

    int solved = 0, nonconvergent = 0, failed = 0, oscillatory = 0, wrong = 0;
    std::map<std::string, int> by_factor;
    for (const auto& r : results) {
        switch (r.verdict.kind) {
            case RunVerdict::Kind::Solved:
                ++solved;
                if (!r.factors || r.factors->first * r.factors->second != product) ++wrong;
                if (r.factors) ++by_factor[std::to_string(r.factors->first) + "*" + std::to_string(r.factors->second)];
                break;
            case RunVerdict::Kind::NonConvergent:
                ++nonconvergent;
                oscillatory += r.verdict.oscillatory;
                break;
            case RunVerdict::Kind::Failed: ++failed; break;
        }
    }
    Summary agg;
    agg.add("product", product);
    agg.add("runs", runs);
    agg.add("base_seed", std::to_string(base.seed));
    agg.add("solved", solved);
    agg.add("nonconvergent", nonconvergent);
    agg.add("oscillatory", oscillatory);
    agg.add("failed", failed);
    agg.add("wrong", wrong);
    for (const auto& [f, n] : by_factor) agg.add("factors." + f, n);
    agg.write(dir / "aggregate.txt");
    std::cout << agg.text();

    json m = base_manifest(args, "multiplier");
    m["seed"] = base.seed;
    m["runs"] = runs;
    m["product"] = product;
    m["params"] = params_json(params);
    m["solver"] = config_json(base, c);
    Netlist netlist;
    for (const auto& g : multiplier_gates()) netlist.gates.push_back({g, 0});
    for (const auto& n : circuit.nodes)
        if (n.kind == NodeKind::Clamped) netlist.clamps.push_back({{n.name, n.level > 0.0}, 0});
    const std::string canonical = to_text(netlist);
    m["netlist"] = canonical;
    m["netlist_hash"] = fnv1a_hex(canonical);
    write_manifest(dir, m);
    return failed > 0 ? kExitError : kExitSolved;
}

// ---- iv --------------------------------------------------------------------

struct IvArgs {
    double amplitude = 1.0;
    double freq = 10.0;
    double cycles = 2.0;
    double x0 = 0.2;
    int samples = 400;
};

int cmd_iv(const std::vector<std::string>& args, const IvArgs& a, const Common& c) {
    const DeviceParams params = apply_overrides({}, c.params);
    const auto samples = iv_sweep(params.mem, a.amplitude, a.freq, a.cycles, a.x0, a.samples);
    const fs::path dir(c.out);
    fs::create_directories(dir);
    write_iv_csv(dir / "iv.csv", samples);

    double pinch = 0.0, x_min = 1.0, x_max = 0.0;
    std::size_t zero_crossings = 0;
    for (const auto& s : samples) {
        x_min = std::min(x_min, s.x);
        x_max = std::max(x_max, s.x);
        if (s.v == 0.0) {
            ++zero_crossings;
            pinch = std::max(pinch, std::fabs(s.i_mem));
        }
    }
    Summary s;
    s.add("samples", samples.size());
    s.add("loop_area", pinched_loop_area(samples));
    s.add("zero_crossings", zero_crossings);
    s.add("max_abs_i_at_zero_v", pinch);
    s.add("x_min", x_min);
    s.add("x_max", x_max);
    s.add("x_final", samples.back().x);
    s.write(dir / "summary.txt");

    json m = base_manifest(args, "iv");
    m["params"] = params_json(params);
    m["drive"] = {{"amplitude", a.amplitude}, {"frequency", a.freq}, {"cycles", a.cycles},
                  {"x0", a.x0}, {"samples_per_cycle", a.samples}};
    write_manifest(dir, m);
    return kExitSolved;
}

int dispatch(const std::vector<std::string>& args, int depth);

// ---- replay ----------------------------------------------------------------

int cmd_replay(const std::string& manifest_path, const std::string& out, int depth) {
    if (depth > 0) throw UsageError("a manifest cannot replay another replay");
    json m;
    try {
        m = json::parse(read_file(manifest_path));
    } catch (const json::exception& e) {
        throw UsageError("bad manifest " + manifest_path + ": " + e.what());
    }
    if (!m.contains("argv") || !m["argv"].is_array()) throw UsageError("manifest has no argv");
    std::vector<std::string> args = m["argv"].get<std::vector<std::string>>();
    args.push_back("--out");
    args.push_back(out);
    return dispatch(args, depth + 1);
}

int dispatch(const std::vector<std::string>& args, int depth) {
    CLI::App app{"Transient simulator for self-organizing memristive logic circuits", "memsim"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(MEMSIM_VERSION));

    Common common;
    std::string netlist_path;
    auto* run_cmd = app.add_subcommand("run", "Simulate a netlist");
    run_cmd->add_option("netlist", netlist_path, "Netlist file")->required();
    add_common(run_cmd, common);

    int product = 0, runs = 1;
    auto* mult_cmd = app.add_subcommand("multiplier", "Factor a product with the 2-bit multiplier");
    mult_cmd->add_option("product", product, "Number to factor")->required();
    mult_cmd->add_option("--runs", runs, "Number of seeds, starting at --seed")->capture_default_str();
    add_common(mult_cmd, common);

    GateArgs gate;
    auto* gate_cmd = app.add_subcommand("gate", "Simulate a single self-organizing gate");
    gate_cmd->add_option("kind", gate.kind, "and, or or xor")->required();
    gate_cmd->add_option("--mode", gate.mode, "direct or reverse")->capture_default_str();
    gate_cmd->add_option("--clamp", gate.clamps, "Clamp a terminal, e.g. 1=1 or o=0 (repeatable)");
    gate_cmd->add_option("--segment", gate.segment,
                         "Hold time of each input pair in the direct sweep (default tmax/4)");
    add_common(gate_cmd, common);

    IvArgs iv;
    auto* iv_cmd = app.add_subcommand("iv", "Sinusoidal sweep of one memristive element");
    iv_cmd->add_option("--amplitude", iv.amplitude, "Drive amplitude in volts")->capture_default_str();
    iv_cmd->add_option("--freq", iv.freq, "Drive frequency in hertz")->capture_default_str();
    iv_cmd->add_option("--cycles", iv.cycles, "Number of periods")->capture_default_str();
    iv_cmd->add_option("--x0", iv.x0, "Initial state")->capture_default_str();
    iv_cmd->add_option("--samples", iv.samples, "Samples per period")->capture_default_str();
    add_common(iv_cmd, common, false);

    std::string manifest_path;
    auto* replay_cmd = app.add_subcommand("replay", "Regenerate an output directory from its manifest");
    replay_cmd->add_option("manifest", manifest_path, "manifest.json")->required();
    replay_cmd->add_option("--out", common.out, "Output directory")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    if (*run_cmd) return cmd_run(args, netlist_path, common);
    if (*mult_cmd) return cmd_multiplier(args, product, runs, common);
    if (*gate_cmd) return cmd_gate(args, gate, common);
    if (*iv_cmd) return cmd_iv(args, iv, common);
    return cmd_replay(manifest_path, common.out, depth);
}

}  // namespace

int main(const std::vector<std::string>& args) {
    try {
        return dispatch(args, 0);
    } catch (const ParseError& e) {
        std::cerr << "memsim: " << e.line() << ":" << e.column() << ": error: " << e.detail() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "memsim: error: " << e.what() << "\n";
    }
    return kExitError;
}

}  // namespace memsim::cli
