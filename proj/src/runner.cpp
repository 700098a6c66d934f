#include "xtalk/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace xtalk {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

long long to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("bad " + what + ": '" + s + "'");
    }
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

}  // namespace

Circuit circuit_from_spec(const std::string& spec, std::uint64_t default_seed) {
    auto parts = split(spec, ':');
    const std::string& kind = parts[0];
    auto arg = [&](std::size_t i, long long fallback) {
        return i < parts.size() ? to_int(parts[i], "circuit spec field") : fallback;
    };
    if (kind == "bv" && parts.size() >= 2) {
        return gen_bv(static_cast<int>(arg(1, 0)));
    }
    if (kind == "ising" && parts.size() >= 2) {
        return gen_ising(static_cast<int>(arg(1, 0)), static_cast<int>(arg(2, 4)));
    }
    if (kind == "qaoa" && parts.size() >= 2) {
        return gen_qaoa(static_cast<int>(arg(1, 0)), static_cast<int>(arg(2, 2)), 0.5,
                        static_cast<std::uint64_t>(arg(3, static_cast<long long>(default_seed))));
    }
    if (kind == "xeb" && parts.size() >= 2) {
        return gen_xeb(static_cast<int>(arg(1, 0)), static_cast<int>(arg(2, 8)),
                       static_cast<std::uint64_t>(arg(3, static_cast<long long>(default_seed))));
    }
    Circuit c = load_circuit(spec);
    c.name = spec;
    return c;
}

DeviceModel device_for(const Circuit& c, const RunConfig& cfg) {
    DeviceModel dev;
    if (!cfg.device_path.empty()) {
        dev = load_device(cfg.device_path);
    } else {
        int side = 1;
        while (side * side < c.n_qubits) ++side;
        dev = default_mesh_device(side, side, cfg.seed);
    }
    if (cfg.residual_coupling >= 0) {
        dev.residual_coupling = cfg.residual_coupling;
        dev.couplers_tunable = true;
    }
    if (dev.graph.n_qubits() < c.n_qubits)
        throw std::invalid_argument("device too small for circuit " + c.name);
    return dev;
}

RunRow run_one(const DeviceModel& device, const Circuit& circuit, Strategy strategy,
               const RunConfig& cfg, int max_colors_cap, Schedule* out_schedule) {
    RunRow row;
    row.circuit = circuit.name;
    row.strategy = strategy_name(strategy);
    if (max_colors_cap > 0) row.strategy += ":mc=" + std::to_string(max_colors_cap);
    row.n_qubits = device.graph.n_qubits();
    row.max_colors_cap = max_colors_cap;

    Circuit routed = route_best(circuit, device.graph).circuit;
    Circuit native = decompose(routed, cfg.decomp);

    CompileOptions opts;
    opts.distance = cfg.distance;
    opts.max_colors = max_colors_cap;

    auto t0 = std::chrono::steady_clock::now();
    Schedule sched = compile(strategy, device, native, opts);
    auto t1 = std::chrono::steady_clock::now();
    row.compile_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    ValidationReport rep = validate_schedule(sched, device, native);
    row.valid = rep.ok();
    if (!rep.ok() && cfg.log_level > 0) {
        for (const auto& v : rep.violations)
            std::cerr << "[validate] " << circuit.name << "/" << row.strategy << ": " << v << "\n";
    }

    NoiseParams params = NoiseParams::from_device(device, cfg.distance);
    params.mode = cfg.crosstalk_mode;
    Metrics m = evaluate(sched, device, params);

    row.depth_cycles = m.depth;
    row.exec_time_ns = m.exec_time_ns;
    row.success = m.success;
    row.log_success = m.log_success;
    row.crosstalk_err_sum = m.total_crosstalk_error;
    row.decoherence_err_sum = m.total_decoherence_error;
    row.n_colors_max = sched.max_colors_used();
    if (out_schedule) *out_schedule = std::move(sched);
    return row;
}

std::string metrics_csv_header() {
    return "circuit,strategy,n_qubits,depth_cycles,exec_time_ns,success,"
           "crosstalk_err_sum,decoherence_err_sum,n_colors_max,compile_ms\n";
}

std::string metrics_csv_row(const RunRow& r) {
    std::ostringstream out;
    out << r.circuit << "," << r.strategy << "," << r.n_qubits << "," << r.depth_cycles << ","
        << fmt("%.3f", r.exec_time_ns) << "," << fmt("%.12e", r.success) << ","
        << fmt("%.9e", r.crosstalk_err_sum) << "," << fmt("%.9e", r.decoherence_err_sum) << ","
        << r.n_colors_max << "," << fmt("%.3f", r.compile_ms) << "\n";
    return out.str();
}

namespace {

std::string config_digest(const RunConfig& cfg) {
    std::ostringstream s;
    s << cfg.device_path << "|";
    for (const auto& c : cfg.circuits) s << c << ";";
    s << "|";
    for (Strategy st : cfg.strategies) s << strategy_name(st) << ";";
    s << "|d=" << cfg.distance << "|mc=";
    for (int m : cfg.max_colors) s << m << ";";
    s << "|decomp=" << static_cast<int>(cfg.decomp) << "|seed=" << cfg.seed
      << "|mode=" << static_cast<int>(cfg.crosstalk_mode) << "|res=" << cfg.residual_coupling;
    return s.str();
}

void write_manifest(const RunConfig& cfg, const std::string& verb) {
    nlohmann::json j;
    j["tool"] = "xtalk";
    j["version"] = "0.1.0";
    j["verb"] = verb;
    j["seed"] = cfg.seed;
    char hash[32];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(fnv1a(config_digest(cfg))));
    j["config_hash"] = std::string(hash);
    j["config"] = config_digest(cfg);
    std::ofstream out(std::filesystem::path(cfg.out_dir) / "manifest.json");
    out << j.dump(2) << "\n";
}

std::string slurp_compare(const RunConfig& cfg) {
    std::ifstream in(std::filesystem::path(cfg.out_dir) / "compare.csv");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string sanitize(const std::string& name) {
    std::string out = name;
    for (char& c : out)
        if (c == ':' || c == '/' || c == '\\') c = '_';
    return out;
}

struct SuiteResult {
    std::vector<RunRow> rows;
    bool all_valid = true;
};

// Every (circuit, strategy, cap) combination, rows in deterministic order.
// Independent runs execute concurrently.
SuiteResult run_suite(const RunConfig& cfg, bool write_schedules) {
    std::vector<int> caps = cfg.max_colors.empty() ? std::vector<int>{0} : cfg.max_colors;
    struct Task {
        std::string circuit;
        Strategy strategy;
        int cap;
    };
    std::vector<Task> tasks;
    for (const auto& spec : cfg.circuits) {
        for (Strategy st : cfg.strategies) {
            if (st == Strategy::ColorDynamic) {
                // only ColorDynamic honors the tunability cap
                for (int cap : caps) tasks.push_back({spec, st, cap});
            } else {
                tasks.push_back({spec, st, 0});
            }
        }
    }

    SuiteResult result;
    result.rows.resize(tasks.size());
    std::vector<std::string> errors(tasks.size());

#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < static_cast<int>(tasks.size()); ++i) {
        try {
            Circuit circuit = circuit_from_spec(tasks[i].circuit, cfg.seed);
            DeviceModel device = device_for(circuit, cfg);
            Schedule sched;
            result.rows[i] = run_one(device, circuit, tasks[i].strategy, cfg, tasks[i].cap,
                                     write_schedules ? &sched : nullptr);
            if (write_schedules) {
                auto path = std::filesystem::path(cfg.out_dir) /
                            (sanitize(result.rows[i].circuit + "_" + result.rows[i].strategy) +
                             ".schedule.json");
                std::ofstream out(path);
                out << schedule_to_json(sched);
            }
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (!errors[i].empty())
            throw std::runtime_error("run failed (" + tasks[i].circuit + ", " +
                                     strategy_name(tasks[i].strategy) + "): " + errors[i]);
        if (!result.rows[i].valid) result.all_valid = false;
    }
    return result;
}

void write_metrics(const RunConfig& cfg, const std::vector<RunRow>& rows) {
    std::ofstream out(std::filesystem::path(cfg.out_dir) / "metrics.csv");
    out << metrics_csv_header();
    for (RunRow r : rows) {
        if (cfg.stable_output) r.compile_ms = 0.0;
        out << metrics_csv_row(r);
    }
}

}  // namespace

int cmd_compile(const RunConfig& cfg) {
    if (cfg.circuits.empty() || cfg.strategies.empty()) {
        std::cerr << "compile: need at least one circuit and one strategy\n";
        return 2;
    }
    std::filesystem::create_directories(cfg.out_dir);
    try {
        SuiteResult res = run_suite(cfg, /*write_schedules=*/true);
        write_metrics(cfg, res.rows);
        write_manifest(cfg, "compile");
        for (const RunRow& r : res.rows)
            std::cout << r.circuit << " " << r.strategy << " success=" << fmt("%.6e", r.success)
                      << " depth=" << r.depth_cycles << (r.valid ? "" : "  [INVALID]") << "\n";
        if (!res.all_valid) std::cerr << "compile: validation stage failed\n";
        return res.all_valid ? 0 : 1;
    } catch (const ParseError& e) {
        std::cerr << "compile: parse stage failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "compile: " << e.what() << "\n";
        return 1;
    }
}

int cmd_compare(const RunConfig& cfg) {
    if (cfg.strategies.size() < 2) {
        std::cerr << "compare: need at least two strategies\n";
        return 2;
    }
    std::filesystem::create_directories(cfg.out_dir);
    try {
        SuiteResult res = run_suite(cfg, /*write_schedules=*/false);
        write_metrics(cfg, res.rows);
        write_manifest(cfg, "compare");

        // success ratios of every strategy against the first listed
        const std::string base = strategy_name(cfg.strategies[0]);
        std::ofstream tab(std::filesystem::path(cfg.out_dir) / "compare.csv");
        tab << "circuit";
        for (std::size_t k = 1; k < cfg.strategies.size(); ++k)
            tab << "," << strategy_name(cfg.strategies[k]) << "/" << base;
        tab << "\n";
        std::vector<double> log_sum(cfg.strategies.size(), 0.0);
        int counted = 0;
        for (const auto& spec : cfg.circuits) {
            const std::string cname = circuit_from_spec(spec, cfg.seed).name;
            auto find = [&](const std::string& strat) -> const RunRow* {
                for (const RunRow& r : res.rows)
                    if (r.circuit == cname && r.strategy == strat) return &r;
                return nullptr;
            };
            const RunRow* b = find(base);
            if (!b) continue;
            tab << b->circuit;
            ++counted;
            for (std::size_t k = 1; k < cfg.strategies.size(); ++k) {
                const RunRow* r = find(strategy_name(cfg.strategies[k]));
                // ratios from log success so deep circuits stay comparable
                double log_ratio = r ? r->log_success - b->log_success : 0.0;
                tab << "," << fmt("%.6f", std::exp(std::min(log_ratio, 700.0)));
                if (r) log_sum[k] += log_ratio;
            }
            tab << "\n";
        }
        tab << "geomean";
        for (std::size_t k = 1; k < cfg.strategies.size(); ++k)
            tab << "," << fmt("%.6f", counted ? std::exp(log_sum[k] / counted) : 0.0);
        tab << "\n";
        tab.close();
        std::cout << slurp_compare(cfg);
        return res.all_valid ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "compare: " << e.what() << "\n";
        return 1;
    }
}

std::vector<std::string> bench_suite(const std::vector<int>& sizes) {
    std::vector<std::string> out;
    for (int n : sizes) {
        out.push_back("bv:" + std::to_string(n));
        out.push_back("ising:" + std::to_string(n) + ":4");
        out.push_back("qaoa:" + std::to_string(n) + ":2");
        out.push_back("xeb:" + std::to_string(n) + ":8");
    }
    return out;
}

int cmd_bench(RunConfig cfg) {
    if (cfg.circuits.empty()) cfg.circuits = bench_suite({4, 9, 16, 25});
    if (cfg.strategies.empty())
        cfg.strategies = {Strategy::N, Strategy::G, Strategy::U, Strategy::S,
                          Strategy::ColorDynamic};
    std::filesystem::create_directories(cfg.out_dir);
    try {
        SuiteResult res = run_suite(cfg, /*write_schedules=*/false);
        write_metrics(cfg, res.rows);
        write_manifest(cfg, "bench");
        std::cout << "bench: " << res.rows.size() << " runs, metrics at " << cfg.out_dir
                  << "/metrics.csv\n";
        return res.all_valid ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "bench: " << e.what() << "\n";
        return 1;
    }
}

int cmd_validate(const RunConfig& cfg, const std::string& schedule_path) {
    try {
        Schedule sched = load_schedule(schedule_path);
        if (cfg.circuits.empty()) {
            std::cerr << "validate: need --circuit to rebuild the compiled program\n";
            return 2;
        }
        Circuit circuit = circuit_from_spec(cfg.circuits[0], cfg.seed);
        DeviceModel device = device_for(circuit, cfg);
        Circuit native = decompose(route_best(circuit, device.graph).circuit, cfg.decomp);
        ValidationReport rep = validate_schedule(sched, device, native);
        if (rep.ok()) {
            std::cout << "schedule valid: " << schedule_path << "\n";
            return 0;
        }
        for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "validate: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace xtalk
