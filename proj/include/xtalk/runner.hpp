#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xtalk/circuit.hpp"
#include "xtalk/device.hpp"
#include "xtalk/noise.hpp"
#include "xtalk/scheduler.hpp"

namespace xtalk {

/// Batch-run configuration shared by the CLI verbs.
struct RunConfig {
    std::string device_path;               // empty -> default mesh for the circuit
    std::vector<std::string> circuits;     // file paths or generator specs ("bv:16", "xeb:16:8")
    std::vector<Strategy> strategies;
    int distance = 1;
    std::vector<int> max_colors;           // empty -> unlimited; >1 entry -> sweep
    DecompStrategy decomp = DecompStrategy::hybrid;
    std::string out_dir = "out";
    std::uint64_t seed = 1;
    CrosstalkMode crosstalk_mode = CrosstalkMode::transition;
    double residual_coupling = -1.0;       // <0 -> take from device
    bool stable_output = false;            // write compile_ms as 0 for byte-stable CSV
    int log_level = 0;                     // from XTALK_LOG
};

struct RunRow {
    std::string circuit;
    std::string strategy;
    int n_qubits = 0;
    int depth_cycles = 0;
    double exec_time_ns = 0.0;
    double success = 0.0;
    double log_success = 0.0;
    double crosstalk_err_sum = 0.0;
    double decoherence_err_sum = 0.0;
    int n_colors_max = 0;
    int max_colors_cap = 0;   // 0 = unlimited
    double compile_ms = 0.0;
    bool valid = false;
};

/// Parses "bv:16", "ising:9:4", "qaoa:16:2[:seed]", "xeb:16:8[:seed]" or
/// loads a circuit file.
Circuit circuit_from_spec(const std::string& spec, std::uint64_t default_seed);

/// Device for a circuit when no config file is given: smallest square mesh
/// holding its qubits, default parameters, seeded.
DeviceModel device_for(const Circuit& c, const RunConfig& cfg);

/// route -> decompose -> compile -> validate -> evaluate for one pair.
RunRow run_one(const DeviceModel& device, const Circuit& circuit, Strategy strategy,
               const RunConfig& cfg, int max_colors_cap, Schedule* out_schedule = nullptr);

std::string metrics_csv_header();
std::string metrics_csv_row(const RunRow& r);

/// CLI verbs; each returns a process exit status.
int cmd_compile(const RunConfig& cfg);
int cmd_compare(const RunConfig& cfg);
int cmd_bench(RunConfig cfg);   // canned suite at n in {4, 9, 16, 25}
int cmd_validate(const RunConfig& cfg, const std::string& schedule_path);

/// The canned benchmark suite: {bv, ising, qaoa, xeb} at the given sizes.
std::vector<std::string> bench_suite(const std::vector<int>& sizes);

}  // namespace xtalk
