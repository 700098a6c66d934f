#pragma once

#include <string>
#include <vector>

#include "xtalk/circuit.hpp"
#include "xtalk/crosstalk.hpp"
#include "xtalk/device.hpp"
#include "xtalk/freqassign.hpp"

namespace xtalk {

enum class Strategy { N, G, U, S, ColorDynamic };

const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

struct CompileOptions {
    int distance = 1;           // crosstalk graph distance d
    int max_colors = 0;         // 0 = unlimited; tunability cap otherwise
    int conflict_threshold = 3; // noise_conflict neighbor count
    double tolerance = 1e-3;    // GHz, smt_find binary search
    double single_qubit_ns = 25.0;
    // effective coupling at the interaction point, sets two-qubit gate
    // times (~50 ns iSWAP); the bare device g0 drives crosstalk instead
    double gate_coupling_ghz = 0.008;
    bool clamp_to_omega_max = false;  // optional per-gate clamp, off by default
};

struct ScheduleCycle {
    std::vector<Gate> gates;            // pairwise disjoint support
    std::vector<double> freq_of_qubit;  // GHz, one entry per qubit
    double duration_ns = 0.0;           // max gate duration, + retune overhead
    int retunes = 0;                    // qubits whose frequency changed
    double delta = 0.0;                 // separation certified for this cycle
    int n_colors = 0;                   // interaction colors used this cycle
};

struct Schedule {
    std::vector<ScheduleCycle> cycles;
    Strategy strategy = Strategy::ColorDynamic;
    std::string circuit_name;
    int n_qubits = 0;
    CompileOptions options{};

    int depth() const { return static_cast<int>(cycles.size()); }
    double exec_time_ns() const;
    int max_colors_used() const;
};

/// Compiles a routed, native-gate circuit into a timed schedule under the
/// given strategy. ColorDynamic runs the frequency-aware queueing loop;
/// N/G/U/S are the baseline tuning/scheduling disciplines.
Schedule compile(Strategy strategy, const DeviceModel& device, const Circuit& circuit,
                 const CompileOptions& opts = {});

/// True iff at least `threshold` in-flight two-qubit gates sit on couplers
/// adjacent to this gate's coupler in the crosstalk graph.
bool noise_conflict(const Gate& gate, const std::vector<Gate>& in_flight,
                    const CrosstalkGraph& xg, int threshold);

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks schedule invariants: gate coverage, dependency order, disjoint
/// support, frequency bookkeeping, plus the strategy-specific guarantees
/// (spectral separation for ColorDynamic, adjacency exclusion for U).
ValidationReport validate_schedule(const Schedule& s, const DeviceModel& device,
                                   const Circuit& circuit);

std::string schedule_to_json(const Schedule& s);
Schedule schedule_from_json_text(const std::string& text);
Schedule load_schedule(const std::string& path);

}  // namespace xtalk
