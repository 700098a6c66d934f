#include "xtalk/scheduler.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "xtalk/noise.hpp"

namespace xtalk {

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::N: return "N";
        case Strategy::G: return "G";
        case Strategy::U: return "U";
        case Strategy::S: return "S";
        case Strategy::ColorDynamic: return "ColorDynamic";
    }
    return "?";
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "N") return Strategy::N;
    if (name == "G") return Strategy::G;
    if (name == "U") return Strategy::U;
    if (name == "S") return Strategy::S;
    if (name == "ColorDynamic" || name == "CD" || name == "colordynamic")
        return Strategy::ColorDynamic;
    throw std::invalid_argument("unknown strategy: " + name);
}

double Schedule::exec_time_ns() const {
    double t = 0;
    for (const auto& c : cycles) t += c.duration_ns;
    return t;
}

int Schedule::max_colors_used() const {
    int m = 0;
    for (const auto& c : cycles) m = std::max(m, c.n_colors);
    return m;
}

bool noise_conflict(const Gate& gate, const std::vector<Gate>& in_flight,
                    const CrosstalkGraph& xg, int threshold) {
    if (gate.arity() != 2) return false;
    int v = xg.vertex_index(gate.coupler());
    if (v < 0) throw std::invalid_argument("gate coupler absent from crosstalk graph");
    int count = 0;
    for (const Gate& g : in_flight) {
        if (g.arity() != 2) continue;
        int u = xg.vertex_index(g.coupler());
        if (u < 0 || u == v) continue;
        const auto& nbrs = xg.neighbors(v);
        if (std::binary_search(nbrs.begin(), nbrs.end(), u)) ++count;
    }
    return count >= threshold;
}

namespace {

// ------------------------------------------------------------ shared state

struct CompileContext {
    const DeviceModel& device;
    const Circuit& circuit;
    const CompileOptions& opts;
    CrosstalkGraph xg;
    Coloring conn_coloring;
    FrequencyAssignment idle;
    std::vector<double> parking;  // per-qubit idle frequency
    LayerSlicing slicing;
    double alpha = -0.2;
};

void check_preconditions(const DeviceModel& device, const Circuit& circuit,
                         const CompileOptions& opts) {
    if (opts.distance < 1) throw std::invalid_argument("crosstalk distance must be >= 1");
    if (opts.conflict_threshold < 1) throw std::invalid_argument("conflict threshold must be >= 1");
    if (opts.max_colors < 0) throw std::invalid_argument("max_colors must be >= 0");
    if (opts.single_qubit_ns <= 0 || opts.gate_coupling_ghz <= 0)
        throw std::invalid_argument("gate timing parameters must be positive");
    if (circuit.n_qubits > device.graph.n_qubits())
        throw std::invalid_argument("circuit does not fit on the device");
    for (const Gate& g : circuit.gates) {
        if (g.arity() != 2) continue;
        if (!is_native_two_qubit(g.kind))
            throw std::invalid_argument("circuit must be decomposed to native gates first");
        if (!device.graph.has_edge(g.q0, g.q1))
            throw std::invalid_argument("circuit must be routed onto device couplers first");
    }
}

CompileContext make_context(const DeviceModel& device, const Circuit& circuit,
                            const CompileOptions& opts) {
    CompileContext ctx{device, circuit, opts};
    ctx.xg = gen_crosstalk_graph(device.graph, opts.distance);
    ctx.conn_coloring = color_connectivity(device.graph);
    ctx.alpha = device.anharmonicity();
    ctx.idle = assign_idle(ctx.conn_coloring, device.partition, ctx.alpha);
    ctx.parking.resize(device.graph.n_qubits());
    for (int q = 0; q < device.graph.n_qubits(); ++q)
        ctx.parking[q] = ctx.idle.omega_of_color[ctx.conn_coloring.color_of[q]];
    ctx.slicing = slice_layers(circuit);
    return ctx;
}

double gate_time(const Gate& g, const CompileContext& ctx) {
    if (g.arity() == 2) return gate_duration_ns(g.kind, ctx.opts.gate_coupling_ghz);
    return ctx.opts.single_qubit_ns;
}

// Builds one cycle: two-qubit gates pinned to interaction frequencies, all
// other qubits parked. prev holds last cycle's frequencies for retunes.
ScheduleCycle make_cycle(const std::vector<Gate>& gates,
                         const std::map<Edge, double>& interaction_freq, double delta,
                         int n_colors, const CompileContext& ctx, std::vector<double>& prev) {
    ScheduleCycle cycle;
    cycle.gates = gates;
    cycle.delta = delta;
    cycle.n_colors = n_colors;
    cycle.freq_of_qubit = ctx.parking;

    double dur = 0;
    for (const Gate& g : gates) {
        dur = std::max(dur, gate_time(g, ctx));
        if (g.arity() == 2) {
            double w = interaction_freq.at(g.coupler());
            if (ctx.opts.clamp_to_omega_max) {
                w = std::min({w, ctx.device.qubits[g.q0].omega_max,
                              ctx.device.qubits[g.q1].omega_max});
            }
            cycle.freq_of_qubit[g.q0] = w;
            cycle.freq_of_qubit[g.q1] = w;
        }
    }
    for (int q = 0; q < ctx.device.graph.n_qubits(); ++q)
        if (std::abs(cycle.freq_of_qubit[q] - prev[q]) > 1e-12) ++cycle.retunes;
    cycle.duration_ns = dur + (cycle.retunes > 0 ? ctx.device.retune_ns : 0.0);
    prev = cycle.freq_of_qubit;
    return cycle;
}

// ------------------------------------------------------- readiness tracking

struct ReadyTracker {
    std::vector<std::vector<int>> qubit_gates;  // per qubit, gate indices in order
    std::vector<std::size_t> ptr;               // next unscheduled position per qubit

    explicit ReadyTracker(const Circuit& c) : qubit_gates(c.n_qubits), ptr(c.n_qubits, 0) {
        for (std::size_t i = 0; i < c.gates.size(); ++i) {
            const Gate& g = c.gates[i];
            if (g.kind == GateKind::BARRIER) continue;
            qubit_gates[g.q0].push_back(static_cast<int>(i));
            if (g.arity() == 2) qubit_gates[g.q1].push_back(static_cast<int>(i));
        }
    }

    bool ready(int gi, const Circuit& c) const {
        const Gate& g = c.gates[gi];
        if (ptr[g.q0] >= qubit_gates[g.q0].size() || qubit_gates[g.q0][ptr[g.q0]] != gi)
            return false;
        if (g.arity() == 2 &&
            (ptr[g.q1] >= qubit_gates[g.q1].size() || qubit_gates[g.q1][ptr[g.q1]] != gi))
            return false;
        return true;
    }

    void mark_scheduled(int gi, const Circuit& c) {
        const Gate& g = c.gates[gi];
        ++ptr[g.q0];
        if (g.arity() == 2) ++ptr[g.q1];
    }
};

// --------------------------------------------------- queueing compile loops

enum class Admission { color_dynamic, serial_u };

Schedule compile_queueing(const CompileContext& ctx, Strategy strategy, Admission admission) {
    const Circuit& circuit = ctx.circuit;
    Schedule sched;
    sched.strategy = strategy;
    sched.circuit_name = circuit.name;
    sched.n_qubits = ctx.device.graph.n_qubits();
    sched.options = ctx.opts;

    ReadyTracker tracker(circuit);
    std::vector<int> window;
    std::size_t next_layer = 0;
    auto refill = [&]() {
        if (next_layer < ctx.slicing.layers.size()) {
            const auto& l = ctx.slicing.layers[next_layer++].gate_indices;
            window.insert(window.end(), l.begin(), l.end());
        }
    };
    refill();

    std::vector<double> prev = ctx.parking;
    const double int_lo = ctx.device.partition.interaction_lo;
    const double int_hi = ctx.device.partition.interaction_hi;

    while (!window.empty()) {
        std::vector<int> order = window;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            int ca = ctx.slicing.criticality[a], cb = ctx.slicing.criticality[b];
            return ca != cb ? ca > cb : a < b;
        });

        // criticality of the front: deferring a gate below it cannot
        // lengthen the schedule, so spectral crowding is never bought
        // with slack gates
        int front_crit = 0;
        for (int gi : order)
            if (circuit.gates[gi].arity() == 2 && tracker.ready(gi, circuit))
                front_crit = std::max(front_crit, ctx.slicing.criticality[gi]);

        std::vector<int> admitted;
        std::vector<Gate> in_flight;
        std::vector<Edge> couplers;
        std::vector<char> busy(ctx.device.graph.n_qubits(), 0);

        // Two admission passes: conflict-free gates first, so adjacent
        // co-scheduling is spent only on gates that cannot be placed
        // without it and carry the critical front.
        for (int pass = 0; pass < 2; ++pass) {
            for (int gi : order) {
                const Gate& g = circuit.gates[gi];
                if (busy[g.q0] || (g.arity() == 2 && busy[g.q1])) continue;
                if (!tracker.ready(gi, circuit)) continue;
                if (g.arity() == 2) {
                    bool crowds = noise_conflict(g, in_flight, ctx.xg, 1);
                    if (pass == 0 && crowds) continue;
                    if (pass == 1 && !crowds) continue;
                    if (crowds) {
                        if (admission == Admission::serial_u) continue;
                        if (noise_conflict(g, in_flight, ctx.xg, ctx.opts.conflict_threshold))
                            continue;
                        if (ctx.slicing.criticality[gi] < front_crit) continue;
                    }
                    if (admission == Admission::color_dynamic && ctx.opts.max_colors > 0) {
                        std::vector<Edge> tentative = couplers;
                        tentative.push_back(g.coupler());
                        Coloring col = greedy_color(active_subgraph(ctx.xg, tentative));
                        if (col.n_colors > ctx.opts.max_colors) continue;
                    }
                    couplers.push_back(g.coupler());
                } else if (pass == 1) {
                    continue;  // single-qubit gates all admitted in pass 0
                }
                admitted.push_back(gi);
                in_flight.push_back(g);
                busy[g.q0] = 1;
                if (g.arity() == 2) busy[g.q1] = 1;
            }
        }
        if (admitted.empty())
            throw std::logic_error("scheduler made no progress; dependency state corrupt");

        std::map<Edge, double> freq_of_coupler;
        double delta = 0;
        int n_colors = 0;
        if (!couplers.empty()) {
            if (admission == Admission::color_dynamic) {
                CrosstalkGraph h = active_subgraph(ctx.xg, couplers);
                Coloring col = greedy_color(h);
                FrequencyAssignment omega =
                    smt_find(col, ctx.alpha, int_lo, int_hi, ctx.opts.tolerance);
                for (int v = 0; v < h.n_vertices(); ++v)
                    freq_of_coupler[h.vertices()[v]] = omega.omega_of_color[col.color_of[v]];
                delta = omega.delta;
                n_colors = col.n_colors;
            } else {
                // one shared interaction frequency; adjacency excluded by admission
                for (const Edge& e : couplers) freq_of_coupler[e] = int_hi;
                delta = 0;
                n_colors = 1;
            }
        }

        std::vector<Gate> cycle_gates;
        for (int gi : admitted) {
            cycle_gates.push_back(circuit.gates[gi]);
            tracker.mark_scheduled(gi, circuit);
        }
        sched.cycles.push_back(
            make_cycle(cycle_gates, freq_of_coupler, delta, n_colors, ctx, prev));

        std::vector<int> rest;
        std::vector<char> taken(circuit.gates.size(), 0);
        for (int gi : admitted) taken[gi] = 1;
        for (int gi : window)
            if (!taken[gi]) rest.push_back(gi);
        window = std::move(rest);
        refill();
    }
    return sched;
}

// --------------------------------------------------------- ASAP strategies

Schedule compile_asap(const CompileContext& ctx, Strategy strategy,
                      const std::map<Edge, double>& static_freqs, double delta, int n_colors) {
    Schedule sched;
    sched.strategy = strategy;
    sched.circuit_name = ctx.circuit.name;
    sched.n_qubits = ctx.device.graph.n_qubits();
    sched.options = ctx.opts;

    std::vector<double> prev = ctx.parking;
    for (const Layer& layer : ctx.slicing.layers) {
        std::vector<Gate> gates;
        bool has_two_qubit = false;
        for (int gi : layer.gate_indices) {
            gates.push_back(ctx.circuit.gates[gi]);
            has_two_qubit |= gates.back().arity() == 2;
        }
        sched.cycles.push_back(make_cycle(gates, static_freqs, has_two_qubit ? delta : 0.0,
                                          has_two_qubit ? n_colors : 0, ctx, prev));
    }
    return sched;
}

// Four-way directional tiling of mesh couplers, one sub-pattern per step.
bool in_tile_pattern(const Edge& e, int cols, int phase) {
    int ru = e.u / cols, cu = e.u % cols;
    int rv = e.v / cols;
    bool horizontal = ru == rv;
    switch (phase % 4) {
        case 0: return horizontal && cu % 2 == 0;
        case 1: return horizontal && cu % 2 == 1;
        case 2: return !horizontal && ru % 2 == 0;
        default: return !horizontal && ru % 2 == 1;
    }
}

Schedule compile_gmon(const CompileContext& ctx) {
    auto mesh = detect_mesh(ctx.device.graph);
    if (!mesh)
        throw std::invalid_argument("strategy G requires a mesh topology (tiling scheduler)");
    const int cols = mesh->second;
    const Circuit& circuit = ctx.circuit;

    Schedule sched;
    sched.strategy = Strategy::G;
    sched.circuit_name = circuit.name;
    sched.n_qubits = ctx.device.graph.n_qubits();
    sched.options = ctx.opts;

    ReadyTracker tracker(circuit);
    std::vector<int> window;
    std::size_t next_layer = 0;
    auto refill = [&]() {
        if (next_layer < ctx.slicing.layers.size()) {
            const auto& l = ctx.slicing.layers[next_layer++].gate_indices;
            window.insert(window.end(), l.begin(), l.end());
        }
    };
    refill();

    std::vector<double> prev = ctx.parking;
    const double int_hi = ctx.device.partition.interaction_hi;
    int phase = 0;
    int stalls = 0;
    while (!window.empty()) {
        std::vector<int> order = window;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            int ca = ctx.slicing.criticality[a], cb = ctx.slicing.criticality[b];
            return ca != cb ? ca > cb : a < b;
        });

        std::vector<int> admitted;
        std::map<Edge, double> freqs;
        std::vector<char> busy(ctx.device.graph.n_qubits(), 0);
        for (int gi : order) {
            const Gate& g = circuit.gates[gi];
            if (!tracker.ready(gi, circuit)) continue;
            if (busy[g.q0] || (g.arity() == 2 && busy[g.q1])) continue;
            if (g.arity() == 2) {
                if (!in_tile_pattern(g.coupler(), cols, phase)) continue;
                freqs[g.coupler()] = int_hi;
            }
            admitted.push_back(gi);
            busy[g.q0] = 1;
            if (g.arity() == 2) busy[g.q1] = 1;
        }
        ++phase;
        if (admitted.empty()) {
            if (++stalls > 4)
                throw std::logic_error("tiling scheduler made no progress");
            continue;
        }
        stalls = 0;

        std::vector<Gate> cycle_gates;
        for (int gi : admitted) {
            cycle_gates.push_back(circuit.gates[gi]);
            tracker.mark_scheduled(gi, circuit);
        }
        sched.cycles.push_back(make_cycle(cycle_gates, freqs, 0.0,
                                          freqs.empty() ? 0 : 1, ctx, prev));

        std::vector<char> taken(circuit.gates.size(), 0);
        for (int gi : admitted) taken[gi] = 1;
        std::vector<int> rest;
        for (int gi : window)
            if (!taken[gi]) rest.push_back(gi);
        window = std::move(rest);
        refill();
    }
    return sched;
}

}  // namespace

Schedule compile(Strategy strategy, const DeviceModel& device, const Circuit& circuit,
                 const CompileOptions& opts) {
    check_preconditions(device, circuit, opts);
    CompileContext ctx = make_context(device, circuit, opts);

    switch (strategy) {
        case Strategy::ColorDynamic:
            return compile_queueing(ctx, strategy, Admission::color_dynamic);
        case Strategy::U:
            return compile_queueing(ctx, strategy, Admission::serial_u);
        case Strategy::N: {
            // crosstalk-unaware: every two-qubit gate at the mid-region value
            double mid = 0.5 * (device.partition.interaction_lo + device.partition.interaction_hi);
            std::map<Edge, double> freqs;
            for (const Edge& e : device.graph.edges()) freqs[e] = mid;
            return compile_asap(ctx, strategy, freqs, 0.0, 1);
        }
        case Strategy::S: {
            Coloring coloring;
            if (auto mesh = detect_mesh(device.graph); mesh && opts.distance == 1) {
                coloring = static_mesh_coloring(ctx.xg, mesh->second);
            } else {
                coloring = greedy_color(ctx.xg);
            }
            FrequencyAssignment omega =
                smt_find(coloring, ctx.alpha, device.partition.interaction_lo,
                         device.partition.interaction_hi, opts.tolerance);
            std::map<Edge, double> freqs;
            for (int v = 0; v < ctx.xg.n_vertices(); ++v)
                freqs[ctx.xg.vertices()[v]] = omega.omega_of_color[coloring.color_of[v]];
            return compile_asap(ctx, strategy, freqs, omega.delta, coloring.n_colors);
        }
        case Strategy::G:
            return compile_gmon(ctx);
    }
    throw std::invalid_argument("unknown strategy");
}

// ------------------------------------------------------------- validation

ValidationReport validate_schedule(const Schedule& s, const DeviceModel& device,
                                   const Circuit& circuit) {
    ValidationReport report;
    auto fail = [&](const std::string& msg) { report.violations.push_back(msg); };
    const double eps = 1e-9;

    // gate coverage: every circuit gate exactly once
    auto key = [](const Gate& g) {
        return std::tuple<int, int, int, double>(static_cast<int>(g.kind), g.q0, g.q1, g.angle);
    };
    std::vector<std::tuple<int, int, int, double>> want, got;
    for (const Gate& g : circuit.gates)
        if (g.kind != GateKind::BARRIER) want.push_back(key(g));
    for (const auto& cyc : s.cycles)
        for (const Gate& g : cyc.gates) got.push_back(key(g));
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want != got) fail("gate coverage: scheduled gates do not match the circuit");

    // per-qubit dependency order
    {
        std::vector<std::vector<Gate>> circ_seq(circuit.n_qubits), sched_seq(circuit.n_qubits);
        for (const Gate& g : circuit.gates) {
            if (g.kind == GateKind::BARRIER) continue;
            circ_seq[g.q0].push_back(g);
            if (g.arity() == 2) circ_seq[g.q1].push_back(g);
        }
        for (const auto& cyc : s.cycles) {
            for (const Gate& g : cyc.gates) {
                if (g.q0 < circuit.n_qubits) sched_seq[g.q0].push_back(g);
                if (g.arity() == 2 && g.q1 < circuit.n_qubits) sched_seq[g.q1].push_back(g);
            }
        }
        for (int q = 0; q < circuit.n_qubits; ++q) {
            if (circ_seq[q].size() != sched_seq[q].size() ||
                !std::equal(circ_seq[q].begin(), circ_seq[q].end(), sched_seq[q].begin())) {
                fail("dependency order violated on qubit " + std::to_string(q));
                break;
            }
        }
    }

    CrosstalkGraph xg = gen_crosstalk_graph_serial(device.graph, s.options.distance);
    std::vector<double> prev;
    for (std::size_t ci = 0; ci < s.cycles.size(); ++ci) {
        const auto& cyc = s.cycles[ci];
        std::vector<char> busy(s.n_qubits, 0);
        for (const Gate& g : cyc.gates) {
            if (busy[g.q0] || (g.arity() == 2 && busy[g.q1])) {
                fail("cycle " + std::to_string(ci) + ": overlapping qubit support");
                break;
            }
            busy[g.q0] = 1;
            if (g.arity() == 2) busy[g.q1] = 1;
        }
        if (static_cast<int>(cyc.freq_of_qubit.size()) != s.n_qubits) {
            fail("cycle " + std::to_string(ci) + ": missing qubit frequencies");
            continue;
        }
        std::vector<std::pair<Edge, double>> active;
        for (const Gate& g : cyc.gates) {
            if (g.arity() != 2) continue;
            double f0 = cyc.freq_of_qubit[g.q0], f1 = cyc.freq_of_qubit[g.q1];
            if (std::abs(f0 - f1) > eps)
                fail("cycle " + std::to_string(ci) + ": gate qubits not on a shared frequency");
            active.emplace_back(g.coupler(), f0);
        }
        if (ci > 0) {
            int retunes = 0;
            for (int q = 0; q < s.n_qubits; ++q)
                if (std::abs(cyc.freq_of_qubit[q] - prev[q]) > 1e-12) ++retunes;
            if (retunes != cyc.retunes)
                fail("cycle " + std::to_string(ci) + ": retune count mismatch");
        }
        prev = cyc.freq_of_qubit;

        double want_dur = 0;
        for (const Gate& g : cyc.gates) {
            want_dur = std::max(want_dur,
                                g.arity() == 2
                                    ? gate_duration_ns(g.kind, s.options.gate_coupling_ghz)
                                    : s.options.single_qubit_ns);
        }
        if (cyc.retunes > 0) want_dur += device.retune_ns;
        if (std::abs(want_dur - cyc.duration_ns) > 1e-6)
            fail("cycle " + std::to_string(ci) + ": duration does not match gate times");

        if (s.strategy == Strategy::ColorDynamic) {
            for (std::size_t i = 0; i < active.size(); ++i) {
                for (std::size_t j = i + 1; j < active.size(); ++j) {
                    int vi = xg.vertex_index(active[i].first);
                    int vj = xg.vertex_index(active[j].first);
                    if (vi < 0 || vj < 0) continue;
                    const auto& nbrs = xg.neighbors(vi);
                    if (!std::binary_search(nbrs.begin(), nbrs.end(), vj)) continue;
                    if (std::abs(active[i].second - active[j].second) < cyc.delta - eps)
                        fail("cycle " + std::to_string(ci) + ": spectral collision");
                }
            }
            for (int q = 0; q < s.n_qubits; ++q) {
                bool in_gate = false;
                for (const Gate& g : cyc.gates)
                    if (g.q0 == q || (g.arity() == 2 && g.q1 == q)) in_gate = true;
                if (in_gate) continue;
                double f = cyc.freq_of_qubit[q];
                if (f < device.partition.parking_lo - eps || f > device.partition.parking_hi + eps)
                    fail("cycle " + std::to_string(ci) + ": idle qubit outside parking region");
            }
        }
        if (s.strategy == Strategy::U) {
            for (std::size_t i = 0; i < active.size(); ++i) {
                for (std::size_t j = i + 1; j < active.size(); ++j) {
                    int vi = xg.vertex_index(active[i].first);
                    int vj = xg.vertex_index(active[j].first);
                    if (vi < 0 || vj < 0) continue;
                    const auto& nbrs = xg.neighbors(vi);
                    if (std::binary_search(nbrs.begin(), nbrs.end(), vj))
                        fail("cycle " + std::to_string(ci) +
                             ": adjacent gates share a cycle under U");
                }
            }
        }
    }
    return report;
}

// ------------------------------------------------------------- JSON export

namespace {

using nlohmann::json;

double round6(double v) { return std::round(v * 1e6) / 1e6; }

std::string gate_line(const Gate& g) {
    std::ostringstream out;
    out << gate_name(g.kind);
    if (g.kind == GateKind::BARRIER) return out.str();
    out << " " << g.q0;
    if (g.arity() == 2) out << " " << g.q1;
    if (is_rotation(g.kind)) {
        char buf[64];
        auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), g.angle);
        out << " " << std::string_view(buf, p - buf);
    }
    return out.str();
}

Gate gate_from_line(const std::string& line, int n_qubits) {
    Circuit c = parse_circuit("qubits " + std::to_string(n_qubits) + "\n" + line + "\n");
    if (c.gates.size() != 1) throw std::invalid_argument("bad gate line: " + line);
    return c.gates[0];
}

}  // namespace

std::string schedule_to_json(const Schedule& s) {
    json j;
    j["strategy"] = strategy_name(s.strategy);
    j["circuit"] = s.circuit_name;
    j["n_qubits"] = s.n_qubits;
    j["options"] = {{"distance", s.options.distance},
                    {"max_colors", s.options.max_colors},
                    {"conflict_threshold", s.options.conflict_threshold},
                    {"tolerance", s.options.tolerance},
                    {"single_qubit_ns", s.options.single_qubit_ns},
                    {"gate_coupling_ghz", s.options.gate_coupling_ghz}};
    j["cycles"] = json::array();
    for (const auto& cyc : s.cycles) {
        json jc;
        jc["gates"] = json::array();
        for (const Gate& g : cyc.gates) jc["gates"].push_back(gate_line(g));
        jc["freqs"] = json::array();
        for (double f : cyc.freq_of_qubit) jc["freqs"].push_back(round6(f));
        jc["duration_ns"] = round6(cyc.duration_ns);
        jc["retunes"] = cyc.retunes;
        jc["delta"] = round6(cyc.delta);
        jc["n_colors"] = cyc.n_colors;
        j["cycles"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
}

Schedule schedule_from_json_text(const std::string& text) {
    json j = json::parse(text);
    Schedule s;
    s.strategy = strategy_from_name(j.at("strategy").get<std::string>());
    s.circuit_name = j.value("circuit", "");
    s.n_qubits = j.at("n_qubits").get<int>();
    if (j.contains("options")) {
        const json& o = j["options"];
        s.options.distance = o.value("distance", 1);
        s.options.max_colors = o.value("max_colors", 0);
        s.options.conflict_threshold = o.value("conflict_threshold", 3);
        s.options.tolerance = o.value("tolerance", 1e-3);
        s.options.single_qubit_ns = o.value("single_qubit_ns", 25.0);
        s.options.gate_coupling_ghz = o.value("gate_coupling_ghz", 0.008);
    }
    for (const json& jc : j.at("cycles")) {
        ScheduleCycle cyc;
        for (const json& line : jc.at("gates"))
            cyc.gates.push_back(gate_from_line(line.get<std::string>(), s.n_qubits));
        for (const json& f : jc.at("freqs")) cyc.freq_of_qubit.push_back(f.get<double>());
        cyc.duration_ns = jc.at("duration_ns").get<double>();
        cyc.retunes = jc.value("retunes", 0);
        cyc.delta = jc.value("delta", 0.0);
        cyc.n_colors = jc.value("n_colors", 0);
        s.cycles.push_back(std::move(cyc));
    }
    return s;
}

Schedule load_schedule(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open schedule file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return schedule_from_json_text(buf.str());
}

}  // namespace xtalk
