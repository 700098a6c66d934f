#include "xtalk/noise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>


namespace xtalk {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

NoiseParams NoiseParams::from_device(const DeviceModel& d, int distance) {
    NoiseParams p;
    p.g0 = d.g0;
    if (!d.qubits.empty()) {
        p.t1_us = d.qubits.front().t1_us;
        p.t2_us = d.qubits.front().t2_us;
    }
    p.residual_coupling = d.residual_coupling;
    p.distance = distance;
    return p;
}

double residual_coupling(double g0, double delta_omega) {
    if (delta_omega <= 0)
        throw std::invalid_argument("on resonance: residual coupling undefined, use bare g0");
    return g0 * g0 / delta_omega;
}

double gate_duration_ns(GateKind kind, double g) {
    if (g <= 0) throw std::invalid_argument("coupling must be positive");
    switch (kind) {
        case GateKind::ISWAP: return 1.0 / (4.0 * g);
        case GateKind::SQRT_ISWAP: return 1.0 / (8.0 * g);
        case GateKind::CZ: return 1.0 / (2.0 * std::sqrt(2.0) * g);
        default: throw std::invalid_argument("no resonance duration for this gate kind");
    }
}

double decoherence_error(double t_ns, double t1_us, double t2_us) {
    if (t_ns < 0) throw std::invalid_argument("negative duration");
    if (t1_us <= 0 || t2_us <= 0) throw std::invalid_argument("T1/T2 must be positive");
    double t1_ns = t1_us * 1000.0, t2_ns = t2_us * 1000.0;
    return (1.0 - std::exp(-t_ns / t1_ns)) * (1.0 - std::exp(-t_ns / t2_ns));
}

double crosstalk_error(double delta_omega, double t_ns, double g0, CrosstalkMode mode) {
    if (t_ns < 0) throw std::invalid_argument("negative duration");
    // effective coupling peaks at the bare g0 on resonance
    double g_eff = delta_omega <= 0 ? g0 : std::min(g0 * g0 / delta_omega, g0);
    // worst-case estimate: the exchange saturates at the first full swap
    // instead of rewarding oscillations that happen to wrap around
    double phase = std::min(kTwoPi * g_eff * t_ns, kTwoPi / 4.0);
    double s = std::sin(phase);
    double transition = s * s;
    return mode == CrosstalkMode::transition ? transition : 1.0 - transition;
}

namespace {

// Interference channels charged per cycle: distinct qubit pairs within
// crosstalk distance d, each counted once. A pair straddling two different
// active couplers is exactly what the crosstalk-graph coloring separates,
// so its gap is at least the cycle's delta.
struct ChannelScope {
    std::vector<std::pair<int, int>> within_d;  // u < v, graph distance <= d
    std::vector<char> direct;                   // flag: distance == 1
};

ChannelScope make_scope(const ConnectivityGraph& g, int d) {
    ChannelScope scope;
    for (int u = 0; u < g.n_qubits(); ++u) {
        auto dist = g.distances_from(u);
        for (int v = u + 1; v < g.n_qubits(); ++v) {
            if (dist[v] >= 1 && dist[v] <= d) {
                scope.within_d.emplace_back(u, v);
                scope.direct.push_back(dist[v] == 1);
            }
        }
    }
    return scope;
}

CycleBreakdown evaluate_cycle(const ScheduleCycle& cycle, const DeviceModel& device,
                              const NoiseParams& params, const ChannelScope& scope,
                              bool gmon) {
    CycleBreakdown out;
    const double t = cycle.duration_ns;

    // gate_of[q]: index of the two-qubit gate holding q this cycle, or -1
    std::vector<int> gate_of(device.graph.n_qubits(), -1);
    int gate_id = 0;
    for (const Gate& g : cycle.gates) {
        if (g.arity() == 2) {
            gate_of[g.q0] = gate_id;
            gate_of[g.q1] = gate_id;
            ++gate_id;
        }
    }

    auto charge = [&](double eps) {
        out.crosstalk_err += eps;
        out.success_factor *= 1.0 - eps;
        out.log_success_factor += std::log1p(-eps);
    };

    // one worst-case factor per active gate: its smallest frequency gap to
    // anything within crosstalk distance (another gate's interaction
    // frequency, which the coloring keeps delta away, or a parked spectator)
    std::vector<double> gate_gap(gate_id, -1.0);
    for (std::size_t k = 0; k < scope.within_d.size(); ++k) {
        auto [u, v] = scope.within_d[k];
        int gu = gate_of[u], gv = gate_of[v];
        if (gu >= 0 && gu == gv) continue;  // the intended interaction itself
        if (gu < 0 && gv < 0) {
            // spectator-spectator: only directly coupled idle pairs count
            if (!scope.direct[k]) continue;
            if (gmon)
                charge(crosstalk_error(0.0, t, params.residual_coupling, params.mode));
            else
                charge(crosstalk_error(std::abs(cycle.freq_of_qubit[u] - cycle.freq_of_qubit[v]),
                                       t, params.g0, params.mode));
            continue;
        }
        double gap = std::abs(cycle.freq_of_qubit[u] - cycle.freq_of_qubit[v]);
        if (gu >= 0 && (gate_gap[gu] < 0 || gap < gate_gap[gu])) gate_gap[gu] = gap;
        if (gv >= 0 && (gate_gap[gv] < 0 || gap < gate_gap[gv])) gate_gap[gv] = gap;
    }
    for (int g = 0; g < gate_id; ++g) {
        if (gmon) {
            charge(crosstalk_error(0.0, t, params.residual_coupling, params.mode));
        } else if (gate_gap[g] >= 0) {
            charge(crosstalk_error(gate_gap[g], t, params.g0, params.mode));
        }
    }

    for (int q = 0; q < device.graph.n_qubits(); ++q) {
        double eps = decoherence_error(t, device.qubits[q].t1_us, device.qubits[q].t2_us);
        out.decoherence_err += eps;
        out.success_factor *= 1.0 - eps;
        out.log_success_factor += std::log1p(-eps);
    }
    return out;
}

Metrics combine(std::vector<CycleBreakdown> parts, const Schedule& schedule) {
    Metrics m;
    m.depth = schedule.depth();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        m.log_success += parts[i].log_success_factor;
        m.total_crosstalk_error += parts[i].crosstalk_err;
        m.total_decoherence_error += parts[i].decoherence_err;
        m.exec_time_ns += schedule.cycles[i].duration_ns;
    }
    m.success = std::exp(m.log_success);
    m.per_cycle = std::move(parts);
    return m;
}

}  // namespace

Metrics evaluate(const Schedule& schedule, const DeviceModel& device, const NoiseParams& params) {
    const bool gmon = schedule.strategy == Strategy::G;
    ChannelScope scope = make_scope(device.graph, params.distance);
    const int n = schedule.depth();
    std::vector<CycleBreakdown> parts(n);

#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i)
        parts[i] = evaluate_cycle(schedule.cycles[i], device, params, scope, gmon);

    return combine(std::move(parts), schedule);
}

Metrics evaluate_serial(const Schedule& schedule, const DeviceModel& device,
                        const NoiseParams& params) {
    const bool gmon = schedule.strategy == Strategy::G;
    ChannelScope scope = make_scope(device.graph, params.distance);
    std::vector<CycleBreakdown> parts;
    parts.reserve(schedule.depth());
    for (const ScheduleCycle& cycle : schedule.cycles)
        parts.push_back(evaluate_cycle(cycle, device, params, scope, gmon));
    return combine(std::move(parts), schedule);
}

}  // namespace xtalk
