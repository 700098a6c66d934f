#pragma once

#include <vector>

#include "xtalk/circuit.hpp"
#include "xtalk/device.hpp"
#include "xtalk/scheduler.hpp"

namespace xtalk {

enum class CrosstalkMode {
    transition,     // unwanted population-exchange probability, sin^2(g' t)
    paper_literal,  // the complementary 1 - sin^2(g' t) form
};

struct NoiseParams {
    double g0 = 0.030;      // GHz cyclic
    double t1_us = 50.0;
    double t2_us = 50.0;
    CrosstalkMode mode = CrosstalkMode::transition;
    double residual_coupling = 0.0;  // GHz, strategy G coupler leakage
    int distance = 1;                // crosstalk graph distance for pair scope

    static NoiseParams from_device(const DeviceModel& d, int distance = 1);
};

/// Residual coupling g' = g0^2 / delta_omega between detuned qubits,
/// in GHz (hbar absorbed by working in frequency units).
/// delta_omega <= 0 throws: on resonance the coupling is the bare g0,
/// which is the caller's case to handle.
double residual_coupling(double g0, double delta_omega);

/// Native two-qubit gate times from the resonance formulas, ns for g in
/// GHz: ISWAP 1/(4g), SQRT_ISWAP 1/(8g), CZ 1/(2*sqrt(2)*g).
double gate_duration_ns(GateKind kind, double g);

/// Combined T1/T2 decay: (1 - e^{-t/T1})(1 - e^{-t/T2}).
double decoherence_error(double t_ns, double t1_us, double t2_us);

/// Crosstalk error for a pair detuned by delta_omega over t ns. The
/// effective coupling is g0^2/delta_omega capped at the bare g0 (on
/// resonance, delta_omega = 0, the oscillation runs at full strength).
/// Worst case over the cycle: the exchange probability saturates once a
/// full swap has happened, so long exposures never alias back to zero.
double crosstalk_error(double delta_omega, double t_ns, double g0, CrosstalkMode mode);

struct CycleBreakdown {
    double crosstalk_err = 0.0;    // summed error mass this cycle
    double decoherence_err = 0.0;
    double success_factor = 1.0;   // product of (1 - eps) this cycle
    double log_success_factor = 0.0;
};

struct Metrics {
    double success = 1.0;       // exp(log_success); 0 when it underflows
    double log_success = 0.0;   // natural log, exact for deep circuits
    double total_crosstalk_error = 0.0;
    double total_decoherence_error = 0.0;
    int depth = 0;
    double exec_time_ns = 0.0;
    std::vector<CycleBreakdown> per_cycle;
};

/// Worst-case success heuristic: per cycle, every qubit pair within
/// crosstalk distance d with a side in an active two-qubit gate is charged
/// with its frequency gap (each distinct channel once), every directly
/// coupled idle pair with its idle gap, and every qubit with decoherence
/// over the cycle duration; success is the product of (1 - eps) over all
/// charges. Cycles are processed in parallel; factors are combined in
/// cycle order, so results do not depend on thread count.
Metrics evaluate(const Schedule& schedule, const DeviceModel& device, const NoiseParams& params);

/// Serial reference for evaluate, kept for tests and benchmarks.
Metrics evaluate_serial(const Schedule& schedule, const DeviceModel& device,
                        const NoiseParams& params);

}  // namespace xtalk
