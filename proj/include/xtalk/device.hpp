#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xtalk/crosstalk.hpp"
#include "xtalk/graph.hpp"

namespace xtalk {

/// Per-qubit physical parameters. Frequencies in GHz (cyclic), times in us.
struct QubitParams {
    double omega_max = 7.0;       // maximum 01 transition frequency
    double anharmonicity = -0.2;  // omega12 - omega01, negative
    double t1_us = 50.0;
    double t2_us = 50.0;
};

/// Split of the tunable spectrum into parking / exclusion / interaction
/// regions. Nothing is ever assigned inside the exclusion region.
struct FrequencyPartition {
    double parking_lo = 5.0;
    double parking_hi = 6.0;
    double exclusion_width = 0.5;
    double interaction_lo = 6.5;
    double interaction_hi = 7.5;

    bool valid() const {
        return parking_lo <= parking_hi && interaction_lo <= interaction_hi &&
               parking_hi < interaction_lo &&
               interaction_lo - parking_hi >= exclusion_width - 1e-12;
    }
};

/// Sampling and hardware knobs not covered by the Gaussian frequency draw.
struct DeviceExtras {
    double t1_us = 50.0;
    double t2_us = 50.0;
    double g0 = 0.030;         // bare qubit-qubit coupling, GHz cyclic
    FrequencyPartition partition{};
    double retune_ns = 2.0;    // flux retuning overhead per cycle with retunes
    bool couplers_tunable = false;
    double residual_coupling = 0.0;  // GHz, used only when couplers_tunable
};

struct DeviceModel {
    ConnectivityGraph graph;
    std::vector<QubitParams> qubits;
    double g0 = 0.030;
    FrequencyPartition partition{};
    double retune_ns = 2.0;
    bool couplers_tunable = false;
    double residual_coupling = 0.0;

    double anharmonicity() const { return qubits.empty() ? -0.2 : qubits.front().anharmonicity; }
};

/// Draws per-qubit maximum frequencies from Normal(omega_mean, omega_sigma)
/// with the given seed; everything else copied from extras. Bit-reproducible
/// for a fixed seed.
DeviceModel sample_device(const ConnectivityGraph& graph, double omega_mean, double omega_sigma,
                          double anharmonicity, std::uint64_t seed,
                          const DeviceExtras& extras = {});

/// Proper coloring of the connectivity graph (Welsh-Powell); the classes
/// map to idle/parking frequencies.
Coloring color_connectivity(const ConnectivityGraph& graph);

/// Reads a device config document (JSON). Missing fields fall back to the
/// documented defaults; see README for the schema.
DeviceModel load_device(const std::string& path);
DeviceModel device_from_json_text(const std::string& text);

/// Default NxN mesh device: omega_mean 7.0, sigma 0.1, alpha -0.2, seeded.
DeviceModel default_mesh_device(int rows, int cols, std::uint64_t seed);

}  // namespace xtalk
