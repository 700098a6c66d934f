#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xtalk/graph.hpp"

namespace xtalk {

enum class GateKind {
    H, X, Y, Z, RX, RY, RZ,          // single-qubit
    CNOT, SWAP, CZ, ISWAP, SQRT_ISWAP,  // two-qubit
    BARRIER,                          // scheduling directive, no operands
};

bool is_two_qubit(GateKind k);
bool is_rotation(GateKind k);
bool is_native_two_qubit(GateKind k);  // CZ / ISWAP / SQRT_ISWAP
const char* gate_name(GateKind k);

struct Gate {
    GateKind kind = GateKind::H;
    int q0 = -1;
    int q1 = -1;          // second operand, two-qubit kinds only
    double angle = 0.0;   // radians, rotation kinds only

    int arity() const;
    Edge coupler() const { return Edge(q0, q1); }

    friend bool operator==(const Gate& a, const Gate& b);
};

Gate g1(GateKind k, int q);
Gate grot(GateKind k, int q, double angle);
Gate g2(GateKind k, int a, int b);

struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;
    std::string name;
    std::string source;

    /// Gate count excluding barriers.
    int n_real_gates() const;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : std::runtime_error(msg + ", line " + std::to_string(line_no)), line(line_no) {}
};

/// Line-oriented circuit text: "qubits N" first, then one gate per line
/// ("cnot 0 1", "rz 3 0.785398"), '#' comments, "barrier" layer breaks.
Circuit parse_circuit(std::string_view text);
std::string serialize_circuit(const Circuit& c);
Circuit load_circuit(const std::string& path);

enum class DecompStrategy { cz_only, iswap_only, hybrid };

/// Rewrites CNOT and SWAP gates into the native set {CZ, ISWAP, SQRT_ISWAP}
/// plus single-qubit gates; native gates pass through untouched. Every
/// replacement sequence equals its source unitary up to global phase.
Circuit decompose(const Circuit& c, DecompStrategy strategy);

struct RouteResult {
    Circuit circuit;               // over physical qubits
    std::vector<int> initial_map;  // logical -> physical
    std::vector<int> final_map;    // logical -> physical after inserted SWAPs
};

/// Greedy shortest-path SWAP insertion so every two-qubit gate lands on a
/// device coupler. Identity placement when initial_map is absent.
RouteResult route_with_map(const Circuit& c, const ConnectivityGraph& g,
                           const std::vector<int>* initial_map = nullptr);
Circuit route(const Circuit& c, const ConnectivityGraph& g,
              const std::vector<int>* initial_map = nullptr);

/// Initial placement heuristic: orders logical qubits along their heaviest
/// interaction chain and lays them out on a linearized device walk (snake
/// for meshes). Intended as an initial_map for route.
std::vector<int> greedy_placement(const Circuit& c, const ConnectivityGraph& g);

/// Routes with the better of identity and heuristic placement, judged by
/// inserted SWAP count.
RouteResult route_best(const Circuit& c, const ConnectivityGraph& g);

struct Layer {
    int index = 0;
    std::vector<int> gate_indices;  // into Circuit::gates, disjoint support
};

struct LayerSlicing {
    std::vector<Layer> layers;
    /// criticality[i]: length in gates of the longest dependency chain from
    /// gate i to the end of the circuit (counting gate i itself).
    std::vector<int> criticality;
};

/// Greedy ASAP slicing respecting per-qubit order; barriers force a
/// boundary and appear in no layer.
LayerSlicing slice_layers(const Circuit& c);

// Benchmark generators. All deterministic for a fixed seed.
Circuit gen_bv(int n);                            // all-ones hidden string
Circuit gen_bv(int n, const std::vector<bool>& hidden);
Circuit gen_ising(int n, int steps);
Circuit gen_qaoa(int n, int p, double edge_prob, std::uint64_t seed);
Circuit gen_xeb(int n, int p, std::uint64_t seed);  // n must be a perfect square

}  // namespace xtalk
