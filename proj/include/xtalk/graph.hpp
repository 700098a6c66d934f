#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace xtalk {

/// Unordered qubit pair in canonical order (u < v).
struct Edge {
    int u = -1;
    int v = -1;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(const Edge& a, const Edge& b) { return !(a == b); }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

/// Device connectivity: qubits are vertices, couplers are edges.
/// Simple undirected graph; edge list kept sorted, adjacency mirrors it.
class ConnectivityGraph {
public:
    ConnectivityGraph() = default;
    explicit ConnectivityGraph(int n_qubits);

    /// Inserts the coupler {a,b}. Duplicates are ignored; self-loops and
    /// out-of-range endpoints throw std::invalid_argument.
    void add_edge(int a, int b);

    int n_qubits() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int q) const { return adj_.at(q); }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    bool has_edge(int a, int b) const;

    /// Index of {a,b} in edges(), or -1.
    int edge_index(int a, int b) const;

    /// BFS distances from src; unreachable = -1.
    std::vector<int> distances_from(int src) const;

    bool connected() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// rows x cols nearest-neighbor grid; qubit index = row*cols + col.
ConnectivityGraph build_mesh(int rows, int cols);

enum class BaseTopology { path, mesh };

/// Base path (n qubits) or n x n mesh augmented with express links from
/// node i to node i+k along each base dimension. No wrap-around; express
/// links that coincide with base edges are dropped.
ConnectivityGraph build_express_cube(BaseTopology base, int n, int k);

/// One "u v" pair per line, edges in canonical order.
std::string to_edge_list(const ConnectivityGraph& g);

/// (rows, cols) if the graph is exactly a mesh built by build_mesh.
std::optional<std::pair<int, int>> detect_mesh(const ConnectivityGraph& g);

}  // namespace xtalk
