#pragma once

#include <utility>
#include <vector>

#include "xtalk/graph.hpp"

namespace xtalk {

/// Proper vertex coloring with dense 0-based color ids.
struct Coloring {
    std::vector<int> color_of;      // vertex index -> color id
    int n_colors = 0;
    std::vector<int> multiplicity;  // color id -> occurrence count n(c)
};

/// Crosstalk graph: one vertex per coupler of the connectivity graph,
/// edges between couplers that interfere within distance d.
class CrosstalkGraph {
public:
    CrosstalkGraph() = default;
    CrosstalkGraph(std::vector<Edge> vertices, std::vector<std::pair<int, int>> edges,
                   int distance_d);

    int n_vertices() const { return static_cast<int>(vertices_.size()); }
    const std::vector<Edge>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int distance_d() const { return distance_; }

    /// Vertex index of the given coupler, or -1.
    int vertex_index(const Edge& coupler) const;

private:
    std::vector<Edge> vertices_;             // canonical order, sorted
    std::vector<std::pair<int, int>> edges_; // vertex index pairs, i < j
    std::vector<std::vector<int>> adj_;
    int distance_ = 1;
};

/// Builds the distance-d crosstalk graph: couplers e1, e2 are adjacent iff
/// some endpoint of e1 is within graph distance d of some endpoint of e2.
/// Parallelized over couplers; output independent of thread count.
CrosstalkGraph gen_crosstalk_graph(const ConnectivityGraph& device, int d);

/// Serial reference for gen_crosstalk_graph, kept for tests and benchmarks.
CrosstalkGraph gen_crosstalk_graph_serial(const ConnectivityGraph& device, int d);

/// Induced subgraph on the given couplers; vertex identities (the coupler
/// endpoint pairs) are preserved. Unknown couplers throw.
CrosstalkGraph active_subgraph(const CrosstalkGraph& xg, const std::vector<Edge>& active);

/// Welsh-Powell greedy coloring: vertices sorted by descending degree
/// (ties by ascending index), each assigned the smallest color not used
/// by an already-colored neighbor.
Coloring greedy_color(int n_vertices, const std::vector<std::vector<int>>& adjacency);
Coloring greedy_color(const CrosstalkGraph& g);
Coloring greedy_color(const ConnectivityGraph& g);

/// True iff no edge is monochromatic. Colorings missing a vertex throw.
bool validate_coloring(int n_vertices, const std::vector<std::pair<int, int>>& edges,
                       const Coloring& c);
bool validate_coloring(const CrosstalkGraph& g, const Coloring& c);

/// The fixed periodic 8-coloring of a mesh crosstalk graph (d = 1):
/// horizontal coupler (r,c)-(r,c+1) gets color (c + 2r) mod 4, vertical
/// coupler (r,c)-(r+1,c) gets 4 + (r + 2c) mod 4. Color ids are remapped
/// to a dense range when the mesh is too small to use all eight.
Coloring static_mesh_coloring(const CrosstalkGraph& xg, int cols);

/// One "u v" pair of crosstalk-vertex indices per line.
std::string to_edge_list(const CrosstalkGraph& g);

}  // namespace xtalk
