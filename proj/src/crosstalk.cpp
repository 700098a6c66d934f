#include "xtalk/crosstalk.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace xtalk {

CrosstalkGraph::CrosstalkGraph(std::vector<Edge> vertices, std::vector<std::pair<int, int>> edges,
                               int distance_d)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), distance_(distance_d) {
    adj_.assign(vertices_.size(), {});
    for (auto [i, j] : edges_) {
        adj_.at(i).push_back(j);
        adj_.at(j).push_back(i);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
}

int CrosstalkGraph::vertex_index(const Edge& coupler) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), coupler);
    if (it != vertices_.end() && *it == coupler) return static_cast<int>(it - vertices_.begin());
    return -1;
}

namespace {

// Vertices within distance d of either endpoint of `e`, as a flag array.
std::vector<char> ball_around(const ConnectivityGraph& g, const Edge& e, int d) {
    std::vector<int> dist(g.n_qubits(), -1);
    std::deque<int> queue;
    dist[e.u] = 0;
    dist[e.v] = 0;
    queue.push_back(e.u);
    queue.push_back(e.v);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist[u] == d) continue;
        for (int v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    std::vector<char> in(g.n_qubits(), 0);
    for (int q = 0; q < g.n_qubits(); ++q) in[q] = dist[q] >= 0;
    return in;
}

}  // namespace

CrosstalkGraph gen_crosstalk_graph(const ConnectivityGraph& device, int d) {
    if (d < 1) throw std::invalid_argument("crosstalk distance must be >= 1");
    const auto& couplers = device.edges();  // already sorted canonical
    const int nv = static_cast<int>(couplers.size());
    std::vector<std::vector<int>> rows(nv);  // rows[i]: adjacent j > i

#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < nv; ++i) {
        auto ball = ball_around(device, couplers[i], d);
        auto& row = rows[i];
        for (int j = i + 1; j < nv; ++j) {
            if (ball[couplers[j].u] || ball[couplers[j].v]) row.push_back(j);
        }
    }

    // merge in vertex order so the result is independent of thread count
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < nv; ++i)
        for (int j : rows[i]) edges.emplace_back(i, j);
    return CrosstalkGraph(couplers, std::move(edges), d);
}

CrosstalkGraph gen_crosstalk_graph_serial(const ConnectivityGraph& device, int d) {
    if (d < 1) throw std::invalid_argument("crosstalk distance must be >= 1");
    const auto& couplers = device.edges();
    const int nv = static_cast<int>(couplers.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < nv; ++i) {
        auto ball = ball_around(device, couplers[i], d);
        for (int j = i + 1; j < nv; ++j) {
            if (ball[couplers[j].u] || ball[couplers[j].v]) edges.emplace_back(i, j);
        }
    }
    return CrosstalkGraph(couplers, std::move(edges), d);
}

CrosstalkGraph active_subgraph(const CrosstalkGraph& xg, const std::vector<Edge>& active) {
    std::vector<int> orig;
    orig.reserve(active.size());
    for (const Edge& e : active) {
        int idx = xg.vertex_index(e);
        if (idx < 0) throw std::invalid_argument("active coupler not in crosstalk graph");
        orig.push_back(idx);
    }
    std::sort(orig.begin(), orig.end());
    orig.erase(std::unique(orig.begin(), orig.end()), orig.end());

    std::vector<int> pos(xg.n_vertices(), -1);
    std::vector<Edge> verts;
    verts.reserve(orig.size());
    for (std::size_t i = 0; i < orig.size(); ++i) {
        pos[orig[i]] = static_cast<int>(i);
        verts.push_back(xg.vertices()[orig[i]]);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [i, j] : xg.edges()) {
        if (pos[i] >= 0 && pos[j] >= 0) edges.emplace_back(pos[i], pos[j]);
    }
    return CrosstalkGraph(std::move(verts), std::move(edges), xg.distance_d());
}

Coloring greedy_color(int n_vertices, const std::vector<std::vector<int>>& adjacency) {
    Coloring c;
    c.color_of.assign(n_vertices, -1);
    if (n_vertices == 0) return c;

    std::vector<int> order(n_vertices);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto da = adjacency[a].size(), db = adjacency[b].size();
        return da != db ? da > db : a < b;
    });

    std::vector<char> used;
    for (int v : order) {
        used.assign(c.n_colors + 1, 0);
        for (int u : adjacency[v]) {
            int cu = c.color_of[u];
            if (cu >= 0) used[cu] = 1;
        }
        int color = 0;
        while (used[color]) ++color;
        c.color_of[v] = color;
        c.n_colors = std::max(c.n_colors, color + 1);
    }
    c.multiplicity.assign(c.n_colors, 0);
    for (int col : c.color_of) ++c.multiplicity[col];
    return c;
}

Coloring greedy_color(const CrosstalkGraph& g) {
    return greedy_color(g.n_vertices(), g.adjacency());
}

Coloring greedy_color(const ConnectivityGraph& g) {
    return greedy_color(g.n_qubits(), g.adjacency());
}

bool validate_coloring(int n_vertices, const std::vector<std::pair<int, int>>& edges,
                       const Coloring& c) {
    if (static_cast<int>(c.color_of.size()) < n_vertices)
        throw std::invalid_argument("coloring does not cover all vertices");
    for (int v = 0; v < n_vertices; ++v)
        if (c.color_of[v] < 0) throw std::invalid_argument("uncolored vertex");
    for (auto [i, j] : edges)
        if (c.color_of[i] == c.color_of[j]) return false;
    return true;
}

bool validate_coloring(const CrosstalkGraph& g, const Coloring& c) {
    return validate_coloring(g.n_vertices(), g.edges(), c);
}

Coloring static_mesh_coloring(const CrosstalkGraph& xg, int cols) {
    Coloring c;
    c.color_of.reserve(xg.n_vertices());
    std::vector<int> remap(8, -1);
    for (const Edge& e : xg.vertices()) {
        int ru = e.u / cols, cu = e.u % cols;
        int rv = e.v / cols;
        int raw = (ru == rv) ? (cu + 2 * ru) % 4 : 4 + (ru + 2 * cu) % 4;
        if (remap[raw] < 0) remap[raw] = c.n_colors++;
        c.color_of.push_back(remap[raw]);
    }
    c.multiplicity.assign(c.n_colors, 0);
    for (int col : c.color_of) ++c.multiplicity[col];
    return c;
}

std::string to_edge_list(const CrosstalkGraph& g) {
    std::ostringstream out;
    for (auto [i, j] : g.edges()) out << i << " " << j << "\n";
    return out.str();
}

}  // namespace xtalk
