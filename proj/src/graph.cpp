#include "xtalk/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace xtalk {

ConnectivityGraph::ConnectivityGraph(int n_qubits) : n_(n_qubits), adj_(n_qubits) {
    if (n_qubits < 0) throw std::invalid_argument("negative qubit count");
}

void ConnectivityGraph::add_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("self-loop coupler");
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
        throw std::invalid_argument("coupler endpoint out of range");
    Edge e(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return;
    edges_.insert(it, e);
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    std::sort(adj_[e.u].begin(), adj_[e.u].end());
    std::sort(adj_[e.v].begin(), adj_[e.v].end());
}

bool ConnectivityGraph::has_edge(int a, int b) const { return edge_index(a, b) >= 0; }

int ConnectivityGraph::edge_index(int a, int b) const {
    Edge e(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return static_cast<int>(it - edges_.begin());
    return -1;
}

std::vector<int> ConnectivityGraph::distances_from(int src) const {
    std::vector<int> dist(n_, -1);
    dist.at(src) = 0;
    std::deque<int> queue{src};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj_[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

bool ConnectivityGraph::connected() const {
    if (n_ <= 1) return true;
    auto d = distances_from(0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

ConnectivityGraph build_mesh(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("mesh dimensions must be >= 1");
    ConnectivityGraph g(rows * cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            int q = r * cols + c;
            if (c + 1 < cols) g.add_edge(q, q + 1);
            if (r + 1 < rows) g.add_edge(q, q + cols);
        }
    }
    return g;
}

ConnectivityGraph build_express_cube(BaseTopology base, int n, int k) {
    if (n < 2) throw std::invalid_argument("express cube needs n >= 2");
    if (k < 2) throw std::invalid_argument("express stride must be >= 2");
    if (base == BaseTopology::path) {
        ConnectivityGraph g(n);
        for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
        for (int i = 0; i + k < n; ++i) g.add_edge(i, i + k);
        return g;
    }
    ConnectivityGraph g = build_mesh(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c + k < n; ++c) g.add_edge(r * n + c, r * n + c + k);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r + k < n; ++r) g.add_edge(r * n + c, (r + k) * n + c);
    return g;
}

std::string to_edge_list(const ConnectivityGraph& g) {
    std::ostringstream out;
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
    return out.str();
}

std::optional<std::pair<int, int>> detect_mesh(const ConnectivityGraph& g) {
    int n = g.n_qubits();
    for (int rows = 1; rows <= n; ++rows) {
        if (n % rows != 0) continue;
        int cols = n / rows;
        if (build_mesh(rows, cols).edges() == g.edges()) return std::make_pair(rows, cols);
    }
    return std::nullopt;
}

}  // namespace xtalk
