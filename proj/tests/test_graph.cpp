#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "xtalk/graph.hpp"

using namespace xtalk;

TEST_CASE("mesh construction") {
    SUBCASE("2x2 smallest cycle grid") {
        auto g = build_mesh(2, 2);
        CHECK(g.n_qubits() == 4);
        std::vector<Edge> want{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
        CHECK(g.edges() == want);
    }
    SUBCASE("1x4 degenerate row is a path") {
        auto g = build_mesh(1, 4);
        CHECK(g.n_qubits() == 4);
        CHECK(g.edges().size() == 3);
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(1, 2));
        CHECK(g.has_edge(2, 3));
    }
    SUBCASE("5x5 edge count") {
        auto g = build_mesh(5, 5);
        CHECK(g.n_qubits() == 25);
        CHECK(g.edges().size() == 40);
    }
    SUBCASE("edge count formula, exhaustive up to 8x8") {
        for (int r = 1; r <= 8; ++r)
            for (int c = 1; c <= 8; ++c)
                CHECK(static_cast<int>(build_mesh(r, c).edges().size()) ==
                      r * (c - 1) + c * (r - 1));
    }
    SUBCASE("zero dimension rejected") {
        CHECK_THROWS_AS(build_mesh(0, 3), std::invalid_argument);
        CHECK_THROWS_AS(build_mesh(3, 0), std::invalid_argument);
    }
}

TEST_CASE("graph is simple and symmetric") {
    auto g = build_mesh(3, 4);
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : g.edges()) {
        CHECK(e.u < e.v);
        CHECK(e.v < g.n_qubits());
        CHECK(seen.insert({e.u, e.v}).second);  // no duplicates
    }
    for (int q = 0; q < g.n_qubits(); ++q)
        for (int nb : g.neighbors(q)) {
            CHECK(g.has_edge(q, nb));
            auto back = g.neighbors(nb);
            CHECK(std::find(back.begin(), back.end(), q) != back.end());
        }
    CHECK_THROWS_AS(ConnectivityGraph(3).add_edge(1, 1), std::invalid_argument);
}

TEST_CASE("express cube") {
    SUBCASE("path of 4 with stride 2") {
        auto g = build_express_cube(BaseTopology::path, 4, 2);
        std::vector<Edge> want{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
        CHECK(g.edges() == want);
    }
    SUBCASE("stride beyond length adds nothing") {
        auto g = build_express_cube(BaseTopology::path, 3, 5);
        CHECK(g.edges().size() == 2);
    }
    SUBCASE("3x3 mesh with stride 2") {
        auto g = build_express_cube(BaseTopology::mesh, 3, 2);
        CHECK(g.n_qubits() == 9);
        // 12 base edges + one stride link per row and per column
        CHECK(g.edges().size() == 12 + 3 + 3);
        CHECK(g.has_edge(0, 2));
        CHECK(g.has_edge(3, 5));
        CHECK(g.has_edge(0, 6));
        CHECK(g.has_edge(2, 8));
    }
    SUBCASE("stride 1 rejected") {
        CHECK_THROWS_AS(build_express_cube(BaseTopology::path, 4, 1), std::invalid_argument);
    }
}

TEST_CASE("edge list export") {
    auto g = build_mesh(1, 3);
    CHECK(to_edge_list(g) == "0 1\n1 2\n");
}

TEST_CASE("distances and connectivity") {
    auto g = build_mesh(2, 3);
    auto d = g.distances_from(0);
    CHECK(d[0] == 0);
    CHECK(d[5] == 3);
    CHECK(g.connected());

    ConnectivityGraph split(4);
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    CHECK_FALSE(split.connected());
}
