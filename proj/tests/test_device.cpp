#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "xtalk/device.hpp"
#include "xtalk/graph.hpp"

using namespace xtalk;

TEST_CASE("sample_device defaults and determinism") {
    auto g = build_mesh(3, 3);
    SUBCASE("zero sigma collapses to the mean") {
        auto dev = sample_device(g, 7.0, 0.0, -0.2, 42);
        for (const auto& q : dev.qubits) CHECK(q.omega_max == doctest::Approx(7.0).epsilon(1e-12));
    }
    SUBCASE("fixed seed reproduces bit-identical draws") {
        auto a = sample_device(g, 7.0, 0.1, -0.2, 42);
        auto b = sample_device(g, 7.0, 0.1, -0.2, 42);
        for (int q = 0; q < 9; ++q) CHECK(a.qubits[q].omega_max == b.qubits[q].omega_max);
        auto c = sample_device(g, 7.0, 0.1, -0.2, 43);
        bool any_diff = false;
        for (int q = 0; q < 9; ++q) any_diff |= a.qubits[q].omega_max != c.qubits[q].omega_max;
        CHECK(any_diff);
    }
    SUBCASE("paper defaults") {
        auto dev = sample_device(g, 7.0, 0.1, -0.2, 1);
        CHECK(dev.g0 == doctest::Approx(0.030));
        CHECK(dev.qubits[0].anharmonicity == doctest::Approx(-0.200));
        CHECK(dev.retune_ns == doctest::Approx(2.0));
        CHECK(dev.partition.parking_lo == doctest::Approx(5.0));
        CHECK(dev.partition.parking_hi == doctest::Approx(6.0));
        CHECK(dev.partition.interaction_lo == doctest::Approx(6.5));
        CHECK(dev.partition.interaction_hi == doctest::Approx(7.5));
        CHECK(dev.partition.valid());
    }
    SUBCASE("negative sigma rejected") {
        CHECK_THROWS_AS(sample_device(g, 7.0, -0.1, -0.2, 1), std::invalid_argument);
    }
}

TEST_CASE("connectivity coloring") {
    SUBCASE("meshes are two-colorable, checkerboard classes") {
        for (int r = 1; r <= 8; ++r) {
            for (int c = 1; c <= 8; ++c) {
                auto g = build_mesh(r, c);
                auto col = color_connectivity(g);
                int needed = g.edges().empty() ? 1 : 2;
                CHECK(col.n_colors == needed);
                for (const Edge& e : g.edges()) CHECK(col.color_of[e.u] != col.color_of[e.v]);
            }
        }
    }
    SUBCASE("single qubit gets one color") {
        CHECK(color_connectivity(ConnectivityGraph(1)).n_colors == 1);
    }
    SUBCASE("complete graph K4 needs four") {
        ConnectivityGraph k4(4);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
        CHECK(color_connectivity(k4).n_colors == 4);
    }
}

TEST_CASE("device config json") {
    const char* text = R"({
        "topology": {"kind": "mesh", "rows": 2, "cols": 3},
        "omega_mean": 6.8, "omega_sigma": 0.0, "anharmonicity": -0.25,
        "t1_us": 40, "t2_us": 35, "g0": 0.025,
        "partition": {"parking": [4.8, 5.8], "exclusion_width": 0.4, "interaction": [6.3, 7.3]},
        "retune_ns": 3, "seed": 9, "couplers_tunable": true, "residual_coupling": 0.0005
    })";
    auto dev = device_from_json_text(text);
    CHECK(dev.graph.n_qubits() == 6);
    CHECK(dev.qubits[0].omega_max == doctest::Approx(6.8));
    CHECK(dev.qubits[0].anharmonicity == doctest::Approx(-0.25));
    CHECK(dev.qubits[0].t1_us == doctest::Approx(40));
    CHECK(dev.qubits[0].t2_us == doctest::Approx(35));
    CHECK(dev.g0 == doctest::Approx(0.025));
    CHECK(dev.partition.interaction_hi == doctest::Approx(7.3));
    CHECK(dev.retune_ns == doctest::Approx(3));
    CHECK(dev.couplers_tunable);
    CHECK(dev.residual_coupling == doctest::Approx(0.0005));

    SUBCASE("defaults fill missing fields") {
        auto d2 = device_from_json_text("{}");
        CHECK(d2.graph.n_qubits() == 25);
        CHECK(d2.g0 == doctest::Approx(0.030));
    }
    SUBCASE("express topologies") {
        auto d3 = device_from_json_text(R"({"topology": {"kind": "express_path", "n": 6, "k": 2}})");
        CHECK(d3.graph.n_qubits() == 6);
        CHECK(d3.graph.has_edge(0, 2));
    }
    SUBCASE("bad partition rejected") {
        CHECK_THROWS(device_from_json_text(
            R"({"partition": {"parking": [5.0, 7.0], "interaction": [6.5, 7.5]}})"));
    }
}

TEST_CASE("load_device from file") {
    const std::string path = "test_device_cfg.json";
    {
        std::ofstream out(path);
        out << R"({"topology": {"kind": "path", "n": 4}, "omega_sigma": 0.0})";
    }
    auto dev = load_device(path);
    CHECK(dev.graph.n_qubits() == 4);
    CHECK(dev.graph.edges().size() == 3);
    std::remove(path.c_str());
    CHECK_THROWS(load_device("does_not_exist.json"));
}
