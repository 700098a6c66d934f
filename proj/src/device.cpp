#include "xtalk/device.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "xtalk/rng.hpp"

namespace xtalk {

DeviceModel sample_device(const ConnectivityGraph& graph, double omega_mean, double omega_sigma,
                          double anharmonicity, std::uint64_t seed, const DeviceExtras& extras) {
    if (omega_sigma < 0) throw std::invalid_argument("omega_sigma must be >= 0");
    if (extras.g0 <= 0) throw std::invalid_argument("g0 must be > 0");
    if (extras.retune_ns < 0) throw std::invalid_argument("retune_ns must be >= 0");
    if (!extras.partition.valid()) throw std::invalid_argument("invalid frequency partition");

    DeviceModel dev;
    dev.graph = graph;
    dev.g0 = extras.g0;
    dev.partition = extras.partition;
    dev.retune_ns = extras.retune_ns;
    dev.couplers_tunable = extras.couplers_tunable;
    dev.residual_coupling = extras.residual_coupling;

    Rng rng(seed);
    dev.qubits.reserve(graph.n_qubits());
    for (int q = 0; q < graph.n_qubits(); ++q) {
        QubitParams p;
        p.omega_max = rng.gaussian(omega_mean, omega_sigma);
        p.anharmonicity = anharmonicity;
        p.t1_us = extras.t1_us;
        p.t2_us = extras.t2_us;
        dev.qubits.push_back(p);
    }
    return dev;
}

Coloring color_connectivity(const ConnectivityGraph& graph) { return greedy_color(graph); }

namespace {

using nlohmann::json;

ConnectivityGraph topology_from_json(const json& j) {
    std::string kind = j.value("kind", "mesh");
    if (kind == "mesh") {
        return build_mesh(j.value("rows", 5), j.value("cols", 5));
    }
    if (kind == "path") {
        int n = j.value("n", 5);
        ConnectivityGraph g(n);
        for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
        return g;
    }
    if (kind == "express_path") {
        return build_express_cube(BaseTopology::path, j.value("n", 8), j.value("k", 2));
    }
    if (kind == "express_mesh") {
        return build_express_cube(BaseTopology::mesh, j.value("n", 4), j.value("k", 2));
    }
    if (kind == "edges") {
        ConnectivityGraph g(j.at("n").get<int>());
        for (const auto& e : j.at("list")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
        return g;
    }
    throw std::invalid_argument("unknown topology kind: " + kind);
}

}  // namespace

DeviceModel device_from_json_text(const std::string& text) {
    json j = json::parse(text);
    ConnectivityGraph graph =
        j.contains("topology") ? topology_from_json(j["topology"]) : build_mesh(5, 5);

    DeviceExtras extras;
    extras.t1_us = j.value("t1_us", 50.0);
    extras.t2_us = j.value("t2_us", 50.0);
    extras.g0 = j.value("g0", 0.030);
    extras.retune_ns = j.value("retune_ns", 2.0);
    extras.couplers_tunable = j.value("couplers_tunable", false);
    extras.residual_coupling = j.value("residual_coupling", 0.0);
    if (j.contains("partition")) {
        const json& p = j["partition"];
        if (p.contains("parking")) {
            extras.partition.parking_lo = p["parking"].at(0).get<double>();
            extras.partition.parking_hi = p["parking"].at(1).get<double>();
        }
        extras.partition.exclusion_width = p.value("exclusion_width", 0.5);
        if (p.contains("interaction")) {
            extras.partition.interaction_lo = p["interaction"].at(0).get<double>();
            extras.partition.interaction_hi = p["interaction"].at(1).get<double>();
        }
    }
    return sample_device(graph, j.value("omega_mean", 7.0), j.value("omega_sigma", 0.1),
                         j.value("anharmonicity", -0.2), j.value("seed", std::uint64_t{1}),
                         extras);
}

DeviceModel load_device(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open device config: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return device_from_json_text(buf.str());
}

DeviceModel default_mesh_device(int rows, int cols, std::uint64_t seed) {
    return sample_device(build_mesh(rows, cols), 7.0, 0.1, -0.2, seed, DeviceExtras{});
}

}  // namespace xtalk
