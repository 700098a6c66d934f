// Acceptance suite: one test case per criterion, each printing a single
// PASS/FAIL line so a run reads as a checklist.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "graph_oracles.hpp"
#include "grid_oracle.hpp"
#include "matrix_oracle.hpp"
#include "xtalk/circuit.hpp"
#include "xtalk/crosstalk.hpp"
#include "xtalk/device.hpp"
#include "xtalk/freqassign.hpp"
#include "xtalk/noise.hpp"
#include "xtalk/runner.hpp"
#include "xtalk/scheduler.hpp"

using namespace xtalk;
namespace fs = std::filesystem;

namespace {

void report(int criterion, const char* name, bool ok) {
    std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion, name);
    std::fflush(stdout);
    CHECK_MESSAGE(ok, "criterion " << criterion << " (" << name << ")");
}

std::vector<std::string> suite_n(const std::vector<int>& sizes) { return bench_suite(sizes); }

struct PairRun {
    RunRow cd, u;
    Schedule cd_sched, u_sched;
};

PairRun run_pair(const std::string& spec, const RunConfig& cfg) {
    PairRun out;
    Circuit c = circuit_from_spec(spec, cfg.seed);
    DeviceModel dev = device_for(c, cfg);
    out.cd = run_one(dev, c, Strategy::ColorDynamic, cfg, 0, &out.cd_sched);
    out.u = run_one(dev, c, Strategy::U, cfg, 0, &out.u_sched);
    return out;
}

}  // namespace

TEST_CASE("1. mesh colorability: fixed 8-color pattern + brute-force lower bound") {
    bool ok = true;
    for (int n = 3; n <= 8; ++n) {
        auto xg = gen_crosstalk_graph(build_mesh(n, n), 1);
        auto c = static_mesh_coloring(xg, n);
        ok = ok && validate_coloring(xg, c) && c.n_colors == 8;
    }
    auto t0 = std::chrono::steady_clock::now();
    auto xg3 = gen_crosstalk_graph(build_mesh(3, 3), 1);
    bool seven_colorable = graph_oracles::colorable_with(xg3.n_vertices(), xg3.adjacency(), 7);
    bool eight_colorable = graph_oracles::colorable_with(xg3.n_vertices(), xg3.adjacency(), 8);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("    3x3 crosstalk graph: 7-colorable=%s, 8-colorable=%s (%.2f s)\n",
                seven_colorable ? "yes" : "no", eight_colorable ? "yes" : "no", secs);
    ok = ok && !seven_colorable && eight_colorable && secs < 60.0;
    report(1, "8-color mesh pattern proper for N=3..8; no 7-coloring of the 3x3", ok);
}

TEST_CASE("2. crosstalk graph matches the brute-force oracle") {
    Rng rng(424242);
    bool ok = true;
    for (int trial = 0; trial < 25; ++trial) {
        auto g = graph_oracles::random_connected_graph(rng, 12);
        for (int d : {1, 2}) {
            if (gen_crosstalk_graph(g, d).edges() != graph_oracles::xtalk_edges(g, d)) ok = false;
        }
    }
    report(2, "25 random graphs <= 12 qubits, d in {1,2}, exact match", ok);
}

TEST_CASE("3. solver tightness against the 1 MHz grid oracle") {
    const double alpha = -0.2, tol = 1e-3;
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
        Coloring coloring;
        coloring.n_colors = n;
        coloring.multiplicity.assign(n, 1);
        for (int v = 0; v < n; ++v) coloring.color_of.push_back(v);
        auto a = smt_find(coloring, alpha, 6.5, 7.5, tol);
        double want = grid_oracle::max_delta(n, 0.2, 6.5, 7.5);
        bool close = std::abs(a.delta - want) <= tol + 1e-3;
        bool valid = validate_assignment(a, coloring, alpha).empty();
        std::printf("    n=%d delta=%.4f grid=%.4f\n", n, a.delta, want);
        ok = ok && close && valid;
    }
    report(3, "smt_find delta within tolerance + 1 MHz of the grid optimum, 1..4 colors", ok);
}

TEST_CASE("4. decomposition correctness at 1e-9") {
    bool ok = true;
    for (auto strategy :
         {DecompStrategy::cz_only, DecompStrategy::iswap_only, DecompStrategy::hybrid}) {
        for (auto kind : {GateKind::CNOT, GateKind::SWAP}) {
            Circuit c;
            c.n_qubits = 2;
            c.gates.push_back(g2(kind, 0, 1));
            auto native = decompose(c, strategy);
            auto got = oracle::sequence_unitary(native.gates, 0, 1);
            ok = ok && oracle::equal_up_to_phase(got, oracle::two_qubit_unitary(kind), 1e-9);
        }
    }
    report(4, "CNOT/SWAP x {cz,iswap,hybrid} equal source unitary up to phase", ok);
}

TEST_CASE("5. directional reproduction: ColorDynamic vs U on the suite") {
    RunConfig cfg;
    bool every = true;
    double logsum = 0;
    int count = 0;
    for (const auto& spec : suite_n({4, 9, 16})) {
        PairRun pr = run_pair(spec, cfg);
        double lr = pr.cd.log_success - pr.u.log_success;
        std::printf("    %-12s ratio=%.4f\n", spec.c_str(), std::exp(std::min(lr, 50.0)));
        if (lr < -1e-9) every = false;
        logsum += lr;
        ++count;
    }
    double geomean = std::exp(logsum / count);
    std::printf("    geomean ratio = %.4f\n", geomean);
    report(5, "ColorDynamic >= U on every instance and geomean ratio > 1.5",
           every && geomean > 1.5);
}

TEST_CASE("6. serialization ordering: depth(U) >= depth(ColorDynamic) on xeb") {
    RunConfig cfg;
    bool ok = true;
    for (int n : {4, 9, 16}) {
        PairRun pr = run_pair("xeb:" + std::to_string(n) + ":8", cfg);
        std::printf("    xeb:%d:8 depth U=%d CD=%d\n", n, pr.u.depth_cycles, pr.cd.depth_cycles);
        ok = ok && pr.u.depth_cycles >= pr.cd.depth_cycles;
    }
    report(6, "U requires at least as much serialization as ColorDynamic", ok);
}

TEST_CASE("7. residual-coupling sensitivity of baseline G") {
    RunConfig cfg;
    Circuit c = circuit_from_spec("xeb:16:4", cfg.seed);
    DeviceModel dev = device_for(c, cfg);
    Circuit native = decompose(route_best(c, dev.graph).circuit, DecompStrategy::hybrid);
    Schedule sg = compile(Strategy::G, dev, native);
    bool mono = true;
    double prev = 1.0;
    double g_at_zero = 0;
    for (double res : {0.0, 0.0001, 0.0005, 0.001, 0.002}) {
        NoiseParams p = NoiseParams::from_device(dev);
        p.residual_coupling = res;
        Metrics m = evaluate(sg, dev, p);
        std::printf("    residual=%.4f GHz -> success=%.6f\n", res, m.success);
        if (m.success > prev + 1e-12) mono = false;
        prev = m.success;
        if (res == 0.0) g_at_zero = m.success;
    }
    Schedule scd = compile(Strategy::ColorDynamic, dev, native);
    Metrics mcd = evaluate(scd, dev, NoiseParams::from_device(dev));
    bool margin = g_at_zero >= 0.9 * mcd.success;
    std::printf("    G at zero residual %.6f vs ColorDynamic %.6f\n", g_at_zero, mcd.success);
    report(7, "G success monotone in residual coupling; at 0 within 0.9x of ColorDynamic",
           mono && margin);
}

TEST_CASE("8. scalability: 81 qubits under a minute") {
    RunConfig cfg;
    Circuit c = circuit_from_spec("xeb:81:8", cfg.seed);
    DeviceModel dev = device_for(c, cfg);
    Schedule sched;
    RunRow row = run_one(dev, c, Strategy::ColorDynamic, cfg, 0, &sched);
    std::printf("    xeb:81:8 compiled in %.1f ms, depth %d, valid=%d\n", row.compile_ms,
                row.depth_cycles, row.valid);
    report(8, "compile(ColorDynamic, xeb:81:8) under 60 s with time recorded",
           row.compile_ms < 60000.0 && row.valid && row.compile_ms > 0);
}

TEST_CASE("9. schedule validity across every strategy and suite instance") {
    RunConfig cfg;
    bool ok = true;
    for (const auto& spec : suite_n({4, 9, 16, 25})) {
        Circuit c = circuit_from_spec(spec, cfg.seed);
        DeviceModel dev = device_for(c, cfg);
        for (Strategy st :
             {Strategy::N, Strategy::G, Strategy::U, Strategy::S, Strategy::ColorDynamic}) {
            RunRow row = run_one(dev, c, st, cfg, 0);
            if (!row.valid) {
                std::printf("    INVALID: %s under %s\n", spec.c_str(), strategy_name(st));
                ok = false;
            }
        }
    }
    report(9, "validate_schedule clean for all strategies on the full suite", ok);
}

TEST_CASE("10. tunability sweet spot on xeb:16:8") {
    RunConfig cfg;
    Circuit c = circuit_from_spec("xeb:16:8", cfg.seed);
    DeviceModel dev = device_for(c, cfg);
    double logs[5] = {0, 0, 0, 0, 0};
    for (int mc = 1; mc <= 4; ++mc) {
        RunRow row = run_one(dev, c, Strategy::ColorDynamic, cfg, mc);
        logs[mc] = row.log_success;
        std::printf("    max_colors=%d success=%.6f depth=%d\n", mc, row.success,
                    row.depth_cycles);
    }
    bool ok = logs[2] >= logs[1] && logs[3] >= logs[1] &&
              (logs[4] - logs[3]) <= (logs[2] - logs[1]) + 1e-12;
    report(10, "2 and 3 colors beat 1; diminishing returns from 3 to 4", ok);
}

TEST_CASE("11. determinism: byte-identical metrics across bench reruns") {
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        std::stringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    fs::path base = fs::temp_directory_path() / "xtalk_acceptance_det";
    fs::remove_all(base);
    std::string runs[2];
    for (int i = 0; i < 2; ++i) {
        RunConfig cfg;
        cfg.out_dir = (base / ("run" + std::to_string(i))).string();
        cfg.stable_output = true;
        int rc = cmd_bench(cfg);
        REQUIRE(rc == 0);
        runs[i] = slurp(fs::path(cfg.out_dir) / "metrics.csv");
    }
    bool ok = !runs[0].empty() && runs[0] == runs[1];
    fs::remove_all(base);
    report(11, "full bench suite reruns produce byte-identical metrics.csv", ok);
}
