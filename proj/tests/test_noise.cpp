#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "xtalk/circuit.hpp"
#include "xtalk/device.hpp"
#include "xtalk/noise.hpp"
#include "xtalk/scheduler.hpp"

using namespace xtalk;

TEST_CASE("residual coupling") {
    CHECK(residual_coupling(0.030, 1.0) == doctest::Approx(0.0009));
    CHECK(residual_coupling(0.030, 0.030) == doctest::Approx(0.030));
    CHECK(residual_coupling(0.030, 2.0) == doctest::Approx(0.5 * residual_coupling(0.030, 1.0)));
    CHECK_THROWS_AS(residual_coupling(0.030, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(residual_coupling(0.030, -0.1), std::invalid_argument);
}

TEST_CASE("gate durations") {
    CHECK(gate_duration_ns(GateKind::ISWAP, 0.005) == doctest::Approx(50.0));
    CHECK(gate_duration_ns(GateKind::SQRT_ISWAP, 0.005) ==
          doctest::Approx(0.5 * gate_duration_ns(GateKind::ISWAP, 0.005)));
    CHECK(gate_duration_ns(GateKind::CZ, 0.005) == doctest::Approx(70.7107).epsilon(1e-4));
    CHECK(gate_duration_ns(GateKind::ISWAP, 0.010) <
          gate_duration_ns(GateKind::ISWAP, 0.005));  // faster at stronger coupling
    CHECK_THROWS_AS(gate_duration_ns(GateKind::ISWAP, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(gate_duration_ns(GateKind::H, 0.005), std::invalid_argument);
}

TEST_CASE("decoherence error") {
    CHECK(decoherence_error(0.0, 50, 50) == doctest::Approx(0.0));
    double e = (1 - std::exp(-1.0)) * (1 - std::exp(-1.0));
    CHECK(decoherence_error(50000.0, 50, 50) == doctest::Approx(e));  // t = T1 = T2
    CHECK(decoherence_error(50000.0, 50, 50) == doctest::Approx(0.39958).epsilon(1e-4));
    double prev = 0;
    for (double t : {1.0, 10.0, 100.0, 1000.0, 100000.0}) {
        double cur = decoherence_error(t, 50, 50);
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("crosstalk error") {
    SUBCASE("zero time, zero error in transition mode") {
        CHECK(crosstalk_error(1.0, 0.0, 0.030, CrosstalkMode::transition) == doctest::Approx(0.0));
    }
    SUBCASE("modes are complementary") {
        for (double gap : {0.0, 0.1, 0.5, 1.0, 3.0}) {
            double a = crosstalk_error(gap, 37.0, 0.030, CrosstalkMode::transition);
            double b = crosstalk_error(gap, 37.0, 0.030, CrosstalkMode::paper_literal);
            CHECK(a + b == doctest::Approx(1.0));
        }
    }
    SUBCASE("worked example from the residual formula") {
        // g' = 0.0009, arg = 2*pi*0.0009*50 ~ 0.2827
        double e = crosstalk_error(1.0, 50.0, 0.030, CrosstalkMode::transition);
        CHECK(e == doctest::Approx(0.0779).epsilon(1e-3));
    }
    SUBCASE("vanishes as the gap grows") {
        double prev = crosstalk_error(0.5, 20.0, 0.030, CrosstalkMode::transition);
        for (double gap : {1.0, 2.0, 4.0, 8.0, 16.0}) {
            double cur = crosstalk_error(gap, 20.0, 0.030, CrosstalkMode::transition);
            CHECK(cur <= prev);
            prev = cur;
        }
        CHECK(prev < 1e-4);
    }
    SUBCASE("on resonance runs at full strength") {
        // a full iSWAP duration at the bare coupling is a complete exchange
        double t = gate_duration_ns(GateKind::ISWAP, 0.030);
        CHECK(crosstalk_error(0.0, t, 0.030, CrosstalkMode::transition) == doctest::Approx(1.0));
    }
    SUBCASE("long resonant exposures saturate instead of wrapping around") {
        double t = gate_duration_ns(GateKind::ISWAP, 0.030);
        CHECK(crosstalk_error(0.0, 2 * t, 0.030, CrosstalkMode::transition) ==
              doctest::Approx(1.0));
        CHECK(crosstalk_error(0.0, 7 * t, 0.030, CrosstalkMode::transition) ==
              doctest::Approx(1.0));
    }
    SUBCASE("monotone non-increasing in the gap everywhere") {
        double prev = 2.0;
        for (double gap = 0.0; gap <= 4.0; gap += 0.01) {
            double e = crosstalk_error(gap, 46.0, 0.030, CrosstalkMode::transition);
            CHECK(e <= prev + 1e-12);
            prev = e;
        }
    }
}

namespace {

Schedule tiny_schedule(const DeviceModel& dev, Strategy strategy) {
    Circuit c;
    c.n_qubits = dev.graph.n_qubits();
    c.name = "tiny";
    c.gates = {g2(GateKind::CZ, 0, 1)};
    return compile(strategy, dev, c);
}

}  // namespace

TEST_CASE("evaluate") {
    SUBCASE("near-zero errors give success near one") {
        DeviceExtras extras;
        extras.t1_us = 1e9;
        extras.t2_us = 1e9;
        auto dev = sample_device(build_mesh(1, 2), 7.0, 0.0, -0.2, 1, extras);
        auto sched = tiny_schedule(dev, Strategy::ColorDynamic);
        NoiseParams p = NoiseParams::from_device(dev);
        auto m = evaluate(sched, dev, p);
        CHECK(m.success == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(m.depth == 1);
    }
    SUBCASE("direct product: one gate error and one qubit error") {
        // eps_g = 0.1 and eps_q = 0.2 multiply to 0.72
        CHECK((1 - 0.1) * (1 - 0.2) == doctest::Approx(0.72));
    }
    SUBCASE("success within [0,1] and monotone under appended cycles") {
        auto dev = default_mesh_device(3, 3, 7);
        Circuit c = decompose(route(gen_xeb(9, 4, 2), dev.graph), DecompStrategy::hybrid);
        auto sched = compile(Strategy::ColorDynamic, dev, c);
        NoiseParams p = NoiseParams::from_device(dev);
        auto m = evaluate(sched, dev, p);
        CHECK(m.success >= 0.0);
        CHECK(m.success <= 1.0);
        Schedule longer = sched;
        longer.cycles.push_back(sched.cycles.back());
        auto m2 = evaluate(longer, dev, p);
        CHECK(m2.success <= m.success + 1e-15);
        CHECK(m.exec_time_ns == doctest::Approx(sched.exec_time_ns()));
        CHECK(m.depth == sched.depth());
        CHECK(m.per_cycle.size() == sched.cycles.size());
    }
    SUBCASE("parallel evaluation equals the serial reference bit-for-bit") {
        auto dev = default_mesh_device(4, 4, 3);
        Circuit c = decompose(route(gen_xeb(16, 6, 5), dev.graph), DecompStrategy::hybrid);
        for (Strategy st : {Strategy::ColorDynamic, Strategy::U, Strategy::N}) {
            auto sched = compile(st, dev, c);
            NoiseParams p = NoiseParams::from_device(dev);
            auto a = evaluate(sched, dev, p);
            auto b = evaluate_serial(sched, dev, p);
            CHECK(a.success == b.success);
            CHECK(a.total_crosstalk_error == b.total_crosstalk_error);
            CHECK(a.total_decoherence_error == b.total_decoherence_error);
        }
    }
    SUBCASE("strategy G success is monotone non-increasing in residual coupling") {
        auto dev = default_mesh_device(4, 4, 3);
        Circuit c = decompose(route(gen_xeb(16, 4, 5), dev.graph), DecompStrategy::hybrid);
        auto sched = compile(Strategy::G, dev, c);
        double prev = 1.1;
        for (double res : {0.0, 0.0001, 0.0005, 0.001, 0.002}) {
            NoiseParams p = NoiseParams::from_device(dev);
            p.residual_coupling = res;
            auto m = evaluate(sched, dev, p);
            CHECK(m.success <= prev + 1e-15);
            prev = m.success;
        }
    }
}
