// Times the OpenMP kernels against their serial references and checks the
// outputs agree. Run with no arguments.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "xtalk/circuit.hpp"
#include "xtalk/crosstalk.hpp"
#include "xtalk/device.hpp"
#include "xtalk/noise.hpp"
#include "xtalk/runner.hpp"
#include "xtalk/scheduler.hpp"

using namespace xtalk;
using clock_t_ = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f, int reps) {
    auto t0 = clock_t_::now();
    for (int i = 0; i < reps; ++i) f();
    auto t1 = clock_t_::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP off)\n");
#endif
    std::printf("%-34s %12s %12s %8s\n", "kernel", "serial ms", "parallel ms", "speedup");

    {
        ConnectivityGraph mesh = build_mesh(48, 48);
        CrosstalkGraph a, b;
        double ts = time_ms([&] { a = gen_crosstalk_graph_serial(mesh, 3); }, 3);
        double tp = time_ms([&] { b = gen_crosstalk_graph(mesh, 3); }, 3);
        bool same = a.edges() == b.edges();
        std::printf("%-34s %12.2f %12.2f %7.2fx %s\n", "crosstalk graph 48x48 mesh, d=3", ts, tp,
                    ts / tp, same ? "" : "MISMATCH");
    }
    {
        ConnectivityGraph dense = build_express_cube(BaseTopology::mesh, 24, 2);
        CrosstalkGraph a, b;
        double ts = time_ms([&] { a = gen_crosstalk_graph_serial(dense, 4); }, 3);
        double tp = time_ms([&] { b = gen_crosstalk_graph(dense, 4); }, 3);
        bool same = a.edges() == b.edges();
        std::printf("%-34s %12.2f %12.2f %7.2fx %s\n", "crosstalk graph 24-EX-2 mesh, d=4", ts, tp,
                    ts / tp, same ? "" : "MISMATCH");
    }
    {
        DeviceModel dev = default_mesh_device(15, 15, 1);
        Circuit circ = decompose(route(gen_xeb(225, 64, 1), dev.graph), DecompStrategy::hybrid);
        Schedule sched = compile(Strategy::ColorDynamic, dev, circ);
        NoiseParams params = NoiseParams::from_device(dev, 2);
        Metrics ma, mb;
        double ts = time_ms([&] { ma = evaluate_serial(sched, dev, params); }, 5);
        double tp = time_ms([&] { mb = evaluate(sched, dev, params); }, 5);
        bool same = ma.success == mb.success;
        std::printf("%-34s %12.2f %12.2f %7.2fx %s\n", "noise evaluate xeb:225:64, d=2", ts, tp,
                    ts / tp, same ? "" : "MISMATCH");
    }
    return 0;
}
