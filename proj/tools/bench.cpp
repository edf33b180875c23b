// Benchmark: OpenMP kernels against their serial reference implementations.
// Covers the per-edge girth BFS loop and the Monte Carlo trial loop, checking
// that both paths agree before reporting timings.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "arg/channel.hpp"
#include "arg/construct.hpp"
#include "arg/gf2.hpp"
#include "arg/graph.hpp"

using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int main(int argc, char** argv) {
    int n = 1024;
    long trials = 512;
    if (argc > 1) n = std::atoi(argv[1]);
    if (argc > 2) trials = std::atol(argv[2]);

#ifdef _OPENMP
    std::printf("threads %d\n", omp_get_max_threads());
#else
    std::printf("threads 1 (OpenMP disabled)\n");
#endif

    const arg::ConstructionParams params = arg::validate_params(n, n / 2, 1, 2, 3);
    auto t0 = Clock::now();
    const arg::ConstructResult result =
        arg::construct(params, arg::TieBreakPolicy::deterministic());
    std::printf("construct n=%d: %.3fs\n", n, seconds_since(t0));
    if (result.stalled()) {
        std::printf("construction stalled, benchmark aborted\n");
        return 1;
    }

    t0 = Clock::now();
    const arg::CycleLength g_serial = arg::girth_serial(result.graph);
    const double girth_serial_s = seconds_since(t0);
    t0 = Clock::now();
    const arg::CycleLength g_parallel = arg::girth(result.graph);
    const double girth_parallel_s = seconds_since(t0);
    if (!(g_serial == g_parallel)) {
        std::printf("girth mismatch: serial %d parallel %d\n", g_serial.value, g_parallel.value);
        return 1;
    }
    std::printf("girth=%d serial %.3fs  parallel %.3fs  speedup %.2fx\n", g_serial.value,
                girth_serial_s, girth_parallel_s, girth_serial_s / girth_parallel_s);

    const arg::SparseMatrixGF2 h = arg::parity_matrix(result.graph);
    arg::ChannelConfig cfg;
    cfg.ebno_db_grid = {2.0};
    cfg.rate_for_normalization = 0.5;
    cfg.seed = 7;
    const arg::StoppingRule rule{0, trials};  // fixed workload
    const arg::DecoderConfig dcfg;

    t0 = Clock::now();
    const arg::BerCurve serial = arg::run_monte_carlo_serial(h, nullptr, cfg, rule, dcfg);
    const double mc_serial_s = seconds_since(t0);
    t0 = Clock::now();
    const arg::BerCurve parallel = arg::run_monte_carlo(h, nullptr, cfg, rule, dcfg);
    const double mc_parallel_s = seconds_since(t0);
    if (serial.points[0].bit_errors != parallel.points[0].bit_errors ||
        serial.points[0].word_errors != parallel.points[0].word_errors) {
        std::printf("monte carlo mismatch between serial and parallel counts\n");
        return 1;
    }
    std::printf("monte-carlo %ld trials at 2 dB: serial %.3fs  parallel %.3fs  speedup %.2fx\n",
                trials, mc_serial_s, mc_parallel_s, mc_serial_s / mc_parallel_s);
    return 0;
}
