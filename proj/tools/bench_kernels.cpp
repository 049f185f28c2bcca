// Times the quadrature kernels with the worker pool on and off and checks
// that both paths produce bit-for-bit identical values.  The parallel path
// evaluates the same nodes in the same order and reduces serially, so any
// difference at all is a bug, not roundoff.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "hp/efiber.hpp"
#include "hp/parallel.hpp"
#include "hp/periodmap.hpp"
#include "hp/quad.hpp"
#include "hp/types.hpp"
#include "hp/walls.hpp"

namespace {

using namespace hp;
using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct BenchResult {
    double serial_s = 0.0;
    double parallel_s = 0.0;
    bool identical = false;
};

// Runs `work` with 1 thread and with `threads`, comparing the returned
// byte blobs for exact equality.
BenchResult bench(const std::function<std::vector<double>()>& work,
                  int threads, int reps) {
    BenchResult r;
    std::vector<double> a, b;
    par::set_threads(1);
    (void)work(); // warm up
    auto t0 = clock_type::now();
    for (int k = 0; k < reps; ++k) a = work();
    r.serial_s = seconds_since(t0) / reps;
    par::set_threads(threads);
    (void)work();
    t0 = clock_type::now();
    for (int k = 0; k < reps; ++k) b = work();
    r.parallel_s = seconds_since(t0) / reps;
    par::set_threads(0);
    r.identical = a.size() == b.size() &&
                  std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
    return r;
}

void report(const char* name, const BenchResult& r) {
    std::printf("%-28s %9.4fs serial, %9.4fs parallel, speedup %5.2fx, %s\n",
                name, r.serial_s, r.parallel_s, r.serial_s / r.parallel_s,
                r.identical ? "bitwise identical" : "RESULTS DIFFER");
}

void push(std::vector<double>& out, const cplx& v) {
    out.push_back(v.real());
    out.push_back(v.imag());
}

} // namespace

int main(int argc, char** argv) {
    int threads = 0;
    int reps = 3;
    for (int k = 1; k < argc; ++k) {
        const std::string arg = argv[k];
        if (arg == "--threads" && k + 1 < argc) threads = std::atoi(argv[++k]);
        else if (arg == "--reps" && k + 1 < argc) reps = std::atoi(argv[++k]);
        else {
            std::fprintf(stderr, "usage: %s [--threads N] [--reps N]\n", argv[0]);
            return 4;
        }
    }
    if (threads <= 0) {
        par::set_threads(0);
        threads = par::threads() > 1 ? par::threads() : 4;
    }
    if (!par::openmp_enabled() && threads > 1) {
        std::printf("note: built without the worker pool; the \"parallel\" "
                    "column runs serially\n");
    } else if (std::thread::hardware_concurrency() <= 1) {
        std::printf("note: single hardware thread; the \"parallel\" column "
                    "measures scheduling overhead, not speedup\n");
    }
    std::printf("comparing 1 thread vs %d threads, %d repetitions\n\n",
                threads, reps);

    const ModuliPoint m{0.5, 0.5};
    const walls::WallSet ws = walls::walls(m);
    bool all_identical = true;

    {
        // inner u-integrals of 1/|F| across a sweep of fibers in one gap
        const BenchResult r = bench(
            [&] {
                std::vector<double> out;
                const double lo = ws.s[1], hi = ws.s[2];
                for (int k = 0; k < 48; ++k) {
                    const double y = lo + (hi - lo) * (k + 0.5) / 48.0;
                    const walls::Ordering ord = walls::ordering_at(y, ws, m);
                    const efiber::GapMagnitudes g = efiber::gap_magnitudes_de(ord);
                    out.push_back(g.j12);
                    out.push_back(g.j23);
                }
                return out;
            },
            threads, reps);
        report("fiber gap integrals", r);
        all_identical = all_identical && r.identical;
    }
    {
        const BenchResult r = bench(
            [&] {
                std::vector<double> out;
                const periodmap::PeriodVector pv =
                    periodmap::periods_fiberwise(m, ws);
                for (const cplx& v : pv.xi) push(out, v);
                return out;
            },
            threads, reps);
        report("fiberwise period vector", r);
        all_identical = all_identical && r.identical;
    }
    {
        const BenchResult r = bench(
            [&] {
                std::vector<double> out;
                const periodmap::PeriodVector pv =
                    periodmap::periods_chambers(m, ws);
                for (const cplx& v : pv.xi) push(out, v);
                return out;
            },
            threads, reps);
        report("chamber double integrals", r);
        all_identical = all_identical && r.identical;
    }

    if (!all_identical) {
        std::printf("\nFAIL: parallel and serial results differ\n");
        return 1;
    }
    std::printf("\nall kernels bitwise identical across thread counts\n");
    return 0;
}
