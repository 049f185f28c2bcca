#include "hp/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#ifdef HP_HAVE_OPENMP
#include <omp.h>
#endif

namespace hp::par {

namespace {

std::atomic<int> g_threads{0}; // 0 = not set explicitly

int env_threads() {
    if (const char* e = std::getenv("HILBERT_PERIOD_THREADS")) {
        try {
            const int n = std::stoi(e);
            if (n > 0) return n;
        } catch (...) {
        }
    }
    return 0;
}

} // namespace

void set_threads(int n) { g_threads.store(n > 0 ? n : 0); }

int threads() {
    if (const int n = g_threads.load(); n > 0) return n;
    if (const int n = env_threads(); n > 0) return n;
#ifdef HP_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

bool openmp_enabled() {
#ifdef HP_HAVE_OPENMP
    return true;
#else
    return false;
#endif
}

void serial_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    for (std::size_t i = 0; i < n; ++i) body(i);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
#ifdef HP_HAVE_OPENMP
    const int nt = threads();
    if (nt > 1 && n > 1) {
        const long long m = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
        for (long long i = 0; i < m; ++i) body(static_cast<std::size_t>(i));
        return;
    }
#endif
    serial_for(n, body);
}

} // namespace hp::par
