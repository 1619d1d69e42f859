#include "monopole_dirac/exec.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mdirac {

namespace {

int env_thread_cap() {
    const char* raw = std::getenv("MONOPOLE_DIRAC_THREADS");
    if (!raw) return 0;
    try {
        int v = std::stoi(raw);
        return v >= 1 ? v : 0;
    } catch (...) {
        return 0;
    }
}

} // namespace

int max_threads() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    int cap = env_thread_cap();
    if (cap >= 1 && cap < n) n = cap;
    return n;
}

void apply_thread_cap_from_env() {
#ifdef _OPENMP
    int cap = env_thread_cap();
    if (cap >= 1) omp_set_num_threads(cap);
#endif
}

namespace detail {

void parallel_for_impl(std::size_t n, void* ctx, void (*body)(void*, std::size_t)) {
#ifdef _OPENMP
    const int nt = max_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        body(ctx, static_cast<std::size_t>(i));
    }
#else
    for (std::size_t i = 0; i < n; ++i) body(ctx, i);
#endif
}

} // namespace detail

} // namespace mdirac
