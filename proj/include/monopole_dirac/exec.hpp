#pragma once

#include <cstddef>

namespace mdirac {

/// Execution policy for the batch kernels (sweeps, eigensolves, scans).
/// Exec::openmp falls back to the serial path when the library was built
/// without OpenMP. Results are bit-identical between the two policies:
/// every parallel loop writes to a private slot and reductions are folded
/// serially in index order afterwards.
enum class Exec { serial, openmp };

/// Number of threads the openmp policy will use, honouring the
/// MONOPOLE_DIRAC_THREADS environment variable (values < 1 are ignored).
int max_threads();

/// Apply MONOPOLE_DIRAC_THREADS as a hard cap on the OpenMP runtime.
/// Called once by the CLI; safe to call repeatedly.
void apply_thread_cap_from_env();

namespace detail {
void parallel_for_impl(std::size_t n, void* ctx, void (*body)(void*, std::size_t));
} // namespace detail

/// Run body(i) for i in [0, n). With Exec::openmp iterations are distributed
/// statically over threads; the caller guarantees iterations touch disjoint
/// data.
template <class F>
void parallel_for(Exec exec, std::size_t n, F&& body) {
    if (exec == Exec::serial) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    auto trampoline = [](void* ctx, std::size_t i) { (*static_cast<F*>(ctx))(i); };
    detail::parallel_for_impl(n, &body, trampoline);
}

} // namespace mdirac
