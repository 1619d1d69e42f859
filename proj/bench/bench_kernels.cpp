// Serial vs OpenMP timings for the batch kernels. Wall-clock only; run on an
// otherwise idle machine. On a single-core host the speedup column is
// honestly ~1.0.
#include "monopole_dirac/exec.hpp"
#include "monopole_dirac/model.hpp"
#include "monopole_dirac/oracle.hpp"
#include "monopole_dirac/spectrum.hpp"
#include "monopole_dirac/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace mdirac;

namespace {

double best_of_three_ms(const std::function<void()>& work) {
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        work();
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        if (ms < best) best = ms;
    }
    return best;
}

void row(const char* name, const std::function<void(Exec)>& work) {
    const double serial = best_of_three_ms([&] { work(Exec::serial); });
    const double openmp = best_of_three_ms([&] { work(Exec::openmp); });
    std::printf("%-34s %10.1f %10.1f %9.2fx\n", name, serial, openmp, serial / openmp);
}

} // namespace

int main() {
    apply_thread_cap_from_env();
    std::printf("threads: %d\n\n", max_threads());
    std::printf("%-34s %10s %10s %10s\n", "kernel", "serial/ms", "openmp/ms", "speedup");

    const auto p = PhysicalParameters::natural_units(-1.0, 1.0, 2.0);
    QuantumState q;
    q.mj_numerator = 1;
    q.s = -1;

    auto problem = build_problem(p, q, 3);
    problem.mesh_points = 40000;
    row("eigenvalues, 40k mesh, 3 levels", [&](Exec exec) {
        eigenvalues_on_mesh(problem, 3, problem.mesh_points, problem.rho_min, exec);
    });

    const auto spectrum = relativistic_energy(p, q);
    row("residual scan, 200k samples",
        [&](Exec exec) { residual_scan(p, q, spectrum, 200001, exec); });

    auto spec = figure_defaults(1);
    spec.steps = 20000;
    row("relativistic sweep, 60k points", [&](Exec exec) { run_sweep(spec, exec); });

    auto nspec = figure_defaults(3);
    nspec.steps = 20000;
    row("weak-coupling sweep, 60k points", [&](Exec exec) { run_sweep(nspec, exec); });

    return 0;
}
