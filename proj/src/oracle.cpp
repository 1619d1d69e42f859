#include "monopole_dirac/oracle.hpp"

#include "monopole_dirac/laguerre.hpp"
#include "monopole_dirac/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace mdirac {

namespace {

constexpr int kMinMesh = 8000;
constexpr double kTurningPointFactor = 60.0;
// Base-mesh spacing target: h * eta_ground <= this. Chosen so the fine
// (doubled) mesh sits comfortably below a 1e-4 relative eigenvalue error.
constexpr double kSpacingTarget = 0.01;
constexpr double kTailMassLimit = 1e-6;

SturmLiouvilleProblem size_problem(double exponent, double rho0, int levels) {
    if (levels < 1) throw ValidationError("levels must be >= 1");
    SturmLiouvilleProblem prob;
    prob.exponent = exponent;
    prob.coulomb = rho0;
    if (rho0 > 0.0) {
        const double eta_ground = rho0 / (2.0 * (exponent + 0.5));
        const double top = static_cast<double>(levels - 1) + exponent + 0.5;
        const double turning_point = 4.0 * top * top / rho0;
        prob.rho_max = kTurningPointFactor * turning_point;
        prob.rho_min = 1e-4 / eta_ground;
        prob.mesh_points = std::max(
            kMinMesh, static_cast<int>(std::ceil(prob.rho_max * eta_ground / kSpacingTarget)));
    } else {
        // No attraction: nothing sets a decay scale, so fall back to a wide
        // box. Every eigenvalue is positive there (no bound state).
        prob.rho_max = 1000.0 * (exponent + 1.0);
        prob.rho_min = 1e-4;
        prob.mesh_points = kMinMesh;
    }
    return prob;
}

} // namespace

SturmLiouvilleProblem build_problem(const PhysicalParameters& p, const QuantumState& q,
                                    int levels) {
    const DerivedQuantities dq = derive_quantities(p, q);
    return size_problem(dq.m_s, dq.rho0, levels);
}

SturmLiouvilleProblem build_nonrel_problem(const PhysicalParameters& p, int m, int levels) {
    p.validate();
    const double l = static_cast<double>(m) - p.d * p.lambda_m / p.hbar;
    const double abs_l = std::abs(l);
    if (abs_l <= 0.0) {
        throw DegenerateChannel("weak-coupling channel with |l| = 0 has an over-attractive "
                                "centrifugal term at the origin");
    }
    const double rho0 = 2.0 * p.m0 * p.c * p.c * p.kappa / (p.hbar * p.hbar);
    return size_problem(abs_l, rho0, levels);
}

namespace {

SymTridiag assemble(const SturmLiouvilleProblem& prob, int mesh_points, double rho_min,
                    Exec exec) {
    const std::size_t n = static_cast<std::size_t>(mesh_points);
    const double h = (prob.rho_max - rho_min) / static_cast<double>(mesh_points + 1);
    const double inv_h2 = 1.0 / (h * h);
    const double cm = prob.exponent * prob.exponent - 0.25;
    SymTridiag t;
    t.diag.resize(n);
    t.off.assign(n - 1, -inv_h2);
    parallel_for(exec, n, [&](std::size_t i) {
        const double rho = rho_min + static_cast<double>(i + 1) * h;
        t.diag[i] = 2.0 * inv_h2 + cm / (rho * rho) - prob.coulomb / rho;
    });
    return t;
}

} // namespace

std::vector<double> eigenvalues_on_mesh(const SturmLiouvilleProblem& prob, int k,
                                        int mesh_points, double rho_min, Exec exec) {
    if (mesh_points < k + 2) throw ValidationError("mesh too small for requested levels");
    if (!(rho_min > 0.0) || !(prob.rho_max > rho_min)) {
        throw ValidationError("need 0 < rho_min < rho_max");
    }
    const SymTridiag t = assemble(prob, mesh_points, rho_min, exec);
    return lowest_eigenvalues(t, k, exec);
}

namespace {

int count_sign_changes(const std::vector<double>& u) {
    double peak = 0.0;
    for (double x : u) peak = std::max(peak, std::abs(x));
    const double floor = 1e-8 * peak;
    int changes = 0;
    double prev = 0.0;
    for (double x : u) {
        if (std::abs(x) <= floor) continue;
        if (prev != 0.0 && x * prev < 0.0) ++changes;
        prev = x;
    }
    return changes;
}

double tail_mass_fraction(const std::vector<double>& u) {
    // Mesh is uniform, so vector indices measure position directly.
    const std::size_t n = u.size();
    const std::size_t tail_start = n - std::max<std::size_t>(1, n / 100);
    double total = 0.0;
    double tail = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = u[i] * u[i];
        total += w;
        if (i >= tail_start) tail += w;
    }
    return total > 0.0 ? tail / total : 0.0;
}

} // namespace

std::vector<OracleLevel> solve_lowest(const SturmLiouvilleProblem& prob, int k,
                                      const OracleOptions& options) {
    if (k < 1) throw ValidationError("solve_lowest: k must be >= 1");
    const std::vector<double> coarse =
        eigenvalues_on_mesh(prob, k, prob.mesh_points, prob.rho_min, options.exec);
    const std::vector<double> fine =
        eigenvalues_on_mesh(prob, k, 2 * prob.mesh_points + 1, prob.rho_min, options.exec);
    std::vector<double> shifted;
    if (options.check_rho_min) {
        shifted = eigenvalues_on_mesh(prob, k, prob.mesh_points, 0.5 * prob.rho_min,
                                      options.exec);
    }

    const SymTridiag t_fine = assemble(prob, 2 * prob.mesh_points + 1, prob.rho_min,
                                       options.exec);

    std::vector<OracleLevel> out(static_cast<std::size_t>(k));
    parallel_for(options.exec, out.size(), [&](std::size_t j) {
        OracleLevel lv;
        lv.level = static_cast<int>(j);
        lv.lambda = fine[j];
        lv.error_estimate = std::abs(fine[j] - coarse[j]) / 3.0;
        if (options.check_rho_min) {
            lv.error_estimate += std::abs(coarse[j] - shifted[j]);
        }
        lv.sign_changes = count_sign_changes(eigenvector(t_fine, fine[j]));
        out[j] = lv;
    });

    if (options.check_domain) {
        const std::vector<double> ground = eigenvector(t_fine, fine[0]);
        const double tail = tail_mass_fraction(ground);
        if (tail > kTailMassLimit) {
            throw DomainTooSmall("ground-state mass fraction " + std::to_string(tail) +
                                 " within 1% of rho_max exceeds " +
                                 std::to_string(kTailMassLimit));
        }
    }

    for (const OracleLevel& lv : out) {
        const double scale = std::max(std::abs(lv.lambda), 1e-300);
        if (lv.error_estimate / scale > options.rel_tolerance) {
            throw MeshTooCoarse("level " + std::to_string(lv.level) +
                                ": estimated relative error " +
                                std::to_string(lv.error_estimate / scale) + " exceeds " +
                                std::to_string(options.rel_tolerance) + " at mesh " +
                                std::to_string(prob.mesh_points));
        }
    }
    return out;
}

double radial_ode_residual(double exponent, double coulomb, double eta, int n, double rho) {
    if (!(rho > 0.0)) throw ValidationError("residual needs rho > 0");
    const double m = exponent;
    const double z = 2.0 * eta * rho;
    const double alpha = 2.0 * m;
    const double p0 = laguerre(n, alpha, z);
    const double p1 = laguerre(n - 1, alpha + 1.0, z);
    const double p2 = laguerre(n - 2, alpha + 2.0, z);
    const double a = m / rho - eta;

    // R = w P0 with w = rho^m e^{-eta rho}; all terms below carry 1/w.
    const double d2 = (a * a - m / (rho * rho)) * p0 - 4.0 * eta * a * p1 + 4.0 * eta * eta * p2;
    const double d1 = (a * p0 - 2.0 * eta * p1) / rho;
    const double t_cent = -(m * m) / (rho * rho) * p0;
    const double t_coul = coulomb / rho * p0;
    const double t_eig = -eta * eta * p0;

    const double res = d2 + d1 + t_cent + t_coul + t_eig;
    const double scale = std::max({std::abs(d2), std::abs(d1), std::abs(t_cent),
                                   std::abs(t_coul), std::abs(t_eig)});
    return scale > 0.0 ? std::abs(res) / scale : 0.0;
}

double residual_scan(const PhysicalParameters& p, const QuantumState& q,
                     const SpectrumResult& spectrum, int samples, Exec exec) {
    if (samples < 2) throw ValidationError("residual_scan: samples must be >= 2");
    if (!(spectrum.eta > 0.0)) {
        throw ContinuumEdge("residual scan needs a bound state with eta > 0");
    }
    const double eta = spectrum.eta;
    const DerivedQuantities channel = derive_quantities(p, q);
    const double m_s = channel.m_s;
    const double rho0 = channel.rho0;
    const double lo = 1e-3 / eta;
    const double hi = 40.0 / eta;
    const double mid = 0.5 * (hi + lo);
    const double half = 0.5 * (hi - lo);

    std::vector<double> vals(static_cast<std::size_t>(samples));
    parallel_for(exec, vals.size(), [&](std::size_t i) {
        const double angle = std::numbers::pi * static_cast<double>(i) /
                             static_cast<double>(samples - 1);
        const double rho = mid + half * std::cos(angle);
        vals[i] = radial_ode_residual(m_s, rho0, eta, q.n, rho);
    });
    double worst = 0.0;
    for (double v : vals) worst = std::max(worst, v);
    return worst;
}

std::vector<ChannelComparison> verify_channel(const PhysicalParameters& p,
                                              const QuantumState& q, int levels,
                                              const OracleOptions& options) {
    return verify_channel(p, q, build_problem(p, q, levels), levels, options);
}

std::vector<ChannelComparison> verify_channel(const PhysicalParameters& p,
                                              const QuantumState& q,
                                              const SturmLiouvilleProblem& problem,
                                              int levels, const OracleOptions& options) {
    const std::vector<OracleLevel> numeric = solve_lowest(problem, levels, options);

    std::vector<ChannelComparison> out;
    out.reserve(numeric.size());
    for (const OracleLevel& lv : numeric) {
        QuantumState qn = q;
        qn.n = lv.level;
        const SpectrumResult sr = relativistic_energy(p, qn);
        const double analytic = -(sr.eta * sr.eta);
        ChannelComparison cmp;
        cmp.level = lv.level;
        cmp.analytic_lambda = analytic;
        cmp.oracle_lambda = lv.lambda;
        cmp.rel_disagreement = std::abs(lv.lambda - analytic) / std::abs(analytic);
        cmp.error_estimate = lv.error_estimate;
        cmp.sign_changes = lv.sign_changes;
        out.push_back(cmp);
    }
    return out;
}

} // namespace mdirac
