#pragma once

#include "monopole_dirac/exec.hpp"
#include "monopole_dirac/model.hpp"
#include "monopole_dirac/spectrum.hpp"

#include <vector>

namespace mdirac {

/// Radial eigenproblem in Liouville normal form, u = sqrt(rho) R:
///   -u'' + [ (exponent^2 - 1/4) / rho^2 - coulomb / rho ] u = Lambda u,
/// Dirichlet at rho_min > 0 and rho_max. Lambda = -eta^2 for the
/// relativistic channel and 2 m0 epsilon / hbar^2 for the weak-coupling one.
struct SturmLiouvilleProblem {
    double exponent;  ///< m_s, or |l| for the weak-coupling channel
    double coulomb;   ///< rho0 = 2 m0 c^2 kappa / hbar^2
    double rho_min;
    double rho_max;
    int mesh_points;  ///< interior points of the base mesh
};

/// Channel for a relativistic state. The domain covers 60x the outer
/// classical turning point of the highest requested level and the mesh is
/// sized so the base-mesh spacing resolves the ground-state decay length
/// (never below 8000 points). levels is the number of eigenvalues the
/// caller intends to converge.
SturmLiouvilleProblem build_problem(const PhysicalParameters& p, const QuantumState& q,
                                    int levels = 3);

/// Channel for a weak-coupling state with angular integer m.
SturmLiouvilleProblem build_nonrel_problem(const PhysicalParameters& p, int m,
                                           int levels = 3);

struct OracleLevel {
    int level;             ///< 0-based radial index
    double lambda;         ///< eigenvalue on the doubled (fine) mesh
    double error_estimate; ///< Richardson |fine - coarse| / 3 plus the rho_min shift
    int sign_changes;      ///< interior sign changes of the fine-mesh eigenvector
};

struct OracleOptions {
    double rel_tolerance = 1e-4; ///< MeshTooCoarse beyond this relative estimate
    bool check_domain = true;    ///< DomainTooSmall when tail mass > 1e-6
    bool check_rho_min = true;   ///< include a rho_min/2 solve in the estimate
    Exec exec = Exec::openmp;
};

/// The k lowest eigenvalues with error control. Solves the base mesh, the
/// doubled mesh, and (optionally) the base mesh with rho_min halved; throws
/// MeshTooCoarse / DomainTooSmall per the options. Deterministic for a
/// fixed problem, independent of the execution policy.
std::vector<OracleLevel> solve_lowest(const SturmLiouvilleProblem& problem, int k,
                                      const OracleOptions& options = {});

/// Single-mesh eigenvalues without checks: the building block of
/// solve_lowest and the hook for convergence studies.
std::vector<double> eigenvalues_on_mesh(const SturmLiouvilleProblem& problem, int k,
                                        int mesh_points, double rho_min,
                                        Exec exec = Exec::openmp);

/// Relative defect of the closed-form radial solution in the second-order
/// radial equation at one point, with the common factor rho^{m} e^{-eta rho}
/// cancelled so the ratio is meaningful at any rho > 0.
double radial_ode_residual(double exponent, double coulomb, double eta, int n, double rho);

/// Max relative defect over Chebyshev-spaced samples of
/// [1e-3 / eta, 40 / eta]. The closed form satisfies the equation
/// identically, so anything above rounding noise flags an inconsistency.
double residual_scan(const PhysicalParameters& p, const QuantumState& q,
                     const SpectrumResult& spectrum, int samples,
                     Exec exec = Exec::openmp);

/// One closed-form level vs the eigensolver, as used by the verification
/// command and the acceptance checks.
struct ChannelComparison {
    int level;
    double analytic_lambda; ///< -eta^2 from the closed form
    double oracle_lambda;
    double rel_disagreement;
    double error_estimate;
    int sign_changes;
};

std::vector<ChannelComparison> verify_channel(const PhysicalParameters& p,
                                              const QuantumState& q, int levels,
                                              const OracleOptions& options = {});

/// Same comparison against a caller-built problem, e.g. with an overridden
/// mesh or domain.
std::vector<ChannelComparison> verify_channel(const PhysicalParameters& p,
                                              const QuantumState& q,
                                              const SturmLiouvilleProblem& problem,
                                              int levels, const OracleOptions& options = {});

} // namespace mdirac
