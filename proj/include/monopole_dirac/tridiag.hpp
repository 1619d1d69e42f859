#pragma once

#include "monopole_dirac/exec.hpp"

#include <utility>
#include <vector>

namespace mdirac {

/// Symmetric tridiagonal matrix: diag has n entries, off has n - 1.
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> off;

    std::size_t size() const { return diag.size(); }
};

/// Number of eigenvalues strictly below x, from the Sturm sequence of the
/// shifted LDL^T factorization. Pivots are clamped away from zero the way
/// LAPACK's bisection does, so the count is well defined even when x hits
/// an eigenvalue of a leading submatrix.
int count_below(const SymTridiag& t, double x);

/// Interval certain to contain the whole spectrum (Gershgorin discs).
std::pair<double, double> spectrum_bounds(const SymTridiag& t);

/// k-th smallest eigenvalue (k is 0-based), located by bisection on
/// count_below. Deterministic: fixed iteration cap, tolerance relative to
/// the Gershgorin scale.
double eigenvalue_k(const SymTridiag& t, int k);

/// The k smallest eigenvalues, ascending. The per-level bisections are
/// independent and run under the requested execution policy; results do
/// not depend on the policy.
std::vector<double> lowest_eigenvalues(const SymTridiag& t, int k, Exec exec = Exec::openmp);

/// Eigenvector for an isolated eigenvalue, by inverse iteration with a
/// slightly perturbed shift. Normalized to unit 2-norm with a
/// sign-convention: the entry of largest magnitude is positive.
std::vector<double> eigenvector(const SymTridiag& t, double lambda);

} // namespace mdirac
