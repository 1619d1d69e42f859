#pragma once

#include "monopole_dirac/errors.hpp"

#include <functional>
#include <vector>

namespace mdirac {

/// Nodes and weights for the generalized Gauss-Laguerre rule: sum w_i f(x_i)
/// integrates f against the weight x^alpha e^{-x} on [0, inf), exactly for
/// polynomial f up to degree 2 * node_count - 1.
struct GaussLaguerreRule {
    double alpha;
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Build the rule. Nodes come from the Jacobi matrix of the recurrence
/// (Golub-Welsch), polished by one Newton step; weights from the classical
/// closed form involving L_{node_count+1}^alpha at each node.
GaussLaguerreRule gauss_laguerre(double alpha, int node_count);

/// Fixed-rule evaluation; summation runs in node order so the result is
/// independent of execution policy elsewhere.
template <class F>
double integrate(const GaussLaguerreRule& rule, F&& f) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        acc += rule.weights[i] * f(rule.nodes[i]);
    }
    return acc;
}

/// Evaluate with node_count and 2 * node_count points and compare; throws
/// QuadratureUnderresolved when the two disagree beyond rel_tol. Returns
/// the finer result.
double integrate_checked(double alpha, const std::function<double(double)>& f,
                         int node_count, double rel_tol = 1e-10);

/// Orthogonality integral of two generalized Laguerre polynomials of the
/// same order: int_0^inf x^alpha e^{-x} L_{n1}^alpha L_{n2}^alpha dx.
/// Zero for n1 != n2, Gamma(n + alpha + 1) / n! on the diagonal. Uses the
/// doubling convergence check above.
double weighted_inner_product(int n1, int n2, double alpha, int node_count);

} // namespace mdirac
