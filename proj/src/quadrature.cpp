#include "monopole_dirac/quadrature.hpp"

#include "monopole_dirac/laguerre.hpp"
#include "monopole_dirac/tridiag.hpp"

#include <cmath>
#include <string>

namespace mdirac {

GaussLaguerreRule gauss_laguerre(double alpha, int node_count) {
    if (!(alpha > -1.0)) {
        throw ValidationError("gauss_laguerre: alpha must be > -1");
    }
    if (node_count < 1) {
        throw ValidationError("gauss_laguerre: node_count must be >= 1");
    }
    const std::size_t n = static_cast<std::size_t>(node_count);

    // Jacobi matrix of the recurrence: diag 2k+alpha+1, off sqrt(k(k+alpha)).
    SymTridiag jacobi;
    jacobi.diag.resize(n);
    jacobi.off.resize(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        jacobi.diag[k] = 2.0 * static_cast<double>(k) + alpha + 1.0;
    }
    for (std::size_t k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        jacobi.off[k - 1] = std::sqrt(kk * (kk + alpha));
    }

    GaussLaguerreRule rule;
    rule.alpha = alpha;
    rule.nodes = lowest_eigenvalues(jacobi, node_count, Exec::serial);

    // One Newton correction per node; bisection already gives ~1e-13
    // relative so a single step lands at roundoff. Beyond x of roughly 1400
    // the polynomial value overflows double range, so the polish is skipped
    // there rather than dividing inf by inf.
    for (double& x : rule.nodes) {
        const double p = laguerre(node_count, alpha, x);
        const double dp = laguerre_derivative(node_count, alpha, x);
        if (std::isfinite(p) && std::isfinite(dp) && dp != 0.0) x -= p / dp;
    }

    // w_i = Gamma(n + alpha + 1) x_i / (n! (n+1)^2 [L_{n+1}^alpha(x_i)]^2).
    const double log_ratio = std::lgamma(static_cast<double>(node_count) + alpha + 1.0) -
                             std::lgamma(static_cast<double>(node_count) + 1.0);
    const double np1 = static_cast<double>(node_count) + 1.0;
    rule.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lnp1 = laguerre(node_count + 1, alpha, rule.nodes[i]);
        const double w = std::exp(log_ratio) * rule.nodes[i] / (np1 * np1 * lnp1 * lnp1);
        // The exact weight decays like e^{-x}; wherever the polynomial value
        // overflows, the weight is far below the denormal range and 0 is the
        // correctly rounded result.
        rule.weights[i] = std::isfinite(w) ? w : 0.0;
    }
    return rule;
}

double integrate_checked(double alpha, const std::function<double(double)>& f,
                         int node_count, double rel_tol) {
    const double coarse = integrate(gauss_laguerre(alpha, node_count), f);
    const GaussLaguerreRule fine_rule = gauss_laguerre(alpha, 2 * node_count);
    double fine = 0.0;
    double magnitude = 0.0;
    for (std::size_t i = 0; i < fine_rule.nodes.size(); ++i) {
        const double term = fine_rule.weights[i] * f(fine_rule.nodes[i]);
        fine += term;
        magnitude += std::abs(term);
    }
    // Cancellation-heavy sums (orthogonality off-diagonals) are judged against
    // the magnitude actually summed, not against the near-zero result.
    const double scale = std::max(1.0, magnitude);
    if (std::abs(fine - coarse) > rel_tol * scale) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.3g", std::abs(fine - coarse) / scale);
        throw QuadratureUnderresolved("quadrature with " + std::to_string(node_count) +
                                      " nodes moved by " + buf + " (relative) when doubled");
    }
    return fine;
}

double weighted_inner_product(int n1, int n2, double alpha, int node_count) {
    if (n1 < 0 || n2 < 0) {
        throw ValidationError("weighted_inner_product: polynomial degrees must be >= 0");
    }
    auto f = [&](double x) { return laguerre(n1, alpha, x) * laguerre(n2, alpha, x); };
    return integrate_checked(alpha, f, node_count);
}

} // namespace mdirac
