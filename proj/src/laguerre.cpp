#include "monopole_dirac/laguerre.hpp"

#include "monopole_dirac/errors.hpp"

#include <cmath>
#include <string>

namespace mdirac {

namespace {

void check_domain(double alpha, double x) {
    if (!(alpha > -1.0)) {
        throw ValidationError("laguerre: alpha must be > -1, got " + std::to_string(alpha));
    }
    if (!(x >= 0.0)) {
        throw ValidationError("laguerre: x must be >= 0, got " + std::to_string(x));
    }
}

} // namespace

double laguerre(int n, double alpha, double x) {
    check_domain(alpha, x);
    if (n < 0) return 0.0;
    double pm1 = 1.0; // L_0
    if (n == 0) return pm1;
    double p = 1.0 + alpha - x; // L_1
    for (int k = 2; k <= n; ++k) {
        const double next = ((2.0 * k - 1.0 + alpha - x) * p - (k - 1.0 + alpha) * pm1) / k;
        pm1 = p;
        p = next;
    }
    return p;
}

double laguerre_derivative(int n, double alpha, double x) {
    check_domain(alpha, x);
    return -laguerre(n - 1, alpha + 1.0, x);
}

double laguerre_second_derivative(int n, double alpha, double x) {
    check_domain(alpha, x);
    return laguerre(n - 2, alpha + 2.0, x);
}

} // namespace mdirac
