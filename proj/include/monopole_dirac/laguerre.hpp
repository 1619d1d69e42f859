#pragma once

namespace mdirac {

/// Generalized Laguerre polynomial L_n^alpha(x) for real alpha > -1 and
/// x >= 0, evaluated with the ascending three-term recurrence
///   k L_k = (2k - 1 + alpha - x) L_{k-1} - (k - 1 + alpha) L_{k-2}.
/// n < 0 returns 0 by convention; the derivative identities below rely on
/// that sentinel at n = 0 and n = 1.
double laguerre(int n, double alpha, double x);

/// d/dx L_n^alpha(x) = -L_{n-1}^{alpha+1}(x).
double laguerre_derivative(int n, double alpha, double x);

/// d^2/dx^2 L_n^alpha(x) = +L_{n-2}^{alpha+2}(x), the derivative identity
/// applied twice.
double laguerre_second_derivative(int n, double alpha, double x);

} // namespace mdirac
