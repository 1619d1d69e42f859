#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "monopole_dirac/errors.hpp"
#include "monopole_dirac/laguerre.hpp"
#include "monopole_dirac/quadrature.hpp"

#include <cmath>

using namespace mdirac;

namespace {

// Explicit low-degree forms, kept independent of the recurrence.
double l1(double alpha, double x) { return 1.0 + alpha - x; }
double l2(double alpha, double x) {
    return 0.5 * (alpha + 1.0) * (alpha + 2.0) - (alpha + 2.0) * x + 0.5 * x * x;
}

} // namespace

TEST_CASE("low-degree values against explicit coefficients") {
    CHECK(laguerre(0, 3.2, 7.0) == 1.0);
    CHECK(laguerre(1, 2.0, 1.0) == 2.0);
    CHECK(laguerre(2, 1.0, 2.0) == -1.0);
    CHECK(laguerre(-1, 4.0, 2.0) == 0.0);

    for (double alpha : {0.5, 2.0, 6.0, 13.5}) {
        for (double x : {0.0, 0.7, 1.25, 10.0, 42.0}) {
            CHECK(laguerre(1, alpha, x) == doctest::Approx(l1(alpha, x)).epsilon(1e-15));
            CHECK(laguerre(2, alpha, x) == doctest::Approx(l2(alpha, x)).epsilon(1e-14));
        }
    }
}

TEST_CASE("frozen reference values") {
    CHECK(laguerre(3, 6.0, 0.7) == doctest::Approx(60.947833333333335).epsilon(1e-15));
    CHECK(laguerre(2, 3.5, 1.25) == doctest::Approx(6.28125).epsilon(1e-15));
    CHECK(laguerre_derivative(3, 6.0, 0.7) == doctest::Approx(-29.945).epsilon(1e-15));
}

TEST_CASE("domain checks") {
    CHECK_THROWS_AS(laguerre(2, -1.0, 1.0), ValidationError);
    CHECK_THROWS_AS(laguerre(2, 1.0, -0.1), ValidationError);
}

TEST_CASE("derivative identities") {
    CHECK(laguerre_derivative(0, 5.0, 3.0) == 0.0);
    CHECK(laguerre_derivative(1, 2.0, 5.0) == -1.0);

    // n = 3 against a centered finite difference
    const double alpha = 4.6;
    const double x = 0.7;
    const double h = 1e-6;
    const double fd = (laguerre(3, alpha, x + h) - laguerre(3, alpha, x - h)) / (2.0 * h);
    CHECK(laguerre_derivative(3, alpha, x) == doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("ode residual stays at rounding level across the tested range") {
    for (int n : {0, 1, 2, 5, 12, 25}) {
        for (double alpha : {0.25, 1.0, 6.0, 20.0}) {
            for (double x : {0.0, 0.5, 3.0, 17.0, 60.0}) {
                const double y = laguerre(n, alpha, x);
                const double dy = laguerre_derivative(n, alpha, x);
                const double d2y = laguerre_second_derivative(n, alpha, x);
                const double residual = x * d2y + (alpha + 1.0 - x) * dy + n * y;
                const double scale = std::max({1.0, std::abs(x * d2y),
                                               std::abs((alpha + 1.0 - x) * dy),
                                               std::abs(n * y)});
                CHECK(std::abs(residual) <= 1e-9 * scale);
            }
        }
    }
}

TEST_CASE("weighted inner products match the closed-form norms") {
    CHECK(weighted_inner_product(0, 1, 1.0, 32) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(weighted_inner_product(0, 0, 0.0, 32) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(weighted_inner_product(2, 2, 3.0, 32) == doctest::Approx(60.0).epsilon(1e-8));
}

TEST_CASE("orthogonality matrix is diagonal") {
    const double alpha = 2.0 * 3.0; // a typical 2 m_s
    for (int n1 = 0; n1 <= 10; ++n1) {
        for (int n2 = 0; n2 <= 10; ++n2) {
            const double val = weighted_inner_product(n1, n2, alpha, 48);
            if (n1 == n2) {
                const double norm =
                    std::exp(std::lgamma(n1 + alpha + 1.0) - std::lgamma(n1 + 1.0));
                CHECK(val == doctest::Approx(norm).epsilon(1e-8));
            } else {
                const double scale =
                    std::exp(std::lgamma(std::max(n1, n2) + alpha + 1.0) -
                             std::lgamma(std::max(n1, n2) + 1.0));
                CHECK(std::abs(val) <= 1e-8 * scale);
            }
        }
    }
}

TEST_CASE("underresolved quadrature is reported, not returned") {
    CHECK_THROWS_AS(weighted_inner_product(2, 2, 3.0, 1), QuadratureUnderresolved);
}

TEST_CASE("gauss rule integrates polynomials exactly up to degree 2n-1") {
    const auto rule = gauss_laguerre(0.0, 6);
    // integral of x^k e^{-x} = k!
    double expected = 1.0;
    for (int k = 0; k <= 11; ++k) {
        if (k > 0) expected *= k;
        const double got = integrate(rule, [&](double x) { return std::pow(x, k); });
        CHECK(got == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("large rules stay finite where the polynomial values overflow") {
    // The outermost nodes of a 512-point rule sit past x = 2000, where the
    // degree-513 polynomial no longer fits in a double. The node positions
    // and weights must still come out finite, with the far-tail weights
    // rounding to zero, and the total mass must survive.
    const auto rule = gauss_laguerre(0.0, 512);
    REQUIRE(rule.nodes.size() == 512);
    double prev = 0.0;
    double mass = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        REQUIRE(std::isfinite(rule.nodes[i]));
        REQUIRE(std::isfinite(rule.weights[i]));
        CHECK(rule.nodes[i] > prev);
        CHECK(rule.weights[i] >= 0.0);
        prev = rule.nodes[i];
        mass += rule.weights[i];
    }
    CHECK(rule.nodes.back() > 1500.0);
    CHECK(rule.weights.back() == 0.0);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
}
