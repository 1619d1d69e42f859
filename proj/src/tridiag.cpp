#include "monopole_dirac/tridiag.hpp"

#include "monopole_dirac/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mdirac {

namespace {

// Smallest pivot magnitude we allow in the Sturm recurrence, following the
// LAPACK convention pivmin = safmin * max(1, max |off|^2). Clamping keeps
// the count well defined when a shift hits an eigenvalue of a leading
// principal submatrix.
double pivot_floor(const SymTridiag& t) {
    double off2 = 1.0;
    for (double e : t.off) off2 = std::max(off2, e * e);
    return std::numeric_limits<double>::min() * off2;
}

} // namespace

int count_below(const SymTridiag& t, double x) {
    const std::size_t n = t.size();
    const double pivmin = pivot_floor(t);
    int count = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e2 = i == 0 ? 0.0 : t.off[i - 1] * t.off[i - 1];
        d = (t.diag[i] - x) - e2 / d;
        if (std::abs(d) < pivmin) d = -pivmin;
        if (d < 0.0) ++count;
    }
    return count;
}

std::pair<double, double> spectrum_bounds(const SymTridiag& t) {
    const std::size_t n = t.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) +
                         (i + 1 < n ? std::abs(t.off[i]) : 0.0);
        lo = std::min(lo, t.diag[i] - r);
        hi = std::max(hi, t.diag[i] + r);
    }
    return {lo, hi};
}

double eigenvalue_k(const SymTridiag& t, int k) {
    if (k < 0 || static_cast<std::size_t>(k) >= t.size()) {
        throw ValidationError("eigenvalue_k: index out of range");
    }
    auto [lo, hi] = spectrum_bounds(t);
    const double pad = 1e-12 * std::max({std::abs(lo), std::abs(hi), 1.0});
    lo -= pad;
    hi += pad;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break; // interval is at floating-point resolution
        if (count_below(t, mid) >= k + 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> lowest_eigenvalues(const SymTridiag& t, int k, Exec exec) {
    if (k < 1 || static_cast<std::size_t>(k) > t.size()) {
        throw ValidationError("lowest_eigenvalues: k out of range");
    }
    std::vector<double> vals(static_cast<std::size_t>(k));
    parallel_for(exec, vals.size(), [&](std::size_t j) {
        vals[j] = eigenvalue_k(t, static_cast<int>(j));
    });
    return vals;
}

namespace {

// One partially pivoted solve of (T - shift I) x = b. Row swaps introduce a
// second superdiagonal (u2), which back substitution has to honour.
std::vector<double> solve_shifted(const SymTridiag& t, double shift, std::vector<double> b) {
    const std::size_t n = t.size();
    std::vector<double> dd(n), du(n > 1 ? n - 1 : 0), dl(t.off), du2(n > 2 ? n - 2 : 0, 0.0);
    for (std::size_t i = 0; i < n; ++i) dd[i] = t.diag[i] - shift;
    if (n > 1) du.assign(t.off.begin(), t.off.end());
    const double tiny = pivot_floor(t);

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(dd[i]) >= std::abs(dl[i])) {
            if (dd[i] == 0.0) dd[i] = tiny;
            const double fact = dl[i] / dd[i];
            dd[i + 1] -= fact * du[i];
            b[i + 1] -= fact * b[i];
            if (i + 2 < n) du2[i] = 0.0;
        } else {
            const double fact = dd[i] / dl[i];
            dd[i] = dl[i];
            const double tmp_d = dd[i + 1];
            dd[i + 1] = du[i] - fact * tmp_d;
            du[i] = tmp_d;
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du2[i];
            }
            std::swap(b[i], b[i + 1]);
            b[i + 1] -= fact * b[i];
        }
    }
    if (dd[n - 1] == 0.0) dd[n - 1] = tiny;

    std::vector<double> x(n);
    x[n - 1] = b[n - 1] / dd[n - 1];
    if (n > 1) x[n - 2] = (b[n - 2] - du[n - 2] * x[n - 1]) / dd[n - 2];
    for (std::size_t ip = n; ip-- > 2;) {
        const std::size_t i = ip - 2;
        x[i] = (b[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / dd[i];
    }
    return x;
}

} // namespace

std::vector<double> eigenvector(const SymTridiag& t, double lambda) {
    const std::size_t n = t.size();
    // Deterministic pseudo-random start; a constant seed vector can have
    // an unluckily small component along oscillatory eigenvectors.
    std::vector<double> v(n);
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    for (std::size_t i = 0; i < n; ++i) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        v[i] = static_cast<double>(state >> 11) / 9007199254740992.0 - 0.5;
    }
    const double shift =
        lambda + std::abs(lambda) * 1e-12 + std::numeric_limits<double>::min();
    for (int pass = 0; pass < 3; ++pass) {
        v = solve_shifted(t, shift, std::move(v));
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        for (double& x : v) x /= norm;
    }
    std::size_t imax = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
    }
    if (v[imax] < 0.0) {
        for (double& x : v) x = -x;
    }
    return v;
}

} // namespace mdirac
