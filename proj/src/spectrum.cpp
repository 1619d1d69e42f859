#include "monopole_dirac/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace mdirac {

SpectrumResult relativistic_energy(const PhysicalParameters& p, const QuantumState& q) {
    DerivedQuantities dq = derive_quantities(p, q);
    const double rest = p.rest_energy();
    const double z0 = static_cast<double>(q.n) + dq.m_s + 0.5;

    SpectrumResult r;
    r.z0 = z0;
    r.derived = dq;
    r.derived.z0 = z0;

    if (p.kappa == 0.0) {
        r.energy = q.branch * rest;
        r.eta = 0.0;
        r.continuum_edge = true;
        r.derived.eta = 0.0;
        return r;
    }

    // 1 - ratio is evaluated as (z0 - coupling)/z0 with
    // z0 - coupling = n + (1-s)/2 + angular^2/(xi + coupling), a sum of
    // positive terms, so the strong-coupling energies keep full relative
    // precision instead of cancelling near ratio = 1.
    const double angular = q.mj() - p.d * p.lambda_m / p.hbar;
    const double coupling = p.kappa * p.c / p.hbar;
    const double ratio = coupling / z0;
    const double gap = static_cast<double>(q.n) + (1.0 - q.s) * 0.5 +
                       angular * angular / (dq.xi + coupling);
    const double inside = (gap / z0) * (1.0 + ratio);
    r.energy = q.branch * rest * std::sqrt(std::max(0.0, inside));
    r.eta = dq.rho0 / (2.0 * z0);
    r.continuum_edge = false;
    r.derived.eta = r.eta;
    return r;
}

std::vector<SettingRow> settings_table(const PhysicalParameters& p, int n,
                                       int abs_mj_numerator) {
    if (abs_mj_numerator <= 0 || abs_mj_numerator % 2 == 0) {
        throw ValidationError("settings_table: abs_mj_numerator must be positive and odd");
    }
    static constexpr int signs[8][3] = {
        // {mj_sign, s, sigma}
        {+1, +1, +1}, {+1, +1, -1}, {+1, -1, +1}, {+1, -1, -1},
        {-1, +1, +1}, {-1, +1, -1}, {-1, -1, +1}, {-1, -1, -1},
    };
    const double abs_d = std::abs(p.d);
    std::vector<SettingRow> table;
    table.reserve(8);
    for (int i = 0; i < 8; ++i) {
        PhysicalParameters pi = p;
        pi.d = signs[i][2] * abs_d;
        QuantumState qi;
        qi.n = n;
        qi.mj_numerator = signs[i][0] * abs_mj_numerator;
        qi.s = signs[i][1];
        qi.branch = +1;
        table.push_back(SettingRow{i + 1, signs[i][0], signs[i][1], signs[i][2],
                                   relativistic_energy(pi, qi)});
    }
    return table;
}

double hmw_phase(const PhysicalParameters& p) {
    p.validate();
    return -4.0 * std::numbers::pi * p.d * p.lambda_m / (p.hbar * p.c);
}

NonRelResult nonrel_energy(const PhysicalParameters& p, int n, int m, NonRelForm form) {
    p.validate();
    if (n < 0) throw ValidationError("nonrel_energy: n must be >= 0");

    const double l = static_cast<double>(m) - p.d * p.lambda_m / p.hbar;
    const double den = form == NonRelForm::signed_l
                           ? (static_cast<double>(n) + static_cast<double>(m) + 0.5) -
                                 p.d * p.lambda_m / p.hbar
                           : static_cast<double>(n) + std::abs(l) + 0.5;
    if (den == 0.0) {
        throw SpectrumDivergence("nonrel_energy: vanishing denominator at n = " +
                                 std::to_string(n) + ", m = " + std::to_string(m));
    }

    NonRelResult r;
    r.n = n;
    r.m = m;
    r.l = l;
    const double c2 = p.c * p.c;
    r.epsilon = -0.5 * p.m0 * c2 * c2 * p.kappa * p.kappa / (p.hbar * p.hbar * den * den);
    r.eta_bar = std::sqrt(-2.0 * p.m0 * r.epsilon) / p.hbar;
    return r;
}

NonRelGap nonrel_limit_check(const PhysicalParameters& p, const QuantumState& q) {
    QuantumState qq = q;
    qq.s = +1;
    qq.branch = +1;
    const SpectrumResult sr = relativistic_energy(p, qq);

    const int m = (qq.mj_numerator - 1) / 2;
    const NonRelResult nr = nonrel_energy(p, qq.n, m, NonRelForm::signed_l);

    // rest (sqrt(1 - r^2) - 1) = -rest r^2 / (1 + sqrt(1 - r^2))
    const double ratio = (p.kappa * p.c / p.hbar) / sr.z0;
    const double r2 = ratio * ratio;
    const double e_minus_rest =
        -p.rest_energy() * r2 / (1.0 + std::sqrt(std::max(0.0, 1.0 - r2)));

    return NonRelGap{e_minus_rest, nr.epsilon, e_minus_rest - nr.epsilon};
}

} // namespace mdirac
