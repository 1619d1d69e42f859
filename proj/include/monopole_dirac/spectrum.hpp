#pragma once

#include "monopole_dirac/model.hpp"

#include <vector>

namespace mdirac {

/// Closed-form bound-state energy with the scalars that accompany it.
struct SpectrumResult {
    double energy;        ///< signed by branch
    double eta;           ///< decay rate of the radial solution; 0 on the edge
    double z0;            ///< n + m_s + 1/2
    bool continuum_edge;  ///< kappa == 0: |E| equals the rest energy exactly
    DerivedQuantities derived; ///< with eta and z0 filled in
};

/// E = branch * m0 c^2 sqrt(1 - [kappa c / (hbar (n + (1-s)/2 + xi))]^2).
/// kappa == 0 yields the continuum edge (flagged, not an error); a channel
/// with m_s <= 0 throws DegenerateChannel. eta is evaluated through the
/// quantization relation eta = rho0 / (2 z0), which is the same quantity as
/// sqrt(m0^2 c^4 - E^2)/(hbar c) but free of the cancellation that the
/// subtraction form suffers at small kappa.
SpectrumResult relativistic_energy(const PhysicalParameters& p, const QuantumState& q);

/// One row of the eight-setting sign table.
struct SettingRow {
    int index;   ///< 1..8, conventional ordering
    int mj_sign; ///< sign applied to |m_j|
    int s;
    int sigma;   ///< sign applied to |d|
    SpectrumResult result;
};

/// All eight (sign(m_j), s, sigma) combinations. p.d contributes only its
/// magnitude; abs_mj_numerator is the (positive, odd) numerator of |m_j|.
/// Row order: mj + rows first, within them s = +1 before -1, within that
/// sigma = +1 before -1.
std::vector<SettingRow> settings_table(const PhysicalParameters& p, int n,
                                       int abs_mj_numerator);

/// Topological phase accumulated on a closed planar loop:
/// -4 pi d lambda_m / (hbar c).
double hmw_phase(const PhysicalParameters& p);

/// Weak-coupling energy formula variants. They differ when
/// l = m - d lambda_m / hbar is negative.
enum class NonRelForm {
    signed_l, ///< denominator n + m + 1/2 - d lambda_m / hbar (default)
    abs_l     ///< denominator n + |l| + 1/2
};

struct NonRelResult {
    double epsilon; ///< binding energy, < 0 for kappa > 0
    double l;       ///< effective angular quantum number m - d lambda_m / hbar
    double eta_bar; ///< sqrt(-2 m0 epsilon) / hbar
    int n;
    int m;
};

/// epsilon = -(1/2) m0 c^4 kappa^2 / (hbar^2 den^2) with den per form.
/// Throws SpectrumDivergence when den == 0. kappa == 0 gives epsilon = 0.
NonRelResult nonrel_energy(const PhysicalParameters& p, int n, int m,
                           NonRelForm form = NonRelForm::signed_l);

/// Relativistic E+ minus the rest energy, compared with epsilon for the
/// matching channel (s = +1, branch = +1, m = m_j - 1/2). The subtraction
/// is evaluated cancellation-free so the O(kappa^4) gap survives in floating
/// point at small kappa.
struct NonRelGap {
    double e_minus_rest;
    double epsilon;
    double gap; ///< e_minus_rest - epsilon
};

NonRelGap nonrel_limit_check(const PhysicalParameters& p, const QuantumState& q);

} // namespace mdirac
