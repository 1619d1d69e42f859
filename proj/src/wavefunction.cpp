#include "monopole_dirac/wavefunction.hpp"

#include "monopole_dirac/laguerre.hpp"
#include "monopole_dirac/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace mdirac {

namespace {

// C such that int_0^inf [C (2 eta)^m rho^m e^{-eta rho} L_n^{2m}(2 eta rho)]^2 rho d rho = 1.
// Substituting z = 2 eta rho reduces the norm to
//   C^2/(4 eta^2) int z^{2m+1} e^{-z} [L_n^{2m}(z)]^2 dz,
// a polynomial integral the quadrature rule handles exactly.
double norm_constant(int n, double exponent, double eta) {
    const double alpha = 2.0 * exponent;
    const int nodes = std::max(n + 2, 24);
    const double integral = integrate_checked(
        alpha + 1.0, [&](double z) { const double v = laguerre(n, alpha, z); return v * v; },
        nodes);
    return 2.0 * eta / std::sqrt(integral);
}

} // namespace

RadialSolution::RadialSolution(const PhysicalParameters& p, const QuantumState& q)
    : RadialSolution(p, q, relativistic_energy(p, q)) {}

RadialSolution::RadialSolution(const PhysicalParameters& p, const QuantumState& q,
                               const SpectrumResult& spectrum) {
    p.validate();
    q.validate();
    if (!(spectrum.eta > 0.0)) {
        throw ContinuumEdge("radial profile is not normalizable at eta = 0");
    }
    m_s_ = spectrum.derived.m_s;
    eta_ = spectrum.eta;
    n_ = q.n;
    c_ = norm_constant(n_, m_s_, eta_);
}

double RadialSolution::operator()(double rho) const {
    if (!(rho >= 0.0)) throw ValidationError("rho must be >= 0");
    const double z = 2.0 * eta_ * rho;
    return c_ * std::pow(z, m_s_) * std::exp(-0.5 * z) * laguerre(n_, 2.0 * m_s_, z);
}

SpinorField::SpinorField(const PhysicalParameters& p, const QuantumState& q)
    : SpinorField(p, q, relativistic_energy(p, q)) {}

SpinorField::SpinorField(const PhysicalParameters& p, const QuantumState& q,
                         const SpectrumResult& spectrum) {
    p.validate();
    q.validate();
    const double xi = spectrum.derived.xi;
    if (!(xi > 0.5)) {
        throw DegenerateChannel("spinor needs xi > 1/2 so both labels have m_s > 0, got xi = " +
                                std::to_string(xi));
    }
    if (!(spectrum.eta > 0.0)) {
        throw ContinuumEdge("spinor field is not normalizable at eta = 0");
    }
    mj_ = q.mj();
    energy_ = spectrum.energy;
    eta_ = spectrum.eta;
    n_ = q.n;
    hbar_ = p.hbar;
    kappa_c_ = p.kappa * p.c;
    for (int k = 0; k < 2; ++k) {
        const int s = k == 0 ? +1 : -1;
        m_s_[k] = xi - 0.5 * s;
        const double c_s = norm_constant(n_, m_s_[k], eta_);
        cbar_[k] = c_s * std::pow(2.0 * eta_, m_s_[k]) / std::sqrt(2.0 * std::numbers::pi);
        a_g_[k] = m_s_[k] - s * mj_ + 0.5 + s * p.d * p.lambda_m / p.hbar;
        f_lin_[k] = s * energy_ / p.c + p.m0 * p.c;
    }
}

int SpinorField::idx(int s) const {
    if (s != 1 && s != -1) throw ValidationError("spinor label s must be +1 or -1");
    return s == 1 ? 0 : 1;
}

double SpinorField::F(int s, double rho) const {
    const int k = idx(s);
    if (!(rho >= 0.0)) throw ValidationError("rho must be >= 0");
    const double bracket = f_lin_[k] * rho - kappa_c_;
    return cbar_[k] * std::pow(rho, m_s_[k] - 1.0) * std::exp(-eta_ * rho) * bracket *
           laguerre(n_, 2.0 * m_s_[k], 2.0 * eta_ * rho);
}

double SpinorField::G(int s, double rho) const {
    const int k = idx(s);
    if (!(rho >= 0.0)) throw ValidationError("rho must be >= 0");
    const double z = 2.0 * eta_ * rho;
    const double alpha = 2.0 * m_s_[k];
    const double bracket =
        a_g_[k] * laguerre(n_, alpha, z) - z * laguerre(n_ - 1, alpha + 1.0, z);
    return hbar_ * cbar_[k] * std::pow(rho, m_s_[k] - 1.0) * std::exp(-eta_ * rho) * bracket;
}

double SpinorField::coefficient(int s) const { return cbar_[idx(s)]; }

double SpinorField::exponent(int s) const { return m_s_[idx(s)]; }

std::complex<double> SpinorField::base_phase(double theta) const {
    return std::polar(1.0, mj_ * theta);
}

SpinorField::Components SpinorField::operator()(double t, double rho, double theta) const {
    const std::complex<double> time_phase = std::polar(1.0, -energy_ * t / hbar_);
    const std::complex<double> up_phase = std::polar(1.0, (mj_ - 0.5) * theta);
    const std::complex<double> low_phase = std::polar(1.0, (mj_ + 0.5) * theta);
    Components out;
    out.upper = time_phase * up_phase * std::complex<double>(F(+1, rho), -G(-1, rho));
    out.lower = time_phase * low_phase * std::complex<double>(F(-1, rho), +G(+1, rho));
    return out;
}

NonRelWavefunction::NonRelWavefunction(const PhysicalParameters& p, int n, int m,
                                       NonRelForm form) {
    const NonRelResult nr = nonrel_energy(p, n, m, form);
    if (!(nr.epsilon < 0.0)) {
        throw ContinuumEdge("weak-coupling state with epsilon >= 0 is not normalizable");
    }
    abs_l_ = std::abs(nr.l);
    eta_bar_ = nr.eta_bar;
    epsilon_ = nr.epsilon;
    hbar_ = p.hbar;
    n_ = n;
    m_ = m;
    c_ = norm_constant(n_, abs_l_, eta_bar_);
}

double NonRelWavefunction::radial(double rho) const {
    if (!(rho >= 0.0)) throw ValidationError("rho must be >= 0");
    const double z = 2.0 * eta_bar_ * rho;
    return c_ * std::pow(z, abs_l_) * std::exp(-0.5 * z) * laguerre(n_, 2.0 * abs_l_, z);
}

std::complex<double> NonRelWavefunction::operator()(double t, double rho, double theta) const {
    const double phase = m_ * theta - epsilon_ * t / hbar_;
    return radial(rho) * std::polar(1.0 / std::sqrt(2.0 * std::numbers::pi), phase);
}

} // namespace mdirac
