#pragma once

#include "monopole_dirac/model.hpp"
#include "monopole_dirac/spectrum.hpp"

#include <complex>

namespace mdirac {

/// Normalized radial profile
///   R(rho) = C (2 eta)^{m_s} rho^{m_s} e^{-eta rho} L_n^{2 m_s}(2 eta rho),
/// with C > 0 fixed by int_0^inf R^2 rho d rho = 1 (evaluated by
/// Gauss-Laguerre quadrature with a node-doubling convergence check).
/// Throws ContinuumEdge when eta == 0: the edge state is not normalizable.
class RadialSolution {
  public:
    RadialSolution(const PhysicalParameters& p, const QuantumState& q);
    RadialSolution(const PhysicalParameters& p, const QuantumState& q,
                   const SpectrumResult& spectrum);

    double operator()(double rho) const;

    double normalization() const { return c_; } ///< the constant C
    double eta() const { return eta_; }
    double exponent() const { return m_s_; } ///< power-law exponent m_s
    int n() const { return n_; }

  private:
    double m_s_;
    double eta_;
    double c_;
    int n_;
};

/// The full two-component field built from the four radial pieces
/// F_{+1}, F_{-1}, G_{+1}, G_{-1}:
///   upper(t,rho,theta) = e^{-iEt/hbar} e^{i(m_j - 1/2)theta} [F_{+1} - i G_{-1}]
///   lower(t,rho,theta) = e^{-iEt/hbar} e^{i(m_j + 1/2)theta} [F_{-1} + i G_{+1}]
/// Each label s carries its own exponent m_s = xi - s/2 and its own
/// constant Cbar_s = C_s (2 eta)^{m_s} / sqrt(2 pi), where C_s normalizes
/// the corresponding radial profile on its own. Requires xi > 1/2 so both
/// labels have m_s > 0; throws DegenerateChannel otherwise.
class SpinorField {
  public:
    SpinorField(const PhysicalParameters& p, const QuantumState& q);
    SpinorField(const PhysicalParameters& p, const QuantumState& q,
                const SpectrumResult& spectrum);

    struct Components {
        std::complex<double> upper;
        std::complex<double> lower;
    };

    Components operator()(double t, double rho, double theta) const;

    /// F_s(rho), s = +1 or -1, evaluated in the factored form
    /// Cbar_s rho^{m_s - 1} e^{-eta rho} [(s E / c + m0 c) rho - kappa c] L_n^{2 m_s}.
    double F(int s, double rho) const;

    /// G_s(rho) in the matching factored form; its L_{n-1} term is exactly
    /// absent for n = 0.
    double G(int s, double rho) const;

    double coefficient(int s) const; ///< Cbar_s
    double exponent(int s) const;    ///< m_s for the label
    double energy() const { return energy_; }
    double eta() const { return eta_; }

    /// Angular phase e^{i m_j theta} of the underlying two-spinor before the
    /// spin-frame rotation; antiperiodic under theta -> theta + 2 pi for the
    /// half-odd-integer m_j.
    std::complex<double> base_phase(double theta) const;

  private:
    int idx(int s) const;

    double mj_;
    double energy_;
    double eta_;
    double m_s_[2];    ///< index 0: s=+1, index 1: s=-1
    double cbar_[2];
    double a_g_[2];    ///< bracket constant of the G_s 1/rho term
    double f_lin_[2];  ///< s E / c + m0 c
    double kappa_c_;
    double hbar_;
    int n_;
};

/// Weak-coupling scalar wavefunction
///   psi(rho) = C (2 eta_bar)^{|l|} rho^{|l|} e^{-eta_bar rho} L_n^{2|l|}(2 eta_bar rho)
/// normalized like the radial profile above;
/// full field adds e^{i(m theta - epsilon t / hbar)} / sqrt(2 pi).
/// Throws ContinuumEdge when epsilon >= 0 (kappa == 0).
class NonRelWavefunction {
  public:
    NonRelWavefunction(const PhysicalParameters& p, int n, int m,
                       NonRelForm form = NonRelForm::signed_l);

    double radial(double rho) const;
    std::complex<double> operator()(double t, double rho, double theta) const;

    double normalization() const { return c_; }
    double eta_bar() const { return eta_bar_; }
    double abs_l() const { return abs_l_; }
    double epsilon() const { return epsilon_; }

  private:
    double abs_l_;
    double eta_bar_;
    double epsilon_;
    double c_;
    double hbar_;
    int n_;
    int m_;
};

} // namespace mdirac
