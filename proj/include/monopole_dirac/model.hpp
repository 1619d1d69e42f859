#pragma once

#include "monopole_dirac/errors.hpp"

#include <json.hpp>

#include <optional>

namespace mdirac {

/// Physical inputs of the model. Any consistent unit system is accepted;
/// natural_units() gives the hbar = c = m0 = 1 convention used by all
/// built-in defaults.
struct PhysicalParameters {
    double m0;       ///< rest mass, > 0
    double c;        ///< speed of light, > 0
    double hbar;     ///< reduced Planck constant, > 0
    double d;        ///< electric dipole moment, signed
    double lambda_m; ///< magnetic charge density, >= 0
    double kappa;    ///< position-dependent-mass strength, >= 0

    static PhysicalParameters natural_units(double d, double lambda_m, double kappa);

    double rest_energy() const { return m0 * c * c; }

    /// sigma = sign(d); d == 0 counts as +1.
    double edm_sign() const { return d < 0.0 ? -1.0 : 1.0; }

    /// Throws ValidationError if any bound above is violated or a value
    /// is not finite.
    void validate() const;
};

/// Quantum numbers of one bound state. m_j is half-odd-integer and is
/// stored exactly as an odd numerator over two.
struct QuantumState {
    int n = 0;            ///< radial quantum number, >= 0
    int mj_numerator = 1; ///< m_j = mj_numerator / 2, numerator odd
    int s = +1;           ///< spinor projection label, +1 or -1
    int branch = +1;      ///< particle (+1) / antiparticle (-1) branch

    double mj() const { return mj_numerator / 2.0; }

    void validate() const;
};

/// Scalars shared by the closed-form solution and the numerical checks.
/// eta and z0 depend on the energy and stay unset until one is known.
struct DerivedQuantities {
    double xi;   ///< sqrt((m_j - d lambda_m / hbar)^2 + (kappa c / hbar)^2)
    double m_s;  ///< xi - s/2, > 0 for a usable channel
    double rho0; ///< 2 m0 c^2 kappa / hbar^2
    std::optional<double> eta; ///< sqrt(m0^2 c^4 - E^2) / (hbar c)
    std::optional<double> z0;  ///< rho0 / (2 eta) = n + m_s + 1/2
};

/// Compute xi, m_s, rho0 for a channel. Throws DegenerateChannel when
/// m_s <= 0 (then no normalizable power-law behaviour exists at the origin).
DerivedQuantities derive_quantities(const PhysicalParameters& p, const QuantumState& q);

/// eta for an arbitrary energy; throws NotBound when |E| exceeds the rest
/// energy. Evaluated as sqrt((m0 c^2 - E)(m0 c^2 + E)) / (hbar c).
double eta_from_energy(const PhysicalParameters& p, double energy);

/// JSON round trip. Field names are part of the file format:
/// parameters {"m0","c","hbar","d","lambda_m","kappa"},
/// state      {"n","mj_numerator","s","branch"}.
/// The *_from_json readers require every key and validate the result;
/// extra keys are ignored so both objects may share one config file.
nlohmann::json to_json(const PhysicalParameters& p);
nlohmann::json to_json(const QuantumState& q);
PhysicalParameters params_from_json(const nlohmann::json& j);
QuantumState state_from_json(const nlohmann::json& j);

} // namespace mdirac
