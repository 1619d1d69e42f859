#pragma once

#include <stdexcept>
#include <string>

namespace mdirac {

/// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input fails a precondition (non-positive mass, even m_j numerator, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// Channel with m_s <= 0 (or |l| <= 0 for the nonrelativistic solver):
/// the radial problem has no normalizable power-law behaviour at the origin.
struct DegenerateChannel : Error {
    using Error::Error;
};

/// |E| exceeds the rest energy, so eta would be imaginary.
struct NotBound : Error {
    using Error::Error;
};

/// State sits exactly on the continuum edge (eta = 0); wavefunctions
/// are not normalizable even though the energy itself is well defined.
struct ContinuumEdge : Error {
    using Error::Error;
};

/// Closed-form denominator vanishes for the requested quantum numbers.
struct SpectrumDivergence : Error {
    using Error::Error;
};

/// Doubling the quadrature nodes moved the result by more than the
/// convergence threshold.
struct QuadratureUnderresolved : Error {
    using Error::Error;
};

/// Richardson error estimate of an eigenvalue exceeds the requested
/// tolerance at the configured mesh.
struct MeshTooCoarse : Error {
    using Error::Error;
};

/// Eigenfunction mass near rho_max is too large for the Dirichlet cutoff
/// to be harmless.
struct DomainTooSmall : Error {
    using Error::Error;
};

} // namespace mdirac
