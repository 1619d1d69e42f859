#include "monopole_dirac/model.hpp"

#include <json.hpp>

#include <cmath>
#include <string>

namespace mdirac {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw ValidationError(std::string(name) + " must be finite");
    }
}

} // namespace

PhysicalParameters PhysicalParameters::natural_units(double d, double lambda_m, double kappa) {
    return PhysicalParameters{1.0, 1.0, 1.0, d, lambda_m, kappa};
}

void PhysicalParameters::validate() const {
    require_finite(m0, "m0");
    require_finite(c, "c");
    require_finite(hbar, "hbar");
    require_finite(d, "d");
    require_finite(lambda_m, "lambda_m");
    require_finite(kappa, "kappa");
    if (m0 <= 0.0) throw ValidationError("m0 must be > 0");
    if (c <= 0.0) throw ValidationError("c must be > 0");
    if (hbar <= 0.0) throw ValidationError("hbar must be > 0");
    if (lambda_m < 0.0) throw ValidationError("lambda_m must be >= 0");
    if (kappa < 0.0) throw ValidationError("kappa must be >= 0");
}

void QuantumState::validate() const {
    if (n < 0) throw ValidationError("n must be >= 0");
    if (mj_numerator % 2 == 0) {
        throw ValidationError("mj_numerator must be odd (m_j is half-odd-integer)");
    }
    if (s != 1 && s != -1) throw ValidationError("s must be +1 or -1");
    if (branch != 1 && branch != -1) throw ValidationError("branch must be +1 or -1");
}

DerivedQuantities derive_quantities(const PhysicalParameters& p, const QuantumState& q) {
    p.validate();
    q.validate();
    const double angular = q.mj() - p.d * p.lambda_m / p.hbar;
    const double coupling = p.kappa * p.c / p.hbar;
    DerivedQuantities out;
    out.xi = std::hypot(angular, coupling);
    out.m_s = out.xi - q.s * 0.5;
    out.rho0 = 2.0 * p.m0 * p.c * p.c * p.kappa / (p.hbar * p.hbar);
    if (out.m_s <= 0.0) {
        throw DegenerateChannel("m_s = " + std::to_string(out.m_s) +
                                " <= 0: channel has no bound solutions");
    }
    return out;
}

double eta_from_energy(const PhysicalParameters& p, double energy) {
    p.validate();
    require_finite(energy, "energy");
    const double rest = p.rest_energy();
    if (std::abs(energy) > rest) {
        throw NotBound("|E| = " + std::to_string(std::abs(energy)) +
                       " exceeds the rest energy " + std::to_string(rest));
    }
    return std::sqrt((rest - energy) * (rest + energy)) / (p.hbar * p.c);
}

nlohmann::json to_json(const PhysicalParameters& p) {
    return nlohmann::json{{"m0", p.m0},      {"c", p.c},
                          {"hbar", p.hbar},  {"d", p.d},
                          {"lambda_m", p.lambda_m}, {"kappa", p.kappa}};
}

nlohmann::json to_json(const QuantumState& q) {
    return nlohmann::json{
        {"n", q.n}, {"mj_numerator", q.mj_numerator}, {"s", q.s}, {"branch", q.branch}};
}

namespace {

double json_number(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) {
        throw ValidationError(std::string("missing key \"") + key + "\"");
    }
    const auto& v = j.at(key);
    if (!v.is_number()) {
        throw ValidationError(std::string("key \"") + key + "\" must be a number");
    }
    return v.get<double>();
}

int json_int(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) {
        throw ValidationError(std::string("missing key \"") + key + "\"");
    }
    const auto& v = j.at(key);
    if (!v.is_number_integer()) {
        throw ValidationError(std::string("key \"") + key + "\" must be an integer");
    }
    return v.get<int>();
}

} // namespace

PhysicalParameters params_from_json(const nlohmann::json& j) {
    PhysicalParameters p{};
    p.m0 = json_number(j, "m0");
    p.c = json_number(j, "c");
    p.hbar = json_number(j, "hbar");
    p.d = json_number(j, "d");
    p.lambda_m = json_number(j, "lambda_m");
    p.kappa = json_number(j, "kappa");
    p.validate();
    return p;
}

QuantumState state_from_json(const nlohmann::json& j) {
    QuantumState q{};
    q.n = json_int(j, "n");
    q.mj_numerator = json_int(j, "mj_numerator");
    q.s = json_int(j, "s");
    q.branch = json_int(j, "branch");
    q.validate();
    return q;
}

} // namespace mdirac
