#include "monopole_dirac/sweep.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>

namespace mdirac {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void SweepSpec::validate() const {
    base.validate();
    state.validate();
    if (!(std::isfinite(min) && std::isfinite(max)) || !(min < max)) {
        throw ValidationError("sweep: need finite min < max");
    }
    if (steps < 2) throw ValidationError("sweep: steps must be >= 2");
    if (levels.empty()) throw ValidationError("sweep: need at least one level");
    for (int n : levels) {
        if (n < 0) throw ValidationError("sweep: levels must be >= 0");
    }
    if (axis == SweepAxis::kappa && min < 0.0) {
        throw ValidationError("sweep: kappa axis must be >= 0");
    }
    if (axis == SweepAxis::lambda_m && min < 0.0) {
        throw ValidationError("sweep: lambda_m axis must be >= 0");
    }
}

namespace {

const char* axis_name(SweepAxis axis) {
    return axis == SweepAxis::kappa ? "kappa" : "lambda_m";
}

struct PointOutcome {
    std::optional<SweepRow> row;
    std::optional<SweepDiagnostic> diagnostic;
};

} // namespace

SweepTable run_sweep(const SweepSpec& spec_in, Exec exec) {
    SweepSpec spec = spec_in;
    spec.validate();
    std::sort(spec.levels.begin(), spec.levels.end());
    spec.levels.erase(std::unique(spec.levels.begin(), spec.levels.end()),
                      spec.levels.end());

    const std::size_t steps = static_cast<std::size_t>(spec.steps);
    const std::size_t n_levels = spec.levels.size();

    std::vector<double> grid(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        grid[i] = spec.min + static_cast<double>(i) * (spec.max - spec.min) /
                                 static_cast<double>(steps - 1);
    }

    std::vector<PointOutcome> slots(steps * n_levels);
    parallel_for(exec, slots.size(), [&](std::size_t flat) {
        const std::size_t level_idx = flat / steps;
        const std::size_t i = flat % steps;
        const int n = spec.levels[level_idx];
        const double value = grid[i];

        PhysicalParameters p = spec.base;
        if (spec.axis == SweepAxis::kappa) {
            p.kappa = value;
        } else {
            p.lambda_m = value;
        }

        PointOutcome& slot = slots[flat];
        try {
            double energy;
            if (spec.target == SweepTarget::relativistic) {
                QuantumState q = spec.state;
                q.n = n;
                energy = relativistic_energy(p, q).energy;
            } else {
                energy = nonrel_energy(p, n, spec.m, spec.form).epsilon;
            }
            slot.row = SweepRow{value, n, energy};
        } catch (const DegenerateChannel& e) {
            slot.diagnostic = SweepDiagnostic{value, n, "DegenerateChannel", e.what()};
        } catch (const SpectrumDivergence& e) {
            slot.diagnostic = SweepDiagnostic{value, n, "SpectrumDivergence", e.what()};
        }
        // Anything else (validation and friends) is a caller bug in the
        // spec itself and propagates.
    });

    SweepTable table;
    table.spec = spec;
    table.rows.reserve(slots.size());
    for (const PointOutcome& slot : slots) {
        if (slot.row) table.rows.push_back(*slot.row);
        if (slot.diagnostic) table.diagnostics.push_back(*slot.diagnostic);
    }
    return table;
}

SweepSpec figure_defaults(int figure) {
    SweepSpec spec;
    spec.state.mj_numerator = 1;
    spec.state.branch = +1;
    switch (figure) {
    case 1:
        spec.target = SweepTarget::relativistic;
        spec.axis = SweepAxis::kappa;
        spec.min = 0.1;
        spec.max = 10.0;
        spec.base = PhysicalParameters::natural_units(-1.0, 1.0, 2.0);
        spec.state.s = -1;
        break;
    case 2:
        spec.target = SweepTarget::relativistic;
        spec.axis = SweepAxis::lambda_m;
        spec.min = 0.1;
        spec.max = 10.0;
        spec.base = PhysicalParameters::natural_units(-1.0, 1.0, 2.0);
        spec.state.s = -1;
        break;
    case 3:
        spec.target = SweepTarget::nonrelativistic;
        spec.axis = SweepAxis::kappa;
        spec.min = 0.001;
        spec.max = 0.1;
        spec.base = PhysicalParameters::natural_units(-1.0, 1.0, 0.01);
        spec.m = 0;
        spec.note = "kappa capped at 0.1 to stay in the weak-coupling regime";
        break;
    case 4:
        spec.target = SweepTarget::nonrelativistic;
        spec.axis = SweepAxis::lambda_m;
        spec.min = 0.1;
        spec.max = 10.0;
        spec.base = PhysicalParameters::natural_units(-1.0, 1.0, 0.01);
        spec.m = 0;
        break;
    default:
        throw ValidationError("figure_defaults: figure must be 1..4");
    }
    return spec;
}

void write_csv(const SweepTable& table, std::ostream& os) {
    const char* axis = axis_name(table.spec.axis);
    os << "axis,axis_value,n,energy\n";
    for (const SweepRow& row : table.rows) {
        os << axis << ',' << format_g17(row.axis_value) << ',' << row.n << ','
           << format_g17(row.energy) << '\n';
    }
}

std::string to_csv(const SweepTable& table) {
    std::ostringstream os;
    write_csv(table, os);
    return os.str();
}

namespace {

nlohmann::ordered_json spec_to_json(const SweepSpec& spec) {
    nlohmann::ordered_json j;
    j["target"] = spec.target == SweepTarget::relativistic ? "relativistic"
                                                           : "nonrelativistic";
    j["axis"] = axis_name(spec.axis);
    j["min"] = spec.min;
    j["max"] = spec.max;
    j["steps"] = spec.steps;
    j["levels"] = spec.levels;
    j["params"] = nlohmann::ordered_json{
        {"m0", spec.base.m0},       {"c", spec.base.c},
        {"hbar", spec.base.hbar},   {"d", spec.base.d},
        {"lambda_m", spec.base.lambda_m}, {"kappa", spec.base.kappa}};
    if (spec.target == SweepTarget::relativistic) {
        j["state"] = nlohmann::ordered_json{{"mj_numerator", spec.state.mj_numerator},
                                            {"s", spec.state.s},
                                            {"branch", spec.state.branch}};
    } else {
        j["m"] = spec.m;
        j["form"] = spec.form == NonRelForm::signed_l ? "signed_l" : "abs_l";
    }
    if (!spec.note.empty()) j["note"] = spec.note;
    return j;
}

} // namespace

void write_json(const SweepTable& table, std::ostream& os) {
    nlohmann::ordered_json j;
    j["spec"] = spec_to_json(table.spec);
    j["rows"] = nlohmann::ordered_json::array();
    for (const SweepRow& row : table.rows) {
        j["rows"].push_back(nlohmann::ordered_json{
            {"axis_value", row.axis_value}, {"n", row.n}, {"energy", row.energy}});
    }
    j["diagnostics"] = nlohmann::ordered_json::array();
    for (const SweepDiagnostic& d : table.diagnostics) {
        j["diagnostics"].push_back(nlohmann::ordered_json{{"axis_value", d.axis_value},
                                                          {"n", d.n},
                                                          {"error", d.error},
                                                          {"message", d.message}});
    }
    os << j.dump(2) << '\n';
}

std::string to_json_string(const SweepTable& table) {
    std::ostringstream os;
    write_json(table, os);
    return os.str();
}

} // namespace mdirac
