#pragma once

#include "monopole_dirac/exec.hpp"
#include "monopole_dirac/model.hpp"
#include "monopole_dirac/spectrum.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace mdirac {

enum class SweepTarget { relativistic, nonrelativistic };
enum class SweepAxis { kappa, lambda_m };

/// A one-parameter scan of the spectrum over several radial levels.
struct SweepSpec {
    SweepTarget target = SweepTarget::relativistic;
    SweepAxis axis = SweepAxis::kappa;
    double min = 0.1;
    double max = 10.0;
    int steps = 100;            ///< grid points, endpoints included
    std::vector<int> levels{0, 1, 2};
    PhysicalParameters base = PhysicalParameters::natural_units(-1.0, 1.0, 2.0);
    QuantumState state{};       ///< m_j, s, branch for the relativistic target
    int m = 0;                  ///< angular integer for the weak-coupling target
    NonRelForm form = NonRelForm::signed_l;
    std::string note;           ///< free-form, echoed into the JSON metadata

    void validate() const;
};

struct SweepRow {
    double axis_value;
    int n;
    double energy;
};

/// A grid point whose evaluation raised one of the spectrum errors. The
/// sweep itself never aborts; the point is recorded here instead of rows.
struct SweepDiagnostic {
    double axis_value;
    int n;
    std::string error;
    std::string message;
};

struct SweepTable {
    SweepSpec spec;
    std::vector<SweepRow> rows;             ///< ordered by (n, axis_value)
    std::vector<SweepDiagnostic> diagnostics;
};

/// Evaluate the scan. rows.size() + diagnostics.size() == steps * levels.
/// Grid values and row order are identical for both execution policies.
SweepTable run_sweep(const SweepSpec& spec, Exec exec = Exec::openmp);

/// The four named default scans used throughout the docs and goldens:
/// 1: E+ vs kappa in [0.1, 10], levels 0..2, lambda_m = 1, d = -1, m_j = 1/2, s = -1
/// 2: E+ vs lambda_m in [0.1, 10], kappa = 2, same state
/// 3: epsilon vs kappa in [0.001, 0.1] (kappa capped at 0.1; see note), m = 0, d = -1
/// 4: epsilon vs lambda_m in [0.1, 10], kappa = 0.01, m = 0, d = -1
SweepSpec figure_defaults(int figure);

/// CSV with the fixed header "axis,axis_value,n,energy", LF line ends,
/// '.' decimal separator, 17 significant digits. Byte-stable for a given
/// spec. Diagnostics are not part of the CSV format.
void write_csv(const SweepTable& table, std::ostream& os);
std::string to_csv(const SweepTable& table);

/// JSON document with the spec echo, rows, and diagnostics.
void write_json(const SweepTable& table, std::ostream& os);
std::string to_json_string(const SweepTable& table);

/// printf("%.17g") formatting used for every number this library prints.
std::string format_g17(double v);

} // namespace mdirac
