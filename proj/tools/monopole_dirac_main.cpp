#include "monopole_dirac/errors.hpp"
#include "monopole_dirac/exec.hpp"
#include "monopole_dirac/model.hpp"
#include "monopole_dirac/oracle.hpp"
#include "monopole_dirac/spectrum.hpp"
#include "monopole_dirac/sweep.hpp"
#include "monopole_dirac/wavefunction.hpp"

#include "CLI11.hpp"
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace {

using mdirac::format_g17;
using nlohmann::json;
using nlohmann::ordered_json;

struct CliConfig {
    mdirac::PhysicalParameters params = mdirac::PhysicalParameters::natural_units(-1.0, 1.0, 2.0);
    mdirac::QuantumState state{};
    int m = 0;

    std::string config_path;
    std::string out_path;
    std::string format; // "", "csv", or "json"
    std::string mj_text;
    bool natural_units = false;
    bool serial = false;
    int verbosity = 0;
};

int parse_mj_numerator(const std::string& text) {
    static const std::regex pattern(R"(^[+-]?\d+/2$)");
    if (!std::regex_match(text, pattern))
        throw mdirac::ValidationError("mj must be a half-integer fraction like 1/2 or -3/2");
    const int numerator = std::stoi(text.substr(0, text.size() - 2));
    if (numerator % 2 == 0)
        throw mdirac::ValidationError("mj numerator must be odd: " + text);
    return numerator;
}

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw mdirac::ValidationError("cannot read config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw mdirac::ValidationError("config is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_object()) throw mdirac::ValidationError("config root must be a JSON object");
    return j;
}

bool has_any_key(const json& j, std::initializer_list<const char*> keys) {
    for (const char* k : keys)
        if (j.contains(k)) return true;
    return false;
}

/// Rendered output goes to a string first so a failure partway through a
/// command never leaves a truncated file behind.
void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw mdirac::Error("cannot open output file: " + out_path);
    os << text;
    if (!os) throw mdirac::Error("write failed: " + out_path);
}

std::string fraction_text(int numerator) {
    return (numerator > 0 ? "+" : "") + std::to_string(numerator) + "/2";
}

// ---------------------------------------------------------------- spectrum

std::string render_spectrum(const CliConfig& cfg) {
    mdirac::QuantumState plus = cfg.state;
    plus.branch = +1;
    mdirac::QuantumState minus = cfg.state;
    minus.branch = -1;
    const mdirac::SpectrumResult up = mdirac::relativistic_energy(cfg.params, plus);
    const mdirac::SpectrumResult dn = mdirac::relativistic_energy(cfg.params, minus);
    const double phase = mdirac::hmw_phase(cfg.params);

    if (cfg.format == "json") {
        ordered_json j;
        j["E_plus"] = up.energy;
        j["E_minus"] = dn.energy;
        j["eta"] = up.eta;
        j["xi"] = up.derived.xi;
        j["m_s"] = up.derived.m_s;
        j["z0"] = up.z0;
        j["hmw_phase"] = phase;
        j["continuum_edge"] = up.continuum_edge;
        return j.dump(2) + "\n";
    }
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "E_plus,E_minus,eta,xi,m_s,z0,hmw_phase,continuum_edge\n"
           << format_g17(up.energy) << ',' << format_g17(dn.energy) << ','
           << format_g17(up.eta) << ',' << format_g17(up.derived.xi) << ','
           << format_g17(up.derived.m_s) << ',' << format_g17(up.z0) << ','
           << format_g17(phase) << ',' << (up.continuum_edge ? "true" : "false") << '\n';
        return os.str();
    }
    std::ostringstream os;
    os << "E_plus = " << format_g17(up.energy) << '\n'
       << "E_minus = " << format_g17(dn.energy) << '\n'
       << "eta = " << format_g17(up.eta) << '\n'
       << "xi = " << format_g17(up.derived.xi) << '\n'
       << "m_s = " << format_g17(up.derived.m_s) << '\n'
       << "z0 = " << format_g17(up.z0) << '\n'
       << "hmw_phase = " << format_g17(phase) << '\n'
       << "continuum_edge = " << (up.continuum_edge ? "true" : "false") << '\n';
    return os.str();
}

// ---------------------------------------------------------- settings-table

std::string render_settings_table(const CliConfig& cfg) {
    const int abs_num = std::abs(cfg.state.mj_numerator);
    const auto rows = mdirac::settings_table(cfg.params, cfg.state.n, abs_num);

    if (cfg.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json j;
            j["index"] = r.index;
            j["mj"] = r.mj_sign * abs_num / 2.0;
            j["s"] = r.s;
            j["sigma"] = r.sigma;
            j["energy"] = r.result.energy;
            j["eta"] = r.result.eta;
            j["z0"] = r.result.z0;
            arr.push_back(j);
        }
        return arr.dump(2) + "\n";
    }
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "index,mj,s,sigma,energy,eta,z0\n";
        for (const auto& r : rows)
            os << r.index << ',' << format_g17(r.mj_sign * abs_num / 2.0) << ',' << r.s << ','
               << r.sigma << ',' << format_g17(r.result.energy) << ','
               << format_g17(r.result.eta) << ',' << format_g17(r.result.z0) << '\n';
        return os.str();
    }
    std::ostringstream os;
    os << "  #    mj   s  sigma  energy\n";
    for (const auto& r : rows) {
        os << "  " << r.index << "  " << std::setw(4) << fraction_text(r.mj_sign * abs_num)
           << "  " << std::setw(2) << std::showpos << r.s << "  " << std::setw(5) << r.sigma
           << std::noshowpos << "  " << format_g17(r.result.energy) << '\n';
    }
    return os.str();
}

// ------------------------------------------------------------------ radial

struct GridFlags {
    double rho_min = 0.0;
    double rho_max = 0.0;
    int points = 400;
    bool have_min = false;
    bool have_max = false;
};

void fill_grid_defaults(GridFlags& grid, double eta) {
    if (!grid.have_min) grid.rho_min = 1e-3 / eta;
    if (!grid.have_max) grid.rho_max = 40.0 / eta;
    if (grid.points < 2) throw mdirac::ValidationError("grid needs at least 2 points");
    if (!(grid.rho_min > 0.0) || !(grid.rho_max > grid.rho_min))
        throw mdirac::ValidationError("grid needs 0 < rho-min < rho-max");
}

std::string render_radial(const CliConfig& cfg, GridFlags grid) {
    const mdirac::RadialSolution r(cfg.params, cfg.state);
    fill_grid_defaults(grid, r.eta());
    const double step = (grid.rho_max - grid.rho_min) / (grid.points - 1);

    if (cfg.format == "json") {
        ordered_json arr = ordered_json::array();
        for (int i = 0; i < grid.points; ++i) {
            const double rho = grid.rho_min + i * step;
            arr.push_back(ordered_json{{"rho", rho}, {"R", r(rho)}});
        }
        return arr.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "rho,R\n";
    for (int i = 0; i < grid.points; ++i) {
        const double rho = grid.rho_min + i * step;
        os << format_g17(rho) << ',' << format_g17(r(rho)) << '\n';
    }
    return os.str();
}

std::string render_spinor(const CliConfig& cfg, GridFlags grid, double time, double theta) {
    const mdirac::SpinorField psi(cfg.params, cfg.state);
    fill_grid_defaults(grid, psi.eta());
    const double step = (grid.rho_max - grid.rho_min) / (grid.points - 1);

    if (cfg.format == "json") {
        ordered_json arr = ordered_json::array();
        for (int i = 0; i < grid.points; ++i) {
            const double rho = grid.rho_min + i * step;
            const auto c = psi(time, rho, theta);
            arr.push_back(ordered_json{{"rho", rho},
                                       {"upper_re", c.upper.real()},
                                       {"upper_im", c.upper.imag()},
                                       {"lower_re", c.lower.real()},
                                       {"lower_im", c.lower.imag()}});
        }
        return arr.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "rho,upper_re,upper_im,lower_re,lower_im\n";
    for (int i = 0; i < grid.points; ++i) {
        const double rho = grid.rho_min + i * step;
        const auto c = psi(time, rho, theta);
        os << format_g17(rho) << ',' << format_g17(c.upper.real()) << ','
           << format_g17(c.upper.imag()) << ',' << format_g17(c.lower.real()) << ','
           << format_g17(c.lower.imag()) << '\n';
    }
    return os.str();
}

// ------------------------------------------------------------------ verify

struct VerifyFlags {
    int levels = 3;
    double tolerance = 1e-4;
    int mesh = 0; // 0 keeps the automatic sizing
    int samples = 256;
};

std::string render_verify(const CliConfig& cfg, const VerifyFlags& vf, bool& pass) {
    mdirac::SturmLiouvilleProblem problem =
        mdirac::build_problem(cfg.params, cfg.state, vf.levels);
    if (vf.mesh > 0) problem.mesh_points = vf.mesh;

    mdirac::OracleOptions options;
    options.rel_tolerance = vf.tolerance;
    options.exec = cfg.serial ? mdirac::Exec::serial : mdirac::Exec::openmp;

    if (cfg.verbosity > 0)
        std::cerr << "verify: rho in [" << format_g17(problem.rho_min) << ", "
                  << format_g17(problem.rho_max) << "], mesh " << problem.mesh_points << "\n";

    const auto comparisons =
        mdirac::verify_channel(cfg.params, cfg.state, problem, vf.levels, options);
    const mdirac::SpectrumResult base = mdirac::relativistic_energy(cfg.params, cfg.state);
    const double residual =
        mdirac::residual_scan(cfg.params, cfg.state, base, vf.samples, options.exec);

    constexpr double kResidualLimit = 1e-8;
    pass = residual <= kResidualLimit;
    for (const auto& c : comparisons)
        if (!(c.rel_disagreement <= vf.tolerance)) pass = false;

    if (cfg.format == "json") {
        ordered_json j;
        ordered_json arr = ordered_json::array();
        for (const auto& c : comparisons) {
            arr.push_back(ordered_json{{"level", c.level},
                                       {"analytic_lambda", c.analytic_lambda},
                                       {"oracle_lambda", c.oracle_lambda},
                                       {"rel_disagreement", c.rel_disagreement},
                                       {"error_estimate", c.error_estimate},
                                       {"sign_changes", c.sign_changes}});
        }
        j["levels"] = arr;
        j["residual_max"] = residual;
        j["tolerance"] = vf.tolerance;
        j["pass"] = pass;
        return j.dump(2) + "\n";
    }
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "level,analytic_lambda,oracle_lambda,rel_disagreement,error_estimate,"
              "sign_changes,residual_max,pass\n";
        for (const auto& c : comparisons)
            os << c.level << ',' << format_g17(c.analytic_lambda) << ','
               << format_g17(c.oracle_lambda) << ',' << format_g17(c.rel_disagreement) << ','
               << format_g17(c.error_estimate) << ',' << c.sign_changes << ','
               << format_g17(residual) << ',' << (pass ? "true" : "false") << '\n';
        return os.str();
    }
    std::ostringstream os;
    for (const auto& c : comparisons)
        os << "level " << c.level << ": analytic = " << format_g17(c.analytic_lambda)
           << "  oracle = " << format_g17(c.oracle_lambda)
           << "  rel = " << format_g17(c.rel_disagreement)
           << "  est = " << format_g17(c.error_estimate) << "  nodes = " << c.sign_changes
           << '\n';
    os << "residual max = " << format_g17(residual) << '\n'
       << "verify: " << (pass ? "PASS" : "FAIL") << " (tolerance " << format_g17(vf.tolerance)
       << ", residual limit " << format_g17(kResidualLimit) << ")\n";
    return os.str();
}

// ------------------------------------------------------------------ nonrel

std::string render_nonrel(const CliConfig& cfg, mdirac::NonRelForm form) {
    const mdirac::NonRelResult r =
        mdirac::nonrel_energy(cfg.params, cfg.state.n, cfg.m, form);
    const char* form_name = form == mdirac::NonRelForm::signed_l ? "signed_l" : "abs_l";

    if (cfg.format == "json") {
        ordered_json j;
        j["epsilon"] = r.epsilon;
        j["l"] = r.l;
        j["eta_bar"] = r.eta_bar;
        j["n"] = r.n;
        j["m"] = r.m;
        j["form"] = form_name;
        return j.dump(2) + "\n";
    }
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "epsilon,l,eta_bar,n,m,form\n"
           << format_g17(r.epsilon) << ',' << format_g17(r.l) << ',' << format_g17(r.eta_bar)
           << ',' << r.n << ',' << r.m << ',' << form_name << '\n';
        return os.str();
    }
    std::ostringstream os;
    os << "epsilon = " << format_g17(r.epsilon) << '\n'
       << "l = " << format_g17(r.l) << '\n'
       << "eta_bar = " << format_g17(r.eta_bar) << '\n'
       << "n = " << r.n << '\n'
       << "m = " << r.m << '\n'
       << "form = " << form_name << '\n';
    return os.str();
}

// ------------------------------------------------------------------- sweep

struct SweepFlags {
    int figure = 0;
    std::string target = "rel";
    std::string axis = "kappa";
    double min = 0.1;
    double max = 10.0;
    int steps = 100;
    std::vector<int> levels{0, 1, 2};
    std::string form = "signed";
};

std::string render_sweep(const CliConfig& cfg, const SweepFlags& sf, const CLI::App& parent,
                         const CLI::App& cmd) {
    mdirac::SweepSpec spec;
    if (sf.figure > 0) {
        spec = mdirac::figure_defaults(sf.figure);
    } else {
        spec.target = sf.target == "nonrel" ? mdirac::SweepTarget::nonrelativistic
                                            : mdirac::SweepTarget::relativistic;
        spec.axis = sf.axis == "lambda-m" ? mdirac::SweepAxis::lambda_m : mdirac::SweepAxis::kappa;
        spec.min = sf.min;
        spec.max = sf.max;
        spec.steps = sf.steps;
        spec.levels = sf.levels;
        spec.base = cfg.params;
        spec.state = cfg.state;
        spec.m = cfg.m;
        spec.form =
            sf.form == "abs" ? mdirac::NonRelForm::abs_l : mdirac::NonRelForm::signed_l;
    }
    // Explicit physics flags override the figure presets too.
    if (parent.count("--d")) spec.base.d = cfg.params.d;
    if (parent.count("--lambda-m")) spec.base.lambda_m = cfg.params.lambda_m;
    if (parent.count("--kappa")) spec.base.kappa = cfg.params.kappa;
    if (parent.count("--m0")) spec.base.m0 = cfg.params.m0;
    if (parent.count("--c")) spec.base.c = cfg.params.c;
    if (parent.count("--hbar")) spec.base.hbar = cfg.params.hbar;
    if (parent.count("--mj")) spec.state.mj_numerator = cfg.state.mj_numerator;
    if (parent.count("--s")) spec.state.s = cfg.state.s;
    if (parent.count("--branch")) spec.state.branch = cfg.state.branch;
    if (cmd.count("--m")) spec.m = cfg.m;

    const mdirac::SweepTable table =
        mdirac::run_sweep(spec, cfg.serial ? mdirac::Exec::serial : mdirac::Exec::openmp);
    if (cfg.format == "json") return mdirac::to_json_string(table);
    return mdirac::to_csv(table);
}

// ------------------------------------------------------------------ driver

void resolve_inputs(CliConfig& cfg, const CLI::App& app, bool m_flag) {
    // Parsing already wrote flag values into cfg; remember them so they can
    // win over the config file, which is loaded afterwards.
    const mdirac::PhysicalParameters flag_params = cfg.params;
    const mdirac::QuantumState flag_state = cfg.state;
    const int flag_m = cfg.m;
    bool dims_explicit = false;

    if (!cfg.config_path.empty()) {
        const json j = load_config(cfg.config_path);
        if (has_any_key(j, {"m0", "c", "hbar", "d", "lambda_m", "kappa"})) {
            cfg.params = mdirac::params_from_json(j);
            dims_explicit = true;
        }
        if (has_any_key(j, {"n", "mj_numerator", "s", "branch"}))
            cfg.state = mdirac::state_from_json(j);
        if (j.contains("m")) {
            if (!j.at("m").is_number_integer())
                throw mdirac::ValidationError("config key 'm' must be an integer");
            cfg.m = j.at("m").get<int>();
        }
    }

    if (cfg.natural_units) {
        cfg.params.m0 = 1.0;
        cfg.params.c = 1.0;
        cfg.params.hbar = 1.0;
        dims_explicit = true;
    }

    const bool m0_flag = app.count("--m0") > 0;
    const bool c_flag = app.count("--c") > 0;
    const bool hbar_flag = app.count("--hbar") > 0;
    if (!dims_explicit && (m0_flag || c_flag || hbar_flag) && !(m0_flag && c_flag && hbar_flag))
        throw mdirac::ValidationError(
            "dimensional constants must be given together: --m0, --c, --hbar "
            "(or use --natural-units)");

    if (m0_flag) cfg.params.m0 = flag_params.m0;
    if (c_flag) cfg.params.c = flag_params.c;
    if (hbar_flag) cfg.params.hbar = flag_params.hbar;
    if (app.count("--d")) cfg.params.d = flag_params.d;
    if (app.count("--lambda-m")) cfg.params.lambda_m = flag_params.lambda_m;
    if (app.count("--kappa")) cfg.params.kappa = flag_params.kappa;
    if (app.count("--n")) cfg.state.n = flag_state.n;
    if (app.count("--s")) cfg.state.s = flag_state.s;
    if (app.count("--branch")) cfg.state.branch = flag_state.branch;
    if (m_flag) cfg.m = flag_m;

    if (!cfg.mj_text.empty()) cfg.state.mj_numerator = parse_mj_numerator(cfg.mj_text);

    cfg.params.validate();
    cfg.state.validate();
}

} // namespace

int main(int argc, char** argv) {
    mdirac::apply_thread_cap_from_env();

    CLI::App app{"Bound states of a planar Dirac fermion with an electric dipole moment "
                 "in the radial field of a magnetic monopole line"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    app.add_option("--config", cfg.config_path, "JSON file with parameter and state keys");
    app.add_option("--out", cfg.out_path, "write output to this file instead of stdout");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--natural-units", cfg.natural_units, "set m0 = c = hbar = 1");
    app.add_flag("--serial", cfg.serial, "disable parallel execution");
    app.add_flag("-v,--verbose", cfg.verbosity, "diagnostic chatter on stderr");

    app.add_option("--m0", cfg.params.m0, "rest mass");
    app.add_option("--c", cfg.params.c, "speed of light");
    app.add_option("--hbar", cfg.params.hbar, "reduced Planck constant");
    app.add_option("--d", cfg.params.d, "electric dipole moment (signed)");
    app.add_option("--lambda-m", cfg.params.lambda_m, "magnetic charge density");
    app.add_option("--kappa", cfg.params.kappa, "position-dependent-mass strength");
    app.add_option("--mj", cfg.mj_text, "total angular momentum, a fraction like 1/2 or -3/2");
    app.add_option("--n", cfg.state.n, "radial quantum number");
    app.add_option("--s", cfg.state.s, "spinor label, +1 or -1");
    app.add_option("--branch", cfg.state.branch, "energy branch, +1 or -1");

    CLI::App* cmd_spectrum = app.add_subcommand("spectrum", "closed-form energy of one state");
    CLI::App* cmd_table =
        app.add_subcommand("settings-table", "all eight sign settings at fixed |mj|, |d|");

    GridFlags grid;
    CLI::App* cmd_radial = app.add_subcommand("radial", "tabulate the radial profile R(rho)");
    cmd_radial->add_option("--rho-min", grid.rho_min, "grid start (default 1e-3 / eta)");
    cmd_radial->add_option("--rho-max", grid.rho_max, "grid end (default 40 / eta)");
    cmd_radial->add_option("--points", grid.points, "grid size");

    double spinor_time = 0.0;
    double spinor_theta = 0.0;
    CLI::App* cmd_spinor =
        app.add_subcommand("spinor", "tabulate the two spinor components on a rho grid");
    cmd_spinor->add_option("--rho-min", grid.rho_min, "grid start (default 1e-3 / eta)");
    cmd_spinor->add_option("--rho-max", grid.rho_max, "grid end (default 40 / eta)");
    cmd_spinor->add_option("--points", grid.points, "grid size");
    cmd_spinor->add_option("--time", spinor_time, "evaluation time");
    cmd_spinor->add_option("--theta", spinor_theta, "evaluation angle");

    VerifyFlags vf;
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "closed form vs the independent eigensolver");
    cmd_verify->add_option("--levels", vf.levels, "number of radial levels")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--tolerance", vf.tolerance, "relative agreement required");
    cmd_verify->add_option("--mesh", vf.mesh, "base mesh points (overrides automatic sizing)");
    cmd_verify->add_option("--samples", vf.samples, "residual scan sample count");

    SweepFlags sf;
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "energy tables over kappa or lambda_m");
    cmd_sweep->add_option("--figure", sf.figure, "preset 1..4")->check(CLI::Range(1, 4));
    cmd_sweep->add_option("--target", sf.target, "rel or nonrel")
        ->check(CLI::IsMember({"rel", "nonrel"}));
    cmd_sweep->add_option("--axis", sf.axis, "kappa or lambda-m")
        ->check(CLI::IsMember({"kappa", "lambda-m"}));
    cmd_sweep->add_option("--min", sf.min, "axis start");
    cmd_sweep->add_option("--max", sf.max, "axis end");
    cmd_sweep->add_option("--steps", sf.steps, "grid points");
    cmd_sweep->add_option("--levels", sf.levels, "radial levels to tabulate");
    cmd_sweep->add_option("--form", sf.form, "weak-coupling formula: signed or abs")
        ->check(CLI::IsMember({"signed", "abs"}));
    CLI::Option* figure_opt = cmd_sweep->get_option("--figure");
    for (const char* name : {"--target", "--axis", "--min", "--max", "--steps", "--levels",
                             "--form"})
        cmd_sweep->get_option(name)->excludes(figure_opt);

    std::string nonrel_form = "signed";
    CLI::App* cmd_nonrel =
        app.add_subcommand("nonrel", "weak-coupling energy of one (n, m) state");
    cmd_nonrel->add_option("--m", cfg.m, "angular integer m");
    cmd_nonrel->add_option("--form", nonrel_form, "signed or abs")
        ->check(CLI::IsMember({"signed", "abs"}));
    cmd_sweep->add_option("--m", cfg.m, "angular integer m for the nonrel target");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const bool m_flag = cmd_nonrel->count("--m") > 0 || cmd_sweep->count("--m") > 0;
        resolve_inputs(cfg, app, m_flag);

        std::string text;
        bool verify_pass = true;
        if (cmd_spectrum->parsed()) {
            text = render_spectrum(cfg);
        } else if (cmd_table->parsed()) {
            text = render_settings_table(cfg);
        } else if (cmd_radial->parsed()) {
            grid.have_min = cmd_radial->count("--rho-min") > 0;
            grid.have_max = cmd_radial->count("--rho-max") > 0;
            text = render_radial(cfg, grid);
        } else if (cmd_spinor->parsed()) {
            grid.have_min = cmd_spinor->count("--rho-min") > 0;
            grid.have_max = cmd_spinor->count("--rho-max") > 0;
            text = render_spinor(cfg, grid, spinor_time, spinor_theta);
        } else if (cmd_verify->parsed()) {
            text = render_verify(cfg, vf, verify_pass);
        } else if (cmd_sweep->parsed()) {
            text = render_sweep(cfg, sf, app, *cmd_sweep);
        } else if (cmd_nonrel->parsed()) {
            text = render_nonrel(cfg, nonrel_form == "abs" ? mdirac::NonRelForm::abs_l
                                                           : mdirac::NonRelForm::signed_l);
        }
        emit(text, cfg.out_path);
        return verify_pass ? 0 : 1;
    } catch (const mdirac::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const mdirac::DegenerateChannel& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const mdirac::SpectrumDivergence& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const mdirac::MeshTooCoarse& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
