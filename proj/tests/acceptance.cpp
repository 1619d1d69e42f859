// Acceptance gate: one line per criterion, exit 0 only if every line is PASS.
#include "monopole_dirac/laguerre.hpp"
#include "monopole_dirac/model.hpp"
#include "monopole_dirac/oracle.hpp"
#include "monopole_dirac/quadrature.hpp"
#include "monopole_dirac/spectrum.hpp"
#include "monopole_dirac/sweep.hpp"
#include "monopole_dirac/wavefunction.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>
#include <sys/wait.h>

using namespace mdirac;

namespace {

int g_failures = 0;

void report(int index, bool pass, const std::string& detail) {
    if (!pass) ++g_failures;
    std::printf("C%d %s  %s\n", index, pass ? "PASS" : "FAIL", detail.c_str());
}

void run_criterion(int index, const std::function<std::pair<bool, std::string>()>& body) {
    try {
        const auto [pass, detail] = body();
        report(index, pass, detail);
    } catch (const std::exception& e) {
        report(index, false, std::string("exception: ") + e.what());
    }
}

QuantumState make_state(int n, int s) {
    QuantumState q;
    q.n = n;
    q.mj_numerator = 1;
    q.s = s;
    q.branch = +1;
    return q;
}

PhysicalParameters grid_params(double kappa) {
    return PhysicalParameters::natural_units(-1.0, 1.0, kappa);
}

std::string g17(double v) { return format_g17(v); }

double simpson_norm(const RadialSolution& radial, double upper, int intervals) {
    const double h = upper / intervals;
    double sum = 0.0;
    for (int i = 0; i <= intervals; ++i) {
        const double rho = i * h;
        const double f = rho > 0.0 ? radial(rho) * radial(rho) * rho : 0.0;
        const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        sum += w * f;
    }
    return sum * h / 3.0;
}

int count_sign_changes(const RadialSolution& radial, double lo, double hi, int samples) {
    std::vector<double> values(samples);
    double peak = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double rho = lo + (hi - lo) * i / (samples - 1);
        values[i] = radial(rho);
        peak = std::max(peak, std::abs(values[i]));
    }
    int changes = 0;
    double prev = 0.0;
    for (double v : values) {
        if (std::abs(v) < 1e-9 * peak) continue;
        if (prev != 0.0 && ((v > 0) != (prev > 0))) ++changes;
        prev = v;
    }
    return changes;
}

std::string run_cli(const std::string& args, int& exit_code) {
    const char* bin = std::getenv("CLI_BIN");
#ifdef CLI_BIN
    if (!bin) bin = CLI_BIN;
#endif
    if (!bin) throw Error("CLI_BIN not set");
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw Error("popen failed");
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Shared between criteria 1 and 8: oracle node counts per (kappa, s, level).
std::vector<ChannelComparison> g_reference_comparisons; // kappa = 2, s = -1

std::pair<bool, std::string> oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    double max_rel = 0.0;
    int levels_checked = 0;
    for (double kappa : {0.5, 2.0, 5.0}) {
        for (int s : {+1, -1}) {
            const auto p = grid_params(kappa);
            const auto q = make_state(0, s);
            const auto comparisons = verify_channel(p, q, 3);
            for (const auto& c : comparisons) {
                max_rel = std::max(max_rel, c.rel_disagreement);
                ++levels_checked;
            }
            if (kappa == 2.0 && s == -1) g_reference_comparisons = comparisons;
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = max_rel <= 1e-4 && seconds <= 60.0 && levels_checked == 18;
    char line[256];
    std::snprintf(line, sizeof line,
                  "closed form vs eigensolver: max rel %.3g over %d levels (tol 1e-4), "
                  "runtime %.1f s (limit 60 s)",
                  max_rel, levels_checked, seconds);
    return {pass, line};
}

std::pair<bool, std::string> ode_residual() {
    double max_residual = 0.0;
    for (double kappa : {0.5, 2.0, 5.0}) {
        for (int s : {+1, -1}) {
            for (int n : {0, 1, 2}) {
                const auto p = grid_params(kappa);
                const auto q = make_state(n, s);
                const auto spectrum = relativistic_energy(p, q);
                max_residual = std::max(max_residual, residual_scan(p, q, spectrum, 501));
            }
        }
    }
    char line[160];
    std::snprintf(line, sizeof line, "analytic radial ODE residual: max %.3g (tol 1e-8)",
                  max_residual);
    return {max_residual <= 1e-8, line};
}

std::pair<bool, std::string> quantization_identity() {
    double max_dev = 0.0;
    int states = 0;
    auto check = [&](const PhysicalParameters& p, const QuantumState& q) {
        const auto r = relativistic_energy(p, q);
        const double eta_e = eta_from_energy(p, r.energy);
        if (!(eta_e > 0.0)) throw Error("state unexpectedly on the continuum edge");
        const double lhs = r.derived.rho0 / (2.0 * eta_e);
        max_dev = std::max(max_dev, std::abs(lhs - r.z0) / r.z0);
        ++states;
    };
    for (double kappa : {0.5, 2.0, 5.0})
        for (int s : {+1, -1})
            for (int n : {0, 1, 2}) check(grid_params(kappa), make_state(n, s));
    for (int i = 0; i < 100; ++i) {
        const double kappa = 0.1 + 9.9 * i / 99.0;
        check(grid_params(kappa), make_state(i % 3, i % 2 ? +1 : -1));
    }
    for (int i = 0; i < 100; ++i) {
        const double lm = 0.1 + 9.9 * i / 99.0;
        check(PhysicalParameters::natural_units(-1.0, lm, 2.0), make_state(i % 3, -1));
    }
    char line[200];
    std::snprintf(line, sizeof line,
                  "rho0/(2 eta) = n + m_s + 1/2: max rel deviation %.3g over %d states "
                  "(tol 1e-12), eta taken from the energy",
                  max_dev, states);
    return {max_dev <= 1e-12, line};
}

std::pair<bool, std::string> symmetry_and_limits() {
    bool pass = true;
    std::string detail;

    for (double kappa : {0.5, 2.0, 5.0})
        for (int s : {+1, -1})
            for (int n : {0, 1, 2}) {
                auto q = make_state(n, s);
                const double ep = relativistic_energy(grid_params(kappa), q).energy;
                q.branch = -1;
                const double em = relativistic_energy(grid_params(kappa), q).energy;
                if (ep != -em) pass = false;
            }
    detail += "branch symmetry exact; ";

    const auto edge = relativistic_energy(grid_params(0.0), make_state(0, -1));
    if (!(edge.energy == 1.0 && edge.continuum_edge)) pass = false;
    detail += "E(kappa=0) = rest energy exactly; ";

    const auto fig1 = run_sweep(figure_defaults(1));
    for (int n : {0, 1, 2}) {
        double prev = 2.0;
        for (const auto& row : fig1.rows)
            if (row.n == n) {
                if (!(row.energy < prev)) pass = false;
                prev = row.energy;
            }
    }
    detail += "decreasing in kappa; ";

    const double deep = relativistic_energy(grid_params(1000.0), make_state(0, +1)).energy;
    if (!(deep < 5e-3)) pass = false;
    detail += "ground state (n=0, s=+1) at kappa=1e3: E = " + g17(deep) + " < 5e-3; ";

    double prev_lm = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double lm = 0.1 + 9.9 * i / 99.0;
        const auto rows = settings_table(PhysicalParameters::natural_units(-1.0, lm, 2.0), 0, 1);
        const double e = rows[3].result.energy;
        if (!(e > prev_lm)) pass = false;
        prev_lm = e;
    }
    detail += "setting 4 increasing in lambda_m; ";

    double prev_n = 0.0;
    for (int n = 0; n <= 20; ++n) {
        const double e = relativistic_energy(grid_params(2.0), make_state(n, -1)).energy;
        if (!(e > prev_n)) pass = false;
        prev_n = e;
    }
    detail += "increasing in n";
    return {pass, detail};
}

std::pair<bool, std::string> table_identities() {
    const auto rows = settings_table(grid_params(2.0), 0, 1);
    const auto e = [&](int setting) { return rows[setting - 1].result.energy; };
    bool pass = rows.size() == 8;
    pass = pass && e(1) == e(6) && e(2) == e(5) && e(3) == e(8) && e(4) == e(7);
    for (int i = 1; i <= 8; ++i) {
        if (i != 4 && !(e(4) >= e(i))) pass = false;
        if (i != 1 && !(e(1) <= e(i))) pass = false;
    }
    pass = pass && e(4) > e(2) && e(1) < e(2);
    char line[220];
    std::snprintf(line, sizeof line,
                  "eight-setting table: pairs (1,6) (2,5) (3,8) (4,7) bit-identical; "
                  "setting 4 max (E = %s), setting 1 min (E = %s)",
                  g17(e(4)).c_str(), g17(e(1)).c_str());
    return {pass, line};
}

std::pair<bool, std::string> nonrelativistic_limit() {
    const double kappas[3] = {0.02, 0.01, 0.005};
    double x[3], y[3];
    double gap_001 = 0.0, eps_001 = 0.0;
    for (int i = 0; i < 3; ++i) {
        const auto p = grid_params(kappas[i]);
        const auto g = nonrel_limit_check(p, make_state(0, +1));
        x[i] = std::log(kappas[i]);
        y[i] = std::log(std::abs(g.gap));
        if (i == 1) {
            gap_001 = std::abs(g.gap);
            eps_001 = std::abs(g.epsilon);
        }
    }
    const double xbar = (x[0] + x[1] + x[2]) / 3.0;
    const double ybar = (y[0] + y[1] + y[2]) / 3.0;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 3; ++i) {
        num += (x[i] - xbar) * (y[i] - ybar);
        den += (x[i] - xbar) * (x[i] - xbar);
    }
    const double slope = num / den;
    const bool pass = std::abs(slope - 4.0) <= 0.2 && gap_001 <= 1e-2 * eps_001;
    char line[220];
    std::snprintf(line, sizeof line,
                  "|(E - rest) - epsilon| ~ kappa^4: log-log slope %.4f (4 +/- 0.2); "
                  "gap at kappa=0.01 is %.3g = %.3g * |epsilon| (limit 1e-2)",
                  slope, gap_001, gap_001 / eps_001);
    return {pass, line};
}

std::pair<bool, std::string> special_functions() {
    double max_ode = 0.0;
    for (int n : {0, 1, 2, 5, 12, 25})
        for (double alpha : {0.25, 1.0, 6.0, 20.0})
            for (double xv : {0.0, 0.5, 3.0, 17.0, 60.0}) {
                const double l = laguerre(n, alpha, xv);
                const double d1 = laguerre_derivative(n, alpha, xv);
                const double d2 = laguerre_second_derivative(n, alpha, xv);
                const double lhs = xv * d2 + (alpha + 1.0 - xv) * d1 + n * l;
                const double scale = std::abs(xv * d2) + std::abs((alpha + 1.0 - xv) * d1) +
                                     std::abs(n * l) + 1.0;
                max_ode = std::max(max_ode, std::abs(lhs) / scale);
            }

    double max_orth = 0.0;
    const double alpha = 6.0;
    for (int n1 = 0; n1 <= 10; ++n1) {
        const double norm1 = std::sqrt(weighted_inner_product(n1, n1, alpha, 64));
        for (int n2 = 0; n2 <= n1; ++n2) {
            const double norm2 = std::sqrt(weighted_inner_product(n2, n2, alpha, 64));
            const double ip = weighted_inner_product(n1, n2, alpha, 64) / (norm1 * norm2);
            const double target = n1 == n2 ? 1.0 : 0.0;
            max_orth = std::max(max_orth, std::abs(ip - target));
        }
    }

    double max_fd = 0.0;
    const double h = 1e-6;
    for (int n : {1, 2, 5, 12})
        for (double a : {0.5, 6.0})
            for (double xv : {0.5, 3.0, 17.0}) {
                const double fd = (laguerre(n, a, xv + h) - laguerre(n, a, xv - h)) / (2.0 * h);
                const double an = laguerre_derivative(n, a, xv);
                max_fd = std::max(max_fd, std::abs(fd - an) / std::max(1.0, std::abs(an)));
            }

    const bool pass = max_ode <= 1e-9 && max_orth <= 1e-8 && max_fd <= 1e-8;
    char line[220];
    std::snprintf(line, sizeof line,
                  "Laguerre ODE residual max %.3g (tol 1e-9); orthonormality defect max %.3g "
                  "(tol 1e-8); derivative vs finite difference max %.3g (tol 1e-8)",
                  max_ode, max_orth, max_fd);
    return {pass, line};
}

std::pair<bool, std::string> eigenfunction_structure() {
    if (g_reference_comparisons.size() != 3)
        throw Error("criterion 1 must run first to supply oracle node counts");
    const auto p = grid_params(2.0);
    bool pass = true;
    double max_norm_dev = 0.0;
    for (int n : {0, 1, 2}) {
        const RadialSolution radial(p, make_state(n, -1));
        const double eta = radial.eta();
        const int analytic = count_sign_changes(radial, 1e-3 / eta, 40.0 / eta, 4000);
        const int oracle = g_reference_comparisons[n].sign_changes;
        if (analytic != n || oracle != n) pass = false;
        const double norm = simpson_norm(radial, 80.0 / eta, 200000);
        max_norm_dev = std::max(max_norm_dev, std::abs(norm - 1.0));
    }
    if (max_norm_dev > 1e-8) pass = false;
    char line[200];
    std::snprintf(line, sizeof line,
                  "radial node counts (analytic vs eigensolver) equal n for n = 0,1,2; "
                  "normalization integrals within %.3g of 1 (tol 1e-8)",
                  max_norm_dev);
    return {pass, line};
}

std::pair<bool, std::string> reproducibility() {
    const char* golden_dir = std::getenv("GOLDEN_DIR");
#ifdef GOLDEN_DIR
    if (!golden_dir) golden_dir = GOLDEN_DIR;
#endif
    if (!golden_dir) throw Error("GOLDEN_DIR not set");
    bool pass = true;
    for (int f = 1; f <= 4; ++f) {
        const std::string expected = to_csv(run_sweep(figure_defaults(f)));
        const std::string frozen = slurp(std::string(golden_dir) + "/fig" + std::to_string(f) +
                                         ".csv");
        if (expected != frozen) pass = false;
    }

    int code = 0;
    const std::string cli_sweep = run_cli("sweep --figure 1", code);
    if (code != 0 || cli_sweep != to_csv(run_sweep(figure_defaults(1)))) pass = false;

    const auto q = make_state(0, -1);
    auto qm = q;
    qm.branch = -1;
    const auto up = relativistic_energy(grid_params(2.0), q);
    const auto dn = relativistic_energy(grid_params(2.0), qm);
    std::ostringstream expected;
    expected << "E_plus = " << g17(up.energy) << '\n'
             << "E_minus = " << g17(dn.energy) << '\n'
             << "eta = " << g17(up.eta) << '\n'
             << "xi = " << g17(up.derived.xi) << '\n'
             << "m_s = " << g17(up.derived.m_s) << '\n'
             << "z0 = " << g17(up.z0) << '\n'
             << "hmw_phase = " << g17(hmw_phase(grid_params(2.0))) << '\n'
             << "continuum_edge = false\n";
    const std::string cli_spec =
        run_cli("spectrum --kappa 2 --lambda-m 1 --d -1 --mj 1/2 --s -1 --n 0", code);
    if (code != 0 || cli_spec != expected.str()) pass = false;

    return {pass, "golden sweep files byte-identical for figures 1-4; command-line output "
                  "equals library results byte for byte"};
}

} // namespace

int main() {
    run_criterion(1, oracle_equivalence);
    run_criterion(2, ode_residual);
    run_criterion(3, quantization_identity);
    run_criterion(4, symmetry_and_limits);
    run_criterion(5, table_identities);
    run_criterion(6, nonrelativistic_limit);
    run_criterion(7, special_functions);
    run_criterion(8, eigenfunction_structure);
    run_criterion(9, reproducibility);

    if (g_failures == 0) {
        std::printf("Overall: PASS (9/9)\n");
        return 0;
    }
    std::printf("Overall: FAIL (%d of 9 criteria failed)\n", g_failures);
    return 1;
}
