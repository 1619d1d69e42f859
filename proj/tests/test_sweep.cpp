#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "monopole_dirac/errors.hpp"
#include "monopole_dirac/sweep.hpp"

#include <json.hpp>

#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace mdirac;

namespace {

struct ParsedRow {
    std::string axis;
    double axis_value;
    int n;
    double energy;
};

std::vector<ParsedRow> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    REQUIRE(std::getline(in, line));
    REQUIRE(line == "axis,axis_value,n,energy");
    std::vector<ParsedRow> rows;
    while (std::getline(in, line)) {
        ParsedRow r;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const auto c3 = line.find(',', c2 + 1);
        r.axis = line.substr(0, c1);
        r.axis_value = std::strtod(line.substr(c1 + 1, c2 - c1 - 1).c_str(), nullptr);
        r.n = std::atoi(line.substr(c2 + 1, c3 - c2 - 1).c_str());
        r.energy = std::strtod(line.substr(c3 + 1).c_str(), nullptr);
        rows.push_back(r);
    }
    return rows;
}

// energy as a function of axis value, per level
std::map<int, std::vector<double>> columns(const SweepTable& t) {
    std::map<int, std::vector<double>> by_level;
    for (const auto& r : t.rows) by_level[r.n].push_back(r.energy);
    return by_level;
}

} // namespace

TEST_CASE("spec validation") {
    SweepSpec spec;
    CHECK_NOTHROW(spec.validate());

    SUBCASE("empty levels") {
        spec.levels.clear();
        CHECK_THROWS_AS(spec.validate(), ValidationError);
    }
    SUBCASE("inverted range") {
        spec.min = 2.0;
        spec.max = 1.0;
        CHECK_THROWS_AS(spec.validate(), ValidationError);
    }
    SUBCASE("degenerate range") {
        spec.min = spec.max = 1.0;
        CHECK_THROWS_AS(spec.validate(), ValidationError);
    }
    SUBCASE("single step") {
        spec.steps = 1;
        CHECK_THROWS_AS(spec.validate(), ValidationError);
    }
    SUBCASE("negative level") {
        spec.levels = {0, -1};
        CHECK_THROWS_AS(spec.validate(), ValidationError);
    }
}

TEST_CASE("figure presets exist and out-of-range ones do not") {
    for (int f = 1; f <= 4; ++f) CHECK_NOTHROW(figure_defaults(f).validate());
    CHECK_THROWS_AS(figure_defaults(0), ValidationError);
    CHECK_THROWS_AS(figure_defaults(5), ValidationError);
}

TEST_CASE("coupling sweep decreases in kappa and increases in n") {
    const auto table = run_sweep(figure_defaults(1));
    CHECK(table.rows.size() == 300);
    CHECK(table.diagnostics.empty());

    // sorted by (n, axis value)
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        const auto& a = table.rows[i - 1];
        const auto& b = table.rows[i];
        CHECK((a.n < b.n || (a.n == b.n && a.axis_value < b.axis_value)));
    }

    const auto cols = columns(table);
    for (const auto& [n, col] : cols)
        for (std::size_t i = 1; i < col.size(); ++i) CHECK(col[i] < col[i - 1]);
    for (std::size_t i = 0; i < cols.at(0).size(); ++i) {
        CHECK(cols.at(0)[i] < cols.at(1)[i]);
        CHECK(cols.at(1)[i] < cols.at(2)[i]);
    }
}

TEST_CASE("density sweep increases in lambda_m and in n") {
    const auto table = run_sweep(figure_defaults(2));
    const auto cols = columns(table);
    for (const auto& [n, col] : cols)
        for (std::size_t i = 1; i < col.size(); ++i) CHECK(col[i] > col[i - 1]);
    for (std::size_t i = 0; i < cols.at(0).size(); ++i) {
        CHECK(cols.at(0)[i] < cols.at(1)[i]);
        CHECK(cols.at(1)[i] < cols.at(2)[i]);
    }
}

TEST_CASE("weak-coupling sweeps") {
    SUBCASE("binding deepens with kappa") {
        const auto table = run_sweep(figure_defaults(3));
        CHECK(table.spec.note.find("0.1") != std::string::npos);
        const auto cols = columns(table);
        for (const auto& [n, col] : cols) {
            for (std::size_t i = 1; i < col.size(); ++i) CHECK(col[i] < col[i - 1]);
            for (double e : col) CHECK(e < 0.0);
        }
    }
    SUBCASE("levels rise toward zero with n and with lambda_m") {
        const auto table = run_sweep(figure_defaults(4));
        const auto cols = columns(table);
        for (std::size_t i = 0; i < cols.at(0).size(); ++i) {
            CHECK(cols.at(0)[i] < cols.at(1)[i]);
            CHECK(cols.at(1)[i] < cols.at(2)[i]);
            CHECK(cols.at(2)[i] < 0.0);
        }
        for (const auto& [n, col] : cols)
            for (std::size_t i = 1; i < col.size(); ++i) CHECK(col[i] > col[i - 1]);
    }
}

TEST_CASE("a divergent grid point becomes a diagnostic, not an abort") {
    SweepSpec spec;
    spec.target = SweepTarget::nonrelativistic;
    spec.axis = SweepAxis::lambda_m;
    spec.min = 0.25;
    spec.max = 0.75;
    spec.steps = 3; // lands exactly on lambda_m = 1/2
    spec.levels = {0};
    spec.base = PhysicalParameters::natural_units(1.0, 1.0, 0.01);
    spec.m = 0;

    const auto table = run_sweep(spec);
    CHECK(table.rows.size() + table.diagnostics.size() == 3);
    REQUIRE(table.diagnostics.size() == 1);
    CHECK(table.diagnostics[0].axis_value == 0.5);
    CHECK(table.diagnostics[0].error == "SpectrumDivergence");
}

TEST_CASE("csv output is stable, parseable, and lossless") {
    const auto spec = figure_defaults(1);
    const auto table = run_sweep(spec);
    const std::string text = to_csv(table);

    CHECK(text.find('\r') == std::string::npos);
    CHECK(to_csv(run_sweep(spec)) == text);

    const auto parsed = parse_csv(text);
    REQUIRE(parsed.size() == table.rows.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        CHECK(parsed[i].axis == "kappa");
        CHECK(parsed[i].axis_value == table.rows[i].axis_value);
        CHECK(parsed[i].n == table.rows[i].n);
        CHECK(parsed[i].energy == table.rows[i].energy);
    }
}

TEST_CASE("json output carries the spec echo and the rows") {
    const auto spec = figure_defaults(3);
    const auto table = run_sweep(spec);
    const auto j = nlohmann::json::parse(to_json_string(table));

    CHECK(j.at("spec").at("target") == "nonrelativistic");
    CHECK(j.at("spec").at("axis") == "kappa");
    CHECK(j.at("spec").at("steps").get<int>() == spec.steps);
    CHECK(j.at("spec").at("note").get<std::string>() == spec.note);
    CHECK(j.at("rows").size() == table.rows.size());
    CHECK(j.at("diagnostics").empty());

    const auto& first = j.at("rows").at(0);
    CHECK(first.at("axis_value").get<double>() == table.rows[0].axis_value);
    CHECK(first.at("n").get<int>() == table.rows[0].n);
    CHECK(first.at("energy").get<double>() == table.rows[0].energy);
}
