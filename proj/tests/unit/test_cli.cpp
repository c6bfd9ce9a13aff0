#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "abfield/abfield.hpp"
#include "abfield_cli/commands.hpp"
#include "abfield_cli/config.hpp"

namespace fs = std::filesystem;
using namespace abfield;
using cli::run_cli;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("abfield_cli_" + name);
    fs::remove_all(p);
    return p;
}

fs::path write_config(const fs::path& dir, const std::string& text) {
    fs::create_directories(dir);
    const fs::path p = dir / "config.json";
    std::ofstream(p) << text;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> read_csv(const fs::path& p) {
    std::ifstream f(p);
    std::string line;
    std::getline(f, line);
    std::vector<std::vector<double>> rows;
    while (std::getline(f, line)) {
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

const char* kTonomura = R"({"scenario": "tonomura_shielded",
  "shield": {"inner_m": 0.015, "outer_m": 0.02, "lambda_m": 0.001},
  "mesh": {"inner_m": 0.025, "outer_m": 0.05, "radial_cells": 16, "angular_cells": 128}})";

}  // namespace

TEST_CASE("field-map columns follow the closed form") {
    const fs::path out = scratch("fieldmap");
    REQUIRE(run({"field-map", "--out", out.string()}).code == 0);
    const auto rows = read_csv(out / "field_map.csv");
    REQUIRE(rows.size() == 625u);
    const double k = constants::mu0 * 1e4;
    for (const auto& r : rows) {
        const double rho = std::hypot(r[0], r[1]);
        const double aphi = std::hypot(r[3], r[4]);
        if (rho == 0.0) continue;
        const double want = rho > 0.01 ? k * 1e-4 / (2.0 * rho) : k * rho / 2.0;
        CHECK(std::fabs(aphi - want) <= 1e-14 * want);
        CHECK(r[8] == (rho <= 0.01 ? k : 0.0));
    }
}

TEST_CASE("field-map in the shielded travel region is zero") {
    const fs::path dir = scratch("fieldmap_ton");
    const fs::path cfg = write_config(dir, kTonomura);
    REQUIRE(run({"field-map", "--config", cfg.string(), "--out", (dir / "o").string()}).code == 0);
    const auto rows = read_csv(dir / "o" / "field_map.csv");
    CHECK_FALSE(rows.empty());
    for (const auto& r : rows) {
        CHECK(std::hypot(r[0], r[1]) > 0.02);
        for (int c = 3; c < 9; ++c) CHECK(r[c] == 0.0);
    }
}

TEST_CASE("malformed or unknown config: exit 2, no files") {
    const fs::path dir = scratch("badcfg");
    const fs::path bad = write_config(dir, "{\"solenoid\": {\"a_m\": 0.01,");
    const fs::path out = dir / "o";
    Result r = run({"phase", "--config", bad.string(), "--out", out.string()});
    CHECK(r.code == 2);
    CHECK_FALSE(fs::exists(out));

    const fs::path unknown = write_config(dir, R"({"solenoid": {"a_m": 0.01, "radius": 2}})");
    r = run({"phase", "--config", unknown.string(), "--out", out.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("solenoid.radius") != std::string::npos);
    CHECK_FALSE(fs::exists(out));

    const fs::path negative = write_config(dir, R"({"solenoid": {"a_m": -0.01}})");
    CHECK(run({"stokes", "--config", negative.string(), "--out", out.string()}).code == 2);
    CHECK(run({"phase", "--format", "xml"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
}

TEST_CASE("unwritable output path") {
    const fs::path dir = scratch("unwritable");
    fs::create_directories(dir);
    std::ofstream(dir / "file") << "x";
    const Result r = run({"phase", "--out", (dir / "file").string()});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("phase for both scenarios and zero current") {
    const fs::path dir = scratch("phase");
    Result r = run({"phase", "--out", (dir / "a").string()});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(slurp(dir / "a" / "phase.json"));
    const double want = constants::electron_charge / constants::hbar * 4e-7 * constants::pi *
                        constants::pi;
    CHECK(std::fabs(j.at("phase_rad").get<double>() - want) < 1e-9 * std::fabs(want));

    const fs::path ton = write_config(dir, kTonomura);
    r = run({"phase", "--config", ton.string(), "--out", (dir / "b").string()});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).at("phase_rad").get<double>() == 0.0);

    const fs::path zero = write_config(dir / "z", R"({"solenoid": {"I_A": 0}})");
    r = run({"phase", "--config", zero.string(), "--out", (dir / "c").string()});
    CHECK(nlohmann::json::parse(r.out).at("phase_rad").get<double>() == 0.0);

    const fs::path inside = write_config(dir / "i", R"({"loop": {"radius_m": 0.005}})");
    CHECK(run({"phase", "--config", inside.string(), "--out", (dir / "d").string()}).code == 2);
}

TEST_CASE("stokes exit codes follow the expectation") {
    const fs::path dir = scratch("stokes");
    Result r = run({"stokes", "--out", dir.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("VERDICT    holds") != std::string::npos);
    CHECK(fs::exists(dir / "stokes.json"));
    CHECK(fs::exists(dir / "misuse.json"));

    const fs::path wrong = write_config(dir / "w", R"({"expectation": {"stokes_verdict": "violated"}})");
    CHECK(run({"stokes", "--config", wrong.string(), "--out", dir.string()}).code == 3);

    const fs::path ton = write_config(dir / "t", kTonomura);
    r = run({"stokes", "--config", ton.string(), "--out", (dir / "t").string()});
    CHECK(r.code == 0);
    const auto mis = nlohmann::json::parse(slurp(dir / "t" / "misuse.json"));
    CHECK(std::fabs(mis.at("gap_Tm2").get<double>() - 4e-7 * constants::pi * constants::pi) <
          1e-2 * 4e-7 * constants::pi * constants::pi);
}

TEST_CASE("trajectory and convergence outputs") {
    const fs::path dir = scratch("traj");
    const fs::path cfg = write_config(dir, R"({"trajectory": {"steps": 20000, "record_every": 1000,
        "model": "total_derivative"}, "expectation": {"max_relative_drift": 1e-3}})");
    Result r = run({"trajectory", "--config", cfg.string(), "--out", dir.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("max_relative_drift=") != std::string::npos);
    CHECK(read_csv(dir / "trajectory.csv").size() == 21u);

    const fs::path strict = write_config(dir / "s", R"({"trajectory": {"steps": 2000},
        "expectation": {"max_relative_drift": 1e-9}})");
    CHECK(run({"trajectory", "--config", strict.string(), "--out", dir.string()}).code == 3);

    r = run({"convergence", "--out", dir.string(), "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(slurp(dir / "convergence.json"));
    const auto& sweep = j.at("sweep");
    REQUIRE(sweep.size() == 4u);
    for (std::size_t i = 1; i < sweep.size(); ++i) {
        CHECK(sweep[i].at("relative_error").get<double>() < sweep[i - 1].at("relative_error").get<double>());
    }
}

TEST_CASE("screen-profile needs a shield") {
    const fs::path dir = scratch("profile");
    CHECK(run({"screen-profile", "--out", dir.string()}).code == 2);
    const fs::path cfg = write_config(dir, kTonomura);
    CHECK(run({"screen-profile", "--config", cfg.string(), "--out", dir.string()}).code == 0);
    const auto rows = read_csv(dir / "profile.csv");
    REQUIRE(rows.size() == 61u);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][1] < rows[i - 1][1]);
}

TEST_CASE("config parser") {
    const cli::ScenarioConfig c = cli::parse_config(R"({"scenario": "original_ab",
        "gauge": {"kind": "polynomial", "quadratic": [1,0,0, 0,1,0, 0,0,1]},
        "loop": {"kind": "polygon", "vertices_m": [[0.03,0,0],[0,0.03,0],[-0.03,-0.03,0]]}})");
    CHECK(c.loop.vertices.size() == 3u);
    CHECK(c.gauge.kind == "polynomial");
    CHECK_THROWS_AS((void)cli::parse_config(R"({"gauge": {"kind": "azimuthal"}})"), cli::ConfigError);
    CHECK_THROWS_AS((void)cli::parse_config(R"({"gauge": {"kind": "polynomial", "quadratic": [0,1,0, 0,0,0, 0,0,0]}})"),
                    cli::ConfigError);
    CHECK_THROWS_AS((void)cli::parse_config(R"({"scenario": "tonomura_shielded"})"), cli::ConfigError);
    CHECK_THROWS_AS((void)cli::parse_config(R"({"mesh": {"inner_m": 0.005}})"), cli::ConfigError);
    CHECK_THROWS_AS((void)cli::parse_config(R"({"solenoid": {"a_m": "big"}})"), cli::ConfigError);
    CHECK_THROWS_AS((void)cli::parse_config(R"([1, 2])"), cli::ConfigError);
}
