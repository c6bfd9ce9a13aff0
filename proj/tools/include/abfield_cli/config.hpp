#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abfield/abfield.hpp"

namespace abfield::cli {

/// Malformed or inconsistent configuration (exit code 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GaugeConfig {
    std::string kind{"zero"};  ///< zero | polynomial | sinusoidal
    double c0{0.0};
    Vec3 linear{};
    std::array<double, 9> quadratic{};
    double amplitude{0.0};
    Vec3 wavevector{};
    double phase{0.0};
};

struct LoopConfig {
    std::string kind{"circle"};  ///< circle | polygon
    Point3 center{};
    double radius{0.05};
    Vec3 normal{0.0, 0.0, 1.0};
    int orientation{1};
    int samples{256};
    int windings{1};
    std::vector<Point3> vertices;
};

struct MeshConfig {
    double inner{0.02};
    double outer{0.05};
    double z{0.0};
    int radial_cells{32};
    int angular_cells{256};
    int disk_radial_cells{160};
    int disk_angular_cells{256};
};

struct FieldMapConfig {
    double plane_z{0.0};
    std::array<double, 2> x_range{-0.06, 0.06};
    std::array<double, 2> y_range{-0.06, 0.06};
    int nx{25};
    int ny{25};
};

struct TrajectoryConfig {
    Point3 position{0.05, 0.0, 0.0};
    Vec3 velocity{0.0, 1e6, 0.0};
    std::string ramp_shape{"smoothstep"};
    double ramp_orbits{1000.0};  ///< ramp duration in orbit times 2πρ0/|v0|
    double t_end_orbits{1000.0};
    long steps{100000};
    std::string model{"lorentz"};
    int record_every{100};
};

struct ConvergenceCase {
    double z_extent{0.0};
    int n_phi{0};
    int n_z{0};
};

struct ConvergenceConfig {
    double rho{0.02};
    std::vector<ConvergenceCase> cases{
        {0.2, 512, 512}, {0.5, 512, 512}, {1.0, 512, 512}, {2.0, 512, 512}};
};

struct ProfileConfig {
    double span_lambdas{30.0};
    int points{61};
};

struct Expectation {
    std::optional<Verdict> stokes_verdict;
    std::optional<double> max_relative_drift;
    std::optional<double> max_relative_error;  ///< convergence, last case
};

struct ScenarioConfig {
    ScenarioTag tag{ScenarioTag::original_ab};
    SolenoidSpec solenoid{0.01, 1e4, 1.0, {}, std::nullopt};
    std::optional<ShieldSpec> shield;
    GaugeConfig gauge;
    LoopConfig loop;
    MeshConfig mesh;
    FieldMapConfig field_map;
    TrajectoryConfig trajectory;
    ConvergenceConfig convergence;
    ProfileConfig profile;
    Expectation expectation;
    double charge{constants::electron_charge};
    double mass{constants::electron_mass};
    double hbar{constants::hbar};
    double planck{constants::planck};
};

/// Parses a JSON document. Unknown keys, wrong types and violated module
/// preconditions all raise ConfigError.
[[nodiscard]] ScenarioConfig parse_config(const std::string& json_text);

[[nodiscard]] ScalarGauge make_gauge(const GaugeConfig& g);
[[nodiscard]] ParametricLoop make_loop(const LoopConfig& l);
[[nodiscard]] ScenarioField make_scenario(const ScenarioConfig& c);

}  // namespace abfield::cli
