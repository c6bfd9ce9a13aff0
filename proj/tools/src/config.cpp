#include "abfield_cli/config.hpp"

#include <cmath>
#include <set>

#include <json.hpp>

namespace abfield::cli {

using Json = nlohmann::json;

namespace {

// Section reader that rejects keys it was not asked about.
class Section {
public:
    Section(const Json& j, std::string name) : j_(j), name_(std::move(name)) {
        if (!j_.is_object()) throw ConfigError(name_ + ": expected an object");
    }

    ~Section() = default;
    Section(const Section&) = delete;
    Section& operator=(const Section&) = delete;

    bool has(const std::string& key) {
        seen_.insert(key);
        return j_.contains(key);
    }

    const Json& raw(const std::string& key) {
        seen_.insert(key);
        return j_.at(key);
    }

    void number(const std::string& key, double& dst) {
        if (!has(key)) return;
        const Json& v = j_.at(key);
        if (!v.is_number()) throw ConfigError(path(key) + ": expected a number");
        dst = v.get<double>();
        if (!std::isfinite(dst)) throw ConfigError(path(key) + ": must be finite");
    }

    template <class Int>
    void integer(const std::string& key, Int& dst) {
        if (!has(key)) return;
        const Json& v = j_.at(key);
        if (!v.is_number_integer()) throw ConfigError(path(key) + ": expected an integer");
        dst = v.get<Int>();
    }

    void string(const std::string& key, std::string& dst) {
        if (!has(key)) return;
        const Json& v = j_.at(key);
        if (!v.is_string()) throw ConfigError(path(key) + ": expected a string");
        dst = v.get<std::string>();
    }

    void vec3(const std::string& key, Vec3& dst) {
        if (!has(key)) return;
        dst = to_vec3(j_.at(key), path(key));
    }

    void point(const std::string& key, Point3& dst) {
        if (!has(key)) return;
        dst = Point3(to_vec3(j_.at(key), path(key)));
    }

    void pair(const std::string& key, std::array<double, 2>& dst) {
        if (!has(key)) return;
        const auto v = numbers(j_.at(key), path(key));
        if (v.size() != 2) throw ConfigError(path(key) + ": expected [min, max]");
        dst = {v[0], v[1]};
    }

    /// Throws if the object holds keys nobody asked for.
    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it) {
            if (!seen_.count(it.key())) throw ConfigError(path(it.key()) + ": unknown key");
        }
    }

    [[nodiscard]] std::string path(const std::string& key) const { return name_ + "." + key; }

    static std::vector<double> numbers(const Json& v, const std::string& where) {
        if (!v.is_array()) throw ConfigError(where + ": expected an array of numbers");
        std::vector<double> out;
        for (const auto& e : v) {
            if (!e.is_number()) throw ConfigError(where + ": expected an array of numbers");
            out.push_back(e.get<double>());
            if (!std::isfinite(out.back())) throw ConfigError(where + ": must be finite");
        }
        return out;
    }

    static Vec3 to_vec3(const Json& v, const std::string& where) {
        const auto n = numbers(v, where);
        if (n.size() != 3) throw ConfigError(where + ": expected [x, y, z]");
        return {n[0], n[1], n[2]};
    }

private:
    const Json& j_;
    std::string name_;
    std::set<std::string> seen_;
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(msg);
}

void parse_solenoid(const Json& j, ScenarioConfig& c) {
    Section s(j, "solenoid");
    s.number("a_m", c.solenoid.radius);
    s.number("n_per_m", c.solenoid.turns_per_length);
    s.number("I_A", c.solenoid.current);
    s.finish();
}

void parse_shield(const Json& j, ScenarioConfig& c) {
    Section s(j, "shield");
    ShieldSpec sh;
    sh.inner_radius = c.solenoid.radius * 1.2;
    sh.outer_radius = c.solenoid.radius * 2.0;
    s.number("inner_m", sh.inner_radius);
    s.number("outer_m", sh.outer_radius);
    s.number("m_carrier_kg", sh.carrier_mass);
    s.number("e_star_C", sh.effective_charge);
    s.number("psi_inf", sh.psi_inf);
    if (s.has("lambda_m")) {
        double l = 0.0;
        s.number("lambda_m", l);
        sh.lambda_override = l;
    }
    s.finish();
    c.shield = sh;
}

void parse_gauge(const Json& j, GaugeConfig& g) {
    Section s(j, "gauge");
    s.string("kind", g.kind);
    s.number("c0", g.c0);
    s.vec3("linear", g.linear);
    if (s.has("quadratic")) {
        const auto q = Section::numbers(s.raw("quadratic"), "gauge.quadratic");
        require(q.size() == 9, "gauge.quadratic: expected 9 numbers (row-major 3x3)");
        std::copy(q.begin(), q.end(), g.quadratic.begin());
    }
    s.number("amplitude", g.amplitude);
    s.vec3("wavevector", g.wavevector);
    s.number("phase", g.phase);
    s.finish();
    require(g.kind == "zero" || g.kind == "polynomial" || g.kind == "sinusoidal",
            "gauge.kind: expected zero, polynomial or sinusoidal");
    if (g.kind == "polynomial") {
        const auto& q = g.quadratic;
        require(q[1] == q[3] && q[2] == q[6] && q[5] == q[7], "gauge.quadratic: must be symmetric");
    }
}

void parse_loop(const Json& j, LoopConfig& l) {
    Section s(j, "loop");
    s.string("kind", l.kind);
    s.point("center_m", l.center);
    s.number("radius_m", l.radius);
    s.vec3("normal", l.normal);
    s.integer("orientation", l.orientation);
    s.integer("samples", l.samples);
    s.integer("windings", l.windings);
    if (s.has("vertices_m")) {
        const Json& v = s.raw("vertices_m");
        require(v.is_array(), "loop.vertices_m: expected an array of points");
        l.vertices.clear();
        for (const auto& p : v) l.vertices.emplace_back(Section::to_vec3(p, "loop.vertices_m"));
    }
    s.finish();
    require(l.kind == "circle" || l.kind == "polygon", "loop.kind: expected circle or polygon");
}

void parse_mesh(const Json& j, MeshConfig& m) {
    Section s(j, "mesh");
    s.number("inner_m", m.inner);
    s.number("outer_m", m.outer);
    s.number("z_m", m.z);
    s.integer("radial_cells", m.radial_cells);
    s.integer("angular_cells", m.angular_cells);
    s.integer("disk_radial_cells", m.disk_radial_cells);
    s.integer("disk_angular_cells", m.disk_angular_cells);
    s.finish();
}

void parse_field_map(const Json& j, FieldMapConfig& f) {
    Section s(j, "field_map");
    s.number("plane_z_m", f.plane_z);
    s.pair("x_range_m", f.x_range);
    s.pair("y_range_m", f.y_range);
    s.integer("nx", f.nx);
    s.integer("ny", f.ny);
    s.finish();
}

void parse_trajectory(const Json& j, TrajectoryConfig& t) {
    Section s(j, "trajectory");
    s.point("position_m", t.position);
    s.vec3("velocity_mps", t.velocity);
    s.string("ramp_shape", t.ramp_shape);
    s.number("ramp_orbits", t.ramp_orbits);
    s.number("t_end_orbits", t.t_end_orbits);
    s.integer("steps", t.steps);
    s.string("model", t.model);
    s.integer("record_every", t.record_every);
    s.finish();
}

void parse_convergence(const Json& j, ConvergenceConfig& c) {
    Section s(j, "convergence");
    s.number("rho_m", c.rho);
    if (s.has("cases")) {
        const Json& arr = s.raw("cases");
        require(arr.is_array() && !arr.empty(), "convergence.cases: expected a non-empty array");
        c.cases.clear();
        for (const auto& e : arr) {
            Section cs(e, "convergence.cases[]");
            ConvergenceCase cc;
            cs.number("z_extent_m", cc.z_extent);
            cs.integer("n_phi", cc.n_phi);
            cs.integer("n_z", cc.n_z);
            cs.finish();
            c.cases.push_back(cc);
        }
    }
    s.finish();
}

void parse_profile(const Json& j, ProfileConfig& p) {
    Section s(j, "profile");
    s.number("span_lambdas", p.span_lambdas);
    s.integer("points", p.points);
    s.finish();
}

void parse_expectation(const Json& j, Expectation& e) {
    Section s(j, "expectation");
    if (s.has("stokes_verdict")) {
        std::string v;
        s.string("stokes_verdict", v);
        require(v == "holds" || v == "violated",
                "expectation.stokes_verdict: expected holds or violated");
        e.stokes_verdict = v == "holds" ? Verdict::holds : Verdict::violated;
    }
    if (s.has("max_relative_drift")) {
        double d = 0.0;
        s.number("max_relative_drift", d);
        e.max_relative_drift = d;
    }
    if (s.has("max_relative_error")) {
        double d = 0.0;
        s.number("max_relative_error", d);
        e.max_relative_error = d;
    }
    s.finish();
}

void parse_constants(const Json& j, ScenarioConfig& c) {
    Section s(j, "constants");
    s.number("charge_C", c.charge);
    s.number("mass_kg", c.mass);
    s.number("hbar_Js", c.hbar);
    s.number("planck_Js", c.planck);
    s.finish();
}

// Module preconditions, checked up front so no command starts on bad input.
void validate(const ScenarioConfig& c) {
    try {
        c.solenoid.validate();
        if (c.shield) c.shield->validate(c.solenoid.radius);
        (void)make_gauge(c.gauge);
        (void)make_loop(c.loop);
    } catch (const abfield::Error& e) {
        throw ConfigError(e.what());
    }
    require(c.tag != ScenarioTag::tonomura_shielded || c.shield.has_value(),
            "scenario tonomura_shielded requires a shield section");
    const double forbidden =
        c.tag == ScenarioTag::tonomura_shielded ? c.shield->outer_radius : c.solenoid.radius;

    const auto& m = c.mesh;
    require(m.inner > forbidden, "mesh.inner_m must lie outside the forbidden region");
    require(m.outer > m.inner, "mesh.outer_m must exceed mesh.inner_m");
    require(m.radial_cells >= 4 && m.angular_cells >= 4, "mesh: need at least 4 cells per direction");
    require(m.disk_radial_cells >= 4 && m.disk_angular_cells >= 4,
            "mesh: need at least 4 disk cells per direction");

    const auto& f = c.field_map;
    require(f.nx >= 1 && f.ny >= 1, "field_map: nx and ny must be >= 1");
    require(f.x_range[0] <= f.x_range[1] && f.y_range[0] <= f.y_range[1],
            "field_map: ranges must be [min, max]");

    const auto& t = c.trajectory;
    require(t.ramp_shape == "smoothstep" || t.ramp_shape == "linear",
            "trajectory.ramp_shape: expected smoothstep or linear");
    require(t.model == "lorentz" || t.model == "total_derivative",
            "trajectory.model: expected lorentz or total_derivative");
    require(t.steps >= 1 && t.record_every >= 1, "trajectory: steps and record_every must be >= 1");
    require(t.ramp_orbits > 0.0 && t.t_end_orbits > 0.0, "trajectory: durations must be > 0");
    require(norm(t.velocity) > 0.0, "trajectory.velocity_mps must be nonzero");
    require(std::hypot(t.position.x(), t.position.y()) > forbidden,
            "trajectory.position_m must lie outside the forbidden region");

    for (const auto& cc : c.convergence.cases) {
        require(cc.n_phi >= 16 && cc.n_z >= 16 && cc.z_extent > 0.0,
                "convergence.cases: need n_phi, n_z >= 16 and z_extent_m > 0");
        require(2.0 * cc.z_extent / cc.n_z < c.convergence.rho - c.solenoid.radius &&
                    2.0 * constants::pi * c.solenoid.radius / cc.n_phi <
                        c.convergence.rho - c.solenoid.radius,
                "convergence: sample spacing must be below the distance to the sheet");
    }
    require(c.convergence.rho > c.solenoid.radius, "convergence.rho_m must exceed the radius");
    require(c.profile.points >= 2 && c.profile.span_lambdas > 0.0,
            "profile: need points >= 2 and span_lambdas > 0");
    require(c.mass > 0.0 && c.hbar > 0.0 && c.planck > 0.0,
            "constants: mass, hbar and planck must be > 0");
}

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
    ScenarioConfig c;
    Section root(j, "config");
    if (root.has("scenario")) {
        std::string tag;
        root.string("scenario", tag);
        require(tag == "original_ab" || tag == "tonomura_shielded",
                "config.scenario: expected original_ab or tonomura_shielded");
        c.tag = tag == "original_ab" ? ScenarioTag::original_ab : ScenarioTag::tonomura_shielded;
    }
    if (root.has("solenoid")) parse_solenoid(root.raw("solenoid"), c);
    if (root.has("shield")) parse_shield(root.raw("shield"), c);
    if (root.has("gauge")) parse_gauge(root.raw("gauge"), c.gauge);
    if (root.has("loop")) parse_loop(root.raw("loop"), c.loop);
    if (root.has("mesh")) parse_mesh(root.raw("mesh"), c.mesh);
    if (root.has("field_map")) parse_field_map(root.raw("field_map"), c.field_map);
    if (root.has("trajectory")) parse_trajectory(root.raw("trajectory"), c.trajectory);
    if (root.has("convergence")) parse_convergence(root.raw("convergence"), c.convergence);
    if (root.has("profile")) parse_profile(root.raw("profile"), c.profile);
    if (root.has("expectation")) parse_expectation(root.raw("expectation"), c.expectation);
    if (root.has("constants")) parse_constants(root.raw("constants"), c);
    root.finish();
    validate(c);
    return c;
}

ScalarGauge make_gauge(const GaugeConfig& g) {
    if (g.kind == "polynomial") return polynomial_gauge(g.c0, g.linear, g.quadratic);
    if (g.kind == "sinusoidal") return sinusoidal_gauge(g.amplitude, g.wavevector, g.phase);
    return zero_gauge();
}

ParametricLoop make_loop(const LoopConfig& l) {
    if (l.kind == "polygon") return make_polygon_loop(l.vertices, l.orientation, l.samples);
    return make_circle_loop(l.center, l.radius, l.normal, l.orientation, l.samples, l.windings);
}

ScenarioField make_scenario(const ScenarioConfig& c) {
    return build_scenario(c.tag, c.solenoid, c.shield, make_gauge(c.gauge));
}

}  // namespace abfield::cli
