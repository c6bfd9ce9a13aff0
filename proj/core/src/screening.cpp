#include "abfield/screening.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "abfield/errors.hpp"

namespace abfield {

double penetration_length(double carrier_mass, double effective_charge, double psi_inf) {
    if (!(carrier_mass > 0.0) || !(effective_charge > 0.0) || !(psi_inf > 0.0) ||
        !std::isfinite(carrier_mass) || !std::isfinite(effective_charge) ||
        !std::isfinite(psi_inf)) {
        throw InvalidArgument("penetration_length: all inputs must be finite and > 0");
    }
    return std::sqrt(carrier_mass /
                     (4.0 * constants::mu0 * effective_charge * effective_charge * psi_inf));
}

double ShieldSpec::lambda() const {
    if (lambda_override) return *lambda_override;
    return penetration_length(carrier_mass, effective_charge, psi_inf);
}

void ShieldSpec::validate(double solenoid_radius) const {
    const double l = lambda();
    if (!(l > 0.0) || !std::isfinite(l)) throw InvalidArgument("ShieldSpec: lambda must be > 0");
    if (!(inner_radius >= solenoid_radius)) {
        throw InvalidArgument("ShieldSpec: inner radius must be >= solenoid radius");
    }
    if (!(outer_radius > inner_radius) || !std::isfinite(outer_radius)) {
        throw InvalidArgument("ShieldSpec: outer radius must exceed inner radius");
    }
}

namespace {

constexpr double kAsymptoticFrom = 500.0;

// e^x K_ν(x) ~ sqrt(π/2x) Σ_k a_k(ν)/x^k, a_k = a_{k-1}(4ν² − (2k−1)²)/(8k).
double scaled_k_asymptotic(int nu, double x) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 12; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (8.0 * k * x);
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
    }
    return std::sqrt(constants::pi / (2.0 * x)) * sum;
}

double scaled_k(int nu, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw InvalidArgument("bessel_k: argument must be > 0");
    if (x < kAsymptoticFrom) return std::cyl_bessel_k(static_cast<double>(nu), x) * std::exp(x);
    return scaled_k_asymptotic(nu, x);
}

void check_profile_args(const SolenoidSpec& spec, const ShieldSpec& shield, double rho) {
    spec.validate();
    shield.validate(spec.radius);
    if (!(rho >= shield.inner_radius) || !std::isfinite(rho)) {
        throw InvalidArgument("screened profile: rho must be >= shield inner radius");
    }
}

}  // namespace

double bessel_k0_scaled(double x) { return scaled_k(0, x); }
double bessel_k1_scaled(double x) { return scaled_k(1, x); }

double screened_solenoid_profile(const SolenoidSpec& spec, const ShieldSpec& shield, double rho) {
    check_profile_args(spec, shield, rho);
    const double lambda = shield.lambda();
    const double r_in = shield.inner_radius;
    const double a = spec.radius;
    const double a_in = constants::mu0 * spec.sheet_current() * a * a / (2.0 * r_in);
    if (rho == r_in) return a_in;
    const double x = rho / lambda;
    const double x_in = r_in / lambda;
    return a_in * (bessel_k1_scaled(x) / bessel_k1_scaled(x_in)) * std::exp(x_in - x);
}

double screened_profile_log_slope(const SolenoidSpec& spec, const ShieldSpec& shield, double rho) {
    check_profile_args(spec, shield, rho);
    const double lambda = shield.lambda();
    const double x = rho / lambda;
    return -(bessel_k0_scaled(x) / bessel_k1_scaled(x) + 1.0 / x) / lambda;
}

const char* to_string(ScenarioTag tag) noexcept {
    return tag == ScenarioTag::original_ab ? "original_ab" : "tonomura_shielded";
}

ScenarioField build_scenario(ScenarioTag tag, const SolenoidSpec& spec,
                             const std::optional<ShieldSpec>& shield, const ScalarGauge& gauge) {
    spec.validate();
    ScenarioField s;
    s.tag = tag;
    s.b_field = solenoid_magnetic_field(spec);
    if (tag == ScenarioTag::original_ab) {
        s.a_field = analytic_longitudinal_field(spec);
        s.forbidden_outer_radius = spec.radius;
        return s;
    }
    if (!shield) throw InvalidArgument("build_scenario: the shielded scenario needs a shield");
    shield->validate(spec.radius);
    const double r_out = shield->outer_radius;
    const Frame frame = spec.frame();

    ScalarGauge g = gauge;
    g.domain = [frame, r_out, inner = gauge.domain](const Point3& p) {
        const Vec3 l = frame.to_local(p);
        if (!(std::hypot(l.x, l.y) > r_out)) return false;
        return !inner || inner(p);
    };
    g.description = gauge.description + " outside the shield";
    s.a_field = scalar_mode_field(std::move(g));
    s.a_field.provenance = "shielded travel region: grad theta";
    s.forbidden_outer_radius = r_out;
    return s;
}

void require_travel_region(const ScenarioField& scenario, const ParametricLoop& loop) {
    for (const auto& p : loop.sample_points()) {
        if (!(std::hypot(p.x(), p.y()) > scenario.forbidden_outer_radius)) {
            throw InvalidArgument("loop enters the forbidden region (rho <= " +
                                  std::to_string(scenario.forbidden_outer_radius) + " m)");
        }
    }
}

}  // namespace abfield
