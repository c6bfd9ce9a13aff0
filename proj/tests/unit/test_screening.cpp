#include <doctest.h>

#include <cmath>

#include "abfield/abfield.hpp"
#include "../oracles/oracles.hpp"
#include "../support/generators.hpp"

using namespace abfield;
using abfield::testing::Gen;
using abfield::testing::reference_solenoid;
using abfield::testing::relative_error;

namespace {

ShieldSpec test_shield() {
    ShieldSpec s;
    s.inner_radius = 0.015;
    s.outer_radius = 0.05;
    s.lambda_override = 1e-3;
    return s;
}

}  // namespace

TEST_CASE("penetration length scaling is exact") {
    const double m = constants::electron_mass;
    const double e = 2.0 * constants::elementary_charge;
    const double l = penetration_length(m, e, 3.0);
    CHECK(penetration_length(m, e, 12.0) == l / 2.0);
    CHECK(penetration_length(m, 2.0 * e, 3.0) == l / 2.0);
    CHECK(penetration_length(4.0 * m, e, 3.0) == 2.0 * l);
    CHECK(l == doctest::Approx(std::sqrt(m / (4.0 * constants::mu0 * e * e * 3.0))));
    CHECK_THROWS_AS((void)penetration_length(0.0, e, 1.0), InvalidArgument);
    CHECK_THROWS_AS((void)penetration_length(m, -e, 1.0), InvalidArgument);
    CHECK_THROWS_AS((void)penetration_length(m, e, 0.0), InvalidArgument);
}

TEST_CASE("scaled Bessel functions") {
    // reference values of e^x K_ν(x)
    CHECK(bessel_k0_scaled(1.0) == doctest::Approx(1.1444630798068949).epsilon(1e-13));
    CHECK(bessel_k1_scaled(1.0) == doctest::Approx(1.6361534862632582).epsilon(1e-13));
    CHECK(bessel_k1_scaled(10.0) == doctest::Approx(0.4107665705957887).epsilon(1e-13));
    // continuity across the switch to the asymptotic series
    for (double x : {499.999, 500.0}) {
        CHECK(bessel_k1_scaled(x) == doctest::Approx(std::sqrt(constants::pi / (2 * x)) *
                                                     (1 + 3 / (8 * x) - 15 / (128 * x * x)))
                                         .epsilon(1e-8));
    }
    CHECK(std::isfinite(bessel_k1_scaled(1e5)));
    CHECK_THROWS_AS((void)bessel_k1_scaled(0.0), InvalidArgument);
}

TEST_CASE("profile: continuity, monotone decay and exponential tail") {
    const SolenoidSpec s = reference_solenoid();
    const ShieldSpec sh = test_shield();
    const double l = 1e-3;
    const double a_in = constants::mu0 * 1e4 * 1e-4 / (2.0 * 0.015);
    CHECK(screened_solenoid_profile(s, sh, 0.015) == doctest::Approx(a_in).epsilon(1e-15));
    CHECK(std::fabs(screened_solenoid_profile(s, sh, 0.015 + 1e-12) - a_in) < 1e-8 * a_in);
    double prev = a_in;
    for (int i = 1; i <= 300; ++i) {
        const double v = screened_solenoid_profile(s, sh, 0.015 + 0.1 * i * l);
        CHECK(v < prev);
        CHECK(v > 0.0);
        prev = v;
    }
    CHECK(screened_solenoid_profile(s, sh, 0.015 + 10 * l) / a_in < std::exp(-9.0));
    const double slope = screened_profile_log_slope(s, sh, 0.015 + 20 * l);
    CHECK(relative_error(slope, -1.0 / l) < 0.02);
    CHECK_THROWS_AS((void)screened_solenoid_profile(s, sh, 0.014), InvalidArgument);
}

TEST_CASE("profile agrees with a finite-difference London solve") {
    const SolenoidSpec s = reference_solenoid();
    for (double l : {1e-3, 2.5e-3}) {
        ShieldSpec sh = test_shield();
        sh.lambda_override = l;
        const double a_in = screened_solenoid_profile(s, sh, sh.inner_radius);
        const oracles::BvpSolution ode =
            oracles::london_bvp(sh.inner_radius, sh.inner_radius + 50 * l, l, a_in, 0.005 * l);
        for (std::size_t i = 0; i < ode.rho.size(); ++i) {
            if (ode.rho[i] > sh.inner_radius + 30 * l) break;
            CHECK(relative_error(screened_solenoid_profile(s, sh, ode.rho[i]), ode.value[i]) < 1e-3);
        }
    }
}

TEST_CASE("shield validation") {
    ShieldSpec sh = test_shield();
    CHECK_NOTHROW(sh.validate(0.01));
    sh.inner_radius = 0.005;
    CHECK_THROWS_AS(sh.validate(0.01), InvalidArgument);
    sh = test_shield();
    sh.outer_radius = sh.inner_radius;
    CHECK_THROWS_AS(sh.validate(0.01), InvalidArgument);
    sh = test_shield();
    sh.lambda_override = -1.0;
    CHECK_THROWS_AS(sh.validate(0.01), InvalidArgument);
}

TEST_CASE("scenarios") {
    const SolenoidSpec s = reference_solenoid();
    const double flux = oracles::solenoid_flux(0.01, 1e4, 1.0);
    const ParametricLoop c = make_circle_loop({}, 0.08, {0, 0, 1}, 1, 256);

    const ScenarioField orig = build_scenario(ScenarioTag::original_ab, s, std::nullopt);
    CHECK(relative_error(loop_integral(orig.a_field, c).value, flux) < 1e-9);
    CHECK(orig.forbidden_outer_radius == 0.01);

    CHECK_THROWS_AS((void)build_scenario(ScenarioTag::tonomura_shielded, s, std::nullopt), InvalidArgument);
    const ScenarioField ton = build_scenario(ScenarioTag::tonomura_shielded, s, test_shield());
    CHECK(ton.forbidden_outer_radius == 0.05);
    CHECK(loop_integral(ton.a_field, c).value == 0.0);
    CHECK(norm(ton.b_field(Point3(0.07, 0.0, 0.0))) == 0.0);
    CHECK_THROWS_AS((void)ton.a_field(Point3(0.03, 0.0, 0.0)), DomainError);
    CHECK_THROWS_AS(require_travel_region(ton, make_circle_loop({}, 0.04, {0, 0, 1}, 1, 64)),
                    InvalidArgument);
    CHECK_NOTHROW(require_travel_region(ton, c));
}

TEST_CASE("shielded scenario: every travel-region circulation vanishes, for any gauge") {
    Gen g(51);
    const SolenoidSpec s = reference_solenoid();
    for (int n = 0; n < 10; ++n) {
        const ScenarioField ton =
            build_scenario(ScenarioTag::tonomura_shielded, s, test_shield(), g.gauge(1e-6));
        // circle about the axis, fully in the travel region
        const ParametricLoop c = make_circle_loop(Point3(0.0, 0.0, g.uniform(-0.1, 0.1)),
                                                  g.uniform(0.06, 0.2), {0, 0, 1}, 1, 256);
        const LoopIntegral li = loop_integral(ton.a_field, c);
        CHECK(within_quadrature_tolerance(li.value, li.error_estimate));
    }
}
