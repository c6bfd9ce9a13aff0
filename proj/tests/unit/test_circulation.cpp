#include <doctest.h>

#include <cmath>
#include <memory>

#include "abfield/abfield.hpp"
#include "../oracles/oracles.hpp"
#include "../support/generators.hpp"

using namespace abfield;
using abfield::testing::Gen;
using abfield::testing::reference_solenoid;
using abfield::testing::relative_error;

TEST_CASE("enclosing circles give the bore flux regardless of shape") {
    const SolenoidSpec s = reference_solenoid();
    const VectorField a = analytic_longitudinal_field(s);
    const double flux = oracles::solenoid_flux(0.01, 1e4, 1.0);
    Gen g(41);
    for (int n = 0; n < 20; ++n) {
        const double r = g.uniform(0.02, 0.4);
        const Point3 c(g.uniform(-0.005, 0.005), g.uniform(-0.005, 0.005), g.uniform(-1, 1));
        const LoopIntegral li = loop_integral(a, make_circle_loop(c, r, {0, 0, 1}, 1, 256));
        CHECK(relative_error(li.value, flux) < 1e-9);
    }
    // off-centre square around the axis
    const ParametricLoop sq = make_polygon_loop(
        {{-0.02, -0.03, 0}, {0.05, -0.03, 0}, {0.05, 0.04, 0}, {-0.02, 0.04, 0}}, 1, 512);
    CHECK(relative_error(loop_integral(a, sq).value, flux) < 1e-6);
}

TEST_CASE("winding number and orientation") {
    const VectorField a = analytic_longitudinal_field(reference_solenoid());
    const double flux = oracles::solenoid_flux(0.01, 1e4, 1.0);
    const ParametricLoop twice = make_circle_loop({}, 0.03, {0, 0, 1}, 1, 128, 2);
    CHECK(relative_error(loop_integral(a, twice).value, 2 * flux) < 1e-9);
    const ParametricLoop loop = make_circle_loop({}, 0.03, {0, 0, 1}, 1, 128);
    CHECK(loop_integral(a, loop.reversed()).value == -loop_integral(a, loop).value);
    const ParametricLoop down = make_circle_loop({}, 0.03, {0, 0, -1}, 1, 128);
    CHECK(relative_error(loop_integral(a, down).value, -flux) < 1e-9);
}

TEST_CASE("non-enclosing loops give zero") {
    const VectorField a = analytic_longitudinal_field(reference_solenoid());
    Gen g(42);
    for (int n = 0; n < 20; ++n) {
        const double phi = g.uniform(0, 6.28);
        const double d = g.uniform(0.05, 0.2);
        const Point3 c(d * std::cos(phi), d * std::sin(phi), 0.0);
        const double r = g.uniform(0.005, d - 0.015);
        const LoopIntegral li = loop_integral(a, make_circle_loop(c, r, g.unit(), 1, 256));
        CHECK(std::fabs(li.value) < 1e-15);
    }
}

TEST_CASE("trapezoid and Gauss-Legendre agree; estimates bound the error") {
    const VectorField a = gaussian_vortex_potential(Point3(0.1, 0.0, 0.0), 3e-6, 0.05);
    const ParametricLoop sq = make_polygon_loop({{-0.3, -0.3, 0}, {0.3, -0.3, 0}, {0.3, 0.3, 0}, {-0.3, 0.3, 0}}, 1, 64);
    const LoopIntegral gl = loop_integral(a, sq, QuadratureRule::gauss_legendre);
    const LoopIntegral tr = loop_integral(a, sq, QuadratureRule::trapezoid);
    const double exact = 3e-6 * (1.0 - 0.0);  // vortex core well inside the square
    CHECK(std::fabs(gl.value - exact) < 1e-3 * exact);
    CHECK(std::fabs(gl.value - tr.value) < 5.0 * (gl.error_estimate + tr.error_estimate) + 1e-3 * exact);
    CHECK(gl.evaluations > 0);
}

TEST_CASE("field failures surface as IntegrationError") {
    const VectorField bad{[](const Point3& x) {
                              if (x.x() < -0.5) throw DomainError("outside");
                              return Vec3{};
                          },
                          ModeTag::total, "partial"};
    const ParametricLoop loop = make_circle_loop({}, 1.0, {0, 0, 1}, 1, 64);
    CHECK_THROWS_AS((void)loop_integral(bad, loop), IntegrationError);
    const VectorField nan{[](const Point3&) { return Vec3{std::nan(""), 0, 0}; }, ModeTag::total, "nan"};
    CHECK_THROWS_AS((void)loop_integral(nan, loop), IntegrationError);
}

TEST_CASE("phase from circulation") {
    const PhaseResult p = phase_from_circulation(2.0e-6, 1e-18, constants::electron_charge);
    CHECK(p.phase == (constants::electron_charge / constants::hbar) * 2.0e-6);
    CHECK(p.hbar == constants::hbar);
    const VectorField a = analytic_longitudinal_field(reference_solenoid().with_current(0.0));
    CHECK(ab_phase(a, make_circle_loop({}, 0.05, {0, 0, 1}, 1, 64), constants::electron_charge).phase == 0.0);
}

TEST_CASE("quadrature tolerance convention") {
    CHECK(within_quadrature_tolerance(1e-13, 0.0));
    CHECK_FALSE(within_quadrature_tolerance(1e-11, 1e-13));
    CHECK(within_quadrature_tolerance(4e-11, 1e-11));
}

TEST_CASE("property: any axis-enclosing loop carries the bore flux") {
    const VectorField a = analytic_longitudinal_field(reference_solenoid());
    const double flux = oracles::solenoid_flux(0.01, 1e4, 1.0);
    Gen g(43);
    int used = 0;
    for (int n = 0; n < 30; ++n) {
        // star-shaped polygon around the axis, counterclockwise
        std::vector<Point3> vs;
        const int k = g.integer(3, 9);
        for (int i = 0; i < k; ++i) {
            const double phi = 2.0 * constants::pi * (i + g.uniform(0.1, 0.9)) / k;
            const double r = g.uniform(0.03, 0.3);
            vs.emplace_back(r * std::cos(phi), r * std::sin(phi), g.uniform(-0.1, 0.1));
        }
        const ParametricLoop loop = make_polygon_loop(vs, 1, 256);
        bool clear = true;  // every edge must stay outside the bore
        for (const auto& p : loop.with_samples(4096).sample_points()) {
            clear = clear && std::hypot(p.x(), p.y()) > 0.0101;
        }
        if (!clear) continue;
        ++used;
        const LoopIntegral li = loop_integral(a, loop);
        CHECK(std::fabs(li.value - flux) <= std::max(1e-12 * flux, 10.0 * li.error_estimate));
    }
    CHECK(used >= 20);
}

TEST_CASE("property: reversal negates exactly for random loops and fields") {
    Gen g(44);
    for (int n = 0; n < 30; ++n) {
        const VectorField f = gaussian_vortex_potential(g.point(-0.5, 0.5), g.uniform(-1, 1), g.uniform(0.05, 0.5));
        const ParametricLoop loop = g.loop(1.0, 32);
        CHECK(loop_integral(f, loop.reversed()).value == -loop_integral(f, loop).value);
    }
}

TEST_CASE("property: gradient fields have no circulation") {
    Gen g(45);
    for (int n = 0; n < 50; ++n) {
        const LoopIntegral li = loop_integral(scalar_mode_field(g.gauge(g.uniform(1e-6, 1.0))), g.loop(0.5, 64));
        CHECK(std::fabs(li.value) < 5.0 * li.error_estimate);
    }
}
