#include <doctest.h>

#include <cmath>

#include "abfield/abfield.hpp"
#include "../support/generators.hpp"

using namespace abfield;
using abfield::testing::Gen;
using abfield::testing::reference_solenoid;
using abfield::testing::relative_error;

TEST_CASE("closed-form potential: exterior 1/rho, interior rho, azimuthal") {
    const SolenoidSpec s = reference_solenoid();
    const double k = constants::mu0 * 1e4;
    for (double rho : {0.02, 0.05, 0.11}) {
        const Vec3 a = solenoid_longitudinal_analytic(s, Point3(0.0, rho, 0.7));
        CHECK(a.y == 0.0);
        CHECK(a.z == 0.0);
        CHECK(relative_error(-a.x, k * 1e-4 / (2.0 * rho)) < 1e-15);
    }
    const Vec3 in = solenoid_longitudinal_analytic(s, Point3(0.004, 0.0, 0.0));
    CHECK(relative_error(in.y, k * 0.004 / 2.0) < 1e-15);
    CHECK(norm(solenoid_longitudinal_analytic(s, Point3(0.0, 0.0, 1.0))) == 0.0);

    SolenoidSpec finite = s;
    finite.half_length = 1.0;
    CHECK_THROWS_AS((void)solenoid_longitudinal_analytic(finite, Point3(0.02, 0, 0)), InvalidArgument);
}

TEST_CASE("closed-form potential follows a tilted axis") {
    SolenoidSpec s = reference_solenoid();
    s.axis.origin = Point3(0.3, -0.1, 0.2);
    s.axis.direction = Vec3{1.0, 1.0, 0.0} / std::sqrt(2.0);
    const Frame f = s.frame();
    const Point3 x = f.from_local({0.03, 0.0, 0.4});
    const Vec3 a = solenoid_longitudinal_analytic(s, x);
    const double want = constants::mu0 * 1e4 * 1e-4 / (2.0 * 0.03);
    CHECK(norm(a - want * f.e2) < 1e-14 * want);
}

TEST_CASE("analytic Jacobian matches finite differences") {
    Gen g(21);
    const SolenoidSpec s = reference_solenoid();
    for (int n = 0; n < 30; ++n) {
        const Point3 x = g.cyl_point(0.015, 0.2, 0.1);
        const Mat3 j = solenoid_longitudinal_jacobian(s, x);
        const double h = 1e-7;
        const Vec3 axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        for (int c = 0; c < 3; ++c) {
            const Vec3 d = (solenoid_longitudinal_analytic(s, x + h * axes[c]) -
                            solenoid_longitudinal_analytic(s, x - h * axes[c])) /
                           (2.0 * h);
            const double scale = norm(solenoid_longitudinal_analytic(s, x)) / std::hypot(x.x(), x.y());
            CHECK(std::fabs(d.x - j(0, c)) < 1e-6 * scale);
            CHECK(std::fabs(d.y - j(1, c)) < 1e-6 * scale);
            CHECK(std::fabs(d.z - j(2, c)) < 1e-6 * scale);
        }
    }
}

TEST_CASE("curl of the exterior potential vanishes, interior gives the bore field") {
    Gen g(22);
    const SolenoidSpec s = reference_solenoid();
    const VectorField a = analytic_longitudinal_field(s);
    for (int n = 0; n < 50; ++n) {
        const Point3 x = g.cyl_point(0.012, 0.3, 0.2);
        const CylVector b = curl_cylindrical(a, x, kCurlRelativeStep * std::hypot(x.x(), x.y()));
        CHECK(std::fabs(b.rho) < 1e-8);
        CHECK(std::fabs(b.phi) < 1e-8);
        CHECK(std::fabs(b.z) < 1e-8);
    }
    const double bz = constants::mu0 * 1e4;
    for (double rho : {0.002, 0.005, 0.008}) {
        const Point3 x(rho, 0.0, 0.0);
        const CylVector b = curl_cylindrical(a, x, kCurlRelativeStep * rho);
        CHECK(relative_error(b.z, bz) < 1e-6);
    }
    CHECK_THROWS_AS((void)curl_cylindrical(a, Point3(1e-6, 0, 0), 1e-6), StencilError);
}

TEST_CASE("curl_field of reference potentials") {
    Gen g(23);
    const Vec3 b0{0.3, -0.2, 1.1};
    const VectorField u = curl_field(uniform_field_potential(b0));
    const VectorField v = curl_field(gaussian_vortex_potential(Point3(0.01, 0.0, 0.0), 2e-6, 0.02));
    for (int n = 0; n < 20; ++n) {
        const Point3 x = g.cyl_point(0.05, 0.5, 0.3);
        CHECK(norm(u(x) - b0) < 1e-7);
        CHECK(u.error_at(x) > 0.0);
        const double r2 = std::pow(x.x() - 0.01, 2) + x.y() * x.y();
        const double want = 2e-6 / (constants::pi * 4e-4) * std::exp(-r2 / 4e-4);
        CHECK(std::fabs(v(x).z - want) < 1e-7 * 2e-6 / 4e-4 + 5.0 * v.error_at(x));
    }
}

TEST_CASE("scalar mode is the gradient of theta") {
    Gen g(24);
    const std::array<double, 9> q{2.0, 0.5, 0.0, 0.5, -1.0, 0.3, 0.0, 0.3, 4.0};
    const ScalarGauge poly = polynomial_gauge(1.0, {0.1, -0.2, 0.3}, q);
    for (int n = 0; n < 20; ++n) {
        const Point3 x = g.point(-1, 1);
        const Vec3 grad = scalar_mode(poly, x);
        const Vec3 p = x.vec();
        const Vec3 want{0.1 + 2.0 * p.x + 0.5 * p.y, -0.2 + 0.5 * p.x - p.y + 0.3 * p.z,
                        0.3 + 0.3 * p.y + 4.0 * p.z};
        CHECK(norm(grad - want) < 1e-8);
    }
    CHECK(norm(scalar_mode(zero_gauge(), Point3(1, 2, 3))) == 0.0);
}

TEST_CASE("gauge domain is enforced") {
    const ScalarGauge az = azimuthal_gauge(1.0);
    CHECK(az.contains(Point3(1.0, 0.0, 0.0)));
    CHECK_FALSE(az.contains(Point3(-1.0, 1e-5, 0.0)));
    CHECK_THROWS_AS((void)scalar_mode(az, Point3(-1.0, 1e-5, 0.0)), DomainError);
    const Vec3 grad = scalar_mode(az, Point3(0.0, 2.0, 0.0));
    CHECK(norm(grad - Vec3{-0.5, 0.0, 0.0}) < 1e-8);
}

TEST_CASE("mode tags") {
    CHECK(std::string(to_string(ModeTag::longitudinal)) == "longitudinal");
    CHECK(analytic_longitudinal_field(reference_solenoid()).mode_tag == ModeTag::longitudinal);
    CHECK(scalar_mode_field(zero_gauge()).mode_tag == ModeTag::scalar);
    CHECK(solenoid_magnetic_field(reference_solenoid()).mode_tag == ModeTag::magnetic);
}

TEST_CASE("property: curl of a scalar mode vanishes within its declared accuracy") {
    Gen g(25);
    for (int n = 0; n < 20; ++n) {
        const VectorField b = curl_field(scalar_mode_field(g.gauge(g.uniform(1e-6, 1.0))));
        for (int k = 0; k < 10; ++k) {
            const Point3 x = g.cyl_point(0.05, 0.3, 0.3);
            CHECK(norm(b(x)) <= 5.0 * b.error_at(x));
        }
    }
}
