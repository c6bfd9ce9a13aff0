#include <doctest.h>

#include <cmath>

#include "abfield/abfield.hpp"
#include "../oracles/oracles.hpp"
#include "../support/generators.hpp"

using namespace abfield;
using abfield::testing::Gen;
using abfield::testing::reference_solenoid;
using abfield::testing::relative_error;

TEST_CASE("Stokes holds on an annulus for a field with flux through it") {
    // vortex centred inside the annulus: flux and boundary both nonzero
    const VectorField a = gaussian_vortex_potential(Point3(0.0, 0.05, 0.0), 1e-6, 0.01);
    const StokesReport r = verify_generalized_stokes(a, mesh_annulus(0.02, 0.1, 0.0, 48, 256));
    CHECK(r.verdict == Verdict::holds);
    CHECK(std::fabs(r.flux) > 0.5e-6);
    CHECK(std::fabs(r.residual) <= r.tolerance);
    CHECK(std::fabs(r.composed_circulation - r.boundary_circulation) < 1e-9 * std::fabs(r.flux));
}

TEST_CASE("Stokes with a uniform field: flux equals B times area") {
    const Vec3 b0{0.0, 0.0, 0.7};
    const AnnularMesh m = mesh_annulus(0.5, 1.5, 0.2, 16, 128);
    const StokesReport r = verify_generalized_stokes(uniform_field_potential(b0), m);
    CHECK(r.verdict == Verdict::holds);
    CHECK(relative_error(r.flux, 0.7 * m.total_area()) < 1e-7);
}

TEST_CASE("solenoid exterior annulus: contributions cancel") {
    const SolenoidSpec s = reference_solenoid();
    const double flux = oracles::solenoid_flux(0.01, 1e4, 1.0);
    const StokesReport r = verify_generalized_stokes(analytic_longitudinal_field(s),
                                                     mesh_annulus(0.02, 0.05, 0.0, 32, 256));
    CHECK(relative_error(r.outer_circulation, flux) < 1e-9);
    CHECK(relative_error(r.inner_circulation, -flux) < 1e-9);
    CHECK(std::fabs(r.flux) < 1e-12 * flux);
    CHECK(r.verdict == Verdict::holds);
}

TEST_CASE("a wrong boundary orientation is caught") {
    // inner loop taken counterclockwise by hand: boundary sum doubles instead of cancelling
    const SolenoidSpec s = reference_solenoid();
    const VectorField a = analytic_longitudinal_field(s);
    const AnnularMesh m = mesh_annulus(0.02, 0.05, 0.0, 32, 256);
    const FluxResult f = surface_flux(curl_field(a), m);
    const double wrong = loop_integral(a, m.outer_boundary()).value +
                         loop_integral(a, m.inner_boundary()->reversed()).value;
    CHECK(std::fabs(f.value - wrong) > 1e3 * (f.error_estimate + 1e-15));
}

TEST_CASE("flux evaluation failures list the faces") {
    const VectorField partial{[](const Point3& x) {
                                  if (x.x() > 0.0 && std::fabs(x.y()) < 0.1) throw DomainError("no");
                                  return Vec3{0, 0, 1};
                              },
                              ModeTag::magnetic, "partial"};
    try {
        (void)surface_flux(partial, mesh_annulus(0.5, 1.0, 0.0, 4, 32));
        FAIL("expected FluxEvaluationError");
    } catch (const FluxEvaluationError& e) {
        CHECK_FALSE(e.faces().empty());
        CHECK(e.faces().size() < 4u * 32u);
    }
}

TEST_CASE("full-disk flux against outer circulation") {
    const SolenoidSpec s = reference_solenoid();
    const double flux = oracles::solenoid_flux(0.01, 1e4, 1.0);
    const AnnularMesh disk = mesh_disk(0.05, 0.0, 160, 256);
    const ParametricLoop c1 = make_circle_loop({}, 0.05, {0, 0, 1}, 1, 256);
    const MisuseReport orig =
        demonstrate_misuse(solenoid_magnetic_field(s), analytic_longitudinal_field(s), disk, c1);
    CHECK(std::fabs(orig.gap) < orig.tolerance);
    CHECK(relative_error(orig.lhs, flux) < 1e-3);

    const VectorField zero{[](const Point3&) { return Vec3{}; }, ModeTag::scalar, "zero"};
    const MisuseReport shielded = demonstrate_misuse(solenoid_magnetic_field(s), zero, disk, c1);
    CHECK(relative_error(shielded.gap, flux) < 1e-2);

    CHECK_THROWS_AS((void)demonstrate_misuse(solenoid_magnetic_field(s), zero,
                                             mesh_annulus(0.02, 0.05, 0.0, 8, 64), c1),
                    InvalidArgument);
}

TEST_CASE("property: residual falls at second order under refinement") {
    Gen g(71);
    for (int n = 0; n < 4; ++n) {
        const VectorField a = sum_fields(
            gaussian_vortex_potential(g.point(-0.05, 0.05), g.uniform(0.5, 2.0) * 1e-6, g.uniform(0.02, 0.05)),
            uniform_field_potential(g.vec(-1e-4, 1e-4)), ModeTag::total);
        const StokesReport coarse = verify_generalized_stokes(a, mesh_annulus(0.08, 0.2, 0.0, 8, 32));
        const StokesReport fine = verify_generalized_stokes(a, mesh_annulus(0.08, 0.2, 0.0, 16, 64));
        CHECK(coarse.verdict == Verdict::holds);
        CHECK(fine.verdict == Verdict::holds);
        CHECK(std::fabs(coarse.residual) / std::fabs(fine.residual) > 3.0);
    }
}

TEST_CASE("property: composed single curve matches the two-loop sum") {
    Gen g(72);
    for (int n = 0; n < 20; ++n) {
        const VectorField a = gaussian_vortex_potential(g.point(-0.2, 0.2), g.uniform(-1, 1), g.uniform(0.05, 0.3));
        const double r0 = g.uniform(0.1, 0.5);
        const AnnularMesh m = mesh_annulus(r0, r0 * g.uniform(1.5, 3.0), g.uniform(-1, 1), 4, 64);
        const LoopIntegral c1 = loop_integral(a, m.outer_boundary());
        const LoopIntegral c2 = loop_integral(a, *m.inner_boundary());
        const LoopIntegral all =
            loop_integral(a, compose_with_straight_bridges(m.outer_boundary(), *m.inner_boundary()));
        CHECK(std::fabs(all.value - (c1.value + c2.value)) <=
              std::max(1e-15, 10.0 * std::max(c1.error_estimate, c2.error_estimate)));
    }
}
