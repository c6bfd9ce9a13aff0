#include "abfield/stokes.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "abfield/errors.hpp"
#include "abfield/numerics.hpp"

namespace abfield {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

FluxResult surface_flux(const VectorField& b, const AnnularMesh& mesh) {
    const auto faces = mesh.faces();
    std::vector<double> terms(faces.size());
    std::vector<double> magnitudes(faces.size());
    std::vector<double> errors(faces.size());
    std::vector<char> failed(faces.size(), 0);

    parallel_for(faces.size(), [&](std::size_t i) {
        const Face& f = faces[i];
        try {
            const Vec3 v = b(f.centroid);
            terms[i] = dot(v, f.area_vector);
            if (!std::isfinite(terms[i])) {
                failed[i] = 1;
                return;
            }
            magnitudes[i] = std::fabs(terms[i]);
            errors[i] = b.error_at(f.centroid) * norm(f.area_vector);
        } catch (const Error&) {
            failed[i] = 1;
        }
    });

    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < failed.size(); ++i) {
        if (failed[i]) bad.push_back(i);
    }
    if (!bad.empty()) {
        throw FluxEvaluationError("surface_flux: field could not be evaluated on " +
                                      std::to_string(bad.size()) + " face(s)",
                                  std::move(bad));
    }
    FluxResult r;
    r.value = pairwise_sum(terms);
    const double n = static_cast<double>(std::max<std::size_t>(2, terms.size()));
    r.error_estimate = kEps * (8.0 + std::log2(n)) * pairwise_sum(magnitudes) + pairwise_sum(errors);
    return r;
}

const char* to_string(Verdict v) noexcept {
    return v == Verdict::holds ? "holds" : "violated";
}

StokesReport verify_generalized_stokes(const VectorField& a_field, const AnnularMesh& mesh) {
    const VectorField b = curl_field(a_field);
    const FluxResult flux = surface_flux(b, mesh);
    const FluxResult coarse = surface_flux(b, mesh.coarsened());

    const LoopIntegral c1 = loop_integral(a_field, mesh.outer_boundary());
    LoopIntegral c2;
    LoopIntegral composed = c1;
    if (mesh.inner_boundary()) {
        c2 = loop_integral(a_field, *mesh.inner_boundary());
        composed = loop_integral(
            a_field, compose_with_straight_bridges(mesh.outer_boundary(), *mesh.inner_boundary()));
    }

    StokesReport r;
    r.flux = flux.value;
    r.outer_circulation = c1.value;
    r.inner_circulation = c2.value;
    r.boundary_circulation = c1.value + c2.value;
    r.composed_circulation = composed.value;
    r.residual = r.flux - r.boundary_circulation;
    r.flux_error = flux.error_estimate;
    r.mesh_error = std::fabs(flux.value - coarse.value);
    r.loop_error = c1.error_estimate + c2.error_estimate;
    r.tolerance = r.mesh_error + r.flux_error + 10.0 * r.loop_error;
    r.radial_cells = mesh.resolution().radial_cells;
    r.angular_cells = mesh.resolution().angular_cells;
    r.loop_samples = mesh.outer_boundary().samples_per_segment();
    r.verdict = std::fabs(r.residual) <= r.tolerance ? Verdict::holds : Verdict::violated;
    return r;
}

MisuseReport demonstrate_misuse(const VectorField& b_field, const VectorField& a_field,
                                const AnnularMesh& full_disk, const ParametricLoop& outer_loop) {
    if (full_disk.region_tag() != RegionTag::simply_connected) {
        throw InvalidArgument("demonstrate_misuse: flux region must be a full disk");
    }
    const FluxResult lhs = surface_flux(b_field, full_disk);
    const FluxResult coarse = surface_flux(b_field, full_disk.coarsened());
    const LoopIntegral rhs = loop_integral(a_field, outer_loop);
    MisuseReport r;
    r.lhs = lhs.value;
    r.rhs = rhs.value;
    r.gap = r.lhs - r.rhs;
    r.tolerance = std::fabs(lhs.value - coarse.value) + lhs.error_estimate + 10.0 * rhs.error_estimate;
    return r;
}

}  // namespace abfield
