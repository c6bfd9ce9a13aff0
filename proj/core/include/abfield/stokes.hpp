#pragma once

#include "abfield/circulation.hpp"
#include "abfield/geometry.hpp"
#include "abfield/modes.hpp"

namespace abfield {

struct FluxResult {
    double value{0.0};           ///< Σ b(centroid)·area_vector [T·m²]
    double error_estimate{0.0};  ///< round-off bound + the field's declared accuracy
};

/// Centroid-rule flux through every face, reduced pairwise. Faces where `b`
/// cannot be evaluated are collected and reported in a FluxEvaluationError.
[[nodiscard]] FluxResult surface_flux(const VectorField& b, const AnnularMesh& mesh);

enum class Verdict { holds, violated };

[[nodiscard]] const char* to_string(Verdict v) noexcept;

/// Numerical check of ∬_D (∇×A)·dS = ∮_{C1} A·dx + ∮_{C2} A·dx.
struct StokesReport {
    double flux{0.0};
    double outer_circulation{0.0};     ///< C1, counterclockwise
    double inner_circulation{0.0};     ///< C2, clockwise (0 for a disk)
    double boundary_circulation{0.0};  ///< C1 + C2
    double composed_circulation{0.0};  ///< single curve C1 + C4 + C2 + C3
    double residual{0.0};              ///< flux − boundary_circulation

    double flux_error{0.0};           ///< surface-quadrature error estimate
    double mesh_error{0.0};           ///< |flux − flux on the coarsened mesh|
    double loop_error{0.0};           ///< sum of loop quadrature error estimates
    double tolerance{0.0};            ///< mesh_error + flux_error + 10·loop_error

    int radial_cells{0};
    int angular_cells{0};
    int loop_samples{0};
    Verdict verdict{Verdict::violated};
};

/// Computes the flux of curl(a_field) over the mesh, the circulations around
/// its boundary loops with their induced orientations, and the same boundary
/// traversed as one composed curve with straight bridges. The verdict is
/// `holds` iff |residual| ≤ tolerance.
[[nodiscard]] StokesReport verify_generalized_stokes(const VectorField& a_field,
                                                     const AnnularMesh& mesh);

/// Flux through a region that includes the forbidden core, compared with the
/// circulation of the travel-region potential around the outer loop alone.
struct MisuseReport {
    double lhs{0.0};  ///< ∬_{D0+D} B_n dS
    double rhs{0.0};  ///< ∮_{C1} A·dx
    double gap{0.0};  ///< lhs − rhs
    double tolerance{0.0};  ///< mesh_error + flux_error + 10·loop_error
};

[[nodiscard]] MisuseReport demonstrate_misuse(const VectorField& b_field,
                                              const VectorField& a_field,
                                              const AnnularMesh& full_disk,
                                              const ParametricLoop& outer_loop);

}  // namespace abfield
