#pragma once

#include "abfield/constants.hpp"
#include "abfield/geometry.hpp"
#include "abfield/modes.hpp"

namespace abfield {

/// Gauss–Legendre order used per panel by loop_integral.
inline constexpr int kLoopGaussOrder = 8;

/// ∮ f·dx with an error estimate.
///
/// error_estimate = step-doubling difference (Richardson-scaled for the
/// trapezoid rule) + summation round-off bound + the field's declared
/// accuracy integrated along the path.
struct LoopIntegral {
    double value{0.0};
    double error_estimate{0.0};
    long evaluations{0};
};

/// Composite quadrature of f·(dx/dt) over all segments, respecting the loop
/// orientation. With gauss_legendre each segment is split into
/// max(1, samples_per_segment/8) panels of order 8; with trapezoid
/// samples_per_segment uniform intervals are used. The value reported comes
/// from the doubled resolution. A failure to evaluate f, or a non-finite
/// value, raises IntegrationError naming the segment and parameter.
[[nodiscard]] LoopIntegral loop_integral(const VectorField& f, const ParametricLoop& loop,
                                         QuadratureRule rule = QuadratureRule::gauss_legendre);

/// "Within quadrature tolerance": |value| ≤ max(1e−12, 5·error_estimate).
[[nodiscard]] bool within_quadrature_tolerance(double value, double error_estimate) noexcept;

/// Aharonov–Bohm phase of a charge carried around a loop.
/// phase = (charge / hbar) · circulation exactly.
struct PhaseResult {
    double circulation{0.0};  ///< ∮A·dx [T·m²]
    double phase{0.0};        ///< [rad]
    double charge{0.0};       ///< [C], signed
    double hbar{constants::hbar};
    double error_estimate{0.0};  ///< on the circulation [T·m²]
};

[[nodiscard]] PhaseResult phase_from_circulation(double circulation, double error_estimate,
                                                 double charge, double hbar = constants::hbar);

[[nodiscard]] PhaseResult ab_phase(const VectorField& f, const ParametricLoop& loop, double charge,
                                   double hbar = constants::hbar);

}  // namespace abfield
