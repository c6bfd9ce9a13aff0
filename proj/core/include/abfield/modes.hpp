#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "abfield/geometry.hpp"
#include "abfield/sources.hpp"
#include "abfield/vec3.hpp"

namespace abfield {

/// Which part of the potential a field represents.
///
/// "longitudinal" follows the naming used throughout this library for the
/// gauge-invariant, current-sourced Coulomb-gauge potential
///   A(x) = μ0/4π ∫ j(x')/|x − x'| d³x',
/// which is divergence-free. In Fourier language it is the image of
/// δ_ij − k_i k_j/|k|², an operator most texts call the transverse projector.
/// "scalar" is a pure-gauge gradient ∇θ, "total" their sum and "magnetic" a
/// B field.
enum class ModeTag { longitudinal, scalar, total, magnetic };

[[nodiscard]] const char* to_string(ModeTag tag) noexcept;

/// Evaluatable 3-vector field over space.
///
/// `abs_error`, when set, is the evaluator's own absolute accuracy at a point
/// (e.g. finite-difference truncation and cancellation). Integrators fold it
/// into their error estimates. Analytic fields leave it empty.
struct VectorField {
    std::function<Vec3(const Point3&)> evaluator;
    ModeTag mode_tag{ModeTag::total};
    std::string provenance;
    std::function<double(const Point3&)> abs_error{};

    [[nodiscard]] Vec3 operator()(const Point3& x) const { return evaluator(x); }
    [[nodiscard]] double error_at(const Point3& x) const { return abs_error ? abs_error(x) : 0.0; }
};

/// Single-valued gauge function θ on a declared smoothness domain.
struct ScalarGauge {
    std::function<double(const Point3&)> theta;
    std::function<bool(const Point3&)> domain{};  ///< empty = all of space
    std::string description;

    [[nodiscard]] bool contains(const Point3& x) const { return !domain || domain(x); }
};

/// Central-difference step for gradients of θ [m].
inline constexpr double kGradientStep = 1e-6;
/// Curl stencil step relative to the local cylindrical radius.
inline constexpr double kCurlRelativeStep = 1e-5;

// ---------------------------------------------------------------------------
// Solenoid potentials
// ---------------------------------------------------------------------------

/// Direct quadrature of (μ0/4π) Σ_k w_k K_k / |x − x'_k| over the sheet samples.
/// Throws SingularProximityError when x is within one sample spacing of the sheet.
[[nodiscard]] Vec3 longitudinal_from_current(const SurfaceCurrent& src, const Point3& x);

/// Closed-form Coulomb-gauge potential of an infinite solenoid, purely
/// azimuthal: μ0 n I a²/(2ρ) outside, μ0 n I ρ/2 inside, zero on the axis.
/// Throws InvalidArgument for a finite solenoid.
[[nodiscard]] Vec3 solenoid_longitudinal_analytic(const SolenoidSpec& spec, const Point3& x);

/// ∂A_i/∂x_j of solenoid_longitudinal_analytic (row i, column j).
[[nodiscard]] Mat3 solenoid_longitudinal_jacobian(const SolenoidSpec& spec, const Point3& x);

/// Bore field of an infinite solenoid: μ0 n I along the axis for ρ < a, zero
/// outside. On ρ = a the interior value is returned.
[[nodiscard]] Vec3 solenoid_field_analytic(const SolenoidSpec& spec, const Point3& x);

[[nodiscard]] VectorField analytic_longitudinal_field(const SolenoidSpec& spec);
[[nodiscard]] VectorField quadrature_longitudinal_field(std::shared_ptr<const SurfaceCurrent> src);
[[nodiscard]] VectorField solenoid_magnetic_field(const SolenoidSpec& spec);

// ---------------------------------------------------------------------------
// Scalar (pure-gauge) mode
// ---------------------------------------------------------------------------

/// ∇θ by central differences with step h. Throws DomainError when x or any
/// stencil point lies outside the gauge's domain.
[[nodiscard]] Vec3 scalar_mode(const ScalarGauge& g, const Point3& x, double h = kGradientStep);

/// Field wrapper around scalar_mode. Its declared accuracy combines the
/// step-doubling truncation estimate with the cancellation error of the
/// difference quotient.
[[nodiscard]] VectorField scalar_mode_field(ScalarGauge g, double h = kGradientStep);

[[nodiscard]] ScalarGauge zero_gauge();

/// θ = c0 + c·x + ½ xᵀ Q x (Q symmetric, row-major).
[[nodiscard]] ScalarGauge polynomial_gauge(double c0, const Vec3& linear,
                                           const std::array<double, 9>& quadratic);

/// θ = amplitude · sin(k·x + phase).
[[nodiscard]] ScalarGauge sinusoidal_gauge(double amplitude, const Vec3& wavevector, double phase);

/// θ = c·atan2(y, x) restricted to the plane cut along the negative x-axis:
/// the domain excludes points whose angular distance to the cut is below
/// cut_half_width [rad], as well as the axis itself.
[[nodiscard]] ScalarGauge azimuthal_gauge(double c, double cut_half_width = 1e-3);

/// Sum of two gauges on the intersection of their domains.
[[nodiscard]] ScalarGauge sum_gauges(ScalarGauge a, ScalarGauge b);

// ---------------------------------------------------------------------------
// Curl
// ---------------------------------------------------------------------------

/// Curl in cylindrical components about the z-axis,
///   B_ρ = (1/ρ) ∂A_z/∂φ − ∂A_φ/∂z
///   B_φ = ∂A_ρ/∂z − ∂A_z/∂ρ
///   B_z = (1/ρ) ∂(ρ A_φ)/∂ρ − (1/ρ) ∂A_ρ/∂φ
/// by second-order central differences with radial/axial step h and angular
/// step h/ρ. Requires ρ(x) > 2h (StencilError otherwise).
[[nodiscard]] CylVector curl_cylindrical(const VectorField& f, const Point3& x, double h);

/// Cartesian curl field using curl_cylindrical with h = kCurlRelativeStep·ρ.
/// The declared accuracy is a step-doubling estimate plus the propagated
/// accuracy of `f`.
[[nodiscard]] VectorField curl_field(VectorField f);

// ---------------------------------------------------------------------------
// Reference fields for verification
// ---------------------------------------------------------------------------

/// A = ½ B0 × x, whose curl is the uniform field B0.
[[nodiscard]] VectorField uniform_field_potential(const Vec3& b0);

/// Smooth azimuthal vortex about a z-parallel line through `center`:
/// A_φ' = Φ/(2πr')·(1 − exp(−r'²/w²)); its curl is Φ/(πw²)·exp(−r'²/w²) ẑ,
/// carrying total flux Φ.
[[nodiscard]] VectorField gaussian_vortex_potential(const Point3& center, double flux,
                                                    double width);

[[nodiscard]] VectorField sum_fields(VectorField a, VectorField b, ModeTag tag);

}  // namespace abfield
