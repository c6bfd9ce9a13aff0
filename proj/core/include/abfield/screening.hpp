#pragma once

#include <optional>

#include "abfield/constants.hpp"
#include "abfield/geometry.hpp"
#include "abfield/modes.hpp"
#include "abfield/sources.hpp"

namespace abfield {

/// λ = sqrt(m / (4 μ0 e*² |ψ∞|)), evaluated literally. The amplitude enters to
/// the first power, which is why ShieldSpec lets callers set λ directly.
/// Throws InvalidArgument unless every input is > 0.
[[nodiscard]] double penetration_length(double carrier_mass, double effective_charge,
                                        double psi_inf);

/// Superconducting shell around the solenoid.
struct ShieldSpec {
    double carrier_mass{constants::electron_mass};
    double effective_charge{2.0 * constants::elementary_charge};  ///< Cooper pair, 2e
    double psi_inf{1.0};
    std::optional<double> lambda_override{};
    double inner_radius{0.0};  ///< [m]
    double outer_radius{0.0};  ///< [m]

    /// The override when present, otherwise penetration_length(...).
    [[nodiscard]] double lambda() const;

    /// Throws InvalidArgument unless λ > 0 and solenoid_radius ≤ inner < outer.
    void validate(double solenoid_radius) const;
};

/// e^x K_ν(x) for ν = 0, 1 and x > 0, valid beyond the range where K_ν itself
/// underflows.
[[nodiscard]] double bessel_k0_scaled(double x);
[[nodiscard]] double bessel_k1_scaled(double x);

/// London-limit azimuthal potential inside the shield, ρ ≥ inner radius:
///   A_φ(ρ) = A_φ(ρ_in) · K1(ρ/λ) / K1(ρ_in/λ)
/// with A_φ(ρ_in) the unscreened exterior value μ0 n I a²/(2ρ_in).
[[nodiscard]] double screened_solenoid_profile(const SolenoidSpec& spec, const ShieldSpec& shield,
                                               double rho);

/// d ln A_φ / dρ = −(1/λ)·(K0(x)/K1(x) + 1/x), x = ρ/λ.
[[nodiscard]] double screened_profile_log_slope(const SolenoidSpec& spec, const ShieldSpec& shield,
                                                double rho);

enum class ScenarioTag { original_ab, tonomura_shielded };

[[nodiscard]] const char* to_string(ScenarioTag tag) noexcept;

/// Field configuration seen by an electron in each experimental setting.
///
/// original_ab: a_field is the closed-form solenoid potential everywhere and
/// b_field the bore field; the forbidden core is the solenoid itself.
/// tonomura_shielded: a_field is the pure-gauge ∇θ, defined only in the travel
/// region ρ > shield outer radius; b_field is the bore field (zero throughout
/// the travel region).
struct ScenarioField {
    ScenarioTag tag{ScenarioTag::original_ab};
    VectorField a_field;
    VectorField b_field;
    double forbidden_outer_radius{0.0};
};

/// Throws InvalidArgument for a Tonomura scenario without a shield or with
/// radii inconsistent with the solenoid.
[[nodiscard]] ScenarioField build_scenario(ScenarioTag tag, const SolenoidSpec& spec,
                                           const std::optional<ShieldSpec>& shield,
                                           const ScalarGauge& gauge = zero_gauge());

/// Throws InvalidArgument if any sample point of the loop lies within the
/// forbidden radius (about the z-axis).
void require_travel_region(const ScenarioField& scenario, const ParametricLoop& loop);

}  // namespace abfield
