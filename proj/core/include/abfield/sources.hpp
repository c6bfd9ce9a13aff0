#pragma once

#include <optional>
#include <vector>

#include "abfield/geometry.hpp"
#include "abfield/vec3.hpp"

namespace abfield {

/// Axis of a solenoid: a point on the axis and the unit winding direction.
/// Current circulates counterclockwise about `direction`.
struct SolenoidAxis {
    Point3 origin{};
    Vec3 direction{0.0, 0.0, 1.0};
};

/// Ideal tightly wound solenoid: radius a, n turns per metre carrying I.
struct SolenoidSpec {
    double radius{0.0};            ///< a [m], > 0
    double turns_per_length{0.0};  ///< n [1/m], > 0
    double current{0.0};           ///< I [A]
    SolenoidAxis axis{};
    std::optional<double> half_length{};  ///< empty = infinite

    /// Throws InvalidArgument on a ≤ 0, n ≤ 0, non-finite current, a finite
    /// half_length ≤ 0 or a non-unit axis direction.
    void validate() const;

    [[nodiscard]] bool infinite() const noexcept { return !half_length.has_value(); }

    /// Surface current density K = n·I [A/m].
    [[nodiscard]] double sheet_current() const noexcept { return turns_per_length * current; }

    [[nodiscard]] Frame frame() const { return Frame::with_axis(axis.origin, axis.direction); }

    [[nodiscard]] SolenoidSpec with_current(double i) const {
        SolenoidSpec s = *this;
        s.current = i;
        return s;
    }
};

struct CurrentSample {
    Point3 position;
    Vec3 density;   ///< K φ̂ [A/m]
    double weight;  ///< sheet area element [m²]
};

/// Discretized azimuthal sheet current on ρ = a, truncated to |z| ≤ z_extent.
class SurfaceCurrent {
public:
    SurfaceCurrent(SolenoidSpec spec, int n_phi, int n_z, double z_extent,
                   std::vector<CurrentSample> samples);

    [[nodiscard]] const SolenoidSpec& spec() const noexcept { return spec_; }
    [[nodiscard]] int n_phi() const noexcept { return n_phi_; }
    [[nodiscard]] int n_z() const noexcept { return n_z_; }
    [[nodiscard]] double z_extent() const noexcept { return z_extent_; }
    [[nodiscard]] const std::vector<CurrentSample>& samples() const noexcept { return samples_; }

    /// Largest distance between neighbouring samples [m].
    [[nodiscard]] double spacing() const noexcept;

    /// Distance from x to the truncated cylinder sheet [m].
    [[nodiscard]] double distance_to_sheet(const Point3& x) const;

    [[nodiscard]] double total_weight() const;

private:
    SolenoidSpec spec_;
    int n_phi_;
    int n_z_;
    double z_extent_;
    std::vector<CurrentSample> samples_;
};

/// Samples at φ_i = 2πi/n_phi and z-cell midpoints, each with weight
/// (2πa/n_phi)·(2·z_extent/n_z). Requires n_phi, n_z ≥ 16 and z_extent > 0.
[[nodiscard]] SurfaceCurrent surface_current_samples(const SolenoidSpec& spec, int n_phi,
                                                     int n_z, double z_extent);

}  // namespace abfield
