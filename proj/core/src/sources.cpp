#include "abfield/sources.hpp"

#include <algorithm>
#include <cmath>

#include "abfield/constants.hpp"
#include "abfield/errors.hpp"
#include "abfield/numerics.hpp"

namespace abfield {

void SolenoidSpec::validate() const {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw InvalidArgument("SolenoidSpec: radius must be > 0");
    }
    if (!(turns_per_length > 0.0) || !std::isfinite(turns_per_length)) {
        throw InvalidArgument("SolenoidSpec: turns per length must be > 0");
    }
    if (!std::isfinite(current)) throw InvalidArgument("SolenoidSpec: current must be finite");
    if (half_length && !(*half_length > 0.0)) {
        throw InvalidArgument("SolenoidSpec: finite half length must be > 0");
    }
    if (std::fabs(norm(axis.direction) - 1.0) > 1e-12) {
        throw InvalidArgument("SolenoidSpec: axis direction must be a unit vector");
    }
}

SurfaceCurrent::SurfaceCurrent(SolenoidSpec spec, int n_phi, int n_z, double z_extent,
                               std::vector<CurrentSample> samples)
    : spec_(std::move(spec)),
      n_phi_(n_phi),
      n_z_(n_z),
      z_extent_(z_extent),
      samples_(std::move(samples)) {}

double SurfaceCurrent::spacing() const noexcept {
    return std::max(2.0 * constants::pi * spec_.radius / n_phi_, 2.0 * z_extent_ / n_z_);
}

double SurfaceCurrent::distance_to_sheet(const Point3& x) const {
    const Vec3 local = spec_.frame().to_local(x);
    const double radial = std::hypot(local.x, local.y) - spec_.radius;
    const double axial = std::max(0.0, std::fabs(local.z) - z_extent_);
    return std::hypot(radial, axial);
}

double SurfaceCurrent::total_weight() const {
    std::vector<double> w;
    w.reserve(samples_.size());
    for (const auto& s : samples_) w.push_back(s.weight);
    return pairwise_sum(w);
}

SurfaceCurrent surface_current_samples(const SolenoidSpec& spec, int n_phi, int n_z,
                                       double z_extent) {
    spec.validate();
    if (n_phi < 16 || n_z < 16) {
        throw InvalidArgument("surface_current_samples: n_phi and n_z must be >= 16");
    }
    if (!(z_extent > 0.0) || !std::isfinite(z_extent)) {
        throw InvalidArgument("surface_current_samples: z_extent must be finite and > 0");
    }
    const Frame frame = spec.frame();
    const double a = spec.radius;
    const double dz = 2.0 * z_extent / n_z;
    const double weight = (2.0 * constants::pi * a / n_phi) * dz;
    const double k = spec.sheet_current();

    std::vector<CurrentSample> samples;
    samples.reserve(static_cast<std::size_t>(n_phi) * n_z);
    for (int i = 0; i < n_phi; ++i) {
        const double phi = 2.0 * constants::pi * i / n_phi;
        const double c = std::cos(phi);
        const double s = std::sin(phi);
        const Vec3 density = frame.vector_from_local({-k * s, k * c, 0.0});
        for (int j = 0; j < n_z; ++j) {
            const double z = -z_extent + (j + 0.5) * dz;
            samples.push_back({frame.from_local({a * c, a * s, z}), density, weight});
        }
    }
    return SurfaceCurrent(spec, n_phi, n_z, z_extent, std::move(samples));
}

}  // namespace abfield
