#pragma once

#include <vector>

#include "abfield/constants.hpp"
#include "abfield/geometry.hpp"
#include "abfield/sources.hpp"
#include "abfield/vec3.hpp"

namespace abfield {

/// Classical point charge.
struct ParticleState {
    double t{0.0};
    Point3 position{};
    Vec3 velocity{};
    double mass{constants::electron_mass};
    double charge{constants::electron_charge};
};

/// Solenoid current I(t) rising monotonically from 0 to I_final over
/// [0, duration] and constant afterwards.
class RampSchedule {
public:
    enum class Shape { linear, smoothstep };

    /// Throws InvalidArgument unless duration > 0 and I_final is finite.
    RampSchedule(Shape shape, double final_current, double duration);

    static RampSchedule smoothstep(double final_current, double duration) {
        return {Shape::smoothstep, final_current, duration};
    }
    static RampSchedule linear(double final_current, double duration) {
        return {Shape::linear, final_current, duration};
    }

    [[nodiscard]] double current(double t) const noexcept;
    /// dI/dt (one-sided zero outside the ramp).
    [[nodiscard]] double rate(double t) const noexcept;

    [[nodiscard]] Shape shape() const noexcept { return shape_; }
    [[nodiscard]] double final_current() const noexcept { return final_; }
    [[nodiscard]] double duration() const noexcept { return duration_; }

private:
    Shape shape_;
    double final_;
    double duration_;
};

/// charge·(E + v×B) [N].
[[nodiscard]] Vec3 lorentz_force(const ParticleState& state, const Vec3& e_field,
                                 const Vec3& b_field);

/// E = −∂A/∂t of the ramped solenoid: −(dI/dt) times the closed-form potential
/// evaluated at unit current. Requires ρ(x) > 0 about the solenoid axis.
[[nodiscard]] Vec3 induced_e_field(const SolenoidSpec& spec, const RampSchedule& ramp,
                                   const Point3& x, double t);

/// How the electron is pushed in the exterior, where B = 0.
enum class ForceModel {
    /// F = charge·E with E = −∂A/∂t at the particle position.
    lorentz,
    /// F = −charge·dA(x(t), t)/dt along the trajectory, i.e. including the
    /// convective term (v·∇)A. Under this force m v + charge·A is an exact
    /// invariant of the continuous motion.
    total_derivative,
};

[[nodiscard]] const char* to_string(ForceModel m) noexcept;

struct TrajectoryOptions {
    double dt{0.0};
    double t_end{0.0};
    ForceModel model{ForceModel::lorentz};
    int record_every{1};         ///< keep every k-th step in the record
    int curl_check_every{1000};  ///< spot-check ∇×A = 0 every k steps
};

struct TrajectorySample {
    double t{0.0};
    Point3 position{};
    Vec3 velocity{};
    Vec3 canonical_momentum{};     ///< m v + charge·A(x, I(t))
    double relative_drift{0.0};    ///< |p − p0| / |p0|
    double angular_momentum{0.0};  ///< axial component of (x − axis origin) × p
};

struct TrajectoryRecord {
    std::vector<TrajectorySample> samples;
    bool breached{false};           ///< stopped because a step came within ρ ≤ a
    long steps{0};
    double max_relative_drift{0.0};  ///< over every step, not only recorded ones
    Vec3 initial_momentum{};
    /// ∫ charge·(v·∇)A dt along the path (trapezoid in time): the part of
    /// dp/dt the partial-derivative field does not cancel.
    Vec3 convective_impulse{};
    double max_exterior_curl{0.0};  ///< largest |∇×A| seen by the spot checks [T]
};

/// Velocity-Verlet integration in the solenoid exterior. B = 0 is imposed
/// there; the induced E drives the motion. For the total_derivative model the
/// closing half-kick is solved implicitly (the force is linear in v).
/// Throws InvalidArgument if the start point is not outside the solenoid or
/// dt/t_end are not positive.
[[nodiscard]] TrajectoryRecord integrate_trajectory(const ParticleState& initial,
                                                    const SolenoidSpec& spec,
                                                    const RampSchedule& ramp,
                                                    const TrajectoryOptions& options);

/// charge·∮A·dx of the closed-form potential around an exterior loop
/// [J·s], and its ratio to Planck's constant.
struct AngularImpulse {
    double value{0.0};
    double planck_ratio{0.0};
    double error_estimate{0.0};
};

[[nodiscard]] AngularImpulse angular_impulse(const ParametricLoop& loop, const SolenoidSpec& spec,
                                             double charge, double planck = constants::planck);

}  // namespace abfield
