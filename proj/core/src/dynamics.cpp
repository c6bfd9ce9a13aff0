#include "abfield/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "abfield/circulation.hpp"
#include "abfield/errors.hpp"
#include "abfield/modes.hpp"

namespace abfield {

RampSchedule::RampSchedule(Shape shape, double final_current, double duration)
    : shape_(shape), final_(final_current), duration_(duration) {
    if (!(duration_ > 0.0) || !std::isfinite(duration_)) {
        throw InvalidArgument("RampSchedule: duration must be > 0");
    }
    if (!std::isfinite(final_)) throw InvalidArgument("RampSchedule: final current must be finite");
}

double RampSchedule::current(double t) const noexcept {
    const double s = std::clamp(t / duration_, 0.0, 1.0);
    if (shape_ == Shape::linear) return final_ * s;
    return final_ * s * s * (3.0 - 2.0 * s);
}

double RampSchedule::rate(double t) const noexcept {
    if (t < 0.0 || t > duration_) return 0.0;
    const double s = t / duration_;
    if (shape_ == Shape::linear) return t < duration_ ? final_ / duration_ : 0.0;
    return 6.0 * final_ * s * (1.0 - s) / duration_;
}

Vec3 lorentz_force(const ParticleState& state, const Vec3& e_field, const Vec3& b_field) {
    return state.charge * (e_field + cross(state.velocity, b_field));
}

Vec3 induced_e_field(const SolenoidSpec& spec, const RampSchedule& ramp, const Point3& x,
                     double t) {
    const double rate = ramp.rate(t);
    if (rate == 0.0) return {};
    return -rate * solenoid_longitudinal_analytic(spec.with_current(1.0), x);
}

const char* to_string(ForceModel m) noexcept {
    return m == ForceModel::lorentz ? "lorentz" : "total_derivative";
}

namespace {

double axial_radius(const Frame& f, const Point3& x) {
    const Vec3 l = f.to_local(x);
    return std::hypot(l.x, l.y);
}

// Closest approach to the axis along the straight step a → b.
double step_min_radius(const Frame& f, const Point3& a, const Point3& b) {
    const Vec3 la = f.to_local(a);
    const Vec3 lb = f.to_local(b);
    const double dx = lb.x - la.x;
    const double dy = lb.y - la.y;
    const double len2 = dx * dx + dy * dy;
    const double s = len2 > 0.0 ? std::clamp(-(la.x * dx + la.y * dy) / len2, 0.0, 1.0) : 0.0;
    return std::hypot(la.x + s * dx, la.y + s * dy);
}

}  // namespace

TrajectoryRecord integrate_trajectory(const ParticleState& initial, const SolenoidSpec& spec,
                                      const RampSchedule& ramp, const TrajectoryOptions& opt) {
    spec.validate();
    if (!(opt.dt > 0.0) || !(opt.t_end > initial.t)) {
        throw InvalidArgument("integrate_trajectory: need dt > 0 and t_end > t0");
    }
    if (!(initial.mass > 0.0)) throw InvalidArgument("integrate_trajectory: mass must be > 0");
    if (opt.record_every < 1 || opt.curl_check_every < 1) {
        throw InvalidArgument("integrate_trajectory: record/check intervals must be >= 1");
    }
    const Frame frame = spec.frame();
    if (!(axial_radius(frame, initial.position) > spec.radius)) {
        throw InvalidArgument("integrate_trajectory: start point must lie outside the solenoid");
    }

    const SolenoidSpec unit = spec.with_current(1.0);
    const double m = initial.mass;
    const double q = initial.charge;
    const double dt = opt.dt;

    auto potential = [&](const Point3& x, double t) {
        return ramp.current(t) * solenoid_longitudinal_analytic(unit, x);
    };
    auto canonical = [&](const Point3& x, const Vec3& v, double t) {
        return m * v + q * potential(x, t);
    };
    auto convective = [&](const Point3& x, const Vec3& v, double t) {
        return (q * ramp.current(t)) * (solenoid_longitudinal_jacobian(unit, x) * v);
    };
    auto force = [&](const Point3& x, const Vec3& v, double t) {
        const ParticleState s{t, x, v, m, q};
        const Vec3 e = induced_e_field(spec, ramp, x, t);
        const Vec3 b = solenoid_field_analytic(spec.with_current(ramp.current(t)), x);
        Vec3 f = lorentz_force(s, e, b);
        if (opt.model == ForceModel::total_derivative) f -= convective(x, v, t);
        return f;
    };

    TrajectoryRecord rec;
    Point3 x = initial.position;
    Vec3 v = initial.velocity;
    double t = initial.t;
    const Vec3 p0 = canonical(x, v, t);
    const double p0_norm = norm(p0) > 0.0 ? norm(p0) : 1.0;
    rec.initial_momentum = p0;

    auto sample = [&](const Vec3& p) {
        const Vec3 arm = x - spec.axis.origin;
        return TrajectorySample{t, x, v, p, norm(p - p0) / p0_norm,
                                dot(frame.e3, cross(arm, p))};
    };
    rec.samples.push_back(sample(p0));

    const long steps = static_cast<long>(std::ceil((opt.t_end - initial.t) / dt - 1e-9));
    Vec3 conv_prev = convective(x, v, t);
    for (long n = 1; n <= steps; ++n) {
        const double h = std::min(dt, opt.t_end - t);
        const Vec3 v_half = v + (h / (2.0 * m)) * force(x, v, t);
        const Point3 x_next = x + h * v_half;
        const double t_next = t + h;
        if (!(step_min_radius(frame, x, x_next) > spec.radius)) {
            rec.breached = true;
            break;
        }
        Vec3 v_next;
        if (opt.model == ForceModel::total_derivative) {
            // v' = v½ + h/2m·(−q)(∂A/∂t + J v')  ⇒  (1 + (q h/2m) I J) v' = v½ − (q h/2m) ∂A/∂t
            const double c = q * h / (2.0 * m);
            Mat3 lhs = (c * ramp.current(t_next)) * solenoid_longitudinal_jacobian(unit, x_next);
            for (int i = 0; i < 3; ++i) lhs(i, i) += 1.0;
            const Vec3 dadt = ramp.rate(t_next) * solenoid_longitudinal_analytic(unit, x_next);
            v_next = solve(lhs, v_half - c * dadt);
        } else {
            v_next = v_half + (h / (2.0 * m)) * force(x_next, v_half, t_next);
        }
        x = x_next;
        v = v_next;
        t = t_next;
        rec.steps = n;

        const Vec3 conv = convective(x, v, t);
        rec.convective_impulse += (0.5 * h) * (conv_prev + conv);
        conv_prev = conv;

        const Vec3 p = canonical(x, v, t);
        const double drift = norm(p - p0) / p0_norm;
        rec.max_relative_drift = std::max(rec.max_relative_drift, drift);

        if (n % opt.curl_check_every == 0) {
            const double rho = std::hypot(x.x(), x.y());
            if (rho > 0.0) {
                const VectorField a{[&](const Point3& y) { return potential(y, t); },
                                    ModeTag::longitudinal, "ramped solenoid"};
                const CylVector c = curl_cylindrical(a, x, kCurlRelativeStep * rho);
                rec.max_exterior_curl =
                    std::max(rec.max_exterior_curl, norm(Vec3{c.rho, c.phi, c.z}));
            }
        }
        if (n % opt.record_every == 0 || n == steps) rec.samples.push_back(sample(p));
    }
    return rec;
}

AngularImpulse angular_impulse(const ParametricLoop& loop, const SolenoidSpec& spec,
                               double charge, double planck) {
    spec.validate();
    const Frame frame = spec.frame();
    for (const auto& p : loop.sample_points()) {
        if (!(axial_radius(frame, p) > spec.radius)) {
            throw InvalidArgument("angular_impulse: loop must lie outside the solenoid");
        }
    }
    const LoopIntegral li = loop_integral(analytic_longitudinal_field(spec), loop);
    AngularImpulse r;
    r.value = charge * li.value;
    r.planck_ratio = r.value / planck;
    r.error_estimate = std::fabs(charge) * li.error_estimate;
    return r;
}

}  // namespace abfield
