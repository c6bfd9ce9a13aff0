#include "abfield/modes.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include "abfield/constants.hpp"
#include "abfield/errors.hpp"

namespace abfield {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_infinite(const SolenoidSpec& spec, const char* who) {
    spec.validate();
    if (!spec.infinite()) {
        throw InvalidArgument(std::string(who) + ": closed form needs an infinite solenoid");
    }
}

Mat3 rotate_to_global(const Frame& f, const Mat3& local) {
    // J_global = R J_local Rᵀ with R = [e1 e2 e3]
    Mat3 r;
    const std::array<Vec3, 3> e{f.e1, f.e2, f.e3};
    for (int a = 0; a < 3; ++a) {
        r(0, a) = e[a].x;
        r(1, a) = e[a].y;
        r(2, a) = e[a].z;
    }
    Mat3 out;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 3; ++b) s += r(i, a) * local(a, b) * r(j, b);
            }
            out(i, j) = s;
        }
    }
    return out;
}

}  // namespace

const char* to_string(ModeTag tag) noexcept {
    switch (tag) {
        case ModeTag::longitudinal: return "longitudinal";
        case ModeTag::scalar: return "scalar";
        case ModeTag::total: return "total";
        case ModeTag::magnetic: return "magnetic";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------

Vec3 longitudinal_from_current(const SurfaceCurrent& src, const Point3& x) {
    const double gap = src.distance_to_sheet(x);
    if (!(gap > src.spacing())) {
        throw SingularProximityError(
            "longitudinal_from_current: evaluation point within one sample spacing of the "
            "current sheet");
    }
    const Vec3 p = x.vec();
    double ax = 0.0;
    double ay = 0.0;
    double az = 0.0;
    for (const auto& s : src.samples()) {
        const double inv_d = s.weight / norm(p - s.position.vec());
        ax += s.density.x * inv_d;
        ay += s.density.y * inv_d;
        az += s.density.z * inv_d;
    }
    const double pre = constants::mu0 / (4.0 * constants::pi);
    return {pre * ax, pre * ay, pre * az};
}

Vec3 solenoid_longitudinal_analytic(const SolenoidSpec& spec, const Point3& x) {
    require_infinite(spec, "solenoid_longitudinal_analytic");
    const Frame f = spec.frame();
    const Vec3 l = f.to_local(x);
    const double rho2 = l.x * l.x + l.y * l.y;
    if (rho2 == 0.0) return {};
    const double a = spec.radius;
    const double k = spec.sheet_current();
    // A = coef · (−y, x, 0): coef·ρ = A_φ
    const double coef = rho2 >= a * a ? constants::mu0 * k * a * a / (2.0 * rho2)
                                      : constants::mu0 * k / 2.0;
    return f.vector_from_local({-coef * l.y, coef * l.x, 0.0});
}

Mat3 solenoid_longitudinal_jacobian(const SolenoidSpec& spec, const Point3& x) {
    require_infinite(spec, "solenoid_longitudinal_jacobian");
    const Frame f = spec.frame();
    const Vec3 l = f.to_local(x);
    const double rho2 = l.x * l.x + l.y * l.y;
    const double a = spec.radius;
    const double k = spec.sheet_current();
    Mat3 j;
    if (rho2 >= a * a) {
        const double c = constants::mu0 * k * a * a / 2.0;
        const double r4 = rho2 * rho2;
        j(0, 0) = 2.0 * c * l.x * l.y / r4;
        j(0, 1) = c * (l.y * l.y - l.x * l.x) / r4;
        j(1, 0) = j(0, 1);
        j(1, 1) = -j(0, 0);
    } else {
        const double d = constants::mu0 * k / 2.0;
        j(0, 1) = -d;
        j(1, 0) = d;
    }
    return rotate_to_global(f, j);
}

Vec3 solenoid_field_analytic(const SolenoidSpec& spec, const Point3& x) {
    require_infinite(spec, "solenoid_field_analytic");
    const Frame f = spec.frame();
    const Vec3 l = f.to_local(x);
    if (l.x * l.x + l.y * l.y > spec.radius * spec.radius) return {};
    return (constants::mu0 * spec.sheet_current()) * f.e3;
}

VectorField analytic_longitudinal_field(const SolenoidSpec& spec) {
    require_infinite(spec, "analytic_longitudinal_field");
    return VectorField{[spec](const Point3& x) { return solenoid_longitudinal_analytic(spec, x); },
                       ModeTag::longitudinal, "solenoid closed form"};
}

VectorField quadrature_longitudinal_field(std::shared_ptr<const SurfaceCurrent> src) {
    if (!src) throw InvalidArgument("quadrature_longitudinal_field: null source");
    return VectorField{[src](const Point3& x) { return longitudinal_from_current(*src, x); },
                       ModeTag::longitudinal, "sheet-current quadrature"};
}

VectorField solenoid_magnetic_field(const SolenoidSpec& spec) {
    require_infinite(spec, "solenoid_magnetic_field");
    return VectorField{[spec](const Point3& x) { return solenoid_field_analytic(spec, x); },
                       ModeTag::magnetic, "solenoid bore field"};
}

// ---------------------------------------------------------------------------

namespace {

Vec3 central_gradient(const ScalarGauge& g, const Point3& x, double h, double* scale) {
    const std::array<Vec3, 3> axes{Vec3{h, 0.0, 0.0}, Vec3{0.0, h, 0.0}, Vec3{0.0, 0.0, h}};
    std::array<double, 3> d{};
    double mag = 0.0;
    for (int i = 0; i < 3; ++i) {
        const Point3 plus = x + axes[i];
        const Point3 minus = x - axes[i];
        if (!g.contains(plus) || !g.contains(minus)) {
            throw DomainError("scalar_mode: gradient stencil leaves the gauge domain");
        }
        const double tp = g.theta(plus);
        const double tm = g.theta(minus);
        d[i] = (tp - tm) / (2.0 * h);
        mag = std::fmax(mag, std::fmax(std::fabs(tp), std::fabs(tm)));
    }
    if (scale) *scale = mag;
    return {d[0], d[1], d[2]};
}

}  // namespace

Vec3 scalar_mode(const ScalarGauge& g, const Point3& x, double h) {
    if (!(h > 0.0)) throw InvalidArgument("scalar_mode: step must be > 0");
    if (!g.contains(x)) throw DomainError("scalar_mode: point outside the gauge domain");
    return central_gradient(g, x, h, nullptr);
}

VectorField scalar_mode_field(ScalarGauge g, double h) {
    auto shared = std::make_shared<const ScalarGauge>(std::move(g));
    VectorField f;
    f.evaluator = [shared, h](const Point3& x) { return scalar_mode(*shared, x, h); };
    f.mode_tag = ModeTag::scalar;
    f.provenance = "gradient of " + shared->description;
    f.abs_error = [shared, h](const Point3& x) {
        double scale = 0.0;
        const Vec3 fine = central_gradient(*shared, x, h, &scale);
        double truncation = 0.0;
        try {
            truncation = norm(fine - central_gradient(*shared, x, 2.0 * h, nullptr));
        } catch (const DomainError&) {
            truncation = 0.0;
        }
        // each component: two rounded θ values divided by 2h
        const double cancellation = 4.0 * kEps * scale / h * std::sqrt(3.0);
        return truncation + cancellation;
    };
    return f;
}

ScalarGauge zero_gauge() {
    return ScalarGauge{[](const Point3&) { return 0.0; }, {}, "theta = 0"};
}

ScalarGauge polynomial_gauge(double c0, const Vec3& linear, const std::array<double, 9>& q) {
    return ScalarGauge{
        [=](const Point3& p) {
            const Vec3 x = p.vec();
            const Vec3 qx{q[0] * x.x + q[1] * x.y + q[2] * x.z, q[3] * x.x + q[4] * x.y + q[5] * x.z,
                          q[6] * x.x + q[7] * x.y + q[8] * x.z};
            return c0 + dot(linear, x) + 0.5 * dot(x, qx);
        },
        {},
        "quadratic polynomial"};
}

ScalarGauge sinusoidal_gauge(double amplitude, const Vec3& wavevector, double phase) {
    return ScalarGauge{
        [=](const Point3& p) { return amplitude * std::sin(dot(wavevector, p.vec()) + phase); },
        {},
        "sinusoid"};
}

ScalarGauge azimuthal_gauge(double c, double cut_half_width) {
    return ScalarGauge{
        [c](const Point3& p) { return c * std::atan2(p.y(), p.x()); },
        [cut_half_width](const Point3& p) {
            if (p.x() == 0.0 && p.y() == 0.0) return false;
            return constants::pi - std::fabs(std::atan2(p.y(), p.x())) > cut_half_width;
        },
        "azimuth on the cut plane"};
}

ScalarGauge sum_gauges(ScalarGauge a, ScalarGauge b) {
    auto sa = std::make_shared<const ScalarGauge>(std::move(a));
    auto sb = std::make_shared<const ScalarGauge>(std::move(b));
    return ScalarGauge{[sa, sb](const Point3& p) { return sa->theta(p) + sb->theta(p); },
                       [sa, sb](const Point3& p) { return sa->contains(p) && sb->contains(p); },
                       sa->description + " + " + sb->description};
}

// ---------------------------------------------------------------------------

CylVector curl_cylindrical(const VectorField& f, const Point3& x, double h) {
    const CylPoint c = cyl_from_cart(x);
    if (!(h > 0.0) || !(c.rho > 2.0 * h)) {
        throw StencilError("curl_cylindrical: stencil would reach the axis (need rho > 2h)");
    }
    const double dphi = h / c.rho;
    auto comp = [&](double rho, double phi, double z) {
        const Point3 p = cart_from_cyl({rho, phi, z});
        return to_cylindrical(p, f(p));
    };
    const CylVector rp = comp(c.rho + h, c.phi, c.z);
    const CylVector rm = comp(c.rho - h, c.phi, c.z);
    const CylVector pp = comp(c.rho, c.phi + dphi, c.z);
    const CylVector pm = comp(c.rho, c.phi - dphi, c.z);
    const CylVector zp = comp(c.rho, c.phi, c.z + h);
    const CylVector zm = comp(c.rho, c.phi, c.z - h);

    const double inv2h = 1.0 / (2.0 * h);
    const double inv_rho = 1.0 / c.rho;
    CylVector b;
    b.rho = inv_rho * (pp.z - pm.z) / (2.0 * dphi) - (zp.phi - zm.phi) * inv2h;
    b.phi = (zp.rho - zm.rho) * inv2h - (rp.z - rm.z) * inv2h;
    b.z = inv_rho * ((c.rho + h) * rp.phi - (c.rho - h) * rm.phi) * inv2h -
          inv_rho * (pp.rho - pm.rho) / (2.0 * dphi);
    return b;
}

VectorField curl_field(VectorField f) {
    auto shared = std::make_shared<const VectorField>(std::move(f));
    VectorField out;
    out.evaluator = [shared](const Point3& x) {
        const double h = kCurlRelativeStep * std::hypot(x.x(), x.y());
        return from_cylindrical(x, curl_cylindrical(*shared, x, h));
    };
    out.mode_tag = ModeTag::magnetic;
    out.provenance = "curl of " + shared->provenance;
    out.abs_error = [shared](const Point3& x) {
        const double h = kCurlRelativeStep * std::hypot(x.x(), x.y());
        const CylVector fine = curl_cylindrical(*shared, x, h);
        const CylVector coarse = curl_cylindrical(*shared, x, 2.0 * h);
        const double truncation =
            norm(Vec3{fine.rho - coarse.rho, fine.phi - coarse.phi, fine.z - coarse.z});
        const double scale = norm((*shared)(x));
        const double propagated = 6.0 * (shared->error_at(x) + 8.0 * kEps * scale) / h;
        return truncation + propagated;
    };
    return out;
}

// ---------------------------------------------------------------------------

VectorField uniform_field_potential(const Vec3& b0) {
    return VectorField{[b0](const Point3& x) { return 0.5 * cross(b0, x.vec()); },
                       ModeTag::total, "uniform-field potential"};
}

VectorField gaussian_vortex_potential(const Point3& center, double flux, double width) {
    if (!(width > 0.0)) throw InvalidArgument("gaussian_vortex_potential: width must be > 0");
    const double w2 = width * width;
    return VectorField{
        [=](const Point3& x) {
            const double dx = x.x() - center.x();
            const double dy = x.y() - center.y();
            const double s = (dx * dx + dy * dy) / w2;
            // (1 − e^{−s})/s → 1 as s → 0
            const double g = s > 0.0 ? -std::expm1(-s) / s : 1.0;
            const double coef = flux / (2.0 * constants::pi * w2) * g;
            return Vec3{-coef * dy, coef * dx, 0.0};
        },
        ModeTag::total, "gaussian vortex"};
}

VectorField sum_fields(VectorField a, VectorField b, ModeTag tag) {
    auto sa = std::make_shared<const VectorField>(std::move(a));
    auto sb = std::make_shared<const VectorField>(std::move(b));
    VectorField out;
    out.evaluator = [sa, sb](const Point3& x) { return (*sa)(x) + (*sb)(x); };
    out.mode_tag = tag;
    out.provenance = sa->provenance + " + " + sb->provenance;
    if (sa->abs_error || sb->abs_error) {
        out.abs_error = [sa, sb](const Point3& x) { return sa->error_at(x) + sb->error_at(x); };
    }
    return out;
}

}  // namespace abfield
