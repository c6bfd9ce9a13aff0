#pragma once

#include <array>
#include <cmath>

#include "abfield/errors.hpp"

namespace abfield {

/// Free 3-vector in Cartesian components.
struct Vec3 {
    double x{0.0};
    double y{0.0};
    double z{0.0};

    constexpr Vec3& operator+=(const Vec3& o) noexcept {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr Vec3& operator-=(const Vec3& o) noexcept {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    constexpr Vec3& operator*=(double s) noexcept {
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }

    friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) noexcept { return a += b; }
    friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) noexcept { return a -= b; }
    friend constexpr Vec3 operator-(const Vec3& a) noexcept { return {-a.x, -a.y, -a.z}; }
    friend constexpr Vec3 operator*(Vec3 a, double s) noexcept { return a *= s; }
    friend constexpr Vec3 operator*(double s, Vec3 a) noexcept { return a *= s; }
    friend constexpr Vec3 operator/(const Vec3& a, double s) noexcept {
        return {a.x / s, a.y / s, a.z / s};
    }
    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

[[nodiscard]] constexpr double dot(const Vec3& a, const Vec3& b) noexcept {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

[[nodiscard]] constexpr Vec3 cross(const Vec3& a, const Vec3& b) noexcept {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

[[nodiscard]] inline double norm(const Vec3& v) noexcept { return std::sqrt(dot(v, v)); }

[[nodiscard]] inline double max_abs(const Vec3& v) noexcept {
    return std::fmax(std::fabs(v.x), std::fmax(std::fabs(v.y), std::fabs(v.z)));
}

[[nodiscard]] inline bool is_finite(const Vec3& v) noexcept {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

/// Position in space [m]. Construction rejects non-finite coordinates, so every
/// Point3 in circulation is a valid location.
class Point3 {
public:
    constexpr Point3() = default;

    Point3(double x, double y, double z) : x_(x), y_(y), z_(z) {
        if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
            throw InvalidArgument("Point3: non-finite coordinate");
        }
    }

    explicit Point3(const Vec3& v) : Point3(v.x, v.y, v.z) {}

    [[nodiscard]] constexpr double x() const noexcept { return x_; }
    [[nodiscard]] constexpr double y() const noexcept { return y_; }
    [[nodiscard]] constexpr double z() const noexcept { return z_; }

    /// Position vector relative to the origin.
    [[nodiscard]] constexpr Vec3 vec() const noexcept { return {x_, y_, z_}; }

    friend Point3 operator+(const Point3& p, const Vec3& d) { return Point3(p.vec() + d); }
    friend Point3 operator-(const Point3& p, const Vec3& d) { return Point3(p.vec() - d); }
    friend constexpr Vec3 operator-(const Point3& a, const Point3& b) noexcept {
        return a.vec() - b.vec();
    }
    friend constexpr bool operator==(const Point3&, const Point3&) = default;

private:
    double x_{0.0};
    double y_{0.0};
    double z_{0.0};
};

[[nodiscard]] inline double distance(const Point3& a, const Point3& b) noexcept {
    return norm(a - b);
}

/// Row-major 3×3 matrix, used for field Jacobians.
struct Mat3 {
    std::array<double, 9> m{};

    [[nodiscard]] constexpr double operator()(int r, int c) const noexcept { return m[r * 3 + c]; }
    constexpr double& operator()(int r, int c) noexcept { return m[r * 3 + c]; }

    friend constexpr Vec3 operator*(const Mat3& a, const Vec3& v) noexcept {
        return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
                a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
                a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
    }
    friend constexpr Mat3 operator*(double s, Mat3 a) noexcept {
        for (auto& e : a.m) e *= s;
        return a;
    }
};

/// Solves a·x = b by Cramer's rule; throws InvalidArgument if a is singular.
[[nodiscard]] Vec3 solve(const Mat3& a, const Vec3& b);

}  // namespace abfield
