#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "abfield/vec3.hpp"

namespace abfield {

/// Maximum gap allowed between consecutive segment endpoints of a loop [m].
inline constexpr double kClosureTolerance = 1e-9;

// ---------------------------------------------------------------------------
// Coordinates
// ---------------------------------------------------------------------------

/// Cylindrical coordinates about the z-axis. phi lies in [0, 2π).
struct CylPoint {
    double rho{0.0};
    double phi{0.0};
    double z{0.0};
};

/// Vector components in the local cylindrical basis (ρ̂, φ̂, ẑ).
struct CylVector {
    double rho{0.0};
    double phi{0.0};
    double z{0.0};
};

/// rho = 0 maps to phi = 0.
[[nodiscard]] CylPoint cyl_from_cart(const Point3& p);
[[nodiscard]] Point3 cart_from_cyl(const CylPoint& c);

/// Projects v onto the cylindrical basis at `at`. On the axis the basis at
/// phi = 0 is used.
[[nodiscard]] CylVector to_cylindrical(const Point3& at, const Vec3& v);
[[nodiscard]] Vec3 from_cylindrical(const Point3& at, const CylVector& c);

/// Right-handed orthonormal frame; e3 is the "axis" direction.
struct Frame {
    Point3 origin;
    Vec3 e1{1.0, 0.0, 0.0};
    Vec3 e2{0.0, 1.0, 0.0};
    Vec3 e3{0.0, 0.0, 1.0};

    /// Builds a frame whose e3 is `axis` (must be unit length within 1e-12).
    static Frame with_axis(const Point3& origin, const Vec3& axis);

    [[nodiscard]] Vec3 to_local(const Point3& p) const;
    [[nodiscard]] Vec3 vector_to_local(const Vec3& v) const;
    [[nodiscard]] Point3 from_local(const Vec3& local) const;
    [[nodiscard]] Vec3 vector_from_local(const Vec3& local) const;
};

// ---------------------------------------------------------------------------
// Curves
// ---------------------------------------------------------------------------

/// Continuous parametric arc t ∈ [0, 1] → Point3 with its derivative dx/dt.
/// When no analytic tangent is supplied a fourth-order central difference of
/// the position map is used.
class Segment {
public:
    using PositionFn = std::function<Point3(double)>;
    using TangentFn = std::function<Vec3(double)>;

    explicit Segment(PositionFn position, TangentFn tangent = {});

    [[nodiscard]] Point3 position(double t) const { return position_(t); }
    [[nodiscard]] Vec3 tangent(double t) const;
    [[nodiscard]] Point3 start() const { return position_(0.0); }
    [[nodiscard]] Point3 end() const { return position_(1.0); }

    /// Same point set traversed from end to start.
    [[nodiscard]] Segment reversed() const;

private:
    PositionFn position_;
    TangentFn tangent_;
};

[[nodiscard]] Segment line_segment(const Point3& from, const Point3& to);

/// Circular arc about `center` in the plane orthogonal to `unit_normal`,
/// counterclockwise (right-handed about the normal) from angle_begin to
/// angle_end. Angles are measured from the frame vector e1 of
/// Frame::with_axis(center, unit_normal).
[[nodiscard]] Segment circle_arc(const Point3& center, double radius, const Vec3& unit_normal,
                                 double angle_begin, double angle_end);

/// Quadrature family used along each loop segment.
enum class QuadratureRule { trapezoid, gauss_legendre };

/// Oriented closed curve made of parametric segments. orientation = −1
/// traverses the stored segments backwards. Immutable after construction.
class ParametricLoop {
public:
    /// Throws InvalidArgument when consecutive endpoints (including last →
    /// first) are further apart than kClosureTolerance, when orientation is
    /// not ±1, or when samples_per_segment < 1.
    ParametricLoop(std::vector<Segment> segments, int orientation, int samples_per_segment);

    [[nodiscard]] std::span<const Segment> segments() const noexcept { return segments_; }
    [[nodiscard]] int orientation() const noexcept { return orientation_; }
    [[nodiscard]] int samples_per_segment() const noexcept { return samples_per_segment_; }

    /// Segments in the actual direction of travel (orientation applied).
    [[nodiscard]] std::vector<Segment> traversal_segments() const;

    /// First point of the traversal.
    [[nodiscard]] Point3 start() const;

    /// |start − end| of the traversal.
    [[nodiscard]] double closure_defect() const;

    /// Same samples, opposite direction of travel.
    [[nodiscard]] ParametricLoop reversed() const;

    /// Same geometry with a different per-segment sample count.
    [[nodiscard]] ParametricLoop with_samples(int samples_per_segment) const;

    /// Uniform polyline in traversal order, closed (last point == first point
    /// up to the closure defect).
    [[nodiscard]] std::vector<Point3> sample_points() const;

    [[nodiscard]] double polyline_length() const;

private:
    std::vector<Segment> segments_;
    int orientation_;
    int samples_per_segment_;
};

/// Circle loop (optionally wound several times). Rejects radius ≤ 0,
/// non-unit normals, samples < 8, orientation other than ±1, windings < 1.
[[nodiscard]] ParametricLoop make_circle_loop(const Point3& center, double radius,
                                              const Vec3& unit_normal, int orientation,
                                              int samples, int windings = 1,
                                              double start_angle = 0.0);

/// Closed polygon through the vertices (last connects back to first).
[[nodiscard]] ParametricLoop make_polygon_loop(std::vector<Point3> vertices, int orientation,
                                               int samples_per_edge);

/// Single closed curve C = C1 + C4 + C2 + C3: the outer loop, the bridge to the
/// inner loop, the inner loop, and the bridge back. bridge_out must run from
/// outer.start() to inner.start(); bridge_back must be the same path traversed
/// backwards. Both conditions are checked to kClosureTolerance.
[[nodiscard]] ParametricLoop compose_loops(const ParametricLoop& outer,
                                           const ParametricLoop& inner,
                                           const Segment& bridge_out,
                                           const Segment& bridge_back);

/// compose_loops with straight bridges between the loops' start points.
[[nodiscard]] ParametricLoop compose_with_straight_bridges(const ParametricLoop& outer,
                                                           const ParametricLoop& inner);

// ---------------------------------------------------------------------------
// Surface meshes
// ---------------------------------------------------------------------------

struct Face {
    std::vector<Point3> vertices;  ///< counterclockwise about the area vector
    Point3 centroid;
    Vec3 area_vector;              ///< unit normal × area [m²]
};

enum class RegionTag { simply_connected, annular };

struct MeshResolution {
    double inner_radius{0.0};  ///< 0 for a disk
    double outer_radius{0.0};
    double z{0.0};
    int radial_cells{0};
    int angular_cells{0};
};

/// Planar polar mesh of a disk or an annulus in a z = const plane with +ẑ
/// normals. The outer boundary runs counterclockwise and the inner boundary
/// clockwise, which is the orientation induced by the +ẑ normal.
class AnnularMesh {
public:
    AnnularMesh(std::vector<Face> faces, ParametricLoop outer_boundary,
                std::optional<ParametricLoop> inner_boundary, RegionTag tag,
                MeshResolution resolution);

    [[nodiscard]] std::span<const Face> faces() const noexcept { return faces_; }
    [[nodiscard]] const ParametricLoop& outer_boundary() const noexcept { return outer_; }
    [[nodiscard]] const std::optional<ParametricLoop>& inner_boundary() const noexcept {
        return inner_;
    }
    [[nodiscard]] RegionTag region_tag() const noexcept { return tag_; }
    [[nodiscard]] const MeshResolution& resolution() const noexcept { return resolution_; }

    [[nodiscard]] double total_area() const;

    /// The same region with half the cells in each direction (minimum 4).
    [[nodiscard]] AnnularMesh coarsened() const;

private:
    std::vector<Face> faces_;
    ParametricLoop outer_;
    std::optional<ParametricLoop> inner_;
    RegionTag tag_;
    MeshResolution resolution_;
};

/// Annulus inner_r < ρ < outer_r. Requires 0 < inner_r < outer_r and at
/// least 4 cells in each direction.
[[nodiscard]] AnnularMesh mesh_annulus(double inner_r, double outer_r, double z,
                                       int radial_cells, int angular_cells);

/// Full disk ρ < radius; the innermost ring is made of triangles.
[[nodiscard]] AnnularMesh mesh_disk(double radius, double z, int radial_cells,
                                    int angular_cells);

}  // namespace abfield
