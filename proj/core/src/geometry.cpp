#include "abfield/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "abfield/constants.hpp"
#include "abfield/errors.hpp"
#include "abfield/numerics.hpp"

namespace abfield {

namespace {

constexpr double kTwoPi = 2.0 * constants::pi;

double normalize_angle(double phi) {
    double r = std::fmod(phi, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;  // fmod rounding at the upper edge
    return r;
}

void require_unit(const Vec3& v, const char* what) {
    if (!is_finite(v) || std::fabs(norm(v) - 1.0) > 1e-12) {
        throw InvalidArgument(std::string(what) + ": normal must be a unit vector");
    }
}

}  // namespace

CylPoint cyl_from_cart(const Point3& p) {
    const double rho = std::hypot(p.x(), p.y());
    const double phi = rho == 0.0 ? 0.0 : normalize_angle(std::atan2(p.y(), p.x()));
    return {rho, phi, p.z()};
}

Point3 cart_from_cyl(const CylPoint& c) {
    if (c.rho < 0.0) throw InvalidArgument("cart_from_cyl: rho must be >= 0");
    return {c.rho * std::cos(c.phi), c.rho * std::sin(c.phi), c.z};
}

CylVector to_cylindrical(const Point3& at, const Vec3& v) {
    const double rho = std::hypot(at.x(), at.y());
    double c = 1.0;
    double s = 0.0;
    if (rho > 0.0) {
        c = at.x() / rho;
        s = at.y() / rho;
    }
    return {c * v.x + s * v.y, -s * v.x + c * v.y, v.z};
}

Vec3 from_cylindrical(const Point3& at, const CylVector& v) {
    const double rho = std::hypot(at.x(), at.y());
    double c = 1.0;
    double s = 0.0;
    if (rho > 0.0) {
        c = at.x() / rho;
        s = at.y() / rho;
    }
    return {c * v.rho - s * v.phi, s * v.rho + c * v.phi, v.z};
}

Frame Frame::with_axis(const Point3& origin, const Vec3& axis) {
    require_unit(axis, "Frame::with_axis");
    const Vec3 helper = std::fabs(axis.z) > 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 0.0, 1.0};
    Vec3 e1 = helper - dot(helper, axis) * axis;
    e1 = e1 / norm(e1);
    return Frame{origin, e1, cross(axis, e1), axis};
}

Vec3 Frame::to_local(const Point3& p) const { return vector_to_local(p - origin); }

Vec3 Frame::vector_to_local(const Vec3& v) const { return {dot(v, e1), dot(v, e2), dot(v, e3)}; }

Point3 Frame::from_local(const Vec3& local) const {
    return origin + vector_from_local(local);
}

Vec3 Frame::vector_from_local(const Vec3& l) const { return l.x * e1 + l.y * e2 + l.z * e3; }

// ---------------------------------------------------------------------------

Segment::Segment(PositionFn position, TangentFn tangent)
    : position_(std::move(position)), tangent_(std::move(tangent)) {
    if (!position_) throw InvalidArgument("Segment: empty position map");
}

Vec3 Segment::tangent(double t) const {
    if (tangent_) return tangent_(t);
    // Fourth-order differences; one-sided near the ends so the stencil never
    // leaves [0, 1].
    constexpr double h = 1e-4;
    auto at = [this](double s) { return position_(s).vec(); };
    if (t - 2.0 * h >= 0.0 && t + 2.0 * h <= 1.0) {
        return (8.0 * (at(t + h) - at(t - h)) - (at(t + 2.0 * h) - at(t - 2.0 * h))) / (12.0 * h);
    }
    const double s = t - 2.0 * h < 0.0 ? h : -h;
    return (-25.0 * at(t) + 48.0 * at(t + s) - 36.0 * at(t + 2.0 * s) + 16.0 * at(t + 3.0 * s) -
            3.0 * at(t + 4.0 * s)) /
           (12.0 * s);
}

Segment Segment::reversed() const {
    auto pos = position_;
    PositionFn rpos = [pos](double t) { return pos(1.0 - t); };
    if (tangent_) {
        auto tan = tangent_;
        return Segment(std::move(rpos), [tan](double t) { return -tan(1.0 - t); });
    }
    return Segment(std::move(rpos));
}

Segment line_segment(const Point3& from, const Point3& to) {
    const Vec3 d = to - from;
    return Segment([from, d](double t) { return from + t * d; }, [d](double) { return d; });
}

Segment circle_arc(const Point3& center, double radius, const Vec3& unit_normal,
                   double angle_begin, double angle_end) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw InvalidArgument("circle_arc: radius must be > 0");
    }
    const Frame f = Frame::with_axis(center, unit_normal);
    const double sweep = angle_end - angle_begin;
    const Vec3 e1 = f.e1;
    const Vec3 e2 = f.e2;
    return Segment(
        [=](double t) {
            const double a = angle_begin + t * sweep;
            return center + radius * (std::cos(a) * e1 + std::sin(a) * e2);
        },
        [=](double t) {
            const double a = angle_begin + t * sweep;
            return (radius * sweep) * (-std::sin(a) * e1 + std::cos(a) * e2);
        });
}

// ---------------------------------------------------------------------------

ParametricLoop::ParametricLoop(std::vector<Segment> segments, int orientation,
                               int samples_per_segment)
    : segments_(std::move(segments)),
      orientation_(orientation),
      samples_per_segment_(samples_per_segment) {
    if (segments_.empty()) throw InvalidArgument("ParametricLoop: no segments");
    if (orientation_ != 1 && orientation_ != -1) {
        throw InvalidArgument("ParametricLoop: orientation must be +1 or -1");
    }
    if (samples_per_segment_ < 1) {
        throw InvalidArgument("ParametricLoop: samples_per_segment must be >= 1");
    }
    for (std::size_t k = 0; k < segments_.size(); ++k) {
        const Segment& next = segments_[(k + 1) % segments_.size()];
        const double gap = distance(segments_[k].end(), next.start());
        if (!(gap <= kClosureTolerance)) {
            throw InvalidArgument("ParametricLoop: segment " + std::to_string(k) +
                                  " does not connect to its successor (gap " +
                                  std::to_string(gap) + " m)");
        }
    }
}

std::vector<Segment> ParametricLoop::traversal_segments() const {
    if (orientation_ == 1) return segments_;
    std::vector<Segment> out;
    out.reserve(segments_.size());
    for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) out.push_back(it->reversed());
    return out;
}

Point3 ParametricLoop::start() const {
    return orientation_ == 1 ? segments_.front().start() : segments_.back().end();
}

double ParametricLoop::closure_defect() const {
    const Point3 end = orientation_ == 1 ? segments_.back().end() : segments_.front().start();
    return distance(start(), end);
}

ParametricLoop ParametricLoop::reversed() const {
    return ParametricLoop(segments_, -orientation_, samples_per_segment_);
}

ParametricLoop ParametricLoop::with_samples(int samples_per_segment) const {
    return ParametricLoop(segments_, orientation_, samples_per_segment);
}

std::vector<Point3> ParametricLoop::sample_points() const {
    std::vector<Point3> pts;
    const auto segs = traversal_segments();
    pts.reserve(segs.size() * samples_per_segment_ + 1);
    for (const auto& s : segs) {
        for (int k = 0; k < samples_per_segment_; ++k) {
            pts.push_back(s.position(static_cast<double>(k) / samples_per_segment_));
        }
    }
    pts.push_back(segs.back().end());
    return pts;
}

double ParametricLoop::polyline_length() const {
    const auto pts = sample_points();
    double len = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) len += distance(pts[i - 1], pts[i]);
    return len;
}

ParametricLoop make_circle_loop(const Point3& center, double radius, const Vec3& unit_normal,
                                int orientation, int samples, int windings,
                                double start_angle) {
    if (!(radius > 0.0)) throw InvalidArgument("make_circle_loop: radius must be > 0");
    require_unit(unit_normal, "make_circle_loop");
    if (samples < 8) throw InvalidArgument("make_circle_loop: samples must be >= 8");
    if (windings < 1) throw InvalidArgument("make_circle_loop: windings must be >= 1");
    std::vector<Segment> segs;
    segs.reserve(windings);
    for (int w = 0; w < windings; ++w) {
        segs.push_back(circle_arc(center, radius, unit_normal, start_angle, start_angle + kTwoPi));
    }
    return ParametricLoop(std::move(segs), orientation, samples);
}

ParametricLoop make_polygon_loop(std::vector<Point3> vertices, int orientation,
                                 int samples_per_edge) {
    if (vertices.size() < 3) throw InvalidArgument("make_polygon_loop: need >= 3 vertices");
    std::vector<Segment> segs;
    segs.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        segs.push_back(line_segment(vertices[i], vertices[(i + 1) % vertices.size()]));
    }
    return ParametricLoop(std::move(segs), orientation, samples_per_edge);
}

ParametricLoop compose_loops(const ParametricLoop& outer, const ParametricLoop& inner,
                             const Segment& bridge_out, const Segment& bridge_back) {
    if (distance(bridge_out.start(), outer.start()) > kClosureTolerance ||
        distance(bridge_out.end(), inner.start()) > kClosureTolerance) {
        throw InvalidArgument("compose_loops: bridge_out must run from the outer loop start "
                              "to the inner loop start");
    }
    // bridge_back must retrace bridge_out
    for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        if (distance(bridge_back.position(t), bridge_out.position(1.0 - t)) > kClosureTolerance) {
            throw InvalidArgument("compose_loops: bridge_back is not the reverse of bridge_out");
        }
    }
    std::vector<Segment> segs = outer.traversal_segments();
    segs.push_back(bridge_out);
    for (auto& s : inner.traversal_segments()) segs.push_back(std::move(s));
    segs.push_back(bridge_back);
    return ParametricLoop(std::move(segs), 1,
                          std::max(outer.samples_per_segment(), inner.samples_per_segment()));
}

ParametricLoop compose_with_straight_bridges(const ParametricLoop& outer,
                                             const ParametricLoop& inner) {
    const Segment out = line_segment(outer.start(), inner.start());
    return compose_loops(outer, inner, out, out.reversed());
}

// ---------------------------------------------------------------------------

namespace {

Face make_face(std::vector<Point3> verts) {
    const Point3 v0 = verts.front();
    Vec3 area2{};
    Vec3 weighted{};
    double total = 0.0;
    for (std::size_t i = 1; i + 1 < verts.size(); ++i) {
        const Vec3 a = verts[i] - v0;
        const Vec3 b = verts[i + 1] - v0;
        const Vec3 tri = cross(a, b);
        area2 += tri;
        const double w = norm(tri);
        weighted += w * ((a + b) / 3.0);
        total += w;
    }
    if (!(total > 0.0)) throw InvalidArgument("mesh: degenerate face");
    return Face{std::move(verts), v0 + weighted / total, 0.5 * area2};
}

std::vector<std::pair<double, double>> ring_directions(int angular_cells) {
    std::vector<std::pair<double, double>> dirs(angular_cells);
    for (int j = 0; j < angular_cells; ++j) {
        const double a = kTwoPi * j / angular_cells;
        dirs[j] = {std::cos(a), std::sin(a)};
    }
    return dirs;
}

int boundary_samples(int angular_cells) { return std::max(64, angular_cells); }

}  // namespace

AnnularMesh::AnnularMesh(std::vector<Face> faces, ParametricLoop outer_boundary,
                         std::optional<ParametricLoop> inner_boundary, RegionTag tag,
                         MeshResolution resolution)
    : faces_(std::move(faces)),
      outer_(std::move(outer_boundary)),
      inner_(std::move(inner_boundary)),
      tag_(tag),
      resolution_(resolution) {
    if ((tag_ == RegionTag::annular) != inner_.has_value()) {
        throw InvalidArgument("AnnularMesh: annular regions need exactly one inner boundary");
    }
    for (const auto& f : faces_) {
        if (!(norm(f.area_vector) > 0.0)) throw InvalidArgument("AnnularMesh: face area <= 0");
    }
}

double AnnularMesh::total_area() const {
    std::vector<double> areas;
    areas.reserve(faces_.size());
    for (const auto& f : faces_) areas.push_back(norm(f.area_vector));
    return pairwise_sum(areas);
}

AnnularMesh AnnularMesh::coarsened() const {
    const int radial = std::max(4, resolution_.radial_cells / 2);
    const int angular = std::max(4, resolution_.angular_cells / 2);
    if (tag_ == RegionTag::annular) {
        return mesh_annulus(resolution_.inner_radius, resolution_.outer_radius, resolution_.z,
                            radial, angular);
    }
    return mesh_disk(resolution_.outer_radius, resolution_.z, radial, angular);
}

AnnularMesh mesh_annulus(double inner_r, double outer_r, double z, int radial_cells,
                         int angular_cells) {
    if (!(inner_r > 0.0) || !(outer_r > inner_r)) {
        throw InvalidArgument("mesh_annulus: require 0 < inner_r < outer_r");
    }
    if (radial_cells < 4 || angular_cells < 4) {
        throw InvalidArgument("mesh_annulus: need at least 4 cells in each direction");
    }
    const auto dirs = ring_directions(angular_cells);
    std::vector<double> radii(radial_cells + 1);
    for (int i = 0; i <= radial_cells; ++i) {
        radii[i] = inner_r + (outer_r - inner_r) * i / radial_cells;
    }
    auto vertex = [&](int i, int j) {
        const auto& [c, s] = dirs[j % angular_cells];
        return Point3(radii[i] * c, radii[i] * s, z);
    };
    std::vector<Face> faces;
    faces.reserve(static_cast<std::size_t>(radial_cells) * angular_cells);
    for (int i = 0; i < radial_cells; ++i) {
        for (int j = 0; j < angular_cells; ++j) {
            faces.push_back(
                make_face({vertex(i, j), vertex(i + 1, j), vertex(i + 1, j + 1), vertex(i, j + 1)}));
        }
    }
    const Point3 center(0.0, 0.0, z);
    const Vec3 up{0.0, 0.0, 1.0};
    const int samples = boundary_samples(angular_cells);
    return AnnularMesh(std::move(faces), make_circle_loop(center, outer_r, up, 1, samples),
                       make_circle_loop(center, inner_r, up, -1, samples), RegionTag::annular,
                       MeshResolution{inner_r, outer_r, z, radial_cells, angular_cells});
}

AnnularMesh mesh_disk(double radius, double z, int radial_cells, int angular_cells) {
    if (!(radius > 0.0)) throw InvalidArgument("mesh_disk: radius must be > 0");
    if (radial_cells < 4 || angular_cells < 4) {
        throw InvalidArgument("mesh_disk: need at least 4 cells in each direction");
    }
    const auto dirs = ring_directions(angular_cells);
    auto vertex = [&](int i, int j) {
        const double r = radius * i / radial_cells;
        const auto& [c, s] = dirs[j % angular_cells];
        return Point3(r * c, r * s, z);
    };
    const Point3 center(0.0, 0.0, z);
    std::vector<Face> faces;
    faces.reserve(static_cast<std::size_t>(radial_cells) * angular_cells);
    for (int j = 0; j < angular_cells; ++j) {
        faces.push_back(make_face({center, vertex(1, j), vertex(1, j + 1)}));
    }
    for (int i = 1; i < radial_cells; ++i) {
        for (int j = 0; j < angular_cells; ++j) {
            faces.push_back(
                make_face({vertex(i, j), vertex(i + 1, j), vertex(i + 1, j + 1), vertex(i, j + 1)}));
        }
    }
    return AnnularMesh(std::move(faces),
                       make_circle_loop(center, radius, Vec3{0.0, 0.0, 1.0}, 1,
                                        boundary_samples(angular_cells)),
                       std::nullopt, RegionTag::simply_connected,
                       MeshResolution{0.0, radius, z, radial_cells, angular_cells});
}

}  // namespace abfield
