#include "abfield/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "abfield/errors.hpp"

namespace abfield::io {

using Json = nlohmann::ordered_json;

namespace {

Json vec_json(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }
Json point_json(const Point3& p) { return vec_json(p.vec()); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void append_row(std::string& out, std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) out += ',';
        out += format_number(v);
        first = false;
    }
    out += '\n';
}

std::string line(const char* fmt, const char* label, double value) {
    char buf[128];
    std::snprintf(buf, sizeof buf, fmt, label, value);
    return buf;
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string field_map_csv(const std::vector<FieldMapRow>& rows) {
    std::string out = "x,y,z,Ax,Ay,Az,Bx,By,Bz\n";
    for (const auto& r : rows) {
        append_row(out, {r.position.x(), r.position.y(), r.position.z(), r.a.x, r.a.y, r.a.z,
                         r.b.x, r.b.y, r.b.z});
    }
    return out;
}

std::string trajectory_csv(const TrajectoryRecord& rec) {
    std::string out = "t,x,y,z,vx,vy,vz,px,py,pz,rel_drift\n";
    for (const auto& s : rec.samples) {
        append_row(out, {s.t, s.position.x(), s.position.y(), s.position.z(), s.velocity.x,
                         s.velocity.y, s.velocity.z, s.canonical_momentum.x,
                         s.canonical_momentum.y, s.canonical_momentum.z, s.relative_drift});
    }
    return out;
}

std::string profile_csv(const std::vector<ProfileRow>& rows) {
    std::string out = "rho_m,A_phi_Tm,log_slope_per_m\n";
    for (const auto& r : rows) append_row(out, {r.rho, r.a_phi, r.log_slope});
    return out;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
    std::string out = "z_extent_m,n_phi,n_z,quadrature_Tm,analytic_Tm,relative_error\n";
    for (const auto& r : rows) {
        append_row(out, {r.z_extent, static_cast<double>(r.n_phi), static_cast<double>(r.n_z),
                         r.quadrature, r.analytic, r.relative_error});
    }
    return out;
}

std::string phase_json(const PhaseResult& r) {
    Json j;
    j["circulation_Tm2"] = r.circulation;
    j["phase_rad"] = r.phase;
    j["charge_C"] = r.charge;
    j["hbar_Js"] = r.hbar;
    j["error_estimate"] = r.error_estimate;
    return dump(j);
}

namespace {

Json stokes_object(const StokesReport& r) {
    Json j;
    j["flux_Tm2"] = r.flux;
    j["outer_circulation_Tm2"] = r.outer_circulation;
    j["inner_circulation_Tm2"] = r.inner_circulation;
    j["boundary_circulation_Tm2"] = r.boundary_circulation;
    j["composed_circulation_Tm2"] = r.composed_circulation;
    j["residual_Tm2"] = r.residual;
    j["flux_error"] = r.flux_error;
    j["mesh_error"] = r.mesh_error;
    j["loop_error"] = r.loop_error;
    j["tolerance"] = r.tolerance;
    j["radial_cells"] = r.radial_cells;
    j["angular_cells"] = r.angular_cells;
    j["loop_samples"] = r.loop_samples;
    j["verdict"] = to_string(r.verdict);
    return j;
}

Json misuse_object(const MisuseReport& r) {
    Json j;
    j["disk_flux_Tm2"] = r.lhs;
    j["outer_circulation_Tm2"] = r.rhs;
    j["gap_Tm2"] = r.gap;
    j["tolerance"] = r.tolerance;
    return j;
}

}  // namespace

std::string stokes_json(const StokesReport& r) { return dump(stokes_object(r)); }
std::string misuse_json(const MisuseReport& r) { return dump(misuse_object(r)); }

std::string loop_json(const ParametricLoop& loop) {
    Json j;
    j["orientation"] = loop.orientation();
    j["segments"] = loop.segments().size();
    j["samples_per_segment"] = loop.samples_per_segment();
    j["closure_defect_m"] = loop.closure_defect();
    Json pts = Json::array();
    for (const auto& p : loop.sample_points()) pts.push_back(point_json(p));
    j["points"] = std::move(pts);
    return dump(j);
}

std::string mesh_json(const AnnularMesh& mesh) {
    const auto& res = mesh.resolution();
    Json j;
    j["region"] = mesh.region_tag() == RegionTag::annular ? "annular" : "simply_connected";
    j["inner_radius_m"] = res.inner_radius;
    j["outer_radius_m"] = res.outer_radius;
    j["z_m"] = res.z;
    j["radial_cells"] = res.radial_cells;
    j["angular_cells"] = res.angular_cells;
    j["total_area_m2"] = mesh.total_area();
    Json faces = Json::array();
    for (const auto& f : mesh.faces()) {
        Json vs = Json::array();
        for (const auto& v : f.vertices) vs.push_back(point_json(v));
        faces.push_back({{"vertices", std::move(vs)},
                         {"centroid", point_json(f.centroid)},
                         {"area_vector", vec_json(f.area_vector)}});
    }
    j["faces"] = std::move(faces);
    return dump(j);
}

std::string field_map_json(const std::vector<FieldMapRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) {
        arr.push_back({{"x", point_json(r.position)}, {"A", vec_json(r.a)}, {"B", vec_json(r.b)}});
    }
    return dump(Json{{"samples", std::move(arr)}});
}

std::string trajectory_json(const TrajectoryRecord& rec) {
    Json j;
    j["steps"] = rec.steps;
    j["breached"] = rec.breached;
    j["max_relative_drift"] = rec.max_relative_drift;
    j["initial_momentum"] = vec_json(rec.initial_momentum);
    j["convective_impulse"] = vec_json(rec.convective_impulse);
    j["max_exterior_curl_T"] = rec.max_exterior_curl;
    Json arr = Json::array();
    for (const auto& s : rec.samples) {
        arr.push_back({{"t", s.t},
                       {"x", point_json(s.position)},
                       {"v", vec_json(s.velocity)},
                       {"p", vec_json(s.canonical_momentum)},
                       {"rel_drift", s.relative_drift}});
    }
    j["samples"] = std::move(arr);
    return dump(j);
}

std::string profile_json(const std::vector<ProfileRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) {
        arr.push_back({{"rho_m", r.rho}, {"A_phi_Tm", r.a_phi}, {"log_slope_per_m", r.log_slope}});
    }
    return dump(Json{{"profile", std::move(arr)}});
}

std::string convergence_json(const std::vector<ConvergenceRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) {
        arr.push_back({{"z_extent_m", r.z_extent},
                       {"n_phi", r.n_phi},
                       {"n_z", r.n_z},
                       {"quadrature_Tm", r.quadrature},
                       {"analytic_Tm", r.analytic},
                       {"relative_error", r.relative_error}});
    }
    return dump(Json{{"sweep", std::move(arr)}});
}

std::string grid_json_header(const GridField& g) {
    Json j;
    j["n"] = g.n();
    j["box_m"] = g.box();
    j["spacing_m"] = g.spacing();
    j["layout"] = "index = (i*n + j)*n + k";
    return dump(j);
}

std::string grid_csv(const GridField& g) {
    std::string out = "i,j,k,x,y,z,vx,vy,vz\n";
    for (int i = 0; i < g.n(); ++i) {
        for (int j = 0; j < g.n(); ++j) {
            for (int k = 0; k < g.n(); ++k) {
                const Point3 p = g.position(i, j, k);
                const Vec3& v = g.at(i, j, k);
                append_row(out, {static_cast<double>(i), static_cast<double>(j),
                                 static_cast<double>(k), p.x(), p.y(), p.z(), v.x, v.y, v.z});
            }
        }
    }
    return out;
}

std::string stokes_table(const StokesReport& r) {
    constexpr const char* fmt = "%-10s %+.10e\n";
    std::string out = "generalized Stokes check\n";
    out += line(fmt, "FLUX", r.flux);
    out += line(fmt, "C1", r.outer_circulation);
    out += line(fmt, "C2", r.inner_circulation);
    out += line(fmt, "C1+C2", r.boundary_circulation);
    out += line(fmt, "COMPOSED", r.composed_circulation);
    out += line(fmt, "RESIDUAL", r.residual);
    out += line(fmt, "TOLERANCE", r.tolerance);
    out += std::string("VERDICT    ") + to_string(r.verdict) + "\n";
    return out;
}

std::string misuse_table(const MisuseReport& r) {
    constexpr const char* fmt = "%-10s %+.10e\n";
    std::string out = "flux through the full disk vs outer circulation\n";
    out += line(fmt, "DISK_FLUX", r.lhs);
    out += line(fmt, "C1", r.rhs);
    out += line(fmt, "GAP", r.gap);
    out += line(fmt, "TOLERANCE", r.tolerance);
    return out;
}

std::string convergence_table(const std::vector<ConvergenceRow>& rows) {
    std::string out = "  z_extent   n_phi     n_z     rel_error\n";
    char buf[128];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%10.4g %7d %7d %13.6e\n", r.z_extent, r.n_phi, r.n_z,
                      r.relative_error);
        out += buf;
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + path.string() + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) throw Error("failed writing " + path.string());
}

}  // namespace abfield::io
