#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "abfield/circulation.hpp"
#include "abfield/dynamics.hpp"
#include "abfield/geometry.hpp"
#include "abfield/projector.hpp"
#include "abfield/stokes.hpp"

namespace abfield::io {

/// Round-trip decimal form ("%.17g"); non-finite values become "nan"/"inf".
[[nodiscard]] std::string format_number(double v);

struct FieldMapRow {
    Point3 position;
    Vec3 a;
    Vec3 b;
};

struct ProfileRow {
    double rho{0.0};
    double a_phi{0.0};
    double log_slope{0.0};
};

struct ConvergenceRow {
    double z_extent{0.0};
    int n_phi{0};
    int n_z{0};
    double quadrature{0.0};
    double analytic{0.0};
    double relative_error{0.0};
};

// CSV. Header line first, one record per line, '\n' endings.
[[nodiscard]] std::string field_map_csv(const std::vector<FieldMapRow>& rows);
[[nodiscard]] std::string trajectory_csv(const TrajectoryRecord& rec);
[[nodiscard]] std::string profile_csv(const std::vector<ProfileRow>& rows);
[[nodiscard]] std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

// JSON (keys in fixed order, two-space indent).
[[nodiscard]] std::string phase_json(const PhaseResult& r);
[[nodiscard]] std::string stokes_json(const StokesReport& r);
[[nodiscard]] std::string misuse_json(const MisuseReport& r);
[[nodiscard]] std::string loop_json(const ParametricLoop& loop);
[[nodiscard]] std::string mesh_json(const AnnularMesh& mesh);
[[nodiscard]] std::string field_map_json(const std::vector<FieldMapRow>& rows);
[[nodiscard]] std::string trajectory_json(const TrajectoryRecord& rec);
[[nodiscard]] std::string profile_json(const std::vector<ProfileRow>& rows);
[[nodiscard]] std::string convergence_json(const std::vector<ConvergenceRow>& rows);

/// Header {"n", "box", "spacing"} followed by the samples as CSV
/// i,j,k,x,y,z,vx,vy,vz in index order.
[[nodiscard]] std::string grid_json_header(const GridField& g);
[[nodiscard]] std::string grid_csv(const GridField& g);

// Fixed-width text tables for terminal output.
[[nodiscard]] std::string stokes_table(const StokesReport& r);
[[nodiscard]] std::string misuse_table(const MisuseReport& r);
[[nodiscard]] std::string convergence_table(const std::vector<ConvergenceRow>& rows);

/// Writes `content` to `path` in binary mode. Throws Error if the file
/// cannot be opened or written.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace abfield::io
