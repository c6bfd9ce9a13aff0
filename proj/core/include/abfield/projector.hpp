#pragma once

#include <functional>
#include <vector>

#include "abfield/vec3.hpp"

namespace abfield {

/// N×N×N samples of a 3-vector field on a periodic box [0, L)³. Sample
/// (i, j, k) sits at (i, j, k)·L/N and is stored at index (i·N + j)·N + k.
class GridField {
public:
    /// Throws InvalidArgument unless N ≥ 8 and even, L > 0, data has N³
    /// entries and every sample is finite.
    GridField(int n, double box, std::vector<Vec3> data);

    /// Samples `f` at the grid points.
    static GridField sample(int n, double box, const std::function<Vec3(const Point3&)>& f);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] double box() const noexcept { return box_; }
    [[nodiscard]] double spacing() const noexcept { return box_ / n_; }
    [[nodiscard]] const std::vector<Vec3>& data() const noexcept { return data_; }

    [[nodiscard]] std::size_t index(int i, int j, int k) const noexcept {
        return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
    }
    [[nodiscard]] const Vec3& at(int i, int j, int k) const { return data_[index(i, j, k)]; }
    [[nodiscard]] Point3 position(int i, int j, int k) const;

    /// Largest absolute component over the grid.
    [[nodiscard]] double max_abs() const noexcept;

private:
    int n_;
    double box_;
    std::vector<Vec3> data_;
};

/// Output of helmholtz_project: longitudinal_part + remainder = input.
struct HelmholtzSplit {
    GridField longitudinal_part;
    GridField remainder;
};

/// Applies P_ij(k) = δ_ij − k_i k_j/|k|² mode by mode in the discrete Fourier
/// basis. The k = 0 mode passes through unchanged; the remainder is the
/// complementary k_i k_j/|k|² part, computed spectrally as well. Wavenumber
/// components on the Nyquist plane are taken as zero so real data stays real.
/// This is the projection onto divergence-free fields, named longitudinal to
/// match ModeTag.
[[nodiscard]] HelmholtzSplit helmholtz_project(const GridField& grid);

/// Spectral divergence i k·Â transformed back to the grid, with the same
/// wavenumber convention as helmholtz_project. Returned in grid index order.
[[nodiscard]] std::vector<double> spectral_divergence(const GridField& grid);

/// Largest |a − b| component-wise over two grids of equal shape.
[[nodiscard]] double max_abs_difference(const GridField& a, const GridField& b);

}  // namespace abfield
