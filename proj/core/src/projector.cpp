#include "abfield/projector.hpp"

#include <fftw3.h>

#include <array>
#include <cmath>
#include <memory>
#include <utility>
#include <complex>
#include <mutex>

#include "abfield/constants.hpp"
#include "abfield/errors.hpp"

namespace abfield {

namespace {

// FFTW's planner is not re-entrant; execution of distinct plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

class ComplexBuffer {
public:
    explicit ComplexBuffer(std::size_t n)
        : size_(n), data_(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))) {
        if (!data_) throw std::bad_alloc();
    }
    ~ComplexBuffer() { fftw_free(data_); }
    ComplexBuffer(const ComplexBuffer&) = delete;
    ComplexBuffer& operator=(const ComplexBuffer&) = delete;

    fftw_complex* get() noexcept { return data_; }
    std::complex<double>& operator[](std::size_t i) noexcept {
        return reinterpret_cast<std::complex<double>*>(data_)[i];
    }
    [[nodiscard]] std::size_t size() const noexcept { return size_; }

private:
    std::size_t size_;
    fftw_complex* data_;
};

/// In-place 3-D transform of one buffer.
class Transform3d {
public:
    Transform3d(int n, ComplexBuffer& buf, int sign) {
        std::lock_guard lock(planner_mutex());
        plan_ = fftw_plan_dft_3d(n, n, n, buf.get(), buf.get(), sign, FFTW_ESTIMATE);
        if (!plan_) throw Error("fftw: failed to create plan");
    }
    ~Transform3d() {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan_);
    }
    Transform3d(const Transform3d&) = delete;
    Transform3d& operator=(const Transform3d&) = delete;

    void run() { fftw_execute(plan_); }

private:
    fftw_plan plan_{};
};

/// Angular wavenumbers per index; the Nyquist index maps to zero.
std::vector<double> wavenumbers(int n, double box) {
    std::vector<double> k(n);
    for (int i = 0; i < n; ++i) {
        const int m = i < n / 2 ? i : i - n;
        k[i] = i == n / 2 ? 0.0 : 2.0 * constants::pi * m / box;
    }
    return k;
}

/// Forward transforms of the three components.
std::array<std::unique_ptr<ComplexBuffer>, 3> forward(const GridField& g) {
    const std::size_t total = g.data().size();
    std::array<std::unique_ptr<ComplexBuffer>, 3> out;
    for (int c = 0; c < 3; ++c) {
        out[c] = std::make_unique<ComplexBuffer>(total);
        auto& buf = *out[c];
        for (std::size_t i = 0; i < total; ++i) {
            const Vec3& v = g.data()[i];
            buf[i] = {c == 0 ? v.x : c == 1 ? v.y : v.z, 0.0};
        }
        Transform3d(g.n(), buf, FFTW_FORWARD).run();
    }
    return out;
}

void backward(int n, ComplexBuffer& buf) { Transform3d(n, buf, FFTW_BACKWARD).run(); }

}  // namespace

GridField::GridField(int n, double box, std::vector<Vec3> data)
    : n_(n), box_(box), data_(std::move(data)) {
    if (n_ < 8 || n_ % 2 != 0) throw InvalidArgument("GridField: N must be even and >= 8");
    if (!(box_ > 0.0) || !std::isfinite(box_)) throw InvalidArgument("GridField: box must be > 0");
    const std::size_t expected = static_cast<std::size_t>(n_) * n_ * n_;
    if (data_.size() != expected) throw InvalidArgument("GridField: data size must be N^3");
    for (const auto& v : data_) {
        if (!is_finite(v)) throw InvalidArgument("GridField: non-finite sample");
    }
}

GridField GridField::sample(int n, double box, const std::function<Vec3(const Point3&)>& f) {
    if (n < 8 || n % 2 != 0) throw InvalidArgument("GridField: N must be even and >= 8");
    std::vector<Vec3> data(static_cast<std::size_t>(n) * n * n);
    const double h = box / n;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                data[(static_cast<std::size_t>(i) * n + j) * n + k] = f(Point3(i * h, j * h, k * h));
            }
        }
    }
    return GridField(n, box, std::move(data));
}

Point3 GridField::position(int i, int j, int k) const {
    const double h = spacing();
    return {i * h, j * h, k * h};
}

double GridField::max_abs() const noexcept {
    double m = 0.0;
    for (const auto& v : data_) m = std::fmax(m, abfield::max_abs(v));
    return m;
}

HelmholtzSplit helmholtz_project(const GridField& grid) {
    const int n = grid.n();
    const auto k = wavenumbers(n, grid.box());
    auto spec = forward(grid);
    std::array<std::unique_ptr<ComplexBuffer>, 3> rem;
    for (auto& r : rem) r = std::make_unique<ComplexBuffer>(spec[0]->size());

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int l = 0; l < n; ++l) {
                const std::size_t idx = grid.index(i, j, l);
                const std::array<double, 3> kv{k[i], k[j], k[l]};
                const double k2 = kv[0] * kv[0] + kv[1] * kv[1] + kv[2] * kv[2];
                const std::array<std::complex<double>, 3> a{(*spec[0])[idx], (*spec[1])[idx],
                                                            (*spec[2])[idx]};
                if (k2 == 0.0) {
                    for (int c = 0; c < 3; ++c) (*rem[c])[idx] = 0.0;
                    continue;
                }
                // (k·a)/|k|² k is the gradient part; P a = a − that.
                const std::complex<double> kdota = (kv[0] * a[0] + kv[1] * a[1] + kv[2] * a[2]) / k2;
                for (int c = 0; c < 3; ++c) {
                    const std::complex<double> grad = kv[c] * kdota;
                    (*rem[c])[idx] = grad;
                    (*spec[c])[idx] = a[c] - grad;
                }
            }
        }
    }

    const double scale = 1.0 / (static_cast<double>(n) * n * n);
    auto to_grid = [&](std::array<std::unique_ptr<ComplexBuffer>, 3>& bufs) {
        for (auto& b : bufs) backward(n, *b);
        std::vector<Vec3> out(grid.data().size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = {(*bufs[0])[i].real() * scale, (*bufs[1])[i].real() * scale,
                      (*bufs[2])[i].real() * scale};
        }
        return GridField(n, grid.box(), std::move(out));
    };
    GridField longitudinal = to_grid(spec);
    GridField remainder = to_grid(rem);
    return {std::move(longitudinal), std::move(remainder)};
}

std::vector<double> spectral_divergence(const GridField& grid) {
    const int n = grid.n();
    const auto k = wavenumbers(n, grid.box());
    auto spec = forward(grid);
    ComplexBuffer div(spec[0]->size());
    const std::complex<double> I(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int l = 0; l < n; ++l) {
                const std::size_t idx = grid.index(i, j, l);
                div[idx] = I * (k[i] * (*spec[0])[idx] + k[j] * (*spec[1])[idx] +
                                k[l] * (*spec[2])[idx]);
            }
        }
    }
    backward(n, div);
    const double scale = 1.0 / (static_cast<double>(n) * n * n);
    std::vector<double> out(div.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = div[i].real() * scale;
    return out;
}

double max_abs_difference(const GridField& a, const GridField& b) {
    if (a.n() != b.n()) throw InvalidArgument("max_abs_difference: grid sizes differ");
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        m = std::fmax(m, max_abs(a.data()[i] - b.data()[i]));
    }
    return m;
}

}  // namespace abfield
