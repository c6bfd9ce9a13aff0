#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace abfield {

/// Gauss–Legendre nodes and weights on [−1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Builds the n-point rule by Newton iteration on P_n. Throws for n < 1.
[[nodiscard]] GaussLegendreRule gauss_legendre(int n);

/// Deterministic pairwise (tree) summation. The reduction order depends only
/// on the length of the input, never on thread scheduling.
[[nodiscard]] double pairwise_sum(std::span<const double> values);

/// Worker count for embarrassingly parallel sweeps: hardware concurrency,
/// capped by the ABFIELD_THREADS environment variable when it is set.
[[nodiscard]] std::size_t worker_count();

/// Runs body(i) for i in [0, n) across worker_count() threads. Each index is
/// visited exactly once; callers write results into preallocated slots so the
/// output order never depends on scheduling. The first exception thrown by any
/// worker is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace abfield
