#include "abfield/circulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "abfield/errors.hpp"
#include "abfield/numerics.hpp"

namespace abfield {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Pass {
    double value{0.0};
    double abs_sum{0.0};
    double field_error{0.0};
    long evaluations{0};
};

/// Nodes/weights of one resolution level on [0, 1].
struct NodeSet {
    std::vector<double> t;
    std::vector<double> w;
};

NodeSet gauss_nodes(int panels) {
    static const GaussLegendreRule rule = gauss_legendre(kLoopGaussOrder);
    NodeSet ns;
    ns.t.reserve(static_cast<std::size_t>(panels) * kLoopGaussOrder);
    ns.w.reserve(ns.t.capacity());
    const double width = 1.0 / panels;
    for (int p = 0; p < panels; ++p) {
        const double left = p * width;
        for (int q = 0; q < kLoopGaussOrder; ++q) {
            ns.t.push_back(left + 0.5 * width * (rule.nodes[q] + 1.0));
            ns.w.push_back(0.5 * width * rule.weights[q]);
        }
    }
    return ns;
}

NodeSet trapezoid_nodes(int intervals) {
    NodeSet ns;
    ns.t.resize(intervals + 1);
    ns.w.assign(intervals + 1, 1.0 / intervals);
    for (int k = 0; k <= intervals; ++k) ns.t[k] = static_cast<double>(k) / intervals;
    ns.w.front() *= 0.5;
    ns.w.back() *= 0.5;
    return ns;
}

Pass integrate(const VectorField& f, const ParametricLoop& loop, const NodeSet& ns) {
    const bool with_error = static_cast<bool>(f.abs_error);
    const auto segs = loop.segments();
    std::vector<double> terms;
    std::vector<double> magnitudes;
    std::vector<double> field_err;
    terms.reserve(segs.size() * ns.t.size());
    magnitudes.reserve(terms.capacity());
    if (with_error) field_err.reserve(terms.capacity());

    for (std::size_t s = 0; s < segs.size(); ++s) {
        for (std::size_t q = 0; q < ns.t.size(); ++q) {
            const double t = ns.t[q];
            double term = 0.0;
            try {
                const Point3 x = segs[s].position(t);
                const Vec3 dx = segs[s].tangent(t);
                const Vec3 a = f(x);
                term = ns.w[q] * dot(a, dx);
                if (with_error) field_err.push_back(ns.w[q] * f.error_at(x) * norm(dx));
            } catch (const IntegrationError&) {
                throw;
            } catch (const Error& e) {
                throw IntegrationError(std::string("loop_integral: evaluation failed on segment ") +
                                           std::to_string(s) + " at t=" + std::to_string(t) +
                                           ": " + e.what(),
                                       s, t);
            }
            if (!std::isfinite(term)) {
                throw IntegrationError("loop_integral: non-finite integrand on segment " +
                                           std::to_string(s) + " at t=" + std::to_string(t),
                                       s, t);
            }
            terms.push_back(term);
            magnitudes.push_back(std::fabs(term));
        }
    }
    Pass p;
    p.value = loop.orientation() * pairwise_sum(terms);
    p.abs_sum = pairwise_sum(magnitudes);
    p.field_error = with_error ? pairwise_sum(field_err) : 0.0;
    p.evaluations = static_cast<long>(terms.size());
    return p;
}

}  // namespace

LoopIntegral loop_integral(const VectorField& f, const ParametricLoop& loop, QuadratureRule rule) {
    if (!f.evaluator) throw InvalidArgument("loop_integral: empty field");
    const int samples = loop.samples_per_segment();
    Pass coarse;
    Pass fine;
    double richardson = 1.0;
    if (rule == QuadratureRule::gauss_legendre) {
        const int panels = std::max(1, samples / kLoopGaussOrder);
        coarse = integrate(f, loop, gauss_nodes(panels));
        fine = integrate(f, loop, gauss_nodes(2 * panels));
    } else {
        coarse = integrate(f, loop, trapezoid_nodes(samples));
        fine = integrate(f, loop, trapezoid_nodes(2 * samples));
        richardson = 1.0 / 3.0;
    }
    const double n = static_cast<double>(std::max(2L, fine.evaluations));
    const double roundoff = kEps * (8.0 + std::log2(n)) * fine.abs_sum;
    LoopIntegral out;
    out.value = fine.value;
    out.error_estimate = richardson * std::fabs(fine.value - coarse.value) + roundoff + fine.field_error;
    out.evaluations = coarse.evaluations + fine.evaluations;
    return out;
}

bool within_quadrature_tolerance(double value, double error_estimate) noexcept {
    return std::fabs(value) <= std::max(1e-12, 5.0 * error_estimate);
}

PhaseResult phase_from_circulation(double circulation, double error_estimate, double charge,
                                   double hbar) {
    if (!(hbar > 0.0)) throw InvalidArgument("ab_phase: hbar must be > 0");
    PhaseResult r;
    r.circulation = circulation;
    r.charge = charge;
    r.hbar = hbar;
    r.phase = (charge / hbar) * circulation;
    r.error_estimate = error_estimate;
    return r;
}

PhaseResult ab_phase(const VectorField& f, const ParametricLoop& loop, double charge,
                     double hbar) {
    const LoopIntegral li = loop_integral(f, loop);
    return phase_from_circulation(li.value, li.error_estimate, charge, hbar);
}

}  // namespace abfield
