#include "compactcubic/driver.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "compactcubic/tridiag.hpp"

namespace compactcubic {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

DerivativeResult solve_assembled(const Mesh& mesh, const std::vector<double>& values, InteriorRule rule,
                                 const EdgeScheme& edges) {
    const AssembledSystem sys = assemble(mesh, values, rule, edges);
    DerivativeResult out;
    out.slopes = solve(sys.matrix, sys.rhs);
    out.scheme_tag = sys.label();
    out.condition = one_norm_condition(sys.matrix);
    return out;
}

} // namespace

DerivativeResult compact_first_derivatives(const Mesh& mesh, const std::vector<double>& values,
                                           const EdgeScheme& edges) {
    if (edges.kind != EdgeKind::compact4 && edges.kind != EdgeKind::compact_c &&
        edges.kind != EdgeKind::clamped)
        raise(errc::unknown_function, "compact derivatives take compact4, compactc, or clamped edges");
    return solve_assembled(mesh, values, InteriorRule::compact, edges);
}

PiecewiseCubic cubic_spline(const Mesh& mesh, const std::vector<double>& values, const EdgeScheme& edges) {
    if (edges.kind != EdgeKind::natural && edges.kind != EdgeKind::clamped &&
        edges.kind != EdgeKind::not_a_knot)
        raise(errc::unknown_function, "cubic_spline takes natural, clamped, or not-a-knot edges");
    DerivativeResult r = solve_assembled(mesh, values, InteriorRule::spline, edges);
    return PiecewiseCubic(mesh, values, std::move(r.slopes));
}

PiecewiseCubic compact_cubic(const Mesh& mesh, const std::vector<double>& values, const EdgeScheme& edges) {
    if (edges.kind != EdgeKind::compact4 && edges.kind != EdgeKind::compact_c)
        raise(errc::unknown_function, "compact_cubic takes compact4 or compactc edges");
    DerivativeResult r = compact_first_derivatives(mesh, values, edges);
    return PiecewiseCubic(mesh, values, std::move(r.slopes));
}

double second_derivative_mixed(const std::array<double, 3>& values, const std::array<double, 2>& end_slopes,
                               double h) {
    if (h == 0.0) raise(errc::zero_width, "mixed second derivative needs h != 0");
    return 2.0 * (values[2] - 2.0 * values[1] + values[0]) / (h * h) -
           (end_slopes[1] - end_slopes[0]) / (2.0 * h);
}

std::vector<double> compact_second_derivatives_uniform(const std::vector<double>& values, double h,
                                                       const std::array<double, 2>& end_values) {
    if (h == 0.0) raise(errc::zero_width, "second-derivative system needs h != 0");
    if (values.size() < 3)
        raise(errc::too_few_nodes, "second-derivative system needs n >= 2, got " +
                                       std::to_string(values.size()) + " values");
    const std::size_t n = values.size() - 1;
    std::vector<double> result(n + 1);
    result[0] = end_values[0];
    result[n] = end_values[1];

    const std::size_t m = n - 1; // unknowns at interior nodes
    const double scale = 12.0 / (h * h);
    std::vector<double> rhs(m);
    for (std::size_t k = 1; k <= m; ++k)
        rhs[k - 1] = scale * (values[k - 1] - 2.0 * values[k] + values[k + 1]);
    rhs[0] -= end_values[0];
    rhs[m - 1] -= end_values[1];

    if (m == 1) {
        result[1] = rhs[0] / 10.0;
        return result;
    }
    TridiagonalSystem sys(std::vector<double>(m - 1, 1.0), std::vector<double>(m, 10.0),
                          std::vector<double>(m - 1, 1.0));
    const std::vector<double> interior = solve(sys, rhs);
    for (std::size_t k = 1; k <= m; ++k) result[k] = interior[k - 1];
    return result;
}

std::array<double, 2> butcher_end_second_derivatives(const PiecewiseCubic& p) {
    const Mesh& mesh = p.mesh();
    const std::size_t n = mesh.n();
    const double left = butcher_second_derivative({p.values()[0], p.values()[1]},
                                                  {p.slopes()[0], p.slopes()[1]}, mesh.width(1), 0.0);
    const double right = butcher_second_derivative({p.values()[n - 1], p.values()[n]},
                                                   {p.slopes()[n - 1], p.slopes()[n]}, mesh.width(n), 1.0);
    return {left, right};
}

double butcher_second_derivative(const std::array<double, 2>& piece_values,
                                 const std::array<double, 2>& piece_slopes, double h, double phi,
                                 bool* extrapolated) {
    if (h == 0.0) raise(errc::zero_width, "butcher formula needs h != 0");
    if (extrapolated) *extrapolated = phi < 0.0 || phi > 1.0;
    const double secant = (piece_values[1] - piece_values[0]) / h;
    return 2.0 * (3.0 * phi - 2.0) / h * piece_slopes[0] + 2.0 * (3.0 * phi - 1.0) / h * piece_slopes[1] +
           6.0 * (1.0 - 2.0 * phi) / h * secant;
}

namespace {

double probe_residual(TruncationFormula formula, const SmoothFunction& fn, double r, double s, double h,
                      double t0) {
    switch (formula) {
        case TruncationFormula::interior_compact: {
            const double rs_sum = r + s;
            const double lhs = fn.df(t0 - r * h) / (r * r) +
                               rs_sum * rs_sum / (r * r * s * s) * fn.df(t0) + fn.df(t0 + s * h) / (s * s);
            const double rhs = -(4.0 * r + 2.0 * s) / (r * r * r * h * rs_sum) * fn.f(t0 - r * h) -
                               2.0 * (r - s) * rs_sum * rs_sum / (r * r * r * h * s * s * s) * fn.f(t0) +
                               (4.0 * s + 2.0 * r) / (h * rs_sum * s * s * s) * fn.f(t0 + s * h);
            return lhs - rhs;
        }
        case TruncationFormula::interior_spline: {
            const double rs_sum = r + s;
            const double lhs = 2.0 * s / rs_sum * fn.df(t0 - r * h) + 4.0 * fn.df(t0) +
                               2.0 * r / rs_sum * fn.df(t0 + s * h);
            const double rhs = 6.0 * r / (s * rs_sum * h) * (fn.f(t0 + s * h) - fn.f(t0)) +
                               6.0 * s / (r * rs_sum * h) * (fn.f(t0) - fn.f(t0 - r * h));
            return lhs - rhs;
        }
        case TruncationFormula::edge_compact4: {
            // Widths (h, r h, s h) off the left end t0.
            const auto e = compact4_edge_coeffs(h, r * h, s * h);
            const double t1 = t0 + h, t2 = t1 + r * h, t3 = t2 + s * h;
            const double lhs = e.a0 * fn.df(t0) + fn.df(t1);
            const double rhs = e.c[0] * fn.f(t0) + e.c[1] * fn.f(t1) + e.c[2] * fn.f(t2) + e.c[3] * fn.f(t3);
            return lhs - rhs;
        }
        case TruncationFormula::second_derivative_110: {
            const double lhs = fn.d2f(t0 - h) + 10.0 * fn.d2f(t0) + fn.d2f(t0 + h);
            const double rhs = 12.0 / (h * h) * (fn.f(t0 - h) - 2.0 * fn.f(t0) + fn.f(t0 + h));
            return lhs - rhs;
        }
    }
    raise(errc::unknown_function, "unknown truncation formula");
}

double probe_scale(TruncationFormula formula, const SmoothFunction& fn, double r, double s, double h,
                   double t0) {
    // Magnitude of the terms being differenced, for the rounding floor.
    switch (formula) {
        case TruncationFormula::interior_compact:
            return std::abs(fn.df(t0)) * (r + s) * (r + s) / (r * r * s * s) +
                   std::abs(fn.f(t0)) / (h * std::min(std::abs(r), std::abs(s)));
        case TruncationFormula::interior_spline:
            return 4.0 * std::abs(fn.df(t0)) + 12.0 * std::abs(fn.f(t0)) / std::abs(h);
        case TruncationFormula::edge_compact4:
            return std::abs(fn.df(t0)) + 4.0 * std::abs(fn.f(t0)) / std::abs(h);
        case TruncationFormula::second_derivative_110:
            return 12.0 * std::abs(fn.d2f(t0)) + 48.0 * std::abs(fn.f(t0)) / (h * h);
    }
    return 1.0;
}

} // namespace

TruncationFit truncation_probe(TruncationFormula formula, const SmoothFunction& fn, double r, double s,
                               const std::vector<double>& h_sweep, double t0) {
    if (h_sweep.size() < 4)
        raise(errc::insufficient_sweep, "need at least 4 step sizes, got " + std::to_string(h_sweep.size()));

    std::vector<double> log_h, log_res;
    for (double h : h_sweep) {
        if (h == 0.0) raise(errc::zero_width, "sweep contains a zero step");
        const double res = std::abs(probe_residual(formula, fn, r, s, h, t0));
        const double floor = 100.0 * kEps * probe_scale(formula, fn, r, s, h, t0);
        if (res <= floor) continue; // below the rounding floor
        log_h.push_back(std::log(std::abs(h)));
        log_res.push_back(std::log(res));
    }
    if (log_h.size() < 3)
        raise(errc::insufficient_sweep, "only " + std::to_string(log_h.size()) +
                                            " residuals above the rounding floor");

    // Least squares line through (log h, log |residual|).
    const double n = static_cast<double>(log_h.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < log_h.size(); ++i) {
        sx += log_h[i];
        sy += log_res[i];
        sxx += log_h[i] * log_h[i];
        sxy += log_h[i] * log_res[i];
    }
    TruncationFit fit;
    fit.order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.points_used = log_h.size();
    // Pin the exponent to the nearest integer for a stable leading constant.
    const double p = std::round(fit.order);
    double acc = 0.0;
    for (std::size_t i = 0; i < log_h.size(); ++i) acc += log_res[i] - p * log_h[i];
    fit.coefficient = std::exp(acc / n);
    return fit;
}

} // namespace compactcubic
