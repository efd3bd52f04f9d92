#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "compactcubic/assembly.hpp"
#include "compactcubic/hermite.hpp"
#include "compactcubic/mesh.hpp"

namespace compactcubic {

/// Nodal derivative vector from a solved compact system, together with the
/// 1-norm condition of the matrix that produced it.
struct DerivativeResult {
    std::vector<double> slopes;
    std::string scheme_tag;
    double condition;
};

/// Fourth-order nodal first derivatives: compact interior rows closed by
/// compact4, compact_c, or clamped edge rows.  Exact for polynomials of
/// degree <= 4 with compact4 edges on any common-sign mesh.
DerivativeResult compact_first_derivatives(const Mesh& mesh, const std::vector<double>& values,
                                           const EdgeScheme& edges);

/// Classical C^2 cubic spline via the slope formulation (natural, clamped,
/// or not-a-knot closure).
PiecewiseCubic cubic_spline(const Mesh& mesh, const std::vector<double>& values, const EdgeScheme& edges);

/// Compact cubic interpolant: C^1 piecewise cubic whose nodal slopes come
/// from the fourth-order compact system including compact edge rows.  On
/// uniform meshes it coincides with a spline; on nonuniform meshes its
/// second derivative may jump at the nodes.
PiecewiseCubic compact_cubic(const Mesh& mesh, const std::vector<double>& values, const EdgeScheme& edges);

/// f''(0) from f(-h), f(0), f(h) and f'(-h), f'(h) on a locally uniform
/// stencil:  2(f+ - 2f0 + f-)/h^2 - (f'+ - f'-)/(2h).  Exact for degree <= 5;
/// the leading error is f^(6) h^4 / 360.
double second_derivative_mixed(const std::array<double, 3>& values, const std::array<double, 2>& end_slopes,
                               double h);

/// Interior second derivatives from the (1, 10, 1) system
///   f''_{k-1} + 10 f''_k + f''_{k+1} = 12 (f_{k-1} - 2 f_k + f_{k+1}) / h^2
/// with caller-supplied f'' at both ends.  Exact for degree <= 5; leading
/// error f^(6) h^4 / 20.  Returns the full vector including the given ends.
std::vector<double> compact_second_derivatives_uniform(const std::vector<double>& values, double h,
                                                       const std::array<double, 2>& end_values);

/// End second derivatives for the (1,10,1) system taken from the terminal
/// pieces of a compact cubic fit (O(h^3)-limited at the ends).
std::array<double, 2> butcher_end_second_derivatives(const PiecewiseCubic& p);

/// p''(tau + phi*h) on one cubic piece from its endpoint values and slopes.
/// Exact whenever the piece is a cubic; phi outside [0, 1] evaluates the
/// same polynomial as extrapolation and sets *extrapolated when provided.
double butcher_second_derivative(const std::array<double, 2>& piece_values,
                                 const std::array<double, 2>& piece_slopes, double h, double phi,
                                 bool* extrapolated = nullptr);

/// Difference-formula residuals probed over a step sweep.
enum class TruncationFormula {
    interior_compact,       // order 4, coefficient (s+r)^2/120 * f^(5)
    interior_spline,        // order 3 for r != s, coefficient -rs(r-s)/12 * f^(4)
    edge_compact4,          // order 4; uniform coefficient f^(5)/60
    second_derivative_110,  // order 4, coefficient f^(6)/20
};

/// A function with the derivatives the residual formulas consume.
struct SmoothFunction {
    std::function<double(double)> f;
    std::function<double(double)> df;
    std::function<double(double)> d2f; // used by second_derivative_110 only
};

struct TruncationFit {
    double order;       // least-squares slope of log|residual| vs log h
    double coefficient; // residual / h^round(order), geometric mean
    std::size_t points_used;
};

/// Evaluates the requested formula residual L - R at probe point t0 for each
/// h in the sweep and fits order and leading coefficient, discarding
/// residuals below the rounding floor.  For the interior formulas (r, s) are
/// the local width ratios; for edge_compact4 the widths are (h, r*h, s*h).
/// Throws insufficient_sweep for fewer than 4 steps or fewer than 3 usable
/// residuals.
TruncationFit truncation_probe(TruncationFormula formula, const SmoothFunction& fn, double r, double s,
                               const std::vector<double>& h_sweep, double t0 = 0.0);

} // namespace compactcubic
