#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "compactcubic/errors.hpp"
#include "compactcubic/mesh.hpp"

namespace compactcubic {

/// Coefficients of the partial-fraction expansion of the reciprocal node
/// polynomial 1/((t-tau_k)^2 (t-tau_{k+1})^2) over one subinterval of width
/// h.  "simple" multiplies 1/(t-tau), "dbl" multiplies 1/(t-tau)^2.
struct BaryWeights {
    double left_simple;  // -2/h^3
    double left_dbl;     //  1/h^2
    double right_simple; //  2/h^3
    double right_dbl;    //  1/h^2
};

BaryWeights bary_weights(double h);

/// Side selector for one-sided second derivatives at a node.
enum class Side { left, right };

/// Local-monomial (ppform) representation: value of piece k at t is
/// a + b*(t-tau_k) + c*(t-tau_k)^2 + d*(t-tau_k)^3.
struct PpForm {
    struct Coefs {
        double a, b, c, d;
    };
    std::vector<double> breaks;
    std::vector<Coefs> pieces;

    double evaluate(double t) const;

    /// JSON text {"breaks": [...], "coefs": [[a,b,c,d], ...]}, coefficients
    /// in ascending powers of (t - tau_k).
    std::string to_json(int indent = -1) const;
};

/// C^1 piecewise cubic in Hermite form: nodal values and nodal slopes.
/// Evaluation at a node reproduces the stored value and slope exactly; the
/// second derivative is generally one-sided.  Immutable and safe to share.
class PiecewiseCubic {
public:
    PiecewiseCubic(Mesh mesh, std::vector<double> values, std::vector<double> slopes);

    const Mesh& mesh() const noexcept { return mesh_; }
    const std::vector<double>& values() const noexcept { return values_; }
    const std::vector<double>& slopes() const noexcept { return slopes_; }

    /// Hermite-basis evaluation.  Outside [tau_0, tau_n] throws
    /// out_of_domain; no extrapolation.
    double evaluate(double t) const;
    double evaluate_derivative(double t) const;

    /// p'' from the piece selected by `side` when t is a node (left picks
    /// the piece ending at t, right the piece starting there).  Throws
    /// side_unavailable at the ends where the requested piece is missing.
    double evaluate_second_derivative(double t, Side side) const;

    /// Jump p''(tau_k^+) - p''(tau_k^-) at interior node k.  Zero (to
    /// rounding) exactly when the interpolant is a spline there.
    double c2_jump(std::size_t k) const;

    PpForm to_ppform() const;

private:
    std::size_t piece_index(double t) const;

    Mesh mesh_;
    std::vector<double> values_;
    std::vector<double> slopes_;
    bool ascending_;
};

} // namespace compactcubic
