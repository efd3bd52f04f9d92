#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "compactcubic/mesh.hpp"
#include "compactcubic/tridiag.hpp"

namespace compactcubic {

/// Interior equation family: the spline C^2 continuity rows or the
/// fourth-order compact rows.  On uniform meshes the two coincide after
/// normalization; on nonuniform meshes they differ.
enum class InteriorRule { spline, compact };

enum class EdgeKind { natural, clamped, not_a_knot, compact4, compact_c };

/// Closure choice for the two free rows of the slope system.  compact4 is
/// the variable-mesh four-node fourth-order closure; compact_c the
/// uniform-mesh five-value closure with corner ratio 2+sqrt(3).
struct EdgeScheme {
    EdgeKind kind = EdgeKind::natural;
    double d_left = 0.0;  // clamped only
    double d_right = 0.0; // clamped only

    static EdgeScheme natural() { return {EdgeKind::natural}; }
    static EdgeScheme clamped(double d_left, double d_right) {
        return {EdgeKind::clamped, d_left, d_right};
    }
    static EdgeScheme not_a_knot() { return {EdgeKind::not_a_knot}; }
    static EdgeScheme compact4() { return {EdgeKind::compact4}; }
    static EdgeScheme compact_c() { return {EdgeKind::compact_c}; }

    std::string label() const;
};

enum class End { left, right };

/// One interior equation: sub*v_{k-1} + diag*v_k + sup*v_{k+1} = rhs.
struct InteriorRow {
    double sub, diag, sup, rhs;
};

/// One edge equation.  Left end: corner*v_0 + inner*v_1 = rhs.  Right end:
/// inner*v_{n-1} + corner*v_n = rhs.
struct EdgeRow {
    double corner, inner, rhs;
};

/// Coefficients of the four-node edge relation
///   a0 f'(tau_0) + f'(tau_1) = c0 f(tau_0) + c1 f(tau_1) + c2 f(tau_2) + c3 f(tau_3)
/// for widths (h1, h2, h3), exact for polynomials of degree <= 4.
struct Compact4EdgeCoeffs {
    double a0;
    std::array<double, 4> c;
};
Compact4EdgeCoeffs compact4_edge_coeffs(double h1, double h2, double h3);

/// Spline continuity row at interior node k, in the rescaled form with
/// center coefficient 4.
InteriorRow spline_interior_row(const Mesh& mesh, std::size_t k, const std::vector<double>& values);

/// Compact fourth-order row at interior node k, in the form whose uniform
/// limit is (1, 4, 1) with right side 3/h times the centered difference.
InteriorRow compact_interior_row(const Mesh& mesh, std::size_t k, const std::vector<double>& values);

EdgeRow edge_row_compact4(const Mesh& mesh, const std::vector<double>& values, End end);

/// Five-value uniform-mesh edge row with corner ratio c = 2+sqrt(3).  The
/// right side carries the opposite overall sign from the transcribed
/// source form; the sign used here is the one that is exact for
/// polynomials of degree <= 4 (see tests).  Throws non_uniform_unsupported
/// off uniform meshes.
EdgeRow edge_row_compact_c(const Mesh& mesh, const std::vector<double>& values, End end);

EdgeRow edge_row_classical(const Mesh& mesh, const std::vector<double>& values, const EdgeScheme& scheme,
                           End end);

/// The (n+1)x(n+1) slope system A v = B rho with B already applied.
struct AssembledSystem {
    TridiagonalSystem matrix;
    std::vector<double> rhs;
    InteriorRule interior;
    EdgeScheme edges;

    std::string label() const;
};

AssembledSystem assemble(const Mesh& mesh, const std::vector<double>& values, InteriorRule interior,
                         const EdgeScheme& edges);

/// The compact matrix rescaled row-by-row to clear denominators: interior
/// rows become (h_{k+1}^2, (h_k+h_{k+1})^2, h_k^2) and edge rows (a0, 1).
/// This is the matrix whose leading principal minors leading_minors()
/// computes.  Requires n >= 4.
TridiagonalSystem theorem_scaled_matrix(const Mesh& mesh);

} // namespace compactcubic
