#include "compactcubic/assembly.hpp"

#include <cmath>
#include <string>

namespace compactcubic {

namespace {

constexpr double kCornerRatio = 2.0 + 1.7320508075688772935; // 2 + sqrt(3)

void check_sizes(const Mesh& mesh, const std::vector<double>& values) {
    if (values.size() != mesh.size())
        raise(errc::index_out_of_range, "values length must equal node count");
}

void check_interior(const Mesh& mesh, std::size_t k) {
    if (k < 1 || k > mesh.n() - 1)
        raise(errc::index_out_of_range, "interior row index " + std::to_string(k) + " not in [1, " +
                                            std::to_string(mesh.n() - 1) + "]");
}

/// Five-value edge weights for the corner-ratio scheme: w_j multiplies
/// f(j h).  Linear in the corner ratio; both parts are the classical
/// one-sided five-point stencils for f'(0) and f'(h).
std::array<double, 5> compact_c_weights(double c) {
    return {-25.0 * c / 12.0 - 0.25, 4.0 * c - 5.0 / 6.0, -3.0 * c + 1.5, 4.0 * c / 3.0 - 0.5,
            -c / 4.0 + 1.0 / 12.0};
}

} // namespace

std::string EdgeScheme::label() const {
    switch (kind) {
        case EdgeKind::natural: return "natural";
        case EdgeKind::clamped: return "clamped";
        case EdgeKind::not_a_knot: return "not-a-knot";
        case EdgeKind::compact4: return "compact4";
        case EdgeKind::compact_c: return "compactc";
    }
    return "?";
}

std::string AssembledSystem::label() const {
    return std::string(interior == InteriorRule::spline ? "spline" : "compact") + "+" + edges.label();
}

Compact4EdgeCoeffs compact4_edge_coeffs(double h1, double h2, double h3) {
    const double s12 = h1 + h2;
    const double s123 = h1 + h2 + h3;
    const double s23 = h2 + h3;
    Compact4EdgeCoeffs e;
    e.a0 = h2 * s23 / (s12 * s123);
    e.c[0] = -h2 * s23 * (4.0 * h1 * h1 + 6.0 * h1 * h2 + 3.0 * h1 * h3 + 2.0 * h2 * h2 + 2.0 * h2 * h3) /
             (h1 * s12 * s12 * s123 * s123);
    e.c[1] = (2.0 * h2 * (h2 - h1) + h3 * (2.0 * h2 - h1)) / (h1 * h2 * s23);
    e.c[2] = h1 * h1 * s23 / (h2 * s12 * s12 * h3);
    e.c[3] = -h1 * h1 * h2 / (h3 * s23 * s123 * s123);
    return e;
}

InteriorRow spline_interior_row(const Mesh& mesh, std::size_t k, const std::vector<double>& values) {
    check_sizes(mesh, values);
    check_interior(mesh, k);
    const double hk = mesh.width(k);
    const double hk1 = mesh.width(k + 1);
    const double sum = hk + hk1;
    InteriorRow row;
    row.sub = 2.0 * hk1 / sum;
    row.diag = 4.0;
    row.sup = 2.0 * hk / sum;
    row.rhs = 6.0 * hk / (hk1 * sum) * (values[k + 1] - values[k]) +
              6.0 * hk1 / (hk * sum) * (values[k] - values[k - 1]);
    return row;
}

InteriorRow compact_interior_row(const Mesh& mesh, std::size_t k, const std::vector<double>& values) {
    check_sizes(mesh, values);
    check_interior(mesh, k);
    const auto [r, s] = mesh.local_ratios(k);
    const double h = mesh.ref_step();
    const double rs_sum = r + s;
    InteriorRow row;
    row.sub = 1.0 / (r * r);
    row.diag = rs_sum * rs_sum / (r * r * s * s);
    row.sup = 1.0 / (s * s);
    row.rhs = -(4.0 * r + 2.0 * s) / (r * r * r * h * rs_sum) * values[k - 1] -
              2.0 * (r - s) * rs_sum * rs_sum / (r * r * r * h * s * s * s) * values[k] +
              (4.0 * s + 2.0 * r) / (h * rs_sum * s * s * s) * values[k + 1];
    return row;
}

EdgeRow edge_row_compact4(const Mesh& mesh, const std::vector<double>& values, End end) {
    check_sizes(mesh, values);
    const std::size_t n = mesh.n();
    if (n < 4)
        raise(errc::too_few_nodes, "compact4 edge rows need n >= 4, got n = " + std::to_string(n));
    EdgeRow row;
    row.inner = 1.0;
    if (end == End::left) {
        const auto e = compact4_edge_coeffs(mesh.width(1), mesh.width(2), mesh.width(3));
        row.corner = e.a0;
        row.rhs = e.c[0] * values[0] + e.c[1] * values[1] + e.c[2] * values[2] + e.c[3] * values[3];
    } else {
        // Reverse the node labels: the right row is the left formula applied
        // to the reflected mesh, whose widths are the negated originals.
        const auto e = compact4_edge_coeffs(-mesh.width(n), -mesh.width(n - 1), -mesh.width(n - 2));
        row.corner = e.a0;
        row.rhs = e.c[0] * values[n] + e.c[1] * values[n - 1] + e.c[2] * values[n - 2] +
                  e.c[3] * values[n - 3];
    }
    return row;
}

EdgeRow edge_row_compact_c(const Mesh& mesh, const std::vector<double>& values, End end) {
    check_sizes(mesh, values);
    const std::size_t n = mesh.n();
    if (n < 4)
        raise(errc::too_few_nodes, "compact-c edge rows need n >= 4, got n = " + std::to_string(n));
    if (!mesh.is_uniform())
        raise(errc::non_uniform_unsupported, "compact-c edge rows are defined for uniform meshes only");
    const double h = mesh.ref_step();
    const auto w = compact_c_weights(kCornerRatio);
    EdgeRow row;
    row.corner = kCornerRatio;
    row.inner = 1.0;
    double acc = 0.0;
    if (end == End::left) {
        for (std::size_t j = 0; j < 5; ++j) acc += w[j] * values[j];
        row.rhs = acc / h;
    } else {
        for (std::size_t j = 0; j < 5; ++j) acc += w[j] * values[n - j];
        row.rhs = -acc / h;
    }
    return row;
}

EdgeRow edge_row_classical(const Mesh& mesh, const std::vector<double>& values, const EdgeScheme& scheme,
                           End end) {
    check_sizes(mesh, values);
    const std::size_t n = mesh.n();
    if (n < 2) raise(errc::too_few_nodes, "classical edge rows need n >= 2");
    EdgeRow row;
    switch (scheme.kind) {
        case EdgeKind::natural: {
            // Zero second derivative at the end of the terminal piece.
            row.corner = 2.0;
            row.inner = 1.0;
            if (end == End::left)
                row.rhs = 3.0 * (values[1] - values[0]) / mesh.width(1);
            else
                row.rhs = 3.0 * (values[n] - values[n - 1]) / mesh.width(n);
            return row;
        }
        case EdgeKind::clamped: {
            row.corner = 1.0;
            row.inner = 0.0;
            row.rhs = end == End::left ? scheme.d_left : scheme.d_right;
            return row;
        }
        case EdgeKind::not_a_knot: {
            if (n < 3) raise(errc::too_few_nodes, "not-a-knot needs n >= 3");
            // Third-derivative continuity at the first interior node, folded
            // with the neighbouring continuity row to stay tridiagonal.
            if (end == End::left) {
                const double h1 = mesh.width(1), h2 = mesh.width(2);
                const double d0 = (values[1] - values[0]) / h1;
                const double d1 = (values[2] - values[1]) / h2;
                row.corner = h2;
                row.inner = h1 + h2;
                row.rhs = (h2 * (3.0 * h1 + 2.0 * h2) * d0 + h1 * h1 * d1) / (h1 + h2);
            } else {
                const double h1 = mesh.width(n), h2 = mesh.width(n - 1);
                const double d0 = (values[n] - values[n - 1]) / h1;
                const double d1 = (values[n - 1] - values[n - 2]) / h2;
                row.corner = h2;
                row.inner = h1 + h2;
                row.rhs = (h2 * (3.0 * h1 + 2.0 * h2) * d0 + h1 * h1 * d1) / (h1 + h2);
            }
            return row;
        }
        default:
            raise(errc::unknown_function, "edge_row_classical handles natural/clamped/not-a-knot only");
    }
}

AssembledSystem assemble(const Mesh& mesh, const std::vector<double>& values, InteriorRule interior,
                         const EdgeScheme& edges) {
    check_sizes(mesh, values);
    const std::size_t n = mesh.n();
    if (n < 2) raise(errc::too_few_nodes, "slope system needs n >= 2");

    const std::size_t m = n + 1;
    std::vector<double> sub(m - 1), diag(m), sup(m - 1), rhs(m);

    for (std::size_t k = 1; k <= n - 1; ++k) {
        const InteriorRow row = interior == InteriorRule::spline ? spline_interior_row(mesh, k, values)
                                                                 : compact_interior_row(mesh, k, values);
        sub[k - 1] = row.sub;
        diag[k] = row.diag;
        sup[k] = row.sup;
        rhs[k] = row.rhs;
    }

    const auto edge = [&](End end) {
        switch (edges.kind) {
            case EdgeKind::compact4: return edge_row_compact4(mesh, values, end);
            case EdgeKind::compact_c: return edge_row_compact_c(mesh, values, end);
            default: return edge_row_classical(mesh, values, edges, end);
        }
    };
    const EdgeRow left = edge(End::left);
    diag[0] = left.corner;
    sup[0] = left.inner;
    rhs[0] = left.rhs;
    const EdgeRow right = edge(End::right);
    diag[n] = right.corner;
    sub[n - 1] = right.inner;
    rhs[n] = right.rhs;

    AssembledSystem out;
    out.matrix = TridiagonalSystem(std::move(sub), std::move(diag), std::move(sup));
    out.rhs = std::move(rhs);
    out.interior = interior;
    out.edges = edges;
    return out;
}

TridiagonalSystem theorem_scaled_matrix(const Mesh& mesh) {
    const std::size_t n = mesh.n();
    if (n < 4) raise(errc::too_few_nodes, "scaled compact matrix needs n >= 4");
    const std::size_t m = n + 1;
    std::vector<double> sub(m - 1), diag(m), sup(m - 1);
    for (std::size_t k = 1; k <= n - 1; ++k) {
        const double hk = mesh.width(k), hk1 = mesh.width(k + 1);
        sub[k - 1] = hk1 * hk1;
        diag[k] = (hk + hk1) * (hk + hk1);
        sup[k] = hk * hk;
    }
    const auto left = compact4_edge_coeffs(mesh.width(1), mesh.width(2), mesh.width(3));
    diag[0] = left.a0;
    sup[0] = 1.0;
    const auto right = compact4_edge_coeffs(-mesh.width(n), -mesh.width(n - 1), -mesh.width(n - 2));
    diag[n] = right.a0;
    sub[n - 1] = 1.0;
    return TridiagonalSystem(std::move(sub), std::move(diag), std::move(sup));
}

} // namespace compactcubic
