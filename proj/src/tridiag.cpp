#include "compactcubic/tridiag.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace compactcubic {

namespace {

constexpr double kPivotFloor = 1e-300;

[[noreturn]] void singular_at(std::size_t row) {
    raise(errc::singular_pivot, "singular pivot at row " + std::to_string(row));
}

} // namespace

TridiagonalSystem::TridiagonalSystem(std::vector<double> sub_, std::vector<double> diag_,
                                     std::vector<double> sup_)
    : sub(std::move(sub_)), diag(std::move(diag_)), sup(std::move(sup_)) {
    if (diag.size() < 2) raise(errc::too_few_nodes, "tridiagonal system needs order >= 2");
    if (sub.size() != diag.size() - 1 || sup.size() != diag.size() - 1)
        raise(errc::invalid_argument, "off-diagonal lengths must be order-1");
    for (double v : sub)
        if (!std::isfinite(v)) raise(errc::invalid_argument, "non-finite subdiagonal entry");
    for (double v : diag)
        if (!std::isfinite(v)) raise(errc::invalid_argument, "non-finite diagonal entry");
    for (double v : sup)
        if (!std::isfinite(v)) raise(errc::invalid_argument, "non-finite superdiagonal entry");
}

double TridiagonalSystem::inf_norm() const noexcept {
    const std::size_t m = order();
    double norm = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double row = std::abs(diag[i]);
        if (i > 0) row += std::abs(sub[i - 1]);
        if (i + 1 < m) row += std::abs(sup[i]);
        norm = std::max(norm, row);
    }
    return norm;
}

double TridiagonalSystem::one_norm() const noexcept {
    const std::size_t m = order();
    double norm = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        double col = std::abs(diag[j]);
        if (j > 0) col += std::abs(sup[j - 1]);
        if (j + 1 < m) col += std::abs(sub[j]);
        norm = std::max(norm, col);
    }
    return norm;
}

std::vector<double> solve(const TridiagonalSystem& system, const std::vector<double>& rhs) {
    const std::size_t m = system.order();
    if (rhs.size() != m) raise(errc::index_out_of_range, "rhs length does not match system order");

    std::vector<double> c(m - 1), d(m);
    double pivot = system.diag[0];
    if (std::abs(pivot) < kPivotFloor) singular_at(0);
    c[0] = system.sup[0] / pivot;
    d[0] = rhs[0] / pivot;
    for (std::size_t i = 1; i < m; ++i) {
        pivot = system.diag[i] - system.sub[i - 1] * c[i - 1];
        if (std::abs(pivot) < kPivotFloor) singular_at(i);
        if (i + 1 < m) c[i] = system.sup[i] / pivot;
        d[i] = (rhs[i] - system.sub[i - 1] * d[i - 1]) / pivot;
    }
    for (std::size_t i = m - 1; i-- > 0;) d[i] -= c[i] * d[i + 1];
    return d;
}

LuFactors lu_factor(const TridiagonalSystem& system) {
    const std::size_t m = system.order();
    LuFactors lu;
    lu.l_sub.resize(m - 1);
    lu.u_diag.resize(m);
    lu.u_sup = system.sup;
    lu.u_diag[0] = system.diag[0];
    for (std::size_t i = 1; i < m; ++i) {
        if (std::abs(lu.u_diag[i - 1]) < kPivotFloor) singular_at(i - 1);
        lu.l_sub[i - 1] = system.sub[i - 1] / lu.u_diag[i - 1];
        lu.u_diag[i] = system.diag[i] - lu.l_sub[i - 1] * system.sup[i - 1];
    }
    if (std::abs(lu.u_diag[m - 1]) < kPivotFloor) singular_at(m - 1);
    return lu;
}

std::vector<double> solve_with_factors(const LuFactors& lu, const std::vector<double>& rhs) {
    const std::size_t m = lu.u_diag.size();
    std::vector<double> x(rhs);
    for (std::size_t i = 1; i < m; ++i) x[i] -= lu.l_sub[i - 1] * x[i - 1];
    x[m - 1] /= lu.u_diag[m - 1];
    for (std::size_t i = m - 1; i-- > 0;) x[i] = (x[i] - lu.u_sup[i] * x[i + 1]) / lu.u_diag[i];
    return x;
}

MinorSequence leading_minors(const Mesh& mesh) {
    const std::size_t n = mesh.n();
    if (n < 4)
        raise(errc::too_few_nodes,
              "leading minors need n >= 4 (the 4x4 edge determinant vanishes), got n = " + std::to_string(n));

    const auto h = [&](std::size_t k) { return mesh.width(k); };

    MinorSequence seq;
    seq.values.resize(n + 1);
    // Closed forms for the first three minors of the scaled matrix.
    seq.values[0] = h(2) * (h(3) + h(2)) / ((h(2) + h(1)) * (h(3) + h(2) + h(1)));
    seq.values[1] = h(1) * h(2) * h(3) / (h(1) + h(2) + h(3));
    seq.values[2] = h(1) * h(2) * h(2) * h(3) * (h(3) + h(2)) / (h(2) + h(1));
    // Interior rows: Laplace expansion about the last row.
    for (std::size_t k = 4; k <= n; ++k) {
        const double dk = (h(k - 1) + h(k)) * (h(k - 1) + h(k));
        const double off = h(k - 2) * h(k - 2) * h(k) * h(k);
        seq.values[k - 1] = dk * seq.values[k - 2] - off * seq.values[k - 3];
    }
    // Final row carries the mirrored edge entry alpha instead of a squared sum.
    const double alpha =
        h(n - 1) * (h(n - 1) + h(n - 2)) / ((h(n - 1) + h(n)) * (h(n) + h(n - 1) + h(n - 2)));
    seq.values[n] = alpha * seq.values[n - 1] - h(n - 1) * h(n - 1) * seq.values[n - 2];
    return seq;
}

TnResult is_totally_nonnegative(const TridiagonalSystem& system, double tol) {
    if (tol < 0) raise(errc::invalid_argument, "tolerance must be nonnegative");
    const std::size_t m = system.order();
    for (std::size_t i = 0; i + 1 < m; ++i)
        if (system.sub[i] == 0.0 || system.sup[i] == 0.0)
            raise(errc::reducible, "zero off-diagonal entry at offset " + std::to_string(i) +
                                       "; Gantmacher-Krein criterion inapplicable");

    TnResult result;
    for (std::size_t i = 0; i < m; ++i) {
        if (system.diag[i] < -tol) {
            result.first_violation = TnViolation{TnViolation::Kind::entry, i, i, system.diag[i]};
            return result;
        }
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (system.sup[i] < -tol) {
            result.first_violation = TnViolation{TnViolation::Kind::entry, i, i + 1, system.sup[i]};
            return result;
        }
        if (system.sub[i] < -tol) {
            result.first_violation = TnViolation{TnViolation::Kind::entry, i + 1, i, system.sub[i]};
            return result;
        }
    }

    // Leading principal minors by the generic two-term recurrence, with the
    // tolerance tracking the running product of diagonal magnitudes.
    double prev2 = 1.0, prev1 = system.diag[0];
    double scale = std::max(std::abs(system.diag[0]), 1e-300);
    if (prev1 < -tol * scale) {
        result.first_violation = TnViolation{TnViolation::Kind::minor, 1, 1, prev1};
        return result;
    }
    for (std::size_t k = 2; k <= m; ++k) {
        const double dk = system.diag[k - 1] * prev1 - system.sub[k - 2] * system.sup[k - 2] * prev2;
        scale *= std::max(std::abs(system.diag[k - 1]), 1e-300);
        if (dk < -tol * scale) {
            result.first_violation = TnViolation{TnViolation::Kind::minor, k, k, dk};
            return result;
        }
        prev2 = prev1;
        prev1 = dk;
    }
    result.totally_nonnegative = true;
    return result;
}

double one_norm_condition(const TridiagonalSystem& system) {
    const std::size_t m = system.order();
    const LuFactors lu = lu_factor(system);
    double inv_norm = 0.0;
    std::vector<double> e(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        e[j] = 1.0;
        const std::vector<double> col = solve_with_factors(lu, e);
        e[j] = 0.0;
        double sum = 0.0;
        for (double v : col) sum += std::abs(v);
        inv_norm = std::max(inv_norm, sum);
    }
    return system.one_norm() * inv_norm;
}

} // namespace compactcubic
