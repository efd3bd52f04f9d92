// Acceptance suite: one criterion per section, one PASS/FAIL line each.
// Every tolerance is pinned here; a criterion also fails if it overruns its
// time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "compactcubic/assembly.hpp"
#include "compactcubic/driver.hpp"
#include "compactcubic/harness.hpp"
#include "compactcubic/tridiag.hpp"
#include "test_support.hpp"

using namespace compactcubic;
using ccs_test::monomial;
using ccs_test::monomial_derivative;

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;
constexpr double kCornerRatio = 2.0 + kSqrt3;

struct Runner {
    int failures = 0;

    void run(int index, const std::string& name, double budget_seconds,
             const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > budget_seconds) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
        }
        std::printf("%s criterion %d: %s (%.2f s%s%s)\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                    elapsed, detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
};

std::vector<double> random_vector(std::size_t len, std::uint64_t& rng) {
    std::vector<double> v(len);
    for (auto& x : v) x = 2.0 * uniform01(rng) - 1.0;
    return v;
}

bool criterion1_uniform_coincidence(std::string& detail) {
    std::uint64_t rng = 101;
    for (std::size_t n : {4, 8, 16, 64}) {
        const Mesh mesh = Mesh::uniform(-1.0, 1.0, n);
        for (int trial = 0; trial < 50; ++trial) {
            const std::vector<double> values = random_vector(n + 1, rng);
            // Row-by-row: normalized by the center coefficient, equal to 1e-14.
            for (std::size_t k = 1; k <= n - 1; ++k) {
                const InteriorRow s = spline_interior_row(mesh, k, values);
                const InteriorRow c = compact_interior_row(mesh, k, values);
                const double rhs_scale = std::abs(s.rhs / s.diag) + 1.0;
                if (std::abs(s.sub / s.diag - c.sub / c.diag) > 1e-14 ||
                    std::abs(s.sup / s.diag - c.sup / c.diag) > 1e-14 ||
                    std::abs(s.rhs / s.diag - c.rhs / c.diag) > 1e-14 * rhs_scale) {
                    detail = "normalized rows differ at n=" + std::to_string(n);
                    return false;
                }
            }
            // Solved slope vectors agree to 1e-12 relative.
            const AssembledSystem cs = assemble(mesh, values, InteriorRule::compact, EdgeScheme::compact4());
            const AssembledSystem ss = assemble(mesh, values, InteriorRule::spline, EdgeScheme::compact4());
            const std::vector<double> cv = solve(cs.matrix, cs.rhs);
            const std::vector<double> sv = solve(ss.matrix, ss.rhs);
            double scale = 0.0;
            for (double x : sv) scale = std::max(scale, std::abs(x));
            for (std::size_t k = 0; k <= n; ++k) {
                if (std::abs(cv[k] - sv[k]) > 1e-12 * scale) {
                    detail = "solved slopes differ at n=" + std::to_string(n);
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion2_degree_exactness(std::string& detail) {
    std::uint64_t rng = 202;
    // Compact first derivatives with compact4 edges: exact through degree 4
    // on 100 random common-sign meshes, n = 4..10.
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 4 + trial % 7;
        const Mesh mesh = ccs_test::random_mesh(n, rng, 0.05, 1.0, trial % 2 == 1);
        for (int degree = 0; degree <= 4; ++degree) {
            std::vector<double> values(mesh.size());
            for (std::size_t k = 0; k < mesh.size(); ++k) values[k] = monomial(mesh.node(k), degree);
            const DerivativeResult r = compact_first_derivatives(mesh, values, EdgeScheme::compact4());
            double scale = 1.0;
            for (std::size_t k = 0; k <= n; ++k)
                scale = std::max(scale, std::abs(monomial_derivative(mesh.node(k), degree)));
            for (std::size_t k = 0; k <= n; ++k) {
                if (std::abs(r.slopes[k] - monomial_derivative(mesh.node(k), degree)) > 1e-10 * scale) {
                    detail = "compact derivatives inexact at degree " + std::to_string(degree);
                    return false;
                }
            }
        }
    }
    // Spline rows: exact through 3, NOT through 4 on a skewed mesh.
    {
        const Mesh skew({0.0, 1.0, 3.0, 3.5, 4.0});
        for (int degree = 0; degree <= 3; ++degree) {
            std::vector<double> values(skew.size());
            for (std::size_t k = 0; k < skew.size(); ++k) values[k] = monomial(skew.node(k), degree);
            const InteriorRow row = spline_interior_row(skew, 2, values);
            const double lhs = row.sub * monomial_derivative(skew.node(1), degree) +
                               row.diag * monomial_derivative(skew.node(2), degree) +
                               row.sup * monomial_derivative(skew.node(3), degree);
            if (std::abs(lhs - row.rhs) > 1e-12 * (std::abs(lhs) + 1.0)) {
                detail = "spline row inexact below degree 4";
                return false;
            }
        }
        std::vector<double> quartic(skew.size());
        for (std::size_t k = 0; k < skew.size(); ++k) quartic[k] = monomial(skew.node(k), 4);
        const InteriorRow row = spline_interior_row(skew, 2, quartic);
        const double lhs = row.sub * monomial_derivative(skew.node(1), 4) +
                           row.diag * monomial_derivative(skew.node(2), 4) +
                           row.sup * monomial_derivative(skew.node(3), 4);
        if (std::abs(lhs - row.rhs) < 1e-6) {
            detail = "spline row unexpectedly exact at degree 4 on a nonuniform mesh";
            return false;
        }
    }
    // The (1,10,1) system: exact through degree 5 with exact ends; not 6.
    for (int degree = 0; degree <= 6; ++degree) {
        const std::size_t n = 8;
        const double a = -1.0, h = 0.25;
        std::vector<double> values(n + 1), d2(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            const double x = a + static_cast<double>(k) * h;
            values[k] = monomial(x, degree);
            d2[k] = degree < 2 ? 0.0 : degree * (degree - 1) * monomial(x, degree - 2);
        }
        const auto got = compact_second_derivatives_uniform(values, h, {d2.front(), d2.back()});
        double err = 0.0, scale = 1.0;
        for (std::size_t k = 0; k <= n; ++k) {
            err = std::max(err, std::abs(got[k] - d2[k]));
            scale = std::max(scale, std::abs(d2[k]));
        }
        if (degree <= 5 && err > 1e-11 * scale) {
            detail = "(1,10,1) inexact at degree " + std::to_string(degree);
            return false;
        }
        if (degree == 6 && err < 1e-6) {
            detail = "(1,10,1) unexpectedly exact at degree 6";
            return false;
        }
    }
    // Mixed formula: exact through 5 (h = 0.5 at t0 = 0.3), not 6.
    for (int degree = 0; degree <= 6; ++degree) {
        const double t0 = 0.3, h = 0.5;
        const double got = second_derivative_mixed(
            {monomial(t0 - h, degree), monomial(t0, degree), monomial(t0 + h, degree)},
            {monomial_derivative(t0 - h, degree), monomial_derivative(t0 + h, degree)}, h);
        const double expect = degree < 2 ? 0.0 : degree * (degree - 1) * monomial(t0, degree - 2);
        if (degree <= 5 && std::abs(got - expect) > 1e-11 * (std::abs(expect) + 1.0)) {
            detail = "mixed formula inexact at degree " + std::to_string(degree);
            return false;
        }
        if (degree == 6 && std::abs(got - expect) < 1e-6) {
            detail = "mixed formula unexpectedly exact at degree 6";
            return false;
        }
    }
    // Butcher formula: exact through 3, not 4.
    for (int degree = 0; degree <= 4; ++degree) {
        const double x0 = 0.2, h = 0.7;
        for (double phi : {0.0, 0.31, 1.0}) {
            const double got = butcher_second_derivative(
                {monomial(x0, degree), monomial(x0 + h, degree)},
                {monomial_derivative(x0, degree), monomial_derivative(x0 + h, degree)}, h, phi);
            const double t = x0 + phi * h;
            const double expect = degree < 2 ? 0.0 : degree * (degree - 1) * monomial(t, degree - 2);
            if (degree <= 3 && std::abs(got - expect) > 1e-12 * (std::abs(expect) + 1.0)) {
                detail = "butcher formula inexact at degree " + std::to_string(degree);
                return false;
            }
            if (degree == 4 && phi == 0.31 && std::abs(got - expect) < 1e-6) {
                detail = "butcher formula unexpectedly exact at degree 4";
                return false;
            }
        }
    }
    return true;
}

bool criterion3_convergence_orders(std::string& detail) {
    const ConvergenceReport report = run_convergence(runge_function(), MeshKind::uniform, 1,
                                                     Method::compact4, {8, 16, 32, 64, 128, 256, 512});
    char buf[160];
    std::snprintf(buf, sizeof buf, "slopes value=%.2f nodes=%.2f between=%.2f", report.slope_value,
                  report.slope_deriv_nodes, report.slope_deriv_between);
    detail = buf;
    return std::abs(report.slope_value - 4.0) <= 0.3 && std::abs(report.slope_deriv_nodes - 4.0) <= 0.3 &&
           std::abs(report.slope_deriv_between - 3.0) <= 0.3;
}

bool criterion4_truncation_coefficients(std::string& detail) {
    const SmoothFunction fn = {[](double t) { return std::exp(t); }, [](double t) { return std::exp(t); },
                               [](double t) { return std::exp(t); }};
    const std::vector<double> sweep = {0.12, 0.06, 0.03, 0.015, 0.0075};
    struct Probe {
        TruncationFormula formula;
        double r, s;
        double order, coefficient;
        const char* name;
    };
    // f = exp, so every derivative factor at the probe point is 1.
    const Probe probes[] = {
        {TruncationFormula::interior_compact, 1.0, 2.0, 4.0, 9.0 / 120.0, "compact (s+r)^2/120"},
        {TruncationFormula::interior_compact, 2.0, 0.5, 4.0, 6.25 / 120.0, "compact (s+r)^2/120 wide"},
        {TruncationFormula::interior_spline, 1.0, 2.0, 3.0, 1.0 / 6.0, "spline rs(s-r)/12"},
        {TruncationFormula::interior_compact, 1.0, 1.0, 4.0, 1.0 / 30.0, "compact h^4/30 at r=s=1"},
        {TruncationFormula::edge_compact4, 1.0, 1.0, 4.0, 1.0 / 60.0, "edge h^4/60 uniform"},
        {TruncationFormula::second_derivative_110, 1.0, 1.0, 4.0, 1.0 / 20.0, "(1,10,1) h^4/20"},
    };
    for (const Probe& p : probes) {
        const TruncationFit fit = truncation_probe(p.formula, fn, p.r, p.s, sweep);
        if (std::abs(fit.order - p.order) > 0.3) {
            detail = std::string(p.name) + ": order " + std::to_string(fit.order);
            return false;
        }
        if (std::abs(fit.coefficient - p.coefficient) > 0.10 * p.coefficient) {
            detail = std::string(p.name) + ": coefficient " + std::to_string(fit.coefficient);
            return false;
        }
    }
    return true;
}

bool criterion5_matrix_theorems(std::string& detail) {
    // 200 random common-sign meshes, n = 4..8: Gantmacher-Krein passes and
    // agrees with exhaustive enumeration of all square minors.
    std::uint64_t rng = 505;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 4 + trial % 5;
        const Mesh mesh = ccs_test::random_mesh(n, rng, 0.02, 1.0, trial % 2 == 1);
        const TridiagonalSystem t = theorem_scaled_matrix(mesh);
        if (!is_totally_nonnegative(t, 1e-10).totally_nonnegative) {
            detail = "Gantmacher-Krein test failed on trial " + std::to_string(trial);
            return false;
        }
        if (ccs_test::min_square_minor(t) < -1e-9 * t.inf_norm()) {
            detail = "exhaustive enumeration found a negative minor on trial " + std::to_string(trial);
            return false;
        }
    }
    // Uniform condition numbers.
    const double limit = 63.0 + 36.0 * kSqrt3;
    for (std::size_t n : {20, 30, 40, 80}) {
        std::vector<double> sub(n, 1.0), diag(n + 1, 4.0), sup(n, 1.0);
        diag.front() = diag.back() = 1.0 / 3.0;
        const double cond = one_norm_condition(TridiagonalSystem(sub, diag, sup));
        if (std::abs(cond - limit) > 0.01 * limit) {
            detail = "uniform condition off the 63+36*sqrt(3) limit at n=" + std::to_string(n);
            return false;
        }
    }
    {
        const Mesh mesh = Mesh::uniform(0.0, 1.0, 40);
        const AssembledSystem sys =
            assemble(mesh, std::vector<double>(41, 0.0), InteriorRule::compact, EdgeScheme::compact_c());
        const double cond = one_norm_condition(sys.matrix);
        if (!(cond < 3.0)) {
            detail = "corner-ratio condition not below 3";
            return false;
        }
    }
    // U diagonal of the uniform matrix: frozen head, then convergence of the
    // entries (which are consecutive-term ratios) to 2+sqrt(3).
    {
        std::vector<double> sub(30, 1.0), diag(31, 4.0), sup(30, 1.0);
        diag.front() = diag.back() = 1.0 / 3.0;
        const LuFactors lu = lu_factor(TridiagonalSystem(sub, diag, sup));
        const double head[5] = {1.0 / 3.0, 1.0, 3.0, 11.0 / 3.0, 41.0 / 11.0};
        for (int i = 0; i < 5; ++i) {
            if (std::abs(lu.u_diag[i] - head[i]) > 1e-12) {
                detail = "U diagonal head mismatch at entry " + std::to_string(i);
                return false;
            }
        }
        for (std::size_t k = 15; k < 30; ++k) {
            if (std::abs(lu.u_diag[k] - kCornerRatio) > 1e-10) {
                detail = "U diagonal ratio not within 1e-10 of 2+sqrt(3) at k=" + std::to_string(k);
                return false;
            }
        }
    }
    return true;
}

bool criterion6_c2_behavior(std::string& detail) {
    std::uint64_t rng = 606;
    // Spline jumps vanish on random meshes.
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 5 + trial % 6;
        const Mesh mesh = ccs_test::random_mesh(n, rng, 0.05, 1.0);
        const std::vector<double> values = random_vector(n + 1, rng);
        const PiecewiseCubic s = cubic_spline(mesh, values, EdgeScheme::natural());
        double scale = 1.0;
        for (std::size_t k = 1; k <= n - 1; ++k)
            scale = std::max({scale, std::abs(s.evaluate_second_derivative(mesh.node(k), Side::left)),
                              std::abs(s.evaluate_second_derivative(mesh.node(k), Side::right))});
        for (std::size_t k = 1; k <= n - 1; ++k) {
            if (std::abs(s.c2_jump(k)) > 1e-9 * scale) {
                detail = "spline jump above 1e-9*scale";
                return false;
            }
        }
    }
    // Compact cubic: flat on uniform meshes, visibly kinked on Chebyshev 7.
    {
        const Mesh mesh = Mesh::uniform(-1.0, 1.0, 16);
        std::vector<double> values(17);
        for (std::size_t k = 0; k < 17; ++k)
            values[k] = 1.0 / (1.0 + 25.0 * mesh.node(k) * mesh.node(k));
        const PiecewiseCubic c = compact_cubic(mesh, values, EdgeScheme::compact4());
        double scale = 1.0;
        for (std::size_t k = 1; k <= 15; ++k)
            scale = std::max(scale, std::abs(c.evaluate_second_derivative(mesh.node(k), Side::left)));
        for (std::size_t k = 1; k <= 15; ++k) {
            if (std::abs(c.c2_jump(k)) > 1e-9 * scale) {
                detail = "compact cubic jump on a uniform mesh";
                return false;
            }
        }
    }
    {
        std::vector<double> nodes(8);
        for (int j = 0; j <= 7; ++j) nodes[j] = std::cos(M_PI * j / 7.0);
        const Mesh cheb(nodes);
        std::vector<double> values(8);
        for (std::size_t k = 0; k < 8; ++k)
            values[k] = 1.0 / (1.0 + 25.0 * cheb.node(k) * cheb.node(k));
        const PiecewiseCubic c = compact_cubic(cheb, values, EdgeScheme::compact4());
        double scale = 1.0, max_jump = 0.0;
        for (std::size_t k = 1; k <= 6; ++k) {
            scale = std::max(scale, std::abs(c.evaluate_second_derivative(cheb.node(k), Side::left)));
            max_jump = std::max(max_jump, std::abs(c.c2_jump(k)));
        }
        if (max_jump <= 1e-3 * scale) {
            detail = "compact cubic failed to kink on the Chebyshev mesh";
            return false;
        }
    }
    return true;
}

bool criterion7_compact_c_sign(std::string& detail) {
    const Mesh mesh = Mesh::uniform(0.0, 6.0, 6);
    // The sign used in the implementation is exact for degrees 0..4; the
    // opposite (as transcribed) sign fails already on f(t) = t.
    for (int degree = 0; degree <= 4; ++degree) {
        std::vector<double> values(mesh.size());
        for (std::size_t k = 0; k < mesh.size(); ++k) values[k] = monomial(mesh.node(k), degree);
        for (End end : {End::left, End::right}) {
            const EdgeRow row = edge_row_compact_c(mesh, values, end);
            const std::size_t corner_ix = end == End::left ? 0 : 6;
            const std::size_t inner_ix = end == End::left ? 1 : 5;
            const double lhs = row.corner * monomial_derivative(mesh.node(corner_ix), degree) +
                               row.inner * monomial_derivative(mesh.node(inner_ix), degree);
            const double scale = std::abs(lhs) + std::abs(row.rhs) + 1.0;
            if (std::abs(lhs - row.rhs) > 1e-11 * scale) {
                detail = "corrected sign inexact at degree " + std::to_string(degree);
                return false;
            }
            if (degree == 1 && std::abs(lhs - (-row.rhs)) < 1.0) {
                detail = "transcribed sign unexpectedly balances f(t) = t";
                return false;
            }
        }
    }
    // With the resolved sign, compact derivatives with corner-ratio edges
    // are exact through degree 4 on uniform meshes.
    for (std::size_t n : {5, 8, 12}) {
        const Mesh m = Mesh::uniform(-1.0, 1.5, n);
        for (int degree = 0; degree <= 4; ++degree) {
            std::vector<double> values(m.size());
            for (std::size_t k = 0; k < m.size(); ++k) values[k] = monomial(m.node(k), degree);
            const DerivativeResult r = compact_first_derivatives(m, values, EdgeScheme::compact_c());
            double scale = 1.0;
            for (std::size_t k = 0; k <= n; ++k)
                scale = std::max(scale, std::abs(monomial_derivative(m.node(k), degree)));
            for (std::size_t k = 0; k <= n; ++k) {
                if (std::abs(r.slopes[k] - monomial_derivative(m.node(k), degree)) > 1e-10 * scale) {
                    detail = "corner-ratio derivatives inexact at degree " + std::to_string(degree);
                    return false;
                }
            }
        }
    }
    detail = "transcribed right side gives -(c+1) on f(t)=t; flipped sign is exact through degree 4";
    return true;
}

bool criterion8_histogram_machinery(std::string& detail) {
    // No numeric error tables exist to reproduce; the figure machinery must
    // regenerate deterministically at n=100, trials=1000.
    const CondHistogram a = run_cond_histogram(100, 1000, 42);
    const CondHistogram b = run_cond_histogram(100, 1000, 42);
    if (a.bin_edges != b.bin_edges || a.counts != b.counts) {
        detail = "histogram not bitwise reproducible";
        return false;
    }
    std::size_t total = 0;
    for (std::size_t c : a.counts) total += c;
    if (total != 1000 || a.samples != 1000) {
        detail = "bin counts do not sum to the sample count";
        return false;
    }
    detail = "figures are qualitative; property suites above stand in for numeric tables";
    return true;
}

} // namespace

int main() {
    std::printf("=== acceptance suite ===\n");
    Runner runner;
    runner.run(1, "uniform coincidence of spline and compact rows/slopes", 1.0,
               criterion1_uniform_coincidence);
    runner.run(2, "degree-exactness ladder", 5.0, criterion2_degree_exactness);
    runner.run(3, "Runge convergence orders (uniform n=8..512)", 10.0, criterion3_convergence_orders);
    runner.run(4, "truncation orders and leading constants", 5.0, criterion4_truncation_coefficients);
    runner.run(5, "matrix theorems: TN, condition limits, U diagonal", 10.0, criterion5_matrix_theorems);
    runner.run(6, "C2 continuity and its controlled failure", 1.0, criterion6_c2_behavior);
    runner.run(7, "corner-ratio edge row sign resolution", 1.0, criterion7_compact_c_sign);
    runner.run(8, "seed-deterministic condition histogram (n=100, 1000 trials)", 30.0,
               criterion8_histogram_machinery);
    if (runner.failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", runner.failures);
    return runner.failures == 0 ? 0 : 1;
}
