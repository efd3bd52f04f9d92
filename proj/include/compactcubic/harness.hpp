#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "compactcubic/assembly.hpp"
#include "compactcubic/driver.hpp"
#include "compactcubic/mesh.hpp"

namespace compactcubic {

/// Node families used by the experiment runner.
enum class MeshKind { uniform, chebyshev, random };

/// Slope-determination method, matching the CLI --method tokens.
enum class Method { spline_natural, spline_clamped, spline_notaknot, compact4, compact_c };

Method parse_method(const std::string& token);
std::string method_token(Method method);
MeshKind parse_mesh_kind(const std::string& token);
std::string mesh_kind_token(MeshKind kind);

/// A target function on [a, b] with its derivative, for error measurement.
struct TestFunction {
    std::string name;
    double a, b;
    std::function<double(double)> f;
    std::function<double(double)> df;
    /// Half-width of the interval around a discontinuity to exclude from
    /// error norms (signum only); 0 means none.  Multiplied by ref_step.
    double exclusion_halfwidth_steps = 0.0;
};

TestFunction runge_function();       // 1/(1+25x^2) on [-1, 1]
TestFunction recip_gamma_function(); // 1/Gamma(x) on [1, 3]
TestFunction signum_function();      // sign(x) on [-1, 1]
TestFunction parse_function(const std::string& token);

/// Ground truth built from a dense sample table: a not-a-knot spline of the
/// samples stands in for f and f'.
TestFunction custom_function(const std::vector<double>& xs, const std::vector<double>& ys);

/// Digamma function, used for the derivative of 1/Gamma.
double digamma(double x);

/// Deterministic uniform(0,1) draw decoupled from library distributions.
double uniform01(std::uint64_t& state);

/// Mesh factories for the experiment runner.  Random meshes take widths
/// from uniform(0,1) draws, accumulate them, and map affinely onto [a, b].
Mesh make_mesh(MeshKind kind, double a, double b, std::size_t n, std::uint64_t& rng_state);

struct ConvergenceRow {
    std::size_t n;
    std::string mesh_kind;
    double err_value;
    double err_deriv_nodes;
    double err_deriv_between;
    double condition;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    // Log-log slopes of error vs reference step, fitted over rows above the
    // rounding floor; NaN when fewer than two rows qualify.
    double slope_value;
    double slope_deriv_nodes;
    double slope_deriv_between;
};

/// Interpolates the target on a mesh of each size, measuring errors at the
/// nodes and at 10 equispaced probes per subinterval.
ConvergenceReport run_convergence(const TestFunction& target, MeshKind mesh_kind, std::uint64_t seed,
                                  Method method, const std::vector<std::size_t>& n_list);

struct CondHistogram {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<double> bin_edges;      // log10(condition), length bins+1
    std::vector<std::size_t> counts;    // length bins
};

/// Condition numbers of the compact matrix over `trials` random-width meshes
/// of dimension n, binned in log10.  Bitwise deterministic for a fixed seed.
CondHistogram run_cond_histogram(std::size_t n, std::size_t trials, std::uint64_t seed,
                                 std::size_t bins = 40);

/// Shortest decimal digits that round-trip the double exactly.
std::string format_double(double v);

struct Table {
    std::vector<double> x;
    std::vector<double> y;
    bool has_y = false;
};

/// Reads a CSV with header "x" or "x,y"; parse failures carry line numbers.
Table read_csv(const std::string& path);

void write_xy_csv(std::ostream& out, const std::vector<double>& xs, const std::vector<double>& ys);
void write_deriv_csv(std::ostream& out, const std::vector<double>& xs, const std::vector<double>& ds);
void write_eval_csv(std::ostream& out, const std::vector<double>& xs, const std::vector<double>& ps,
                    const std::vector<double>& dps);
void write_report_csv(std::ostream& out, const ConvergenceReport& report);
void write_histogram_csv(std::ostream& out, const CondHistogram& hist);

} // namespace compactcubic
