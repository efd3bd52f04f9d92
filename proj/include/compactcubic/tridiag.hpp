#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "compactcubic/errors.hpp"
#include "compactcubic/mesh.hpp"

namespace compactcubic {

/// Tridiagonal matrix of order m stored by diagonals.  sub and sup have
/// length m-1 (sub[i] sits in row i+1, sup[i] in row i).
struct TridiagonalSystem {
    std::vector<double> sub;
    std::vector<double> diag;
    std::vector<double> sup;

    TridiagonalSystem() = default;
    TridiagonalSystem(std::vector<double> sub_, std::vector<double> diag_, std::vector<double> sup_);

    std::size_t order() const noexcept { return diag.size(); }

    /// Max absolute row sum.
    double inf_norm() const noexcept;
    /// Max absolute column sum.
    double one_norm() const noexcept;
};

/// Unit-lower-bidiagonal L and upper-bidiagonal U with L*U = A.
struct LuFactors {
    std::vector<double> l_sub;  // length m-1
    std::vector<double> u_diag; // length m
    std::vector<double> u_sup;  // length m-1 (equals A.sup)
};

/// Leading principal minors D^1..D^m of the Theorem-scaled compact matrix.
struct MinorSequence {
    std::vector<double> values;
};

/// Outcome of the Gantmacher-Krein total-nonnegativity test.
struct TnViolation {
    enum class Kind { entry, minor };
    Kind kind;
    std::size_t row; // for minors, the order k of the offending leading minor (row == col == k)
    std::size_t col;
    double value;
};

struct TnResult {
    bool totally_nonnegative = false;
    std::optional<TnViolation> first_violation;
    explicit operator bool() const noexcept { return totally_nonnegative; }
};

/// Thomas elimination without pivoting.  Throws singular_pivot naming the
/// failing row when a pivot magnitude drops below 1e-300.
std::vector<double> solve(const TridiagonalSystem& system, const std::vector<double>& rhs);

/// LU factorization without pivoting; L has unit diagonal.
LuFactors lu_factor(const TridiagonalSystem& system);

/// Back/forward substitution against an existing factorization.
std::vector<double> solve_with_factors(const LuFactors& lu, const std::vector<double>& rhs);

/// Leading principal minors of the scaled compact matrix of the mesh,
/// D^1..D^3 from closed forms, interior values from the two-term recurrence
/// D^k = (h_{k-1}+h_k)^2 D^{k-1} - h_{k-2}^2 h_k^2 D^{k-2}, and the final
/// value from the weighted edge formula.  Needs n >= 4.
MinorSequence leading_minors(const Mesh& mesh);

/// Gantmacher-Krein criterion: an irreducible tridiagonal matrix is totally
/// nonnegative iff its entries and leading principal minors are nonnegative.
/// Minor tolerances are scaled by the running product of diagonal magnitudes
/// since raw minors grow or decay exponentially with order.  Throws
/// reducible when an off-diagonal entry is zero.
TnResult is_totally_nonnegative(const TridiagonalSystem& system, double tol);

/// Exact 1-norm condition number ||A||_1 * ||A^{-1}||_1, the inverse norm
/// obtained column by column from m solves.
double one_norm_condition(const TridiagonalSystem& system);

} // namespace compactcubic
