#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "compactcubic/errors.hpp"

namespace compactcubic {

/// A partition of an interval by n+1 distinct nodes tau_0..tau_n.  All
/// subinterval widths must share one sign; decreasing node sequences
/// (all-negative widths) are accepted as-is.  Immutable after construction.
class Mesh {
public:
    /// Builds a mesh from explicit nodes.  Throws non_monotone if any width
    /// is zero or of mixed sign, too_few_nodes if fewer than two nodes.
    explicit Mesh(std::vector<double> nodes);

    /// Equally spaced nodes a + k*(b-a)/n for k = 0..n.
    static Mesh uniform(double a, double b, std::size_t n);

    std::size_t n() const noexcept { return nodes_.size() - 1; }
    std::size_t size() const noexcept { return nodes_.size(); }

    const std::vector<double>& nodes() const noexcept { return nodes_; }
    double node(std::size_t k) const { return nodes_.at(k); }

    /// Width h_k = tau_k - tau_{k-1}, k = 1..n.
    double width(std::size_t k) const { return widths_.at(k - 1); }
    const std::vector<double>& widths() const noexcept { return widths_; }

    /// Reference step (tau_n - tau_0)/n, the mean width.  Used only to
    /// nondimensionalize the compact rows; it cancels from solved systems.
    double ref_step() const noexcept { return ref_step_; }

    /// Local width ratios (r, s) = (h_k, h_{k+1})/ref_step flanking the
    /// interior node tau_k, 1 <= k <= n-1.
    std::pair<double, double> local_ratios(std::size_t k) const;

    double front() const noexcept { return nodes_.front(); }
    double back() const noexcept { return nodes_.back(); }

    /// True when every width equals ref_step to within rel_tol.
    bool is_uniform(double rel_tol = 1e-12) const noexcept;

private:
    std::vector<double> nodes_;
    std::vector<double> widths_;
    double ref_step_;
};

} // namespace compactcubic
