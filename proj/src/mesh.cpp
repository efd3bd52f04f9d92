#include "compactcubic/mesh.hpp"

#include <cmath>
#include <string>

namespace compactcubic {

Mesh::Mesh(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 2)
        raise(errc::too_few_nodes, "mesh needs at least 2 nodes, got " + std::to_string(nodes_.size()));
    widths_.resize(nodes_.size() - 1);
    for (std::size_t k = 1; k < nodes_.size(); ++k) {
        const double h = nodes_[k] - nodes_[k - 1];
        if (h == 0.0 || !std::isfinite(h))
            raise(errc::non_monotone, "zero or non-finite width between nodes " + std::to_string(k - 1) +
                                          " and " + std::to_string(k));
        if (std::signbit(h) != std::signbit(nodes_[1] - nodes_[0]))
            raise(errc::non_monotone, "mesh widths change sign at node " + std::to_string(k));
        widths_[k - 1] = h;
    }
    ref_step_ = (nodes_.back() - nodes_.front()) / static_cast<double>(n());
}

Mesh Mesh::uniform(double a, double b, std::size_t n) {
    if (a == b) raise(errc::degenerate_interval, "uniform mesh needs a != b");
    if (n < 1) raise(errc::too_few_nodes, "uniform mesh needs n >= 1");
    std::vector<double> nodes(n + 1);
    const double h = (b - a) / static_cast<double>(n);
    for (std::size_t k = 0; k <= n; ++k) nodes[k] = a + static_cast<double>(k) * h;
    return Mesh(std::move(nodes));
}

std::pair<double, double> Mesh::local_ratios(std::size_t k) const {
    if (k < 1 || k > n() - 1)
        raise(errc::index_out_of_range, "interior index " + std::to_string(k) + " not in [1, " +
                                            std::to_string(n() - 1) + "]");
    return {widths_[k - 1] / ref_step_, widths_[k] / ref_step_};
}

bool Mesh::is_uniform(double rel_tol) const noexcept {
    for (double h : widths_)
        if (std::abs(h - ref_step_) > rel_tol * std::abs(ref_step_)) return false;
    return true;
}

} // namespace compactcubic
