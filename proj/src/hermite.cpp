#include "compactcubic/hermite.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace compactcubic {

BaryWeights bary_weights(double h) {
    if (h == 0.0) raise(errc::zero_width, "barycentric weights need h != 0");
    const double h2 = h * h;
    const double h3 = h2 * h;
    return {-2.0 / h3, 1.0 / h2, 2.0 / h3, 1.0 / h2};
}

double PpForm::evaluate(double t) const {
    if (breaks.size() < 2) raise(errc::too_few_nodes, "ppform needs at least one piece");
    const bool asc = breaks.back() > breaks.front();
    const double lo = asc ? breaks.front() : breaks.back();
    const double hi = asc ? breaks.back() : breaks.front();
    if (t < lo || t > hi) raise(errc::out_of_domain, "ppform evaluation outside domain");
    std::size_t k = 0;
    if (asc) {
        auto it = std::upper_bound(breaks.begin(), breaks.end(), t);
        k = static_cast<std::size_t>(std::distance(breaks.begin(), it));
        k = (k == 0) ? 0 : std::min(k - 1, pieces.size() - 1);
    } else {
        auto it = std::upper_bound(breaks.begin(), breaks.end(), t, std::greater<double>());
        k = static_cast<std::size_t>(std::distance(breaks.begin(), it));
        k = (k == 0) ? 0 : std::min(k - 1, pieces.size() - 1);
    }
    const double u = t - breaks[k];
    const Coefs& p = pieces[k];
    return p.a + u * (p.b + u * (p.c + u * p.d));
}

std::string PpForm::to_json(int indent) const {
    nlohmann::json j;
    j["breaks"] = breaks;
    auto coefs = nlohmann::json::array();
    for (const Coefs& p : pieces) coefs.push_back({p.a, p.b, p.c, p.d});
    j["coefs"] = std::move(coefs);
    return j.dump(indent);
}

PiecewiseCubic::PiecewiseCubic(Mesh mesh, std::vector<double> values, std::vector<double> slopes)
    : mesh_(std::move(mesh)), values_(std::move(values)), slopes_(std::move(slopes)) {
    if (values_.size() != mesh_.size() || slopes_.size() != mesh_.size())
        raise(errc::index_out_of_range, "values and slopes must have one entry per node");
    ascending_ = mesh_.back() > mesh_.front();
}

std::size_t PiecewiseCubic::piece_index(double t) const {
    const auto& nodes = mesh_.nodes();
    const double lo = ascending_ ? nodes.front() : nodes.back();
    const double hi = ascending_ ? nodes.back() : nodes.front();
    if (t < lo || t > hi) raise(errc::out_of_domain, "evaluation point outside [tau_0, tau_n]");
    // A point equal to an interior node belongs to the right piece.
    std::size_t k;
    if (ascending_) {
        auto it = std::upper_bound(nodes.begin(), nodes.end(), t);
        k = static_cast<std::size_t>(std::distance(nodes.begin(), it));
    } else {
        auto it = std::upper_bound(nodes.begin(), nodes.end(), t, std::greater<double>());
        k = static_cast<std::size_t>(std::distance(nodes.begin(), it));
    }
    if (k == 0) k = 1;
    return std::min(k - 1, mesh_.n() - 1);
}

double PiecewiseCubic::evaluate(double t) const {
    const std::size_t k = piece_index(t);
    const double h = mesh_.width(k + 1);
    const double u = (t - mesh_.node(k)) / h;
    const double om = 1.0 - u;
    // Hermite basis: values get (1+2u)(1-u)^2 and u^2(3-2u), slopes get
    // h*u(1-u)^2 and h*u^2(u-1).
    return values_[k] * (1.0 + 2.0 * u) * om * om + slopes_[k] * h * u * om * om +
           values_[k + 1] * u * u * (3.0 - 2.0 * u) + slopes_[k + 1] * h * u * u * (u - 1.0);
}

double PiecewiseCubic::evaluate_derivative(double t) const {
    const std::size_t k = piece_index(t);
    const double h = mesh_.width(k + 1);
    const double u = (t - mesh_.node(k)) / h;
    return (6.0 * u * u - 6.0 * u) * (values_[k] - values_[k + 1]) / h +
           slopes_[k] * (3.0 * u * u - 4.0 * u + 1.0) + slopes_[k + 1] * (3.0 * u * u - 2.0 * u);
}

double PiecewiseCubic::evaluate_second_derivative(double t, Side side) const {
    std::size_t k = piece_index(t);
    // piece_index puts a node into the piece to its right; honor the
    // requested side at nodes.
    if (side == Side::left) {
        if (t == mesh_.node(0)) raise(errc::side_unavailable, "no piece to the left of tau_0");
        if (t == mesh_.node(k)) k -= 1;
    } else if (t == mesh_.node(mesh_.n())) {
        raise(errc::side_unavailable, "no piece to the right of tau_n");
    }
    const double h = mesh_.width(k + 1);
    const double u = (t - mesh_.node(k)) / h;
    return ((12.0 * u - 6.0) * (values_[k] - values_[k + 1])) / (h * h) +
           ((6.0 * u - 4.0) * slopes_[k] + (6.0 * u - 2.0) * slopes_[k + 1]) / h;
}

double PiecewiseCubic::c2_jump(std::size_t k) const {
    if (k < 1 || k > mesh_.n() - 1)
        raise(errc::index_out_of_range, "c2 jump defined at interior nodes only");
    const double t = mesh_.node(k);
    return evaluate_second_derivative(t, Side::right) - evaluate_second_derivative(t, Side::left);
}

PpForm PiecewiseCubic::to_ppform() const {
    PpForm pp;
    pp.breaks = mesh_.nodes();
    pp.pieces.resize(mesh_.n());
    for (std::size_t k = 0; k < mesh_.n(); ++k) {
        const double h = mesh_.width(k + 1);
        const double delta = (values_[k + 1] - values_[k]) / h;
        pp.pieces[k].a = values_[k];
        pp.pieces[k].b = slopes_[k];
        pp.pieces[k].c = (3.0 * delta - 2.0 * slopes_[k] - slopes_[k + 1]) / h;
        pp.pieces[k].d = (slopes_[k] + slopes_[k + 1] - 2.0 * delta) / (h * h);
    }
    return pp;
}

} // namespace compactcubic
