#include "compactcubic/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <ostream>
#include <sstream>

#include "compactcubic/tridiag.hpp"

namespace compactcubic {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double runge(double x) { return 1.0 / (1.0 + 25.0 * x * x); }
double runge_prime(double x) {
    const double q = 1.0 + 25.0 * x * x;
    return -50.0 * x / (q * q);
}

/// splitmix64; fixed algorithm so seeded runs are reproducible bit for bit.
std::uint64_t next_u64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct SlopeFit {
    double slope = std::numeric_limits<double>::quiet_NaN();
};

/// Log-log slope of err vs h over rows whose error clears the floor.  Only
/// the finest four qualifying rows enter the fit; coarser rows are usually
/// pre-asymptotic.
double fit_slope(const std::vector<double>& hs, const std::vector<double>& errs, double floor) {
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        if (errs[i] > floor && std::isfinite(errs[i])) {
            lx.push_back(std::log(hs[i]));
            ly.push_back(std::log(errs[i]));
        }
    }
    if (lx.size() > 4) {
        lx.erase(lx.begin(), lx.end() - 4);
        ly.erase(ly.begin(), ly.end() - 4);
    }
    if (lx.size() < 2) return std::numeric_limits<double>::quiet_NaN();
    const double n = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

Method parse_method(const std::string& token) {
    if (token == "spline-natural") return Method::spline_natural;
    if (token == "spline-clamped") return Method::spline_clamped;
    if (token == "spline-notaknot") return Method::spline_notaknot;
    if (token == "compact4") return Method::compact4;
    if (token == "compactc") return Method::compact_c;
    raise(errc::unknown_function, "unknown method '" + token + "'");
}

std::string method_token(Method method) {
    switch (method) {
        case Method::spline_natural: return "spline-natural";
        case Method::spline_clamped: return "spline-clamped";
        case Method::spline_notaknot: return "spline-notaknot";
        case Method::compact4: return "compact4";
        case Method::compact_c: return "compactc";
    }
    return "?";
}

MeshKind parse_mesh_kind(const std::string& token) {
    if (token == "uniform") return MeshKind::uniform;
    if (token == "chebyshev") return MeshKind::chebyshev;
    if (token == "random") return MeshKind::random;
    raise(errc::unknown_function, "unknown mesh kind '" + token + "'");
}

std::string mesh_kind_token(MeshKind kind) {
    switch (kind) {
        case MeshKind::uniform: return "uniform";
        case MeshKind::chebyshev: return "chebyshev";
        case MeshKind::random: return "random";
    }
    return "?";
}

TestFunction runge_function() { return {"runge", -1.0, 1.0, runge, runge_prime, 0.0}; }

double digamma(double x) {
    // Recurrence up to the asymptotic region, then the Bernoulli series.
    double acc = 0.0;
    while (x < 16.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    const double series =
        inv2 * (1.0 / 12.0 -
                inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0)))));
    return acc + std::log(x) - 0.5 * inv - series;
}

TestFunction recip_gamma_function() {
    auto f = [](double x) { return 1.0 / std::tgamma(x); };
    auto df = [](double x) { return -digamma(x) / std::tgamma(x); };
    return {"recip_gamma", 1.0, 3.0, f, df, 0.0};
}

TestFunction signum_function() {
    auto f = [](double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); };
    auto df = [](double) { return 0.0; };
    // No order theory applies at the jump; skip one reference step each side.
    return {"signum", -1.0, 1.0, f, df, 1.0};
}

TestFunction parse_function(const std::string& token) {
    if (token == "runge") return runge_function();
    if (token == "recip-gamma" || token == "recip_gamma") return recip_gamma_function();
    if (token == "signum") return signum_function();
    raise(errc::unknown_function, "unknown function '" + token + "'");
}

TestFunction custom_function(const std::vector<double>& xs, const std::vector<double>& ys) {
    auto reference = std::make_shared<PiecewiseCubic>(
        cubic_spline(Mesh(xs), ys, EdgeScheme::not_a_knot()));
    TestFunction t;
    t.name = "custom";
    t.a = xs.front();
    t.b = xs.back();
    t.f = [reference](double x) { return reference->evaluate(x); };
    t.df = [reference](double x) { return reference->evaluate_derivative(x); };
    return t;
}

double uniform01(std::uint64_t& state) {
    return static_cast<double>(next_u64(state) >> 11) * 0x1.0p-53;
}

Mesh make_mesh(MeshKind kind, double a, double b, std::size_t n, std::uint64_t& rng_state) {
    switch (kind) {
        case MeshKind::uniform: return Mesh::uniform(a, b, n);
        case MeshKind::chebyshev: {
            const double mid = 0.5 * (a + b), rad = 0.5 * (b - a);
            std::vector<double> nodes(n + 1);
            for (std::size_t j = 0; j <= n; ++j)
                nodes[j] = mid + rad * std::cos(M_PI * static_cast<double>(j) / static_cast<double>(n));
            return Mesh(std::move(nodes)); // decreasing when b > a
        }
        case MeshKind::random: {
            std::vector<double> nodes(n + 1);
            nodes[0] = 0.0;
            for (std::size_t k = 1; k <= n; ++k) {
                double w = uniform01(rng_state);
                while (w == 0.0) w = uniform01(rng_state);
                nodes[k] = nodes[k - 1] + w;
            }
            const double span = nodes[n];
            for (std::size_t k = 0; k <= n; ++k) nodes[k] = a + (b - a) * (nodes[k] / span);
            nodes[n] = b;
            return Mesh(std::move(nodes));
        }
    }
    raise(errc::unknown_function, "unknown mesh kind");
}

ConvergenceReport run_convergence(const TestFunction& target, MeshKind mesh_kind, std::uint64_t seed,
                                  Method method, const std::vector<std::size_t>& n_list) {
    for (std::size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i] <= n_list[i - 1]) raise(errc::index_out_of_range, "n list must be ascending");

    ConvergenceReport report;
    std::uint64_t rng = seed;
    double data_scale = 1.0;

    for (std::size_t n : n_list) {
        const Mesh mesh = make_mesh(mesh_kind, target.a, target.b, n, rng);
        std::vector<double> values(mesh.size());
        for (std::size_t k = 0; k < mesh.size(); ++k) values[k] = target.f(mesh.node(k));
        for (double v : values) data_scale = std::max(data_scale, std::abs(v));

        PiecewiseCubic interp = [&] {
            switch (method) {
                case Method::spline_natural: return cubic_spline(mesh, values, EdgeScheme::natural());
                case Method::spline_clamped:
                    return cubic_spline(mesh, values,
                                        EdgeScheme::clamped(target.df(mesh.front()), target.df(mesh.back())));
                case Method::spline_notaknot: return cubic_spline(mesh, values, EdgeScheme::not_a_knot());
                case Method::compact4: return compact_cubic(mesh, values, EdgeScheme::compact4());
                case Method::compact_c: return compact_cubic(mesh, values, EdgeScheme::compact_c());
            }
            raise(errc::unknown_function, "unknown method");
        }();

        const InteriorRule rule = (method == Method::compact4 || method == Method::compact_c)
                                      ? InteriorRule::compact
                                      : InteriorRule::spline;
        const EdgeScheme edges = [&] {
            switch (method) {
                case Method::spline_natural: return EdgeScheme::natural();
                case Method::spline_clamped:
                    return EdgeScheme::clamped(target.df(mesh.front()), target.df(mesh.back()));
                case Method::spline_notaknot: return EdgeScheme::not_a_knot();
                case Method::compact4: return EdgeScheme::compact4();
                case Method::compact_c: return EdgeScheme::compact_c();
            }
            raise(errc::unknown_function, "unknown method");
        }();
        const double condition = one_norm_condition(assemble(mesh, values, rule, edges).matrix);

        const double exclude = target.exclusion_halfwidth_steps * std::abs(mesh.ref_step());
        const auto excluded = [&](double x) { return exclude > 0.0 && std::abs(x) <= exclude; };

        ConvergenceRow row;
        row.n = n;
        row.mesh_kind = mesh_kind_token(mesh_kind);
        row.condition = condition;
        row.err_value = 0.0;
        row.err_deriv_nodes = 0.0;
        row.err_deriv_between = 0.0;
        for (std::size_t k = 0; k < mesh.size(); ++k) {
            const double x = mesh.node(k);
            if (excluded(x)) continue;
            row.err_deriv_nodes = std::max(row.err_deriv_nodes,
                                           std::abs(interp.slopes()[k] - target.df(x)));
        }
        // 10 probes per subinterval, strictly between the nodes.
        for (std::size_t k = 1; k <= mesh.n(); ++k) {
            for (int j = 0; j < 10; ++j) {
                const double x = mesh.node(k - 1) + mesh.width(k) * ((static_cast<double>(j) + 0.5) / 10.0);
                if (excluded(x)) continue;
                row.err_value = std::max(row.err_value, std::abs(interp.evaluate(x) - target.f(x)));
                row.err_deriv_between =
                    std::max(row.err_deriv_between, std::abs(interp.evaluate_derivative(x) - target.df(x)));
            }
        }
        report.rows.push_back(std::move(row));
    }

    std::vector<double> hs, ev, edn, edb;
    for (const auto& row : report.rows) {
        hs.push_back(std::abs(target.b - target.a) / static_cast<double>(row.n));
        ev.push_back(row.err_value);
        edn.push_back(row.err_deriv_nodes);
        edb.push_back(row.err_deriv_between);
    }
    const double floor = 100.0 * kEps * data_scale;
    report.slope_value = fit_slope(hs, ev, floor);
    report.slope_deriv_nodes = fit_slope(hs, edn, floor);
    report.slope_deriv_between = fit_slope(hs, edb, floor);
    return report;
}

CondHistogram run_cond_histogram(std::size_t n, std::size_t trials, std::uint64_t seed, std::size_t bins) {
    if (n < 4) raise(errc::too_few_nodes, "condition histogram needs n >= 4");
    if (trials < 1) raise(errc::index_out_of_range, "need at least one trial");
    if (bins < 1) raise(errc::index_out_of_range, "need at least one bin");

    std::uint64_t rng = seed;
    std::vector<double> log_conds(trials);
    const std::vector<double> zeros(n + 1, 0.0);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<double> nodes(n + 1);
        nodes[0] = 0.0;
        for (std::size_t k = 1; k <= n; ++k) {
            double w = uniform01(rng);
            while (w == 0.0) w = uniform01(rng);
            nodes[k] = nodes[k - 1] + w;
        }
        const Mesh mesh{std::move(nodes)};
        const AssembledSystem sys = assemble(mesh, zeros, InteriorRule::compact, EdgeScheme::compact4());
        log_conds[t] = std::log10(one_norm_condition(sys.matrix));
    }

    CondHistogram hist;
    hist.samples = trials;
    hist.seed = seed;
    const auto [lo_it, hi_it] = std::minmax_element(log_conds.begin(), log_conds.end());
    double lo = *lo_it, hi = *hi_it;
    if (hi == lo) hi = lo + 1.0;
    hist.bin_edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i)
        hist.bin_edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
    hist.counts.assign(bins, 0);
    for (double v : log_conds) {
        auto idx = static_cast<std::size_t>((v - lo) / (hi - lo) * static_cast<double>(bins));
        if (idx >= bins) idx = bins - 1;
        ++hist.counts[idx];
    }
    return hist;
}

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

double parse_field(const std::string& field, std::size_t line_no) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    while (first != last && (*first == ' ' || *first == '\t')) ++first;
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last)
        raise(errc::parse_error, "line " + std::to_string(line_no) + ": cannot parse number '" + field + "'");
    return value;
}

} // namespace

Table read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::io_error, "cannot open '" + path + "'");
    Table table;
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!saw_header) {
            if (line == "x,y")
                table.has_y = true;
            else if (line == "x")
                table.has_y = false;
            else
                raise(errc::parse_error, "line 1: expected header 'x' or 'x,y', got '" + line + "'");
            saw_header = true;
            continue;
        }
        const auto comma = line.find(',');
        if (table.has_y) {
            if (comma == std::string::npos)
                raise(errc::parse_error, "line " + std::to_string(line_no) + ": expected two fields");
            table.x.push_back(parse_field(line.substr(0, comma), line_no));
            table.y.push_back(parse_field(line.substr(comma + 1), line_no));
        } else {
            if (comma != std::string::npos)
                raise(errc::parse_error, "line " + std::to_string(line_no) + ": expected one field");
            table.x.push_back(parse_field(line, line_no));
        }
    }
    if (!saw_header) raise(errc::parse_error, "empty file '" + path + "'");
    if (table.x.size() < 2)
        raise(errc::parse_error, "'" + path + "' holds fewer than two data rows");
    return table;
}

void write_xy_csv(std::ostream& out, const std::vector<double>& xs, const std::vector<double>& ys) {
    out << "x,y\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << format_double(xs[i]) << ',' << format_double(ys[i]) << '\n';
}

void write_deriv_csv(std::ostream& out, const std::vector<double>& xs, const std::vector<double>& ds) {
    out << "x,dy\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << format_double(xs[i]) << ',' << format_double(ds[i]) << '\n';
}

void write_eval_csv(std::ostream& out, const std::vector<double>& xs, const std::vector<double>& ps,
                    const std::vector<double>& dps) {
    out << "x,y,dy\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << format_double(xs[i]) << ',' << format_double(ps[i]) << ',' << format_double(dps[i]) << '\n';
}

void write_report_csv(std::ostream& out, const ConvergenceReport& report) {
    out << "n,mesh_kind,err_value,err_deriv_nodes,err_deriv_between,cond\n";
    for (const auto& row : report.rows)
        out << row.n << ',' << row.mesh_kind << ',' << format_double(row.err_value) << ','
            << format_double(row.err_deriv_nodes) << ',' << format_double(row.err_deriv_between) << ','
            << format_double(row.condition) << '\n';
}

void write_histogram_csv(std::ostream& out, const CondHistogram& hist) {
    out << "bin_left,bin_right,count\n";
    for (std::size_t i = 0; i < hist.counts.size(); ++i)
        out << format_double(hist.bin_edges[i]) << ',' << format_double(hist.bin_edges[i + 1]) << ','
            << hist.counts[i] << '\n';
}

} // namespace compactcubic
