#include "compactcubic/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "compactcubic/driver.hpp"
#include "compactcubic/harness.hpp"
#include "compactcubic/tridiag.hpp"

namespace compactcubic {

namespace {

struct CommonOpts {
    std::string method = "compact4";
    std::string input;
    std::string out;
    std::optional<double> dleft, dright;
};

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) raise(errc::io_error, "cannot write '" + path + "'");
    return out;
}

/// Sink that is either a file or stdout.
struct OutStream {
    explicit OutStream(const std::string& path) {
        if (!path.empty()) {
            file = open_out(path);
            stream = &file;
        } else {
            stream = &std::cout;
        }
    }
    std::ofstream file;
    std::ostream* stream;
};

EdgeScheme scheme_for(Method method, const CommonOpts& opts) {
    switch (method) {
        case Method::spline_natural: return EdgeScheme::natural();
        case Method::spline_notaknot: return EdgeScheme::not_a_knot();
        case Method::spline_clamped: {
            if (!opts.dleft || !opts.dright)
                raise(errc::parse_error, "spline-clamped needs --dleft and --dright");
            return EdgeScheme::clamped(*opts.dleft, *opts.dright);
        }
        case Method::compact4: return EdgeScheme::compact4();
        case Method::compact_c: return EdgeScheme::compact_c();
    }
    raise(errc::unknown_function, "unknown method");
}

PiecewiseCubic fit(Method method, const Mesh& mesh, const std::vector<double>& values,
                   const CommonOpts& opts) {
    const EdgeScheme edges = scheme_for(method, opts);
    if (method == Method::compact4 || method == Method::compact_c)
        return compact_cubic(mesh, values, edges);
    return cubic_spline(mesh, values, edges);
}

int cmd_interp(const CommonOpts& opts, std::size_t eval_grid, const std::string& eval_out) {
    const Table table = read_csv(opts.input);
    if (!table.has_y) raise(errc::parse_error, "'" + opts.input + "' needs an x,y header");
    const Mesh mesh{table.x};
    const PiecewiseCubic p = fit(parse_method(opts.method), mesh, table.y, opts);

    OutStream out(opts.out);
    *out.stream << p.to_ppform().to_json(2) << '\n';

    if (eval_grid > 0) {
        std::string eval_path = eval_out;
        if (eval_path.empty()) {
            if (opts.out.empty())
                raise(errc::parse_error, "--eval-grid needs --eval-out (or --out to derive a name from)");
            eval_path = opts.out + ".eval.csv";
        }
        const double lo = std::min(mesh.front(), mesh.back());
        const double hi = std::max(mesh.front(), mesh.back());
        std::vector<double> xs(eval_grid), ps(eval_grid), dps(eval_grid);
        for (std::size_t i = 0; i < eval_grid; ++i) {
            const double x = i + 1 == eval_grid
                                 ? hi
                                 : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(eval_grid - 1);
            xs[i] = x;
            ps[i] = p.evaluate(x);
            dps[i] = p.evaluate_derivative(x);
        }
        std::ofstream ev = open_out(eval_path);
        write_eval_csv(ev, xs, ps, dps);
    }
    return 0;
}

int cmd_deriv(const CommonOpts& opts) {
    const Table table = read_csv(opts.input);
    if (!table.has_y) raise(errc::parse_error, "'" + opts.input + "' needs an x,y header");
    const Mesh mesh{table.x};
    const Method method = parse_method(opts.method);

    std::vector<double> slopes;
    if (method == Method::compact4 || method == Method::compact_c) {
        slopes = compact_first_derivatives(mesh, table.y, scheme_for(method, opts)).slopes;
    } else {
        slopes = fit(method, mesh, table.y, opts).slopes();
    }
    OutStream out(opts.out);
    write_deriv_csv(*out.stream, table.x, slopes);
    return 0;
}

int cmd_matrix_props(const CommonOpts& opts) {
    const Table table = read_csv(opts.input);
    const Mesh mesh{table.x};

    const MinorSequence minors = leading_minors(mesh);
    const TridiagonalSystem scaled = theorem_scaled_matrix(mesh);
    const TnResult tn = is_totally_nonnegative(scaled, 1e-10);
    const std::vector<double> zeros(mesh.size(), 0.0);
    const AssembledSystem sys = assemble(mesh, zeros, InteriorRule::compact, EdgeScheme::compact4());

    nlohmann::json j;
    j["n"] = mesh.n();
    j["minors"] = minors.values;
    j["totally_nonnegative"] = tn.totally_nonnegative;
    if (tn.first_violation) {
        j["first_violation"] = {{"kind", tn.first_violation->kind == TnViolation::Kind::entry ? "entry" : "minor"},
                                {"row", tn.first_violation->row},
                                {"col", tn.first_violation->col},
                                {"value", tn.first_violation->value}};
    }
    j["condition"] = one_norm_condition(sys.matrix);

    OutStream out(opts.out);
    *out.stream << j.dump(2) << '\n';
    return 0;
}

int cmd_convergence(const CommonOpts& opts, const std::string& function, const std::string& mesh_kind,
                    const std::string& n_list_text, std::uint64_t seed) {
    std::vector<std::size_t> n_list;
    std::stringstream ss(n_list_text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) n_list.push_back(static_cast<std::size_t>(std::stoul(tok)));
    if (n_list.empty()) raise(errc::parse_error, "--n-list is empty");

    TestFunction target;
    if (function == "custom") {
        const Table table = read_csv(opts.input);
        if (!table.has_y) raise(errc::parse_error, "'" + opts.input + "' needs an x,y header");
        target = custom_function(table.x, table.y);
    } else {
        target = parse_function(function);
    }

    const ConvergenceReport report =
        run_convergence(target, parse_mesh_kind(mesh_kind), seed, parse_method(opts.method), n_list);

    OutStream out(opts.out);
    write_report_csv(*out.stream, report);
    std::cerr << "slopes: value " << report.slope_value << ", deriv(nodes) " << report.slope_deriv_nodes
              << ", deriv(between) " << report.slope_deriv_between << '\n';
    return 0;
}

int cmd_cond_histogram(const CommonOpts& opts, std::size_t n, std::size_t trials, std::uint64_t seed,
                       std::size_t bins) {
    const CondHistogram hist = run_cond_histogram(n, trials, seed, bins);
    OutStream out(opts.out);
    write_histogram_csv(*out.stream, hist);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Compact cubic interpolants, cubic splines, and fourth-order compact derivatives"};
    app.require_subcommand(1);

    CommonOpts opts;
    const std::vector<std::string> methods = {"spline-natural", "spline-clamped", "spline-notaknot",
                                              "compact4", "compactc"};

    std::size_t eval_grid = 0;
    std::string eval_out;
    auto* interp = app.add_subcommand("interp", "Fit an interpolant and write its ppform as JSON");
    interp->add_option("--method", opts.method)->check(CLI::IsMember(methods));
    interp->add_option("--input", opts.input, "CSV with header x,y")->required();
    interp->add_option("--out", opts.out, "ppform JSON path (stdout if omitted)");
    interp->add_option("--eval-grid", eval_grid, "evaluate on this many equispaced points");
    interp->add_option("--eval-out", eval_out, "CSV path for the evaluations");
    interp->add_option("--dleft", opts.dleft, "left end slope (clamped)");
    interp->add_option("--dright", opts.dright, "right end slope (clamped)");

    auto* deriv = app.add_subcommand("deriv", "Write nodal first derivatives as CSV");
    deriv->add_option("--method", opts.method)->check(CLI::IsMember(methods));
    deriv->add_option("--input", opts.input, "CSV with header x,y")->required();
    deriv->add_option("--out", opts.out, "output CSV path (stdout if omitted)");
    deriv->add_option("--dleft", opts.dleft, "left end slope (clamped)");
    deriv->add_option("--dright", opts.dright, "right end slope (clamped)");

    auto* props = app.add_subcommand("matrix-props",
                                     "Minors, total-nonnegativity verdict, and condition of the mesh's "
                                     "compact matrix");
    props->add_option("--input", opts.input, "CSV with header x (or x,y; y ignored)")->required();
    props->add_option("--out", opts.out, "JSON path (stdout if omitted)");

    std::string function = "runge", mesh_kind = "uniform", n_list = "8,16,32,64,128";
    std::uint64_t seed = 1;
    auto* conv = app.add_subcommand("convergence", "Error-vs-n report for a target function");
    conv->add_option("--function", function)->check(CLI::IsMember({"runge", "recip-gamma", "signum", "custom"}));
    conv->add_option("--input", opts.input, "sample CSV for --function custom");
    conv->add_option("--mesh", mesh_kind)->check(CLI::IsMember({"uniform", "chebyshev", "random"}));
    conv->add_option("--method", opts.method)->check(CLI::IsMember(methods));
    conv->add_option("--n-list", n_list, "comma-separated subinterval counts");
    conv->add_option("--seed", seed, "seed for random meshes");
    conv->add_option("--out", opts.out, "report CSV path (stdout if omitted)");

    std::size_t hist_n = 100, trials = 1000, bins = 40;
    auto* hist = app.add_subcommand("cond-histogram",
                                    "log10 condition histogram of compact matrices on random meshes");
    hist->add_option("--n", hist_n, "mesh dimension (number of widths)");
    hist->add_option("--trials", trials);
    hist->add_option("--seed", seed);
    hist->add_option("--bins", bins);
    hist->add_option("--out", opts.out, "histogram CSV path (stdout if omitted)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (interp->parsed()) return cmd_interp(opts, eval_grid, eval_out);
        if (deriv->parsed()) return cmd_deriv(opts);
        if (props->parsed()) return cmd_matrix_props(opts);
        if (conv->parsed()) return cmd_convergence(opts, function, mesh_kind, n_list, seed);
        if (hist->parsed()) return cmd_cond_histogram(opts, hist_n, trials, seed, bins);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return (e.code() == errc::io_error || e.code() == errc::parse_error) ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace compactcubic
