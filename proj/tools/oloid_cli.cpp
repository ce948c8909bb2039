#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oloid/errors.hpp"
#include "oloid/io.hpp"
#include "oloid/sampling.hpp"
#include "oloid/svg_plot.hpp"
#include "oloid/verify.hpp"

namespace {

constexpr int kUsageError = 2;
constexpr int kVerifyFailed = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

oloid::ExtendedParam parse_lambda(const std::string& text) {
    const auto v = oloid::ExtendedParam::parse(text);
    if (!v) throw UsageError("invalid --lambda '" + text + "' (use a real number or inf)");
    return *v;
}

oloid::sampling::ObjectKind parse_kind(const std::string& text) {
    const auto k = oloid::sampling::parse_object(text);
    if (!k) {
        throw UsageError("unknown object '" + text +
                         "'; expected oloid, quadric, touching, regression, asymptotes, generators, "
                         "dev-touching or dev-regression");
    }
    return *k;
}

// Writes to the named file, or to stdout when the name is empty or "-".
void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open '" + path + "' for writing");
    out << content;
}

struct SampleArgs {
    std::string object;
    std::string lambda = "0.5";
    int n = 200;
    std::optional<double> t_min, t_max;
    double pole_eps = 1e-6;
    std::string format = "csv";
    std::string out;
};

int run_sample(const SampleArgs& a) {
    oloid::sampling::Request req;
    req.object = parse_kind(a.object);
    req.lambda = parse_lambda(a.lambda);
    req.n = a.n;
    req.t_min = a.t_min;
    req.t_max = a.t_max;
    req.pole_exclusion = a.pole_eps;
    const auto rows = oloid::sampling::sample(req);
    std::ostringstream buf;
    if (a.format == "json") {
        oloid::io::write_json(buf, rows);
    } else {
        oloid::io::write_csv(buf, rows, oloid::sampling::is_planar(req.object) ? 2 : 3);
    }
    emit(a.out, buf.str());
    return 0;
}

struct PlotArgs {
    std::vector<std::string> objects;
    std::string lambda = "0.5";
    std::string projection = "Z";
    std::string window;
    int n = 400;
    std::optional<double> t_min, t_max;
    std::string out;
};

// name[:lambda][:style], style being dashed, thick or dashed+thick.
oloid::plot::Series parse_series(const std::string& spec, const PlotArgs& a) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.empty() || parts.size() > 3) throw UsageError("bad object spec '" + spec + "'");
    auto is_style = [](const std::string& p) { return p.find_first_not_of("dashedthick+") == std::string::npos; };
    if (parts.size() == 2 && !parts[1].empty() && is_style(parts[1])) parts.insert(parts.begin() + 1, "");
    oloid::sampling::Request req;
    req.object = parse_kind(parts[0]);
    req.lambda = parse_lambda(parts.size() > 1 && !parts[1].empty() ? parts[1] : a.lambda);
    req.n = a.n;
    req.t_min = a.t_min;
    req.t_max = a.t_max;
    oloid::plot::Series s;
    if (parts.size() > 2) {
        std::stringstream st(parts[2]);
        for (std::string flag; std::getline(st, flag, '+');) {
            if (flag == "dashed") {
                s.style.dashed = true;
            } else if (flag == "thick") {
                s.style.thick = true;
            } else {
                throw UsageError("unknown style '" + flag + "' (dashed, thick)");
            }
        }
    }
    s.label = parts[0];
    if (oloid::sampling::uses_lambda(req.object)) s.label += " lambda=" + req.lambda.to_string();
    s.rows = oloid::sampling::sample(req);
    return s;
}

int run_plot(const PlotArgs& a) {
    const auto projection = oloid::plot::parse_projection(a.projection);
    if (!projection) throw UsageError("--projection must be X, Y, Z or plane");
    const bool planar = *projection == oloid::plot::Projection::Plane;
    const std::string window_text = a.window.empty() ? (planar ? "12" : "5") : a.window;
    const auto window = oloid::plot::parse_window(window_text);
    if (!window) throw UsageError("--window must be w > 0 or umin,umax,vmin,vmax");
    std::vector<oloid::plot::Series> series;
    for (const auto& spec : a.objects) {
        auto s = parse_series(spec, a);
        if (oloid::sampling::is_planar(*oloid::sampling::parse_object(spec.substr(0, spec.find(':')))) != planar) {
            throw UsageError("object '" + spec + "' cannot be drawn in projection " + a.projection);
        }
        series.push_back(std::move(s));
    }
    emit(a.out, oloid::plot::render_svg(series, *projection, *window));
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    std::string positional;
    std::optional<double> tol;
    std::uint64_t seed = 0;
};

int run_verify(const VerifyArgs& a) {
    const std::string suite = a.positional.empty() ? a.suite : a.positional;
    oloid::verify::Options options;
    options.tolerance = a.tol;
    options.seed = a.seed;
    std::vector<oloid::verify::SuiteReport> reports;
    if (suite == "all") {
        reports = oloid::verify::run_all(options);
    } else {
        const auto& names = oloid::verify::suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end()) {
            std::string list;
            for (const auto& n : names) list += " " + n;
            throw UsageError("unknown suite '" + suite + "'; available: all" + list);
        }
        reports.push_back(oloid::verify::run_suite(suite, options));
    }
    std::cout << oloid::verify::format_report(reports);
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    return ok ? 0 : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sample, plot and verify the extended oloid, its quadric family and developments"};
    app.require_subcommand(1);

    SampleArgs sa;
    auto* sample = app.add_subcommand("sample", "Sample an object to CSV or JSON");
    sample->add_option("object", sa.object, "oloid, quadric, touching, regression, asymptotes, generators, "
                                            "dev-touching, dev-regression")
        ->required();
    sample->add_option("--lambda", sa.lambda, "Family parameter (real or inf)");
    sample->add_option("--n", sa.n, "Number of grid points")->check(CLI::Range(2, 10'000'000));
    sample->add_option("--t-min", sa.t_min, "Start of the parameter range");
    sample->add_option("--t-max", sa.t_max, "End of the parameter range");
    sample->add_option("--pole-eps", sa.pole_eps, "Half-width of the excluded pole neighbourhoods");
    sample->add_option("--format", sa.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sample->add_option("--out", sa.out, "Output file (default stdout)");

    PlotArgs pa;
    auto* plot = app.add_subcommand("plot", "Draw objects into an SVG projection");
    plot->add_option("objects", pa.objects, "Object specs name[:lambda][:dashed|thick|dashed+thick]")->required();
    plot->add_option("--lambda", pa.lambda, "Default family parameter");
    plot->add_option("--projection", pa.projection, "X, Y, Z or plane");
    plot->add_option("--window", pa.window, "Half-width w, or umin,umax,vmin,vmax");
    plot->add_option("--n", pa.n, "Grid points per object")->check(CLI::Range(2, 10'000'000));
    plot->add_option("--t-min", pa.t_min, "Start of the parameter range");
    plot->add_option("--t-max", pa.t_max, "End of the parameter range");
    plot->add_option("--out", pa.out, "Output SVG file (default stdout)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("suite_name", va.positional, "Suite name or all");
    verify->add_option("--suite", va.suite, "Suite name or all");
    verify->add_option("--tol", va.tol, "Override every tolerance");
    verify->add_option("--seed", va.seed, "Jitter the sample grids with this seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*sample) return run_sample(sa);
        if (*plot) return run_plot(pa);
        return run_verify(va);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const oloid::OloidError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
}
