#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "config.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/parallel.hpp"
#include "zetalab/transfer.hpp"
#include "zetalab/verify.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab::cli {

namespace {

constexpr const char* kSchemas = R"(Output schemas:
  spectrum    CSV  word,trace,length            one row per primitive class, ascending length
  zeta-eval   CSV  re_s,im_s,re_z,im_z,log_abs_z,tail_bound
                   row-major over the region grid (Re outer, Im inner); for the Ruelle
                   function the first two columns hold lambda
  zeta-zeros  CSV  re,im,radius,winding,min_modulus,method   or JSON certificate list
  hausdorff   JSON {surface, delta, delta_determinant, method_agreement}
  verify      JSON report with a top-level "pass" flag and per-check entries
With timestamps enabled, CSV output starts with a '# generated <UTC time>' line and
JSON output carries a leading "generated" key; --no-timestamp drops both.

Exit codes: 0 success (a failed verification still exits 0 with "pass": false),
1 invalid configuration or arguments, 2 invalid Schottky group,
3 numerical failure (ZeroOnContour, RefinementExhausted, ...).)";

struct Options {
    std::string config_path;
    std::string out_path;
    std::string format;
    unsigned threads = default_threads();
    bool no_timestamp = false;
};

std::string num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct Output {
    std::string csv_header;
    std::vector<std::string> csv_rows;
    std::optional<json> document;
};

std::string render(const Output& o, const Options& opt) {
    std::ostringstream s;
    if (o.document) {
        json doc = json::object();
        if (!opt.no_timestamp) doc["generated"] = utc_now();
        if (o.document->is_object()) {
            for (auto it = o.document->begin(); it != o.document->end(); ++it)
                doc[it.key()] = it.value();
        } else {
            doc["results"] = *o.document;
        }
        s << doc.dump(2) << "\n";
    } else {
        if (!opt.no_timestamp) s << "# generated " << utc_now() << "\n";
        s << o.csv_header << "\n";
        for (const auto& r : o.csv_rows) s << r << "\n";
    }
    return s.str();
}

std::string resolve_format(const Options& opt, const std::string& fallback,
                           std::initializer_list<const char*> allowed) {
    const std::string f = opt.format.empty() ? fallback : opt.format;
    for (const char* a : allowed) {
        if (f == a) return f;
    }
    throw ConfigError("--format", "format '" + f + "' is not available for this command");
}

TransferOptions transfer_options(const RunConfig& cfg) {
    TransferOptions t;
    t.basis_order = cfg.basis_order;
    return t;
}

LengthSpectrum spectrum_of(const SchottkyGroup& g, const RunConfig& cfg) {
    SpectrumOptions so;
    so.convention = cfg.convention;
    so.word_cap = cfg.word_cap;
    so.margin = cfg.margin;
    return length_spectrum(g, cfg.cutoff, so);
}

const Rect& require_region(const RunConfig& cfg) {
    if (!cfg.region) throw ConfigError("region", "missing (this command needs a region)");
    return *cfg.region;
}

double grid_coord(double lo, double hi, int steps, int i) {
    return steps == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (steps - 1);
}

/// Delta, or 0 for elementary groups where the limit set is two points.
double delta_or_zero(const SchottkyGroup& g, const RunConfig& cfg) {
    if (g.rank() < 2) return 0.0;
    return hausdorff_dimension(g, cfg.hausdorff_tol, transfer_options(cfg)).delta;
}

// ---------------------------------------------------------------------------

Output cmd_spectrum(const RunConfig& cfg, const Options& opt) {
    const std::string fmt = resolve_format(opt, "csv", {"csv", "json"});
    const SchottkyGroup g = build_surface(cfg);
    const LengthSpectrum spec = spectrum_of(g, cfg);
    Output o;
    if (fmt == "csv") {
        o.csv_header = "word,trace,length";
        for (const auto& p : spec.geodesics) {
            o.csv_rows.push_back(p.class_word.to_string() + "," + num(p.trace) + "," +
                                 num(p.length));
        }
    } else {
        json rows = json::array();
        for (const auto& p : spec.geodesics) {
            rows.push_back(
                {{"word", p.class_word.to_string()}, {"trace", p.trace}, {"length", p.length}});
        }
        o.document = json{{"surface", g.name()},
                          {"convention", to_string(cfg.convention)},
                          {"cutoff", cfg.cutoff},
                          {"geodesics", rows}};
    }
    return o;
}

struct GridValue {
    double log_abs = 0.0;
    double arg = 0.0;
    double tail = 0.0;
};

Output cmd_zeta_eval(const RunConfig& cfg, const Options& opt) {
    const std::string fmt = resolve_format(opt, "csv", {"csv", "json"});
    const SchottkyGroup g = build_surface(cfg);
    require_valid(g);
    const Rect& region = require_region(cfg);
    const TransferOptions topts = transfer_options(cfg);
    TransferOptions fine = topts;
    fine.basis_order = topts.basis_order + 8;

    std::optional<LengthSpectrum> spec;
    const bool ruelle = cfg.zeta_function == ZetaFunction::Ruelle;
    if (cfg.zeta_method == ZetaMethod::EulerProduct || ruelle) spec = spectrum_of(g, cfg);

    // Determinant factor with its N versus N+8 discrepancy as error estimate.
    auto det_factor = [&](cplx s, double& tail) {
        const LogDeterminant a = log_fredholm_det(g, s, topts);
        const LogDeterminant b = log_fredholm_det(g, s, fine);
        tail += std::abs(std::log(std::polar(std::exp(a.log_abs - b.log_abs), a.arg - b.arg)));
        return a;
    };

    const std::size_t nre = static_cast<std::size_t>(cfg.re_steps);
    const std::size_t nim = static_cast<std::size_t>(cfg.im_steps);
    const auto values = parallel_map(nre * nim, opt.threads, [&](std::size_t idx) {
        const int i = static_cast<int>(idx / nim), j = static_cast<int>(idx % nim);
        const cplx s(grid_coord(region.re_min, region.re_max, cfg.re_steps, i),
                     grid_coord(region.im_min, region.im_max, cfg.im_steps, j));
        GridValue v;
        if (cfg.zeta_method == ZetaMethod::EulerProduct) {
            const ZetaEvaluation z =
                ruelle ? ruelle_zeta(s, *spec, cfg.k_max) : selberg_zeta(s, *spec, cfg.k_max);
            v.log_abs = z.log_value.real();
            v.arg = std::arg(z.value);
            v.tail = z.tail_bound;
        } else if (!ruelle) {
            const LogDeterminant d = det_factor(s, v.tail);
            v.log_abs = d.log_abs;
            v.arg = d.arg;
        } else {
            // Z_X(λ) = Π_{p=1}^{p_max} det(I − L_{λ+p}); the omitted factors are
            // bounded through the Euler product of the first one left out.
            for (int p = 1; p <= cfg.p_max; ++p) {
                const LogDeterminant d = det_factor(s + static_cast<double>(p), v.tail);
                v.log_abs += d.log_abs;
                v.arg = std::remainder(v.arg + d.arg, 2.0 * M_PI);
            }
            const double lmin = spec->geodesics.empty() ? 1.0 : spec->geodesics.front().length;
            const ZetaEvaluation rest =
                selberg_zeta(s + static_cast<double>(cfg.p_max + 1), *spec, cfg.k_max);
            v.tail += (std::abs(rest.log_value) + rest.tail_bound) / (1.0 - std::exp(-lmin));
        }
        return std::pair{s, v};
    });

    Output o;
    if (fmt == "csv") {
        o.csv_header = "re_s,im_s,re_z,im_z,log_abs_z,tail_bound";
        for (const auto& [s, v] : values) {
            const cplx z = std::polar(std::exp(v.log_abs), v.arg);
            o.csv_rows.push_back(num(s.real()) + "," + num(s.imag()) + "," + num(z.real()) + "," +
                                 num(z.imag()) + "," + num(v.log_abs) + "," + num(v.tail));
        }
    } else {
        json rows = json::array();
        for (const auto& [s, v] : values) {
            const cplx z = std::polar(std::exp(v.log_abs), v.arg);
            rows.push_back({{"s", {s.real(), s.imag()}},
                            {"z", {z.real(), z.imag()}},
                            {"log_abs_z", v.log_abs},
                            {"tail_bound", std::isfinite(v.tail) ? json(v.tail) : json(nullptr)}});
        }
        o.document = json{{"surface", g.name()},
                          {"function", to_string(cfg.zeta_function)},
                          {"method", to_string(cfg.zeta_method)},
                          {"values", rows}};
    }
    return o;
}

Output cmd_zeta_zeros(const RunConfig& cfg, const Options& opt) {
    const std::string fmt = resolve_format(opt, "json", {"csv", "json"});
    const SchottkyGroup g = build_surface(cfg);
    require_valid(g);
    const Rect& region = require_region(cfg);
    const TransferOptions topts = transfer_options(cfg);
    LocateOptions lopts;
    lopts.grid = cfg.locate_grid;
    lopts.certificate_radius = cfg.certificate_radius;

    LocateResult res;
    if (cfg.zeta_function == ZetaFunction::Selberg) {
        res = locate_zeros(g, region, topts, lopts);
    } else {
        // Z_S has no zeros with Re s ≥ 1 > δ, so only the factors that reach
        // left of that line can vanish in the region.
        const int factors = std::max(1, static_cast<int>(std::ceil(1.0 - region.re_min)));
        const ComplexFunction f = [&](cplx z) {
            cplx v = 1.0;
            for (int p = 1; p <= factors; ++p)
                v *= fredholm_det(g, z + static_cast<double>(p), topts);
            return v;
        };
        lopts.method = "ArgumentPrinciple(product of " + std::to_string(factors) + " determinants)";
        res = locate_zeros(f, region, lopts);
    }

    Output o;
    if (fmt == "csv") {
        o.csv_header = "re,im,radius,winding,min_modulus,method";
        for (const auto& c : res.certificates) {
            o.csv_rows.push_back(num(c.center.real()) + "," + num(c.center.imag()) + "," +
                                 num(c.radius) + "," + std::to_string(c.winding) + "," +
                                 num(c.min_modulus_on_circle) + "," + c.method);
        }
    } else {
        json certs = json::array();
        for (const auto& c : res.certificates) certs.push_back(to_json(c));
        o.document = json{{"surface", g.name()},
                          {"function", to_string(cfg.zeta_function)},
                          {"region",
                           {{"re", {res.region.re_min, res.region.re_max}},
                            {"im", {res.region.im_min, res.region.im_max}}}},
                          {"region_winding", res.region_winding},
                          {"certificates", certs}};
    }
    return o;
}

Output cmd_hausdorff(const RunConfig& cfg, const Options& opt) {
    const std::string fmt = resolve_format(opt, "json", {"csv", "json"});
    const SchottkyGroup g = build_surface(cfg);
    const HausdorffResult h = hausdorff_dimension(g, cfg.hausdorff_tol, transfer_options(cfg));
    Output o;
    if (fmt == "csv") {
        o.csv_header = "delta,delta_determinant,method_agreement";
        o.csv_rows.push_back(num(h.delta) + "," + num(h.delta_determinant) + "," +
                             num(h.agreement));
    } else {
        o.document = json{{"surface", g.name()},
                          {"delta", h.delta},
                          {"delta_determinant", h.delta_determinant},
                          {"method_agreement", h.agreement}};
    }
    return o;
}

std::vector<cplx> default_factorization_points(double delta) {
    std::vector<cplx> pts;
    for (int i = 0; i < 10; ++i) pts.emplace_back(delta + 0.5 + 0.15 * i, -3.6 + 0.8 * i);
    return pts;
}

json verify_target(const std::string& target, const RunConfig& cfg, const Options& opt) {
    if (target == "selberg-zeros") {
        const SchottkyGroup g = build_surface(cfg);
        TopologicalOptions topts;
        topts.transfer = transfer_options(cfg);
        topts.radius = cfg.verify_radius;
        topts.threads = opt.threads;
        const TopologicalReport top = verify_topological_zeros(g, cfg.n_max, topts);
        json out{{"target", target}, {"topological", top.to_json()}};
        bool pass = top.all_pass();
        if (!top.elementary) {
            const LengthSpectrum spec = spectrum_of(g, cfg);
            const RuelleOrderReport ro = verify_ruelle_order(g, spec, -1.0, 4, topts);
            out["ruelle_order"] = ro.to_json();
            pass = pass && ro.pass;
        }
        out["pass"] = top.elementary ? json(nullptr) : json(pass);
        return out;
    }
    if (target == "factorization") {
        const SchottkyGroup g = build_surface(cfg);
        const LengthSpectrum spec = spectrum_of(g, cfg);
        const std::vector<cplx> pts =
            cfg.points.empty() ? default_factorization_points(delta_or_zero(g, cfg)) : cfg.points;
        return factorization_report(g, spec, pts, cfg.p_max, cfg.k_max);
    }
    if (target == "scattering") return scattering_report(50, 32, cfg.seed);
    if (target == "poisson") return poisson_report(cfg.seed);
    if (target == "ladder") return ladder_report();
    if (target == "flow") {
        json lie = lie_algebra_report();
        json flow = flow_report(100, cfg.seed);
        const bool pass = lie["pass"].get<bool>() && flow["pass"].get<bool>();
        return json{{"target", "flow"}, {"lie_algebra", lie}, {"flow", flow}, {"pass", pass}};
    }
    if (target == "dims") {
        const DimsRange& d = cfg.dims;
        return dims_report(d.genus_min, d.genus_max, d.chi_min, d.chi_max, d.n_max);
    }
    throw ConfigError("verify", "unknown target '" + target + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Selberg and Ruelle zeta functions of Schottky surfaces", "zetalab"};
    app.footer(kSchemas);
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_config) {
        auto* c = sub->add_option("--config,-c", opt.config_path, "YAML run configuration");
        if (needs_config) c->required();
        sub->add_option("--out,-o", opt.out_path, "Output file (default: standard output)");
        sub->add_option("--format,-f", opt.format, "csv or json (default depends on the command)");
        sub->add_option("--threads,-j", opt.threads,
                        "Worker threads (default: hardware parallelism)")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--no-timestamp", opt.no_timestamp, "Omit the timestamp header");
    };

    auto* spectrum =
        app.add_subcommand("spectrum", "Primitive length spectrum up to the cutoff (CSV)");
    auto* zeval = app.add_subcommand("zeta-eval", "Zeta values on a rectangular grid (CSV)");
    auto* zzeros =
        app.add_subcommand("zeta-zeros", "Certified zeros of the continued zeta in a region");
    auto* hausdorff = app.add_subcommand("hausdorff", "Hausdorff dimension by two methods (JSON)");
    auto* verify = app.add_subcommand("verify", "Verification reports (JSON)");
    for (auto* s : {spectrum, zeval, zzeros, hausdorff}) add_common(s, true);
    add_common(verify, false);
    std::string target;
    verify->add_option("target", target, "Report to produce")
        ->required()
        ->check(CLI::IsMember(
            {"selberg-zeros", "factorization", "scattering", "poisson", "ladder", "flow", "dims"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kConfigError;
    }

    try {
        const RunConfig cfg = opt.config_path.empty() ? RunConfig{} : load_config(opt.config_path);
        Output o;
        if (spectrum->parsed()) {
            o = cmd_spectrum(cfg, opt);
        } else if (zeval->parsed()) {
            o = cmd_zeta_eval(cfg, opt);
        } else if (zzeros->parsed()) {
            o = cmd_zeta_zeros(cfg, opt);
        } else if (hausdorff->parsed()) {
            o = cmd_hausdorff(cfg, opt);
        } else {
            resolve_format(opt, "json", {"json"});
            o.document = verify_target(target, cfg, opt);
        }
        const std::string text = render(o, opt);
        if (opt.out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(opt.out_path, std::ios::binary);
            if (!(f << text)) throw ConfigError("--out", "cannot write '" + opt.out_path + "'");
        }
        return kSuccess;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        if (e.kind() == "DiskOverlap" || e.kind() == "NonHyperbolicGenerator" ||
            e.kind() == "PairingMismatch") {
            return kInvalidGroup;
        }
        return e.kind() == "BadInput" ? kConfigError : kNumericalFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kNumericalFailure;
    }
}

}  // namespace zetalab::cli
