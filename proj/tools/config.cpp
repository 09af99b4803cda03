#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "zetalab/errors.hpp"

namespace zetalab::cli {

namespace {

std::string join(const std::string& parent, const std::string& key) {
    return parent.empty() ? key : parent + "." + key;
}

double as_double(const YAML::Node& n, const std::string& field) {
    try {
        const double v = n.as<double>();
        if (!std::isfinite(v)) throw ConfigError(field, "must be finite");
        return v;
    } catch (const YAML::Exception&) {
        throw ConfigError(field, "expected a number");
    }
}

long long as_integer(const YAML::Node& n, const std::string& field) {
    try {
        return n.as<long long>();
    } catch (const YAML::Exception&) {
        throw ConfigError(field, "expected an integer");
    }
}

int positive_int(const YAML::Node& n, const std::string& field) {
    const long long v = as_integer(n, field);
    if (v < 1 || v > 1'000'000'000) throw ConfigError(field, "must be a positive integer");
    return static_cast<int>(v);
}

double positive_double(const YAML::Node& n, const std::string& field) {
    const double v = as_double(n, field);
    if (!(v > 0.0)) throw ConfigError(field, "must be positive");
    return v;
}

std::string as_string(const YAML::Node& n, const std::string& field) {
    if (!n.IsScalar()) throw ConfigError(field, "expected a string");
    return n.as<std::string>();
}

void reject_unknown(const YAML::Node& map, const std::string& path,
                    const std::set<std::string>& known) {
    if (!map.IsMap()) throw ConfigError(path.empty() ? "<root>" : path, "expected a mapping");
    for (const auto& kv : map) {
        const std::string key = kv.first.as<std::string>();
        if (!known.count(key)) throw ConfigError(join(path, key), "unknown key");
    }
}

std::vector<double> number_list(const YAML::Node& n, const std::string& field) {
    if (!n.IsSequence()) throw ConfigError(field, "expected a list of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < n.size(); ++i) {
        out.push_back(as_double(n[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::pair<double, double> interval(const YAML::Node& n, const std::string& field) {
    const auto v = number_list(n, field);
    if (v.size() != 2 || !(v[0] < v[1])) {
        throw ConfigError(field, "expected [min, max] with min < max");
    }
    return {v[0], v[1]};
}

Disk parse_disk(const YAML::Node& n, const std::string& field) {
    const auto v = number_list(n, field);
    if (v.size() != 2 || !(v[1] > 0.0)) throw ConfigError(field, "expected [center, radius > 0]");
    return {v[0], v[1]};
}

SurfaceSpec parse_surface(const YAML::Node& n) {
    const std::string path = "surface";
    reject_unknown(
        n, path,
        {"preset", "lengths", "length", "funnels", "twist", "trace", "generators", "name"});
    SurfaceSpec s;
    const bool has_preset = static_cast<bool>(n["preset"]);
    const bool has_generators = static_cast<bool>(n["generators"]);
    if (has_preset == has_generators) {
        throw ConfigError(path, "give exactly one of 'preset' or 'generators'");
    }
    if (n["name"]) s.name = as_string(n["name"], join(path, "name"));

    if (has_generators) {
        const YAML::Node gens = n["generators"];
        const std::string gpath = join(path, "generators");
        if (!gens.IsSequence() || gens.size() == 0) {
            throw ConfigError(gpath, "expected a non-empty list");
        }
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const std::string item = gpath + "[" + std::to_string(i) + "]";
            reject_unknown(gens[i], item, {"matrix", "disks"});
            if (!gens[i]["matrix"]) throw ConfigError(join(item, "matrix"), "missing");
            if (!gens[i]["disks"]) throw ConfigError(join(item, "disks"), "missing");
            const auto m = number_list(gens[i]["matrix"], join(item, "matrix"));
            if (m.size() != 4) throw ConfigError(join(item, "matrix"), "expected [a, b, c, d]");
            try {
                s.generators.push_back(MoebiusMap::from_entries(m[0], m[1], m[2], m[3]));
            } catch (const BadInput& e) {
                throw ConfigError(join(item, "matrix"), e.what());
            }
            const YAML::Node d = gens[i]["disks"];
            const std::string dpath = join(item, "disks");
            if (!d.IsSequence() || d.size() != 2) {
                throw ConfigError(dpath,
                                  "expected [[center, radius] of D_-j, [center, radius] of D_j]");
            }
            s.disks.emplace_back(parse_disk(d[0], dpath + "[0]"), parse_disk(d[1], dpath + "[1]"));
        }
        return s;
    }

    s.preset = as_string(n["preset"], join(path, "preset"));
    if (s.preset == "pair-of-pants") {
        if (!n["lengths"]) throw ConfigError(join(path, "lengths"), "missing (three lengths)");
        s.lengths = number_list(n["lengths"], join(path, "lengths"));
        if (s.lengths.size() != 3)
            throw ConfigError(join(path, "lengths"), "expected three lengths");
    } else if (s.preset == "symmetric-funnels") {
        if (!n["funnels"]) throw ConfigError(join(path, "funnels"), "missing");
        if (!n["length"]) throw ConfigError(join(path, "length"), "missing");
        s.funnels = positive_int(n["funnels"], join(path, "funnels"));
        if (s.funnels < 2) throw ConfigError(join(path, "funnels"), "must be at least 2");
        s.lengths = {positive_double(n["length"], join(path, "length"))};
    } else if (s.preset == "funneled-torus") {
        if (!n["lengths"]) throw ConfigError(join(path, "lengths"), "missing (two lengths)");
        s.lengths = number_list(n["lengths"], join(path, "lengths"));
        if (s.lengths.size() != 2) throw ConfigError(join(path, "lengths"), "expected two lengths");
        if (n["twist"]) s.twist = as_double(n["twist"], join(path, "twist"));
    } else if (s.preset == "cylinder") {
        if (n["trace"] && n["length"]) {
            throw ConfigError(path, "give either 'length' or 'trace' for a cylinder");
        }
        if (n["trace"]) {
            s.trace = as_double(n["trace"], join(path, "trace"));
            if (!(*s.trace > 2.0)) throw ConfigError(join(path, "trace"), "must exceed 2");
        } else if (n["length"]) {
            s.lengths = {positive_double(n["length"], join(path, "length"))};
        } else {
            throw ConfigError(join(path, "length"), "missing (or give 'trace')");
        }
    } else {
        throw ConfigError(join(path, "preset"),
                          "unknown preset '" + s.preset +
                              "' (pair-of-pants, symmetric-funnels, funneled-torus, cylinder)");
    }
    for (std::size_t i = 0; i < s.lengths.size(); ++i) {
        if (!(s.lengths[i] > 0.0)) {
            throw ConfigError(join(path, "lengths") + "[" + std::to_string(i) + "]",
                              "must be positive");
        }
    }
    return s;
}

}  // namespace

RunConfig parse_config(const YAML::Node& root) {
    RunConfig cfg;
    if (!root || root.IsNull()) return cfg;
    reject_unknown(
        root, "",
        {"surface", "convention", "numerics", "zeta", "region", "grid", "locate", "verify"});
    if (root["surface"]) cfg.surface = parse_surface(root["surface"]);
    if (root["convention"]) {
        try {
            cfg.convention = convention_from_string(as_string(root["convention"], "convention"));
        } catch (const BadInput& e) {
            throw ConfigError("convention", "expected 'oriented' or 'unoriented'");
        }
    }

    if (const YAML::Node n = root["numerics"]) {
        reject_unknown(
            n, "numerics",
            {"k_max", "p_max", "basis_order", "word_cap", "cutoff", "margin", "hausdorff_tol"});
        if (n["k_max"]) cfg.k_max = positive_int(n["k_max"], "numerics.k_max");
        if (n["p_max"]) cfg.p_max = positive_int(n["p_max"], "numerics.p_max");
        if (n["basis_order"])
            cfg.basis_order = positive_int(n["basis_order"], "numerics.basis_order");
        if (n["word_cap"]) {
            const long long v = as_integer(n["word_cap"], "numerics.word_cap");
            if (v < 1) throw ConfigError("numerics.word_cap", "must be a positive integer");
            cfg.word_cap = static_cast<std::uint64_t>(v);
        }
        if (n["cutoff"]) cfg.cutoff = positive_double(n["cutoff"], "numerics.cutoff");
        if (n["margin"]) cfg.margin = positive_double(n["margin"], "numerics.margin");
        if (n["hausdorff_tol"])
            cfg.hausdorff_tol = positive_double(n["hausdorff_tol"], "numerics.hausdorff_tol");
    }

    if (const YAML::Node n = root["zeta"]) {
        reject_unknown(n, "zeta", {"function", "method"});
        if (n["function"]) {
            const std::string f = as_string(n["function"], "zeta.function");
            if (f == "selberg") {
                cfg.zeta_function = ZetaFunction::Selberg;
            } else if (f == "ruelle") {
                cfg.zeta_function = ZetaFunction::Ruelle;
            } else {
                throw ConfigError("zeta.function", "expected 'selberg' or 'ruelle'");
            }
        }
        if (n["method"]) {
            const std::string m = as_string(n["method"], "zeta.method");
            if (m == "euler") {
                cfg.zeta_method = ZetaMethod::EulerProduct;
            } else if (m == "determinant") {
                cfg.zeta_method = ZetaMethod::TransferDeterminant;
            } else {
                throw ConfigError("zeta.method", "expected 'euler' or 'determinant'");
            }
        }
    }

    if (const YAML::Node n = root["region"]) {
        reject_unknown(n, "region", {"re", "im"});
        if (!n["re"]) throw ConfigError("region.re", "missing");
        if (!n["im"]) throw ConfigError("region.im", "missing");
        const auto [a, b] = interval(n["re"], "region.re");
        const auto [c, d] = interval(n["im"], "region.im");
        cfg.region = Rect{a, b, c, d};
    }

    if (const YAML::Node n = root["grid"]) {
        reject_unknown(n, "grid", {"re_steps", "im_steps"});
        if (n["re_steps"]) cfg.re_steps = positive_int(n["re_steps"], "grid.re_steps");
        if (n["im_steps"]) cfg.im_steps = positive_int(n["im_steps"], "grid.im_steps");
    }

    if (const YAML::Node n = root["locate"]) {
        reject_unknown(n, "locate", {"grid", "certificate_radius"});
        if (n["grid"]) cfg.locate_grid = positive_int(n["grid"], "locate.grid");
        if (n["certificate_radius"]) {
            cfg.certificate_radius =
                positive_double(n["certificate_radius"], "locate.certificate_radius");
        }
    }

    if (const YAML::Node n = root["verify"]) {
        reject_unknown(n, "verify", {"n_max", "radius", "points", "seed", "dims"});
        if (n["n_max"]) {
            const long long v = as_integer(n["n_max"], "verify.n_max");
            if (v < 0 || v > 50) throw ConfigError("verify.n_max", "must be in 0..50");
            cfg.n_max = static_cast<int>(v);
        }
        if (n["radius"]) cfg.verify_radius = positive_double(n["radius"], "verify.radius");
        if (n["points"]) {
            const YAML::Node p = n["points"];
            if (!p.IsSequence()) throw ConfigError("verify.points", "expected a list of [re, im]");
            for (std::size_t i = 0; i < p.size(); ++i) {
                const std::string f = "verify.points[" + std::to_string(i) + "]";
                const auto v = number_list(p[i], f);
                if (v.size() != 2) throw ConfigError(f, "expected [re, im]");
                cfg.points.emplace_back(v[0], v[1]);
            }
        }
        if (n["seed"]) {
            const long long v = as_integer(n["seed"], "verify.seed");
            if (v < 0) throw ConfigError("verify.seed", "must be non-negative");
            cfg.seed = static_cast<std::uint64_t>(v);
        }
        if (const YAML::Node d = n["dims"]) {
            reject_unknown(d, "verify.dims", {"genus", "chi", "n_max"});
            if (d["genus"]) {
                const auto v = number_list(d["genus"], "verify.dims.genus");
                if (v.size() != 2 || v[0] < 2 || v[1] < v[0]) {
                    throw ConfigError("verify.dims.genus",
                                      "expected [min, max] with 2 <= min <= max");
                }
                cfg.dims.genus_min = static_cast<int>(v[0]);
                cfg.dims.genus_max = static_cast<int>(v[1]);
            }
            if (d["chi"]) {
                const auto v = number_list(d["chi"], "verify.dims.chi");
                if (v.size() != 2 || v[1] > -1 || v[0] > v[1]) {
                    throw ConfigError("verify.dims.chi",
                                      "expected [min, max] with min <= max <= -1");
                }
                cfg.dims.chi_min = static_cast<int>(v[0]);
                cfg.dims.chi_max = static_cast<int>(v[1]);
            }
            if (d["n_max"]) cfg.dims.n_max = positive_int(d["n_max"], "verify.dims.n_max");
        }
    }
    return cfg;
}

RunConfig parse_config_text(const std::string& text) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ConfigError("<document>", std::string("YAML syntax error: ") + e.what());
    }
    return parse_config(root);
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("<file>", "cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config_text(text.str());
}

SchottkyGroup build_surface(const RunConfig& cfg) {
    if (!cfg.surface) throw ConfigError("surface", "missing (this command needs a surface)");
    const SurfaceSpec& s = *cfg.surface;
    SchottkyGroup g;
    if (s.preset.empty()) {
        g = SchottkyGroup(s.generators, s.disks, s.name.empty() ? "custom" : s.name);
    } else if (s.preset == "pair-of-pants") {
        g = pair_of_pants(s.lengths[0], s.lengths[1], s.lengths[2]);
    } else if (s.preset == "symmetric-funnels") {
        g = symmetric_funnels(s.funnels, s.lengths[0]);
    } else if (s.preset == "funneled-torus") {
        g = funneled_torus(s.lengths[0], s.lengths[1], s.twist);
    } else {
        g = s.trace ? cylinder_from_trace(*s.trace) : cylinder(s.lengths[0]);
    }
    require_valid(g);
    return g;
}

}  // namespace zetalab::cli
