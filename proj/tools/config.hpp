#pragma once

// Run configuration for the command-line tool, read from YAML.

#include <yaml-cpp/yaml.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zetalab/contour.hpp"
#include "zetalab/schottky.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab::cli {

/// Invalid configuration; `field` is the dotted path of the offending key.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& what)
        : std::runtime_error("field '" + field + "': " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

struct SurfaceSpec {
    // Preset surfaces.
    std::string preset;           // empty when explicit generators are given
    std::vector<double> lengths;  // pair-of-pants: 3, funneled-torus: 2, cylinder: 1
    int funnels = 0;              // symmetric-funnels
    double twist = 0.0;           // funneled-torus
    std::optional<double> trace;  // cylinder given by trace
    // Explicit surfaces.
    std::vector<MoebiusMap> generators;
    std::vector<std::pair<Disk, Disk>> disks;  // (D_-j, D_j)
    std::string name;
};

struct DimsRange {
    int genus_min = 2, genus_max = 5;
    int chi_min = -4, chi_max = -1;
    int n_max = 6;
};

struct RunConfig {
    std::optional<SurfaceSpec> surface;
    Convention convention = Convention::Oriented;

    int k_max = kDefaultKMax;
    int p_max = kDefaultPMax;
    int basis_order = 20;
    std::uint64_t word_cap = kDefaultWordCap;
    double cutoff = 12.0;
    double margin = 1.0;
    double hausdorff_tol = 1e-12;

    ZetaFunction zeta_function = ZetaFunction::Selberg;
    ZetaMethod zeta_method = ZetaMethod::EulerProduct;

    std::optional<Rect> region;
    int re_steps = 11;
    int im_steps = 11;

    int locate_grid = 8;
    double certificate_radius = 1e-3;

    int n_max = 2;
    double verify_radius = 0.25;
    std::vector<cplx> points;  // factorization points; chosen automatically when empty
    std::uint64_t seed = 7;
    DimsRange dims;
};

/// Parses a YAML document. Throws ConfigError naming the offending field.
RunConfig parse_config(const YAML::Node& root);
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::string& path);

/// Builds (and validates) the configured surface. Throws ConfigError when no
/// surface is configured, the Schottky validation errors otherwise.
SchottkyGroup build_surface(const RunConfig& cfg);

}  // namespace zetalab::cli
