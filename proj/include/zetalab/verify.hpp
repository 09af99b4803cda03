#pragma once

// Machine-readable verification reports. Every report is a JSON object with a
// top-level "pass" flag and per-check {expected, observed, pass} entries.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zetalab/contour.hpp"
#include "zetalab/schottky.hpp"
#include "zetalab/transfer.hpp"

namespace zetalab {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Zero orders at the negative integers.

struct TopologicalOptions {
    TransferOptions transfer;
    double radius = 0.25;
    double min_radius = 1e-3;
    unsigned threads = 1;
};

struct TopologicalEntry {
    int n = 0;
    int expected = 0;
    int observed = 0;
    double radius = 0.0;
    std::optional<bool> pass;  // empty for elementary groups
    int quantum_in_disk = 0;   // other zeros met by the initial disk
    int located_at_point = 0;  // winding of the central square of the scan
    std::vector<ZeroCertificate> nearby;
};

struct TopologicalReport {
    std::string surface;
    std::string convention;
    int euler_characteristic = 0;
    bool elementary = false;
    std::vector<TopologicalEntry> entries;

    bool all_pass() const;
    json to_json() const;
};

/// |χ|+1 at n = 0 and (2n+1)|χ| for n ≥ 1.
int expected_topological_order(int euler_characteristic, int n);

/// Winding of det(I − L_s) on a circle about −n for n = 0..n_max, after a
/// zero scan of the surrounding square minus a small central square; the
/// radius is halved while another zero certificate meets the disk. Throws
/// AmbiguousDisk below min_radius.
TopologicalReport verify_topological_zeros(const SchottkyGroup& group, int n_max,
                                           const TopologicalOptions& opts = {});

json to_json(const ZeroCertificate& c);

struct OrderTerm {
    int p = 0;
    cplx center;
    int order = 0;
    std::string method;  // "TransferDeterminant" or "EulerProduct"
};

struct RuelleOrderReport {
    cplx lambda;
    double radius = 0.0;
    int product_winding = 0;       // winding of Π_p det(I − L_{λ+p}) about lambda
    std::vector<OrderTerm> terms;  // ord of Z_S at lambda + p, one circle each
    int sum = 0;
    bool pass = false;

    json to_json() const;
};

/// Compares the zero order of Z_X(λ) = Π_{p=1}^{P} Z_S(λ+p) at `lambda`
/// with the sum of the orders of the individual factors. Factors whose circle
/// lies in Re s ≥ 1 are counted with the Euler product, the others with the
/// determinant. The radius follows the same shrink protocol as above.
RuelleOrderReport verify_ruelle_order(const SchottkyGroup& group, const LengthSpectrum& spec,
                                      cplx lambda = -1.0, int factors = 4,
                                      const TopologicalOptions& opts = {});

// ---------------------------------------------------------------------------
// Dimension formulas.

struct SurfaceTopology {
    enum class Kind { Compact, ConvexCocompact };
    Kind kind = Kind::Compact;
    int genus = 0;                 // compact surfaces
    int euler_characteristic = 0;  // both kinds

    static SurfaceTopology compact(int genus);
    static SurfaceTopology convex_cocompact(int chi);
    std::string to_string() const;
};

/// Compact: ½(2n−1)|χ| (n > 1), ½|χ|+1 (n = 1). Convex co-compact:
/// (2n−1)|χ| (n > 1), |χ|+1 (n = 1). Throws BadInput.
int dim_Hn(const SurfaceTopology& surface, int n);

// ---------------------------------------------------------------------------
// Report builders used by the CLI `verify` targets and the acceptance suite.

json lie_algebra_report();
json flow_report(int samples = 100, std::uint64_t seed = 7, double tol = 1e-9);
json factorization_report(const SchottkyGroup& group, const LengthSpectrum& spec,
                          const std::vector<cplx>& points, int p_max = 48, int k_max = 64,
                          double tol = 1e-8);
json scattering_report(int samples = 50, int max_mode = 32, std::uint64_t seed = 11,
                       double tol = 1e-10, double gamma_tol = 1e-12);
json poisson_report(std::uint64_t seed = 13);
json ladder_report(int n_max = 3, int l_max = 6);
json dims_report(int genus_min = 2, int genus_max = 5, int chi_min = -4, int chi_max = -1,
                 int n_max = 6);

}  // namespace zetalab
