#include "zetalab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

#include "zetalab/boundary.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/parallel.hpp"
#include "zetalab/sections.hpp"
#include "zetalab/special.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

namespace {

constexpr double kPi = std::numbers::pi;

std::string format_tol(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

json complex_json(cplx z) {
    return json::array({z.real(), z.imag()});
}

json check(const std::string& name, double observed, double tol,
           const std::string& relation = "<") {
    const bool pass = relation == "<" ? observed < tol : observed > tol;
    return {{"name", name},
            {"observed", observed},
            {"expected", relation + " " + format_tol(tol)},
            {"pass", pass}};
}

bool all_checks_pass(const json& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const json& c) { return c.at("pass").get<bool>(); });
}

// Non-trivial, well-conditioned random isometry: rotation, dilation, rotation.
MoebiusMap random_isometry(std::mt19937_64& rng, double max_shift) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi), shift(-max_shift, max_shift);
    return MoebiusMap::disk_rotation(angle(rng)) * MoebiusMap::dilation(shift(rng)) *
           MoebiusMap::disk_rotation(angle(rng));
}

FourierDistribution random_trig_poly(std::mt19937_64& rng, int max_mode) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::map<int, cplx> c;
    for (int k = -max_mode; k <= max_mode; ++k) c[k] = {u(rng), u(rng)};
    return FourierDistribution(c);
}

struct CleanDisk {
    double radius = 0.0;
    int located_at_point = 0;
    int quantum_in_disk = 0;
    std::vector<ZeroCertificate> nearby;
};

// Scans a frame around `center` (the square of half-width 1.25r minus a
// central square of half-width r/4) and halves r until no zero found in the
// frame meets the disk. The central square is counted by winding only: at
// negative integers rounding smears the multiple zero into a small cluster
// that no subdivision can resolve.
CleanDisk clean_disk(const ComplexFunction& f, cplx center, const TopologicalOptions& opts) {
    int initial_intruders = -1;
    for (double r = opts.radius; r >= opts.min_radius; r *= 0.5) {
        const double outer = 1.25 * r, inner = 0.25 * r;
        const double x = center.real(), y = center.imag();
        const std::vector<Rect> frame{{x - outer, x - inner, y - outer, y + outer},
                                      {x + inner, x + outer, y - outer, y + outer},
                                      {x - inner, x + inner, y - outer, y - inner},
                                      {x - inner, x + inner, y + inner, y + outer}};
        LocateOptions lo;
        lo.grid = 4;
        lo.certificate_radius = r / 16.0;
        lo.method = "TransferDeterminant";
        CleanDisk d;
        d.radius = r;
        const Rect core{x - inner, x + inner, y - inner, y + inner};
        d.located_at_point = winding_polygon(f, core.corners());
        // Dividing out the measured central order keeps the dynamic range on
        // the frame contours within the modulus floor.
        const int m = d.located_at_point;
        const ComplexFunction deflated = [&](cplx s) { return f(s) / std::pow(s - center, m); };
        int intruders = 0;
        for (const Rect& part : frame) {
            for (const ZeroCertificate& c : locate_zeros(deflated, part, lo).certificates) {
                d.nearby.push_back(c);
                if (std::abs(c.center - center) - c.radius < r) intruders += c.winding;
            }
        }
        if (initial_intruders < 0) initial_intruders = intruders;
        if (intruders == 0) {
            d.quantum_in_disk = initial_intruders;
            return d;
        }
    }
    throw AmbiguousDisk("another zero stays within the disk about (" +
                        std::to_string(center.real()) + ", " + std::to_string(center.imag()) +
                        ") down to radius " + std::to_string(opts.min_radius));
}

}  // namespace

json to_json(const ZeroCertificate& c) {
    return {{"center", complex_json(c.center)},
            {"radius", c.radius},
            {"winding", c.winding},
            {"min_modulus_on_circle", c.min_modulus_on_circle},
            {"method", c.method}};
}

// ---------------------------------------------------------------------------

int expected_topological_order(int euler_characteristic, int n) {
    const int chi = std::abs(euler_characteristic);
    return n == 0 ? chi + 1 : (2 * n + 1) * chi;
}

bool TopologicalReport::all_pass() const {
    if (elementary) return false;
    return std::all_of(entries.begin(), entries.end(),
                       [](const TopologicalEntry& e) { return e.pass.value_or(false); });
}

json TopologicalReport::to_json() const {
    json out{{"surface", surface},
             {"convention", convention},
             {"euler_characteristic", euler_characteristic},
             {"elementary", elementary},
             {"entries", json::array()}};
    for (const auto& e : entries) {
        json nearby = json::array();
        for (const auto& c : e.nearby) nearby.push_back(zetalab::to_json(c));
        out["entries"].push_back({{"n", e.n},
                                  {"expected", e.expected},
                                  {"observed", e.observed},
                                  {"radius", e.radius},
                                  {"pass", e.pass ? json(*e.pass) : json(nullptr)},
                                  {"quantum_in_disk", e.quantum_in_disk},
                                  {"located_at_point", e.located_at_point},
                                  {"nearby", nearby}});
    }
    out["pass"] = elementary ? json(nullptr) : json(all_pass());
    return out;
}

TopologicalReport verify_topological_zeros(const SchottkyGroup& group, int n_max,
                                           const TopologicalOptions& opts) {
    if (n_max < 0) throw BadInput("n_max must be non-negative");
    require_valid(group);
    TopologicalReport rep;
    rep.surface = group.name();
    rep.convention = "transfer-determinant";
    rep.euler_characteristic = euler_characteristic(group);
    rep.elementary = group.rank() < 2;
    const ComplexFunction det = [&](cplx s) { return fredholm_det(group, s, opts.transfer); };
    rep.entries =
        parallel_map(static_cast<std::size_t>(n_max + 1), opts.threads, [&](std::size_t i) {
            TopologicalEntry e;
            e.n = static_cast<int>(i);
            const cplx center(-e.n, 0.0);
            const CleanDisk d = clean_disk(det, center, opts);
            e.radius = d.radius;
            e.located_at_point = d.located_at_point;
            e.quantum_in_disk = d.quantum_in_disk;
            e.nearby = d.nearby;
            e.observed = winding_number(det, center, d.radius);
            e.expected = expected_topological_order(rep.euler_characteristic, e.n);
            if (!rep.elementary) e.pass = e.observed == e.expected;
            return e;
        });
    return rep;
}

json RuelleOrderReport::to_json() const {
    json t = json::array();
    for (const auto& term : terms) {
        t.push_back({{"p", term.p},
                     {"center", complex_json(term.center)},
                     {"order", term.order},
                     {"method", term.method}});
    }
    return {{"lambda", complex_json(lambda)}, {"radius", radius}, {"expected", sum},
            {"observed", product_winding},    {"terms", t},       {"pass", pass}};
}

RuelleOrderReport verify_ruelle_order(const SchottkyGroup& group, const LengthSpectrum& spec,
                                      cplx lambda, int factors, const TopologicalOptions& opts) {
    if (factors < 1) throw BadInput("at least one factor is needed");
    require_valid(group);
    const ComplexFunction det = [&](cplx s) { return fredholm_det(group, s, opts.transfer); };
    const ComplexFunction euler = [&](cplx s) { return selberg_zeta(s, spec).value; };

    // The only factor that can vanish near lambda is a determinant factor
    // left of Re s = 1; its neighbourhood fixes the common radius.
    double radius = opts.radius;
    for (int p = 1; p <= factors; ++p) {
        const cplx c = lambda + static_cast<double>(p);
        if (c.real() - opts.radius >= 1.0) break;
        TopologicalOptions o = opts;
        o.radius = radius;
        radius = std::min(radius, clean_disk(det, c, o).radius);
    }

    RuelleOrderReport rep;
    rep.lambda = lambda;
    rep.radius = radius;
    rep.terms = parallel_map(static_cast<std::size_t>(factors), opts.threads, [&](std::size_t i) {
        OrderTerm t;
        t.p = static_cast<int>(i) + 1;
        t.center = lambda + static_cast<double>(t.p);
        const bool use_euler = t.center.real() - radius >= 1.0;
        t.method = use_euler ? "EulerProduct" : "TransferDeterminant";
        t.order = winding_number(use_euler ? euler : det, t.center, radius);
        return t;
    });
    for (const auto& t : rep.terms) rep.sum += t.order;

    const ComplexFunction product = [&](cplx z) {
        cplx v = 1.0;
        for (int p = 1; p <= factors; ++p) v *= det(z + static_cast<double>(p));
        return v;
    };
    rep.product_winding = winding_number(product, lambda, radius);
    rep.pass = rep.product_winding == rep.sum;
    return rep;
}

// ---------------------------------------------------------------------------

SurfaceTopology SurfaceTopology::compact(int genus) {
    SurfaceTopology s;
    s.kind = Kind::Compact;
    s.genus = genus;
    s.euler_characteristic = 2 - 2 * genus;
    return s;
}

SurfaceTopology SurfaceTopology::convex_cocompact(int chi) {
    SurfaceTopology s;
    s.kind = Kind::ConvexCocompact;
    s.euler_characteristic = chi;
    return s;
}

std::string SurfaceTopology::to_string() const {
    if (kind == Kind::Compact) return "Compact(genus=" + std::to_string(genus) + ")";
    return "ConvexCocompact(chi=" + std::to_string(euler_characteristic) + ")";
}

int dim_Hn(const SurfaceTopology& surface, int n) {
    if (n < 1) throw BadInput("n must be at least 1");
    // Riemann-Roch for K^n on a closed surface of genus g: g for n = 1,
    // (2n-1)(g-1) for n > 1. The convex co-compact case is read off on the
    // double, whose genus is 1 - χ; real dimensions of the invariant part
    // equal complex dimensions on the double.
    int g = 0;
    if (surface.kind == SurfaceTopology::Kind::Compact) {
        if (surface.genus < 2) throw BadInput("compact surfaces need genus >= 2");
        g = surface.genus;
    } else {
        if (surface.euler_characteristic > -1) {
            throw BadInput("convex co-compact surfaces need chi <= -1");
        }
        g = 1 - surface.euler_characteristic;
    }
    return n == 1 ? g : (2 * n - 1) * (g - 1);
}

json dims_report(int genus_min, int genus_max, int chi_min, int chi_max, int n_max) {
    json entries = json::array();
    bool ok = true;
    auto add = [&](const SurfaceTopology& s, int n, int expected) {
        const int observed = dim_Hn(s, n);
        ok = ok && observed == expected;
        entries.push_back({{"surface", s.to_string()},
                           {"n", n},
                           {"expected", expected},
                           {"observed", observed},
                           {"pass", observed == expected}});
    };
    for (int g = genus_min; g <= genus_max; ++g) {
        const int chi = std::abs(2 - 2 * g);
        for (int n = 1; n <= n_max; ++n) {
            add(SurfaceTopology::compact(g), n, n == 1 ? chi / 2 + 1 : (2 * n - 1) * chi / 2);
        }
    }
    for (int c = chi_max; c >= chi_min; --c) {
        const int chi = std::abs(c);
        for (int n = 1; n <= n_max; ++n) {
            add(SurfaceTopology::convex_cocompact(c), n, n == 1 ? chi + 1 : (2 * n - 1) * chi);
        }
    }
    return {{"target", "dims"}, {"entries", entries}, {"pass", ok}};
}

// ---------------------------------------------------------------------------

json lie_algebra_report() {
    const Mat2 x = lie_matrix(Generator::X), up = lie_matrix(Generator::UPlus),
               um = lie_matrix(Generator::UMinus), v = lie_matrix(Generator::V),
               xp = lie_matrix(Generator::XPerp);
    const double tol = 4.0 * std::numeric_limits<double>::epsilon();
    json checks = json::array();
    auto add = [&](const std::string& name, const Mat2& lhs, const Mat2& rhs) {
        const double r = (lhs - rhs).max_abs();
        checks.push_back(
            {{"name", name}, {"observed", r}, {"expected", "<= 4 eps"}, {"pass", r <= tol}});
    };
    add("[X,U+] = U+", commutator(x, up), up);
    add("[X,U-] = -U-", commutator(x, um), -1.0 * um);
    add("[U+,U-] = 2X", commutator(up, um), 2.0 * x);
    add("[X,V] = Xperp", commutator(x, v), xp);
    add("[X,Xperp] = V", commutator(x, xp), v);
    add("[V,Xperp] = X", commutator(v, xp), x);
    add("U+ = Xperp + V", up, xp + v);
    add("U- = Xperp - V", um, xp - v);
    return {{"target", "lie-algebra"}, {"checks", checks}, {"pass", all_checks_pass(checks)}};
}

json flow_report(int samples, std::uint64_t seed, double tol) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> time(-2.0, 2.0);
    double cocycle = 0.0, invariance = 0.0, equivariance = 0.0;
    for (int i = 0; i < samples; ++i) {
        const UnitTangentPoint y{random_isometry(rng, 2.0)};
        const double t = time(rng);
        const UnitTangentPoint yt = flow(y, Generator::X, t);
        const auto [m0, p0] = phi_pm(y);
        const auto [mt, pt] = phi_pm(yt);
        cocycle = std::max({cocycle, std::abs(pt / (std::exp(t) * p0) - 1.0),
                            std::abs(mt / (std::exp(-t) * m0) - 1.0)});

        const auto [bm0, bp0] = endpoint_maps(y);
        const auto [bmt, bpt] = endpoint_maps(yt);
        invariance = std::max({invariance, std::abs(angular_distance(bm0, bmt)),
                               std::abs(angular_distance(bp0, bpt))});

        const MoebiusMap gamma = random_isometry(rng, 1.5);
        const auto [mg, pg] = phi_pm(act(gamma, y));
        const double nm = 1.0 / boundary_derivative_norm(gamma, bm0);
        const double np = 1.0 / boundary_derivative_norm(gamma, bp0);
        equivariance = std::max(
            {equivariance, std::abs(mg / (m0 * nm) - 1.0), std::abs(pg / (p0 * np) - 1.0)});
    }
    json checks = json::array({check("phi cocycle (relative)", cocycle, tol),
                               check("endpoint flow invariance (angle)", invariance, tol),
                               check("phi equivariance (relative)", equivariance, tol)});

    // Casimir: the two unambiguous groupings must agree to finite-difference
    // accuracy; the literal rewritings are recorded without a verdict.
    std::mt19937_64 crng(seed + 1);
    double casimir = 0.0, xx = 0.0;
    json literal = json::array();
    for (int i = 0; i < 10; ++i) {
        const UnitTangentPoint y{random_isometry(crng, 1.0)};
        const CasimirReport c = casimir_report(y, 1e-2);
        casimir = std::max(casimir, c.residual);
        literal.push_back({{"omega", c.omega_main},
                           {"grouping_2U-+V", c.literal_grouping},
                           {"expanded", c.literal_expanded}});
        const BundleFunction phi_plus = [](const UnitTangentPoint& p) { return phi_pm(p).second; };
        const double f = phi_plus(y);
        xx = std::max(
            xx,
            std::abs(lie_second_derivative(phi_plus, y, lie_matrix(Generator::X), 1e-3) - f) / f);
    }
    checks.push_back(check("casimir groupings agree (h=1e-2)", casimir, 1e-3));
    checks.push_back(check("X^2 phi+ = phi+ (relative, h=1e-3)", xx, 1e-6));
    return {{"target", "flow"},
            {"samples", samples},
            {"seed", seed},
            {"checks", checks},
            {"casimir_literal_forms", literal},
            {"pass", all_checks_pass(checks)}};
}

json factorization_report(const SchottkyGroup& group, const LengthSpectrum& spec,
                          const std::vector<cplx>& points, int p_max, int k_max, double tol) {
    json entries = json::array();
    bool ok = true;
    for (const cplx lambda : points) {
        const FactorizationResult r = factorization_check(lambda, spec, p_max, k_max);
        const bool pass = r.residual < tol && r.quotient_residual < tol;
        ok = ok && pass;
        entries.push_back({{"lambda", complex_json(lambda)},
                           {"residual", r.residual},
                           {"quotient_residual", r.quotient_residual},
                           {"tail_bound", r.tail_bound},
                           {"expected", "< " + format_tol(tol)},
                           {"pass", pass}});
    }
    return {{"target", "factorization"},
            {"surface", group.name()},
            {"convention", to_string(spec.convention)},
            {"cutoff", spec.cutoff},
            {"p_max", p_max},
            {"entries", entries},
            {"pass", ok}};
}

json scattering_report(int samples, int max_mode, std::uint64_t seed, double tol,
                       double gamma_tol) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> re(-3.0, 4.0), im(-5.0, 5.0);
    double sup = 0.0, symmetry = 0.0;
    int used = 0;
    while (used < samples) {
        const cplx s(re(rng), im(rng));
        // σ_k(s) and σ_k(1−s) have poles or zeros at the integers.
        if (std::abs(s - std::round(s.real())) < 1e-3) continue;
        ++used;
        for (int k = 0; k <= max_mode; ++k) {
            const cplx prod = scattering_eigenvalue(k, s) * scattering_eigenvalue(k, 1.0 - s);
            sup = std::max(sup, std::abs(prod - 1.0));
            symmetry = std::max(
                symmetry, std::abs(scattering_eigenvalue(-k, s) - scattering_eigenvalue(k, s)) /
                              std::abs(scattering_eigenvalue(k, s)));
        }
    }
    double reflection = 0.0;
    for (int i = -39; i <= 39; ++i) {
        for (const double y : {0.0, 0.5, -1.5, 2.0}) {
            const cplx z(0.1 * i + 0.05, y);
            const cplx r = gamma(z) * gamma(1.0 - z) * std::sin(kPi * z) / kPi;
            reflection = std::max(reflection, std::abs(r - 1.0));
        }
    }
    double factorial = 0.0;
    for (int n = 1; n <= 20; ++n) {
        factorial = std::max(factorial, std::abs(gamma(cplx(n, 0.0)) / std::tgamma(n) - 1.0));
    }
    json checks = json::array({check("sup |sigma_k(s) sigma_k(1-s) - 1|", sup, tol),
                               check("sigma_k = sigma_-k (relative)", symmetry, gamma_tol),
                               check("gamma reflection", reflection, gamma_tol),
                               check("gamma at integers vs factorial", factorial, gamma_tol)});
    return {{"target", "scattering"}, {"samples", samples}, {"max_mode", max_mode},
            {"seed", seed},           {"checks", checks},   {"pass", all_checks_pass(checks)}};
}

json poisson_report(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    json checks = json::array();

    double harm = 0.0;
    harm = std::max(harm, harmonicity_residual(1.0, FourierDistribution::mode(1), 0.3, 1e-3));
    harm = std::max(harm, harmonicity_residual(0.0, FourierDistribution::constant(1.0), 0.5, 1e-3));
    for (int i = 0; i < 6; ++i) {
        const cplx lambda = i == 0 ? cplx(-0.5, 2.0) : cplx(u(rng), 2.0 * u(rng));
        // The 5-point stencil error grows like h²|λ|²; points stay in |x| ≤ 0.3.
        const cplx x = std::polar(0.3 * std::sqrt(0.5 * (u(rng) + 1.0)), kPi * u(rng));
        harm = std::max(harm, harmonicity_residual(lambda, random_trig_poly(rng, 3), x, 1e-3));
    }
    checks.push_back(check("harmonicity residual (h=1e-3)", harm, 1e-4));

    double equi = 0.0;
    const MoebiusMap hyperbolic = MoebiusMap::from_entries(2.0, 1.0, 1.0, 1.0);  // trace 3
    equi =
        std::max(equi, equivariance_residual(0.7, FourierDistribution::mode(1), hyperbolic, 0.2));
    equi = std::max(equi, equivariance_residual(cplx(0.3, 1.0), FourierDistribution::constant(1.0),
                                                MoebiusMap::disk_rotation(1.1), cplx(0.1, -0.4)));
    for (int i = 0; i < 6; ++i) {
        const cplx lambda(u(rng), u(rng));
        const cplx x(0.3 * u(rng), 0.3 * u(rng));
        equi = std::max(equi, equivariance_residual(lambda, random_trig_poly(rng, 2),
                                                    random_isometry(rng, 1.0), x));
    }
    checks.push_back(check("equivariance residual", equi, 1e-9));

    const std::vector<cplx> zs{0.0, 0.4, cplx(0.0, 0.7), cplx(-0.3, 0.2), cplx(0.5, -0.5)};
    double in_kernel = 0.0, off_kernel = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= 4; ++n) {
        for (int k = -8; k <= 8; ++k) {
            const double m = kernel_check_Pn(n, k, zs);
            if (std::abs(k) >= n) {
                in_kernel = std::max(in_kernel, m);
            } else {
                off_kernel = std::min(off_kernel, m);
            }
        }
    }
    checks.push_back(check("|P_-n(e^ik.)| for |k| >= n", in_kernel, 1e-12));
    checks.push_back(check("sup |P_-n(e^ik.)| for |k| < n", off_kernel, 1e-3, ">"));
    return {{"target", "poisson"},
            {"seed", seed},
            {"checks", checks},
            {"pass", all_checks_pass(checks)}};
}

json ladder_report(int n_max, int l_max) {
    json entries = json::array();
    bool ok = true;
    for (int n = 1; n <= n_max; ++n) {
        const std::vector<std::pair<std::string, TensorSection>> seeds{
            {"dz^n", TensorSection::monomial(n, 0, 0, 1)},
            {"z dz^n", TensorSection::monomial(n, 1, 0, 1)},
            {"((2+i) z^3 - 1/2) dz^n",
             TensorSection::monomial(n, 3, 0, GaussRational(2, 1)) +
                 TensorSection::monomial(n, 0, 0, GaussRational(Rational(-1, 2)))}};
        for (const auto& [label, seed] : seeds) {
            json e{{"n", n}, {"seed", label}};
            try {
                const auto rungs = ladder_build(n, l_max, seed);
                bool commutator = true;
                std::map<int, TensorSection> modes;
                for (const auto& u : rungs) {
                    commutator = commutator && eta_commutator_defect(u).is_zero();
                    modes[u.degree()] = u;
                }
                bool system = true;
                for (const auto& c : recursion_system_check(modes, GaussRational(-n))) {
                    system = system && c.eq1 && c.eq2 && c.recursion_plus && c.recursion_minus;
                }
                e["lowering_identities"] = l_max;
                e["commutator"] = commutator;
                e["recursion_system"] = system;
                e["pass"] = commutator && system;
            } catch (const Error& err) {
                e["error"] = err.what();
                e["pass"] = false;
            }
            ok = ok && e["pass"].get<bool>();
            entries.push_back(e);
        }
    }

    json explicit_checks = json::array();
    auto add = [&](const std::string& name, bool pass) {
        explicit_checks.push_back({{"name", name}, {"pass", pass}});
        ok = ok && pass;
    };
    const TensorSection dz = TensorSection::monomial(1, 0, 0, 1);
    add("eta+ dz = -2 zbar/(1-|z|^2) dz^2",
        eta_apply(EtaDirection::Raise, dz) == TensorSection::monomial(2, 0, 1, -2, 1));
    add("u_2 = 4 zbar/(1-|z|^2) dz^2 for u_1 = dz",
        ladder_build(1, 1, dz).at(1) == TensorSection::monomial(2, 0, 1, 4, 1));
    add("eta- of a constant is 0",
        eta_apply(EtaDirection::Lower, TensorSection::monomial(0, 0, 0, 1)).is_zero());

    json norms = json::array();
    for (int n = 1; n <= n_max; ++n) {
        for (int l = 0; l <= l_max; ++l) {
            const Rational got = ladder_norm_value(n, l);
            // Γ(2n+ℓ) / (Γ(ℓ+1) Γ(2n)) with exact factorials.
            boost::multiprecision::cpp_int num = 1, den = 1;
            for (int i = 2; i < 2 * n + l; ++i) num *= i;
            for (int i = 2; i <= l; ++i) den *= i;
            for (int i = 2; i < 2 * n; ++i) den *= i;
            const Rational want(num, den);
            ok = ok && got == want;
            norms.push_back({{"n", n},
                             {"l", l},
                             {"observed", got.str()},
                             {"expected", want.str()},
                             {"pass", got == want}});
        }
    }
    add("Pi_{1,1} = 2", ladder_norm_value(1, 1) == 2);
    add("Pi_{2,2} = 10", ladder_norm_value(2, 2) == 10);
    return {{"target", "ladder"},          {"n_max", n_max}, {"l_max", l_max}, {"ladders", entries},
            {"explicit", explicit_checks}, {"norms", norms}, {"pass", ok}};
}

}  // namespace zetalab
