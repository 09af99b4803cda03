#include "zetalab/contour.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSplitOffset = 0.0137;  // keeps cuts off symmetry lines
constexpr double kPerturbStep = 0.0731;

void check_value(cplx v) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw RefinementExhausted("function returned a non-finite value on the contour");
    }
    if (v == cplx(0.0)) throw ZeroOnContour("function vanishes exactly on the contour");
}

void merge(ContourScan& into, const ContourScan& part) {
    const std::size_t skip = into.samples.empty() ? 0 : 1;
    into.samples.insert(into.samples.end(), part.samples.begin() + skip, part.samples.end());
    into.total_phase += part.total_phase;
    into.refinement_depth = std::max(into.refinement_depth, part.refinement_depth);
    if (into.max_modulus == 0.0) {
        into.min_modulus = part.min_modulus;
    } else {
        into.min_modulus = std::min(into.min_modulus, part.min_modulus);
    }
    into.max_modulus = std::max(into.max_modulus, part.max_modulus);
}

}  // namespace

std::vector<cplx> Rect::corners() const {
    return {{re_min, im_min}, {re_max, im_min}, {re_max, im_max}, {re_min, im_max}};
}

ContourScan scan_path(const ComplexFunction& f, const std::function<cplx(double)>& path,
                      int initial_intervals, const WindingOptions& opts) {
    ContourScan scan;
    const int n = std::max(1, initial_intervals);
    auto eval = [&](double t) {
        const cplx z = path(t);
        const cplx v = f(z);
        check_value(v);
        return std::make_pair(z, v);
    };
    auto refine = [&](auto&& self, double ta, cplx fa, double tb, std::pair<cplx, cplx> b,
                      int depth) -> void {
        // |ratio − 1| < 1 already forces |step| < π/2; the stricter bound also
        // refines where the modulus moves fast, which is where the phase can
        // wrap by a full turn between two samples near a multiple zero.
        auto small = [&](cplx ratio) {
            return std::abs(std::arg(ratio)) < 0.5 * kPi &&
                   std::abs(ratio - 1.0) < opts.max_relative_step;
        };
        const double tm = 0.5 * (ta + tb);
        const auto m = eval(tm);
        // Both halves are checked as well: a coarse pair of samples can land
        // on nearly equal values after a full turn in between.
        const cplx r1 = m.second / fa, r2 = b.second / m.second;
        if (small(b.second / fa) && small(r1) && small(r2)) {
            scan.samples.push_back(m);
            scan.samples.push_back(b);
            scan.total_phase += std::arg(r1) + std::arg(r2);
            scan.refinement_depth = std::max(scan.refinement_depth, depth);
            return;
        }
        if (depth >= opts.max_depth) {
            throw RefinementExhausted("phase step stayed above pi/2 after " +
                                      std::to_string(depth) + " bisections");
        }
        self(self, ta, fa, tm, m, depth + 1);
        self(self, tm, m.second, tb, b, depth + 1);
    };
    auto prev = eval(0.0);
    scan.samples.push_back(prev);
    for (int i = 1; i <= n; ++i) {
        const double t = static_cast<double>(i) / n;
        const auto cur = eval(t);
        refine(refine, static_cast<double>(i - 1) / n, prev.second, t, cur, 0);
        prev = cur;
    }
    scan.min_modulus = scan.max_modulus = std::abs(scan.samples.front().second);
    for (const auto& [z, v] : scan.samples) {
        scan.min_modulus = std::min(scan.min_modulus, std::abs(v));
        scan.max_modulus = std::max(scan.max_modulus, std::abs(v));
    }
    return scan;
}

ContourScan scan_circle(const ComplexFunction& f, cplx center, double radius,
                        const WindingOptions& opts) {
    if (!(radius > 0.0)) throw BadInput("circle radius must be positive");
    return scan_path(
        f,
        [&](double t) {
            return t == 1.0 ? center + radius : center + std::polar(radius, 2.0 * kPi * t);
        },
        opts.initial_samples, opts);
}

ContourScan scan_polygon(const ComplexFunction& f, const std::vector<cplx>& vertices,
                         const WindingOptions& opts) {
    if (vertices.size() < 3) throw BadInput("polygon needs at least three vertices");
    ContourScan scan;
    const int per_edge = std::max(2, opts.initial_samples / 4);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const cplx a = vertices[i], b = vertices[(i + 1) % vertices.size()];
        merge(
            scan,
            scan_path(f, [&](double t) { return t == 1.0 ? b : a + t * (b - a); }, per_edge, opts));
    }
    return scan;
}

int winding_from_scan(const ContourScan& scan, const WindingOptions& opts) {
    if (!(scan.min_modulus > opts.relative_floor * scan.max_modulus)) {
        throw ZeroOnContour("min |f| on the contour is below the relative floor");
    }
    const double turns = scan.total_phase / (2.0 * kPi);
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) > opts.integer_tolerance) {
        throw RefinementExhausted("accumulated phase is not a whole number of turns");
    }
    return static_cast<int>(rounded);
}

int winding_number(const ComplexFunction& f, cplx center, double radius, int max_depth) {
    WindingOptions opts;
    opts.max_depth = max_depth;
    return winding_number(f, center, radius, opts);
}

int winding_number(const ComplexFunction& f, cplx center, double radius,
                   const WindingOptions& opts) {
    return winding_from_scan(scan_circle(f, center, radius, opts), opts);
}

int winding_polygon(const ComplexFunction& f, const std::vector<cplx>& vertices,
                    const WindingOptions& opts) {
    return winding_from_scan(scan_polygon(f, vertices, opts), opts);
}

// ---------------------------------------------------------------------------
// Rectangle subdivision.

namespace {

struct EdgeInfo {
    double phase = 0.0;
    double min_modulus = 0.0;
    double max_modulus = 0.0;
};

class Locator {
public:
    Locator(const ComplexFunction& f, const LocateOptions& opts)
        : opts_(opts), f_([this, &f](cplx z) {
              ++evaluations_;
              return f(z);
          }) {}

    int evaluations() const { return evaluations_; }

    int rect_winding(const Rect& r) {
        const auto c = r.corners();
        double phase = 0.0, lo = 0.0, hi = 0.0;
        for (int i = 0; i < 4; ++i) {
            const EdgeInfo e = edge(c[i], c[(i + 1) % 4]);
            phase += e.phase;
            lo = i == 0 ? e.min_modulus : std::min(lo, e.min_modulus);
            hi = std::max(hi, e.max_modulus);
        }
        ContourScan summary;
        summary.total_phase = phase;
        summary.min_modulus = lo;
        summary.max_modulus = hi;
        const int w = winding_from_scan(summary, opts_.winding);
        if (w < 0) throw RefinementExhausted("negative winding: function is not holomorphic here");
        return w;
    }

    // Splits r into k×k cells whose windings add up to `total`; interior cut
    // lines are moved when a cut meets a zero.
    std::vector<std::pair<Rect, int>> split(const Rect& r, int k, int total) {
        for (int attempt = 0; attempt <= opts_.max_perturbations; ++attempt) {
            const double offset =
                kSplitOffset + (attempt % 2 ? 1.0 : -1.0) * kPerturbStep * ((attempt + 1) / 2);
            std::vector<double> xs{r.re_min}, ys{r.im_min};
            for (int i = 1; i < k; ++i) {
                xs.push_back(r.re_min + (i + offset) * r.width() / k);
                ys.push_back(r.im_min + (i + offset) * r.height() / k);
            }
            xs.push_back(r.re_max);
            ys.push_back(r.im_max);
            try {
                std::vector<std::pair<Rect, int>> cells;
                int sum = 0;
                for (int j = 0; j < k; ++j) {
                    for (int i = 0; i < k; ++i) {
                        const Rect cell{xs[i], xs[i + 1], ys[j], ys[j + 1]};
                        const int w = rect_winding(cell);
                        sum += w;
                        cells.emplace_back(cell, w);
                    }
                }
                if (sum == total) return cells;
            } catch (const ZeroOnContour&) {
            }
        }
        throw RefinementExhausted("could not split a rectangle consistently after " +
                                  std::to_string(opts_.max_perturbations) + " perturbations");
    }

    ContourScan circle(cplx c, double radius) { return scan_circle(f_, c, radius, opts_.winding); }

private:
    EdgeInfo edge(cplx a, cplx b) {
        const std::array<double, 4> key{a.real(), a.imag(), b.real(), b.imag()};
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        const std::array<double, 4> rkey{b.real(), b.imag(), a.real(), a.imag()};
        if (auto it = cache_.find(rkey); it != cache_.end()) {
            EdgeInfo e = it->second;
            e.phase = -e.phase;
            return e;
        }
        const int n = std::max(2, opts_.winding.initial_samples / 4);
        const ContourScan s = scan_path(
            f_, [&](double t) { return t == 1.0 ? b : a + t * (b - a); }, n, opts_.winding);
        const EdgeInfo e{s.total_phase, s.min_modulus, s.max_modulus};
        cache_.emplace(key, e);
        return e;
    }

    const LocateOptions& opts_;
    int evaluations_ = 0;
    ComplexFunction f_;
    std::map<std::array<double, 4>, EdgeInfo> cache_;
};

}  // namespace

LocateResult locate_zeros(const ComplexFunction& f, const Rect& region, const LocateOptions& opts) {
    if (!(region.width() > 0.0 && region.height() > 0.0)) {
        throw BadInput("zero search region must have positive width and height");
    }
    if (opts.grid < 1) throw BadInput("grid must be at least 1");
    Locator loc(f, opts);
    LocateResult out;

    // Outer contour, pushed outwards by 1e-3 of the size when it meets a zero.
    Rect r = region;
    for (int attempt = 0;; ++attempt) {
        try {
            out.region_winding = loc.rect_winding(r);
            break;
        } catch (const ZeroOnContour&) {
            if (attempt >= opts.max_perturbations) throw;
            const double dx = 1e-3 * region.width(), dy = 1e-3 * region.height();
            r = {r.re_min - dx, r.re_max + dx, r.im_min - dy, r.im_max + dy};
        }
    }
    out.region = r;
    if (out.region_winding == 0) {
        out.evaluations = loc.evaluations();
        return out;
    }

    // A cell becomes a certificate once small enough, or when it cannot be
    // split consistently (a numerically smeared multiple zero straddling
    // every cut); the winding on the circle is re-verified either way.
    auto certify = [&](const Rect& cell, int w, bool force) {
        double radius = cell.half_diagonal();
        for (int attempt = 0;; ++attempt) {
            try {
                const ContourScan s = loc.circle(cell.center(), radius);
                const int wc = winding_from_scan(s, opts.winding);
                if (wc != w && !force) return false;
                if (wc != w) {
                    throw RefinementExhausted("unsplittable cell: circle winding " +
                                              std::to_string(wc) + " != cell winding " +
                                              std::to_string(w));
                }
                out.certificates.push_back({cell.center(), radius, wc, s.min_modulus, opts.method});
                return true;
            } catch (const ZeroOnContour&) {
                if (attempt >= opts.max_perturbations) throw;
                radius *= 1.05;
            }
        }
    };
    std::deque<std::pair<Rect, int>> queue;
    auto subdivide = [&](const Rect& cell, int k, int w) {
        std::vector<std::pair<Rect, int>> parts;
        try {
            parts = loc.split(cell, k, w);
        } catch (const RefinementExhausted&) {
            certify(cell, w, true);
            return;
        }
        for (auto& c : parts) {
            if (c.second > 0) queue.push_back(c);
        }
    };
    subdivide(r, opts.grid, out.region_winding);
    while (!queue.empty()) {
        const auto [cell, w] = queue.front();
        queue.pop_front();
        const bool tiny = std::max(cell.width(), cell.height()) < opts.min_size;
        if ((cell.half_diagonal() <= opts.certificate_radius || tiny) && certify(cell, w, tiny)) {
            continue;
        }
        subdivide(cell, 2, w);
    }
    std::sort(out.certificates.begin(), out.certificates.end(),
              [](const ZeroCertificate& a, const ZeroCertificate& b) {
                  if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
                  return a.center.imag() < b.center.imag();
              });
    out.evaluations = loc.evaluations();
    return out;
}

}  // namespace zetalab
