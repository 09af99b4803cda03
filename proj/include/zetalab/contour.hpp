#pragma once

// Argument-principle tools: adaptive phase tracking along closed contours and
// certified localization of zeros of holomorphic functions in rectangles.

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace zetalab {

using cplx = std::complex<double>;
using ComplexFunction = std::function<cplx(cplx)>;

struct WindingOptions {
    int initial_samples = 32;         // per circle, or per polygon edge / 4
    int max_depth = 24;               // bisection depth per initial interval
    double relative_floor = 1e-12;    // min|f| must exceed this · max|f|
    double integer_tolerance = 1e-3;  // refuse when total/2π is further off
    double max_relative_step = 0.8;   // accept a step only if |f(b)/f(a) − 1| < this
};

struct ContourScan {
    std::vector<std::pair<cplx, cplx>> samples;  // (point, value), in order
    double total_phase = 0.0;
    int refinement_depth = 0;
    double min_modulus = 0.0;
    double max_modulus = 0.0;
};

/// Samples f along the path t -> path(t), t in [0, 1], bisecting until every
/// phase step is below π/2 and every value ratio is within
/// max_relative_step of 1, for the step and for both of its halves. Throws
/// RefinementExhausted.
ContourScan scan_path(const ComplexFunction& f, const std::function<cplx(double)>& path,
                      int initial_intervals, const WindingOptions& opts = {});

ContourScan scan_circle(const ComplexFunction& f, cplx center, double radius,
                        const WindingOptions& opts = {});

/// Closed polygon through the given vertices (counter-clockwise for positive
/// orientation).
ContourScan scan_polygon(const ComplexFunction& f, const std::vector<cplx>& vertices,
                         const WindingOptions& opts = {});

/// Integer winding of a closed scan. Throws ZeroOnContour when the modulus
/// floor is violated and RefinementExhausted when total/2π is not an integer.
int winding_from_scan(const ContourScan& scan, const WindingOptions& opts = {});

int winding_number(const ComplexFunction& f, cplx center, double radius, int max_depth = 24);
int winding_number(const ComplexFunction& f, cplx center, double radius,
                   const WindingOptions& opts);
int winding_polygon(const ComplexFunction& f, const std::vector<cplx>& vertices,
                    const WindingOptions& opts = {});

struct Rect {
    double re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0;

    double width() const { return re_max - re_min; }
    double height() const { return im_max - im_min; }
    cplx center() const { return {0.5 * (re_min + re_max), 0.5 * (im_min + im_max)}; }
    double half_diagonal() const { return 0.5 * std::hypot(width(), height()); }
    bool contains(cplx z) const {
        return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min && z.imag() <= im_max;
    }
    /// Counter-clockwise corners starting at the lower-left one.
    std::vector<cplx> corners() const;
};

struct ZeroCertificate {
    cplx center;
    double radius = 0.0;
    int winding = 0;
    double min_modulus_on_circle = 0.0;
    std::string method;
};

struct LocateOptions {
    int grid = 8;                      // initial cells per side
    double certificate_radius = 1e-3;  // leaves are refined down to this half-diagonal
    double min_size = 1e-9;            // no subdivision below this side length
    int max_perturbations = 5;
    WindingOptions winding;
    std::string method = "ArgumentPrinciple";
};

struct LocateResult {
    std::vector<ZeroCertificate> certificates;  // sorted by (Re, Im) of the centre
    int region_winding = 0;
    Rect region;  // possibly perturbed
    int evaluations = 0;
};

/// Adaptive subdivision on winding numbers. Leaves become circle certificates
/// whose windings are re-verified on the circle itself.
LocateResult locate_zeros(const ComplexFunction& f, const Rect& region,
                          const LocateOptions& opts = {});

}  // namespace zetalab
