#include "zetalab/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

constexpr double kDetDrift = 1e-13;
constexpr double kTraceBand = 1e-12;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

double Mat2::max_abs() const {
    return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

Mat2 commutator(const Mat2& x, const Mat2& y) {
    return x * y - y * x;
}

MoebiusMap MoebiusMap::from_entries(double a, double b, double c, double d) {
    for (double v : {a, b, c, d}) {
        if (!std::isfinite(v)) throw BadInput("non-finite matrix entry");
    }
    const double det = a * d - b * c;
    if (!(det > 0.0)) throw BadInput("matrix determinant must be positive");
    const double s = 1.0 / std::sqrt(det);
    MoebiusMap m({a * s, b * s, c * s, d * s});
    m.normalize();
    return m;
}

MoebiusMap MoebiusMap::dilation(double length) {
    return from_entries(std::exp(0.5 * length), 0.0, 0.0, std::exp(-0.5 * length));
}

MoebiusMap MoebiusMap::disk_rotation(double theta) {
    // Disk action w -> e^{i theta} w; fixes i in the half-plane.
    return exp_generator(Generator::V, theta);
}

void MoebiusMap::normalize() {
    const double det = this->det();
    if (std::abs(det - 1.0) > kDetDrift) {
        const double s = 1.0 / std::sqrt(det);
        for (double& v : m_) v *= s;
    }
    canonicalize_sign();
}

void MoebiusMap::canonicalize_sign() {
    for (double v : m_) {
        if (v != 0.0) {
            if (v < 0.0) {
                for (double& w : m_) w = -w;
            }
            break;
        }
    }
}

MoebiusMap MoebiusMap::inverse() const {
    // The adjugate has the same determinant, so only the sign is fixed; this
    // keeps |tr g| and |tr g^-1| bitwise equal.
    MoebiusMap r({d(), -b(), -c(), a()});
    r.canonicalize_sign();
    return r;
}

MoebiusMap operator*(const MoebiusMap& f, const MoebiusMap& g) {
    MoebiusMap r({f.a() * g.a() + f.b() * g.c(), f.a() * g.b() + f.b() * g.d(),
                  f.c() * g.a() + f.d() * g.c(), f.c() * g.b() + f.d() * g.d()});
    r.normalize();
    return r;
}

DiskMap MoebiusMap::to_disk() const {
    return {cplx(0.5 * (a() + d()), 0.5 * (b() - c())),
            cplx(0.5 * (a() - d()), -0.5 * (b() + c()))};
}

bool MoebiusMap::approx_equal(const MoebiusMap& other, double tol) const {
    double diff = 0.0;
    for (int i = 0; i < 4; ++i) diff = std::max(diff, std::abs(m_[i] - other.m_[i]));
    return diff <= tol;
}

const char* to_string(MoebiusClass k) {
    switch (k) {
        case MoebiusClass::Identity:
            return "Identity";
        case MoebiusClass::Elliptic:
            return "Elliptic";
        case MoebiusClass::Parabolic:
            return "Parabolic";
        case MoebiusClass::Hyperbolic:
            return "Hyperbolic";
    }
    return "?";
}

MoebiusClass classify(const MoebiusMap& g) {
    const double t = std::abs(g.trace());
    if (t < 2.0 - kTraceBand) return MoebiusClass::Elliptic;
    if (t > 2.0 + kTraceBand) return MoebiusClass::Hyperbolic;
    if (std::abs(g.b()) <= kTraceBand && std::abs(g.c()) <= kTraceBand &&
        std::abs(g.a() - g.d()) <= kTraceBand) {
        return MoebiusClass::Identity;
    }
    return MoebiusClass::Parabolic;
}

double translation_length(const MoebiusMap& g) {
    if (classify(g) != MoebiusClass::Hyperbolic) {
        throw NotHyperbolic("translation length needs |tr| > 2");
    }
    return 2.0 * std::acosh(0.5 * std::abs(g.trace()));
}

BoundaryPoint::BoundaryPoint(double angle) {
    double a = std::fmod(angle, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a -= kTwoPi;
    angle_ = a;
}

BoundaryPoint BoundaryPoint::from_half_plane(double x) {
    if (std::isinf(x)) return BoundaryPoint(0.0);
    return from_complex(cayley(cplx(x, 0.0)));
}

double BoundaryPoint::to_half_plane() const {
    if (angle_ == 0.0) return std::numeric_limits<double>::infinity();
    return -1.0 / std::tan(0.5 * angle_);
}

double angular_distance(BoundaryPoint p, BoundaryPoint q) {
    double d = std::fmod(q.angle() - p.angle(), kTwoPi);
    if (d > std::numbers::pi) d -= kTwoPi;
    if (d <= -std::numbers::pi) d += kTwoPi;
    return d;
}

std::pair<BoundaryPoint, BoundaryPoint> fixed_points(const MoebiusMap& g) {
    if (classify(g) != MoebiusClass::Hyperbolic) {
        throw NotHyperbolic("fixed points requested for a non-hyperbolic map");
    }
    const DiskMap m = g.to_disk();
    // conj(beta) w^2 + (conj(alpha) - alpha) w - beta = 0 with discriminant
    // 4((Re alpha)^2 - 1) > 0.
    const double root = std::sqrt(m.alpha.real() * m.alpha.real() - 1.0);
    const cplx im(0.0, m.alpha.imag());
    const cplx cb = std::conj(m.beta);
    const BoundaryPoint p = BoundaryPoint::from_complex((im + root) / cb);
    const BoundaryPoint q = BoundaryPoint::from_complex((im - root) / cb);
    if (boundary_derivative_norm(g, p) < 1.0) return {q, p};
    return {p, q};
}

BoundaryPoint apply_boundary(const MoebiusMap& g, BoundaryPoint nu) {
    return BoundaryPoint::from_complex(g.apply_disk(nu.point()));
}

double boundary_derivative_norm(const MoebiusMap& g, BoundaryPoint nu) {
    const DiskMap m = g.to_disk();
    return 1.0 / std::norm(std::conj(m.beta) * nu.point() + std::conj(m.alpha));
}

cplx cayley(cplx z) {
    const cplx i(0.0, 1.0);
    return (z - i) / (z + i);
}

cplx inverse_cayley(cplx w) {
    const cplx i(0.0, 1.0);
    return i * (1.0 + w) / (1.0 - w);
}

const char* to_string(Generator g) {
    switch (g) {
        case Generator::X:
            return "X";
        case Generator::UPlus:
            return "U+";
        case Generator::UMinus:
            return "U-";
        case Generator::V:
            return "V";
        case Generator::XPerp:
            return "Xperp";
    }
    return "?";
}

Mat2 lie_matrix(Generator g) {
    switch (g) {
        case Generator::X:
            return {0.5, 0.0, 0.0, -0.5};
        case Generator::UPlus:
            return {0.0, 1.0, 0.0, 0.0};
        case Generator::UMinus:
            return {0.0, 0.0, 1.0, 0.0};
        case Generator::V:
            return {0.0, 0.5, -0.5, 0.0};
        case Generator::XPerp:
            return {0.0, 0.5, 0.5, 0.0};
    }
    return {};
}

MoebiusMap exp_generator(Generator g, double t) {
    switch (g) {
        case Generator::X:
            return MoebiusMap::from_entries(std::exp(0.5 * t), 0.0, 0.0, std::exp(-0.5 * t));
        case Generator::UPlus:
            return MoebiusMap::from_entries(1.0, t, 0.0, 1.0);
        case Generator::UMinus:
            return MoebiusMap::from_entries(1.0, 0.0, t, 1.0);
        case Generator::V: {
            const double c = std::cos(0.5 * t), s = std::sin(0.5 * t);
            return MoebiusMap::from_entries(c, s, -s, c);
        }
        case Generator::XPerp: {
            const double c = std::cosh(0.5 * t), s = std::sinh(0.5 * t);
            return MoebiusMap::from_entries(c, s, s, c);
        }
    }
    return {};
}

cplx UnitTangentPoint::base_point() const {
    const DiskMap m = g.to_disk();
    return m.beta / std::conj(m.alpha);
}

cplx UnitTangentPoint::direction() const {
    const DiskMap m = g.to_disk();
    const cplx u = m.alpha / std::conj(m.alpha);
    return u / std::abs(u);
}

UnitTangentPoint flow(const UnitTangentPoint& y, Generator gen, double t) {
    return {y.g * exp_generator(gen, t)};
}

std::pair<BoundaryPoint, BoundaryPoint> endpoint_maps(const UnitTangentPoint& y) {
    const cplx z = y.base_point();
    const cplx e = y.direction();
    const cplx zb = std::conj(z);
    const cplx minus = (-e + z) / (-e * zb + 1.0);
    const cplx plus = (e + z) / (e * zb + 1.0);
    return {BoundaryPoint::from_complex(minus), BoundaryPoint::from_complex(plus)};
}

cplx endpoint_inverse(cplx z, cplx boundary) {
    const cplx e = boundary;
    return -e * (z / e - 1.0) / (std::conj(z) * e - 1.0);
}

double poisson_kernel(cplx x, BoundaryPoint nu) {
    const double r2 = std::norm(x);
    if (std::sqrt(r2) >= 1.0 - 1e-12) {
        throw PointOnBoundary("Poisson kernel needs |x| < 1");
    }
    return (1.0 - r2) / std::norm(x - nu.point());
}

std::pair<double, double> phi_pm(const UnitTangentPoint& y) {
    const auto [bm, bp] = endpoint_maps(y);
    const cplx x = y.base_point();
    return {poisson_kernel(x, bm), poisson_kernel(x, bp)};
}

}  // namespace zetalab
