#pragma once

// PSL(2,R) acting on the upper half-plane and, through the Cayley map, on the
// unit disk.  The unit tangent bundle of the disk is identified with the group
// itself: g <-> (g(0), ½ dg(0)·∂x) in the disk picture.

#include <array>
#include <complex>
#include <utility>

namespace zetalab {

using cplx = std::complex<double>;

/// A plain 2×2 real matrix; used for Lie-algebra elements (trace zero, not
/// unimodular) and for raw products before normalization.
struct Mat2 {
    double a = 0, b = 0, c = 0, d = 0;

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                x.c * y.b + x.d * y.d};
    }
    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    friend Mat2 operator*(double s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
    double det() const { return a * d - b * c; }
    double max_abs() const;
};

Mat2 commutator(const Mat2& x, const Mat2& y);

/// Element of SU(1,1): w -> (alpha w + beta) / (conj(beta) w + conj(alpha)).
struct DiskMap {
    cplx alpha{1.0, 0.0};
    cplx beta{0.0, 0.0};

    cplx apply(cplx w) const {
        return (alpha * w + beta) / (std::conj(beta) * w + std::conj(alpha));
    }
};

/// Orientation-preserving isometry of H^2: a unimodular real matrix modulo
/// sign.  The stored representative has det = 1 (renormalized when the drift
/// exceeds 1e-13) and its first nonzero entry in (a,b,c,d) order positive.
class MoebiusMap {
public:
    MoebiusMap() = default;

    /// Builds from matrix entries; any positive determinant is accepted and
    /// scaled away. Throws BadInput when det <= 0 or an entry is not finite.
    static MoebiusMap from_entries(double a, double b, double c, double d);

    static MoebiusMap identity() { return {}; }
    /// z -> e^l z in the half-plane.
    static MoebiusMap dilation(double length);
    /// Rotation of the disk by angle `theta` about the origin.
    static MoebiusMap disk_rotation(double theta);

    double a() const { return m_[0]; }
    double b() const { return m_[1]; }
    double c() const { return m_[2]; }
    double d() const { return m_[3]; }
    Mat2 matrix() const { return {m_[0], m_[1], m_[2], m_[3]}; }

    double trace() const { return m_[0] + m_[3]; }
    double det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

    MoebiusMap inverse() const;
    friend MoebiusMap operator*(const MoebiusMap& f, const MoebiusMap& g);

    /// Action on the upper half-plane (and on the extended real line).
    cplx apply(cplx z) const { return (a() * z + b()) / (c() * z + d()); }
    /// Derivative of the half-plane action: (cz + d)^-2.
    cplx derivative(cplx z) const {
        const cplx q = c() * z + d();
        return 1.0 / (q * q);
    }

    DiskMap to_disk() const;
    cplx apply_disk(cplx w) const { return to_disk().apply(w); }

    /// Exact comparison of canonical representatives.
    bool operator==(const MoebiusMap& other) const = default;
    bool approx_equal(const MoebiusMap& other, double tol) const;

private:
    explicit MoebiusMap(std::array<double, 4> m) : m_(m) {}
    void normalize();
    void canonicalize_sign();

    std::array<double, 4> m_{1.0, 0.0, 0.0, 1.0};
};

inline MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g) {
    return f * g;
}

enum class MoebiusClass { Identity, Elliptic, Parabolic, Hyperbolic };

const char* to_string(MoebiusClass k);

/// Classification by |tr|: < 2 elliptic, = 2 (within 1e-12) parabolic unless
/// the map is the identity, > 2 hyperbolic.
MoebiusClass classify(const MoebiusMap& g);

/// 2 arccosh(|tr g| / 2). Throws NotHyperbolic.
double translation_length(const MoebiusMap& g);

/// A point e^{i angle} of the unit circle; angle kept in [0, 2pi).
class BoundaryPoint {
public:
    BoundaryPoint() = default;
    explicit BoundaryPoint(double angle);
    static BoundaryPoint from_complex(cplx w) { return BoundaryPoint(std::arg(w)); }
    /// Image of a point of the extended real line under the Cayley map;
    /// +-infinity maps to angle 0.
    static BoundaryPoint from_half_plane(double x);

    double angle() const { return angle_; }
    cplx point() const { return std::polar(1.0, angle_); }
    /// Inverse Cayley image on the real line; +infinity for angle 0.
    double to_half_plane() const;

private:
    double angle_ = 0.0;
};

/// Signed angular distance in (-pi, pi].
double angular_distance(BoundaryPoint p, BoundaryPoint q);

/// (repelling, attracting) fixed points on the circle. Throws NotHyperbolic.
std::pair<BoundaryPoint, BoundaryPoint> fixed_points(const MoebiusMap& g);

BoundaryPoint apply_boundary(const MoebiusMap& g, BoundaryPoint nu);

/// |dg(nu)| for the Euclidean metric on the unit circle; N_g(nu) is its reciprocal.
double boundary_derivative_norm(const MoebiusMap& g, BoundaryPoint nu);

cplx cayley(cplx z);          // H -> D, z -> (z - i)/(z + i)
cplx inverse_cayley(cplx w);  // D -> H

// ---------------------------------------------------------------------------
// Unit tangent bundle and left-invariant flows.

enum class Generator { X, UPlus, UMinus, V, XPerp };

const char* to_string(Generator g);

/// The sl(2,R) basis matrices.
Mat2 lie_matrix(Generator g);

/// exp(t A) in closed form for each basis generator.
MoebiusMap exp_generator(Generator g, double t);

/// A point (x, v) of the unit tangent bundle of the disk, stored as the
/// group element carrying (0, ∂x-direction) to it.
struct UnitTangentPoint {
    MoebiusMap g;

    /// Base point in the disk (|z| < 1).
    cplx base_point() const;
    /// e^{i theta} with 2v/(1-|z|^2) = cos(theta)∂x1 + sin(theta)∂x2.
    cplx direction() const;
};

/// y · exp(t A).
UnitTangentPoint flow(const UnitTangentPoint& y, Generator gen, double t);

/// Left action of an isometry on the unit tangent bundle.
inline UnitTangentPoint act(const MoebiusMap& gamma, const UnitTangentPoint& y) {
    return {gamma * y.g};
}

/// (B-, B+): backward and forward endpoints of the geodesic through y.
std::pair<BoundaryPoint, BoundaryPoint> endpoint_maps(const UnitTangentPoint& y);

/// B_z^{-1}: circle diffeomorphism inverting e^{i theta} -> B-(z, e^{i theta}).
cplx endpoint_inverse(cplx z, cplx boundary);

/// (1 - |x|^2) / |x - nu|^2. Throws PointOnBoundary when |x| >= 1 - 1e-12.
double poisson_kernel(cplx x, BoundaryPoint nu);

/// (Φ-, Φ+) = P(x, B±(x, v)).
std::pair<double, double> phi_pm(const UnitTangentPoint& y);

}  // namespace zetalab
