#pragma once

// Transfer operator of a Schottky group acting on holomorphic functions on the
// union of the disks:
//   (L_s f)_b(z) = Σ_{a ≠ −b} (g_a'(z))^s f_a(g_a z),   z ∈ D_b,
// discretized in the monomial bases ((z − c_b)/r_b)^n, n < N, by the trapezoid
// rule on the disk boundaries. Block (b, a) carries the extra factor
// (r_b/r_a)^s, a similarity that leaves the determinant unchanged but keeps the
// entries bounded for large Re s. det(I − L_s) continues Z_S to the whole plane.

#include <Eigen/Dense>

#include <vector>

#include "zetalab/contour.hpp"
#include "zetalab/schottky.hpp"

namespace zetalab {

constexpr int kDefaultBasisOrder = 20;

struct TransferOptions {
    int basis_order = kDefaultBasisOrder;
    int quadrature_factor = 4;  // nodes per circle = factor · N
    int max_refinements = 3;
};

struct TransferMatrix {
    cplx s;
    int basis_order = 0;
    int quadrature_nodes = 0;
    std::vector<Letter> letters;  // block order
    Eigen::MatrixXcd matrix;      // rows (b, n), columns (a, m)

    Eigen::MatrixXcd block(int row_disk, int col_disk) const;
    /// Largest ratio |column N−1| / |column N−2| over the nonzero blocks.
    double column_decay_ratio() const;
};

TransferMatrix build_transfer_matrix(const SchottkyGroup& group, cplx s,
                                     const TransferOptions& opts = {});
inline TransferMatrix build_transfer_matrix(const SchottkyGroup& group, cplx s, int n) {
    TransferOptions o;
    o.basis_order = n;
    return build_transfer_matrix(group, s, o);
}

struct LogDeterminant {
    double log_abs = 0.0;  // log |det|; −inf for an exactly singular matrix
    double arg = 0.0;      // in (−π, π]
    cplx value() const;
};

/// det(I − L_s) by partial-pivoting LU, accumulated in log-magnitude form.
LogDeterminant log_fredholm_det(const SchottkyGroup& group, cplx s,
                                const TransferOptions& opts = {});
cplx fredholm_det(const SchottkyGroup& group, cplx s, const TransferOptions& opts = {});
inline cplx fredholm_det(const SchottkyGroup& group, cplx s, int n) {
    TransferOptions o;
    o.basis_order = n;
    return fredholm_det(group, s, o);
}

/// Eigenvalue of largest modulus of the discretized L_s.
cplx leading_eigenvalue(const SchottkyGroup& group, double s, const TransferOptions& opts = {});

struct HausdorffResult {
    double delta = 0.0;  // eigenvalue method
    double delta_determinant = 0.0;
    double agreement = 0.0;  // |delta − delta_determinant|
};

/// Root in (1e−3, 1 − 1e−3) of λ_max(L_s) = 1, cross-checked with the largest
/// real zero of det(I − L_s). Throws NoBracketing (always for rank 1).
HausdorffResult hausdorff_dimension(const SchottkyGroup& group, double tol = 1e-12,
                                    const TransferOptions& opts = {});

/// Zeros of det(I − L_s) in a rectangle.
LocateResult locate_zeros(const SchottkyGroup& group, const Rect& region,
                          const TransferOptions& topts = {}, LocateOptions lopts = {});

}  // namespace zetalab
