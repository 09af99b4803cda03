#include "zetalab/transfer.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

constexpr double kPi = std::numbers::pi;

struct BranchJump {};

Eigen::MatrixXcd assemble(const SchottkyGroup& group, cplx s, int n, int q) {
    const auto letters = group.letters();
    const int k = static_cast<int>(letters.size());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(k * n, k * n);

    // Fourier projection onto ((z − c)/r)^row: E(row, node) = e^{−i row θ}/q.
    std::vector<cplx> unit(q);
    Eigen::MatrixXcd proj(n, q);
    for (int j = 0; j < q; ++j) {
        unit[j] = j == 0 ? cplx(1.0, 0.0) : std::polar(1.0, 2.0 * kPi * j / q);
        cplx w = 1.0 / static_cast<double>(q);
        const cplx step = std::conj(unit[j]);
        for (int row = 0; row < n; ++row) {
            proj(row, j) = w;
            w *= step;
        }
    }

    Eigen::MatrixXcd values(q, n);
    std::vector<cplx> logd(q);
    for (int bi = 0; bi < k; ++bi) {
        const Letter b = letters[bi];
        const Disk& db = group.disk(b);
        for (int ai = 0; ai < k; ++ai) {
            const Letter a = letters[ai];
            if (a == -b) continue;
            const MoebiusMap& g = group.element(a);
            const Disk& da = group.disk(a);
            // Similarity by r^s on each block leaves the determinant alone and
            // measures g' in the normalized disk coordinates, which keeps the
            // entries small for large Re s.
            const double scale = std::log(db.radius / da.radius);
            // log g'(z) along the circle: principal value at the real node,
            // then continued node by node.
            for (int j = 0; j < q; ++j) {
                const cplx z = cplx(db.center, 0.0) + db.radius * unit[j];
                cplx l = std::log(g.derivative(z));
                if (j > 0) {
                    const double shift = std::round((logd[j - 1].imag() - l.imag()) / (2.0 * kPi));
                    l += cplx(0.0, 2.0 * kPi * shift);
                    if (std::abs(l.imag() - logd[j - 1].imag()) > 0.5 * kPi) throw BranchJump{};
                }
                logd[j] = l;
                const cplx weight = std::exp(s * (l + scale));
                const cplx u = (g.apply(z) - da.center) / da.radius;
                cplx p = weight;
                for (int m = 0; m < n; ++m) {
                    values(j, m) = p;
                    p *= u;
                }
            }
            // Closing the loop must come back to the starting branch.
            const double back = logd[0].imag() - logd[q - 1].imag();
            if (std::abs(back) > 0.5 * kPi) {
                throw BranchCutCrossing("log of the branch derivative winds around the circle");
            }
            out.block(bi * n, ai * n, n, n) = proj * values;
        }
    }
    return out;
}

}  // namespace

Eigen::MatrixXcd TransferMatrix::block(int row_disk, int col_disk) const {
    return matrix.block(row_disk * basis_order, col_disk * basis_order, basis_order, basis_order);
}

double TransferMatrix::column_decay_ratio() const {
    const int k = static_cast<int>(letters.size());
    double worst = 0.0;
    if (basis_order < 2) return worst;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            const Eigen::MatrixXcd b = block(i, j);
            const double prev = b.col(basis_order - 2).norm();
            if (prev == 0.0) continue;
            worst = std::max(worst, b.col(basis_order - 1).norm() / prev);
        }
    }
    return worst;
}

TransferMatrix build_transfer_matrix(const SchottkyGroup& group, cplx s,
                                     const TransferOptions& opts) {
    if (opts.basis_order < 1 || opts.quadrature_factor < 1) {
        throw BadInput("basis order and quadrature factor must be positive");
    }
    TransferMatrix t;
    t.s = s;
    t.basis_order = opts.basis_order;
    t.letters = group.letters();
    int q = opts.quadrature_factor * opts.basis_order;
    for (int attempt = 0; attempt <= opts.max_refinements; ++attempt, q *= 2) {
        try {
            t.quadrature_nodes = q;
            t.matrix = assemble(group, s, opts.basis_order, q);
            return t;
        } catch (const BranchJump&) {
        }
    }
    throw BranchCutCrossing("branch of log g' jumped between quadrature nodes after " +
                            std::to_string(opts.max_refinements) + " refinements");
}

cplx LogDeterminant::value() const {
    if (std::isinf(log_abs) && log_abs < 0) return 0.0;
    return std::polar(std::exp(log_abs), arg);
}

LogDeterminant log_fredholm_det(const SchottkyGroup& group, cplx s, const TransferOptions& opts) {
    const TransferMatrix t = build_transfer_matrix(group, s, opts);
    const Eigen::Index dim = t.matrix.rows();
    const Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim) - t.matrix;
    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
    const Eigen::MatrixXcd& packed = lu.matrixLU();
    LogDeterminant out;
    double phase = lu.permutationP().determinant() < 0 ? kPi : 0.0;
    for (Eigen::Index i = 0; i < dim; ++i) {
        const cplx u = packed(i, i);
        if (u == cplx(0.0)) {
            out.log_abs = -std::numeric_limits<double>::infinity();
            return out;
        }
        out.log_abs += std::log(std::abs(u));
        phase += std::arg(u);
    }
    out.arg = std::remainder(phase, 2.0 * kPi);
    return out;
}

cplx fredholm_det(const SchottkyGroup& group, cplx s, const TransferOptions& opts) {
    return log_fredholm_det(group, s, opts).value();
}

cplx leading_eigenvalue(const SchottkyGroup& group, double s, const TransferOptions& opts) {
    const TransferMatrix t = build_transfer_matrix(group, s, opts);
    const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(t.matrix, false);
    cplx best = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        if (std::abs(es.eigenvalues()(i)) > std::abs(best)) best = es.eigenvalues()(i);
    }
    return best;
}

HausdorffResult hausdorff_dimension(const SchottkyGroup& group, double tol,
                                    const TransferOptions& opts) {
    if (group.rank() < 2) {
        throw NoBracketing("elementary group: the limit set is two points and 1 is never crossed");
    }
    constexpr double lo = 1e-3, hi = 1.0 - 1e-3;
    auto tolerance = [tol](double a, double b) { return std::abs(a - b) <= tol; };

    auto excess = [&](double s) { return leading_eigenvalue(group, s, opts).real() - 1.0; };
    const double flo = excess(lo), fhi = excess(hi);
    if (!(flo > 0.0 && fhi < 0.0)) {
        throw NoBracketing("leading eigenvalue does not cross 1 in (1e-3, 1-1e-3)");
    }
    std::uintmax_t iters = 200;
    auto root = boost::math::tools::toms748_solve(excess, lo, hi, flo, fhi, tolerance, iters);
    HausdorffResult out;
    out.delta = 0.5 * (root.first + root.second);

    // Largest real zero of the determinant, scanning down from s = 1 − 1e−3.
    auto det = [&](double s) { return fredholm_det(group, s, opts).real(); };
    double b = hi, fb = det(b);
    double a = b, fa = fb;
    constexpr double step = 0.02;
    while (true) {
        a = std::max(lo, b - step);
        fa = det(a);
        if ((fa > 0.0) != (fb > 0.0)) break;
        if (a <= lo) throw NoBracketing("det(I - L_s) has no real zero in (1e-3, 1-1e-3)");
        b = a;
        fb = fa;
    }
    iters = 200;
    root = boost::math::tools::toms748_solve(det, a, b, fa, fb, tolerance, iters);
    out.delta_determinant = 0.5 * (root.first + root.second);
    out.agreement = std::abs(out.delta - out.delta_determinant);
    return out;
}

LocateResult locate_zeros(const SchottkyGroup& group, const Rect& region,
                          const TransferOptions& topts, LocateOptions lopts) {
    lopts.method = "TransferDeterminant";
    return locate_zeros([&](cplx s) { return fredholm_det(group, s, topts); }, region, lopts);
}

}  // namespace zetalab
