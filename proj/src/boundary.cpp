#include "zetalab/boundary.hpp"

#include <cmath>
#include <numbers>

#include "zetalab/errors.hpp"
#include "zetalab/special.hpp"

namespace zetalab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Neumaier compensated sum, applied to real and imaginary parts separately.
class CompensatedSum {
public:
    void add(cplx v) {
        add_part(sum_re_, comp_re_, v.real());
        add_part(sum_im_, comp_im_, v.imag());
    }
    cplx value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

private:
    static void add_part(double& sum, double& comp, double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    double sum_re_ = 0.0, comp_re_ = 0.0, sum_im_ = 0.0, comp_im_ = 0.0;
};

}  // namespace

FourierDistribution::FourierDistribution(std::map<int, cplx> coeffs) {
    for (const auto& [k, c] : coeffs) {
        if (c != cplx(0.0)) coeffs_.emplace(k, c);
    }
}

cplx FourierDistribution::coeff(int k) const {
    const auto it = coeffs_.find(k);
    return it == coeffs_.end() ? cplx(0.0) : it->second;
}

int FourierDistribution::max_mode() const {
    int m = 0;
    for (const auto& [k, c] : coeffs_) m = std::max(m, std::abs(k));
    return m;
}

bool FourierDistribution::is_real(double tol) const {
    for (const auto& [k, c] : coeffs_) {
        if (std::abs(coeff(-k) - std::conj(c)) > tol) return false;
    }
    return true;
}

cplx FourierDistribution::operator()(double alpha) const {
    cplx v = 0.0;
    for (const auto& [k, c] : coeffs_) v += c * std::polar(1.0, k * alpha);
    return v;
}

cplx scattering_eigenvalue(int k, cplx s) {
    if (is_nonpositive_integer(s, 0.0)) {
        throw AtPole("scattering operator has a pole at s = " + std::to_string(s.real()));
    }
    const double m = std::abs(k);
    return gamma(m + s) * rgamma(m + 1.0 - s);
}

ScatteringMultiplier scattering_multiplier(cplx s, int max_mode) {
    ScatteringMultiplier out{s, {}};
    for (int k = -max_mode; k <= max_mode; ++k) {
        out.eigenvalues[k] = scattering_eigenvalue(k, s);
    }
    return out;
}

FourierDistribution scattering_apply(cplx s, const FourierDistribution& omega) {
    std::map<int, cplx> out;
    for (const auto& [k, c] : omega.coeffs()) out[k] = scattering_eigenvalue(k, s) * c;
    return FourierDistribution(std::move(out));
}

cplx integrate_circle(const std::function<cplx(double)>& f, const QuadratureOptions& opts) {
    int m = std::max(opts.initial_nodes, 2);
    CompensatedSum sum;
    for (int j = 0; j < m; ++j) sum.add(f(kTwoPi * j / m));
    cplx estimate = sum.value() * (kTwoPi / m);
    while (2 * m <= opts.max_nodes) {
        // Doubling only needs the new odd nodes.
        for (int j = 0; j < m; ++j) sum.add(f(kTwoPi * (2 * j + 1) / (2 * m)));
        m *= 2;
        const cplx next = sum.value() * (kTwoPi / m);
        const double scale = std::max(1.0, std::abs(next));
        if (std::abs(next - estimate) < opts.tol * scale) return next;
        estimate = next;
    }
    throw QuadratureStall("trapezoid rule did not settle within " + std::to_string(opts.max_nodes) +
                          " nodes");
}

cplx poisson_helgason(cplx lambda, const std::function<cplx(double)>& density, cplx x,
                      const QuadratureOptions& opts) {
    if (std::abs(x) >= 1.0 - 1e-12) throw PointOnBoundary("Poisson-Helgason needs |x| < 1");
    const cplx power = 1.0 + lambda;
    return integrate_circle(
        [&](double alpha) {
            const double p = poisson_kernel(x, BoundaryPoint(alpha));
            return density(alpha) * std::exp(power * std::log(p));
        },
        opts);
}

cplx poisson_helgason(cplx lambda, const FourierDistribution& omega, cplx x,
                      const QuadratureOptions& opts) {
    return poisson_helgason(lambda, [&](double a) { return omega(a); }, x, opts);
}

double harmonicity_residual(cplx lambda, const FourierDistribution& omega, cplx x, double h) {
    if (!(h > 0.0) || std::abs(x) + 2.0 * h >= 1.0) {
        throw BadInput("harmonicity check needs h > 0 and |x| + 2h < 1");
    }
    auto f = [&](cplx p) { return poisson_helgason(lambda, omega, p); };
    const cplx centre = f(x);
    const cplx ih(0.0, h);
    const cplx lap = (f(x + h) + f(x - h) + f(x + ih) + f(x - ih) - 4.0 * centre) / (h * h);
    const double conformal = std::pow(1.0 - std::norm(x), 2) / 4.0;
    return std::abs(-conformal * lap + lambda * (1.0 + lambda) * centre);
}

double kernel_check_Pn(int n, int k, const std::vector<cplx>& samples) {
    if (n < 1) throw BadInput("kernel check needs n >= 1");
    const auto omega = FourierDistribution::mode(k);
    double worst = 0.0;
    for (cplx z : samples) {
        worst = std::max(worst, std::abs(poisson_helgason(-static_cast<double>(n), omega, z)));
    }
    return worst;
}

double equivariance_residual(cplx lambda, const FourierDistribution& omega, const MoebiusMap& gamma,
                             cplx x) {
    const cplx gx = gamma.apply_disk(x);
    const cplx lhs = poisson_helgason(lambda, omega, gx);
    auto pulled_back = [&](double alpha) {
        const BoundaryPoint nu(alpha);
        const double jac = boundary_derivative_norm(gamma, nu);
        return std::exp(-lambda * std::log(jac)) * omega(apply_boundary(gamma, nu).angle());
    };
    const cplx rhs = poisson_helgason(lambda, pulled_back, x);
    return std::abs(lhs - rhs);
}

MoebiusMap exp_lie(const Mat2& a, double t) {
    if (std::abs(a.a + a.d) > 1e-14 * std::max(1.0, a.max_abs())) {
        throw BadInput("exp_lie needs a trace-free matrix");
    }
    const double q = -a.det();
    double c = 1.0, s = t;
    if (q > 0.0) {
        const double r = std::sqrt(q);
        c = std::cosh(r * t);
        s = std::sinh(r * t) / r;
    } else if (q < 0.0) {
        const double r = std::sqrt(-q);
        c = std::cos(r * t);
        s = std::sin(r * t) / r;
    }
    return MoebiusMap::from_entries(c + s * a.a, s * a.b, s * a.c, c + s * a.d);
}

double lie_derivative(const BundleFunction& f, const UnitTangentPoint& y, const Mat2& a, double h) {
    const double fp = f({y.g * exp_lie(a, h)});
    const double fm = f({y.g * exp_lie(a, -h)});
    return (fp - fm) / (2.0 * h);
}

double lie_second_derivative(const BundleFunction& f, const UnitTangentPoint& y, const Mat2& a,
                             double h) {
    const double fp = f({y.g * exp_lie(a, h)});
    const double fm = f({y.g * exp_lie(a, -h)});
    return (fp - 2.0 * f(y) + fm) / (h * h);
}

double lie_mixed_derivative(const BundleFunction& f, const UnitTangentPoint& y, const Mat2& a,
                            const Mat2& b, double h) {
    const BundleFunction bf = [&](const UnitTangentPoint& p) { return lie_derivative(f, p, b, h); };
    return lie_derivative(bf, y, a, h);
}

double casimir_test_function(const UnitTangentPoint& y) {
    const auto [phi_minus, phi_plus] = phi_pm(y);
    return phi_plus + 0.5 * phi_minus * phi_minus + y.base_point().real() * y.direction().imag();
}

CasimirReport casimir_report(const UnitTangentPoint& y, double h, const BundleFunction& f) {
    // Main grouping along the closed-form basis flows.
    auto second = [&](Generator gen) {
        const double fp = f(flow(y, gen, h));
        const double fm = f(flow(y, gen, -h));
        return (fp - 2.0 * f(y) + fm) / (h * h);
    };
    const Mat2 x = lie_matrix(Generator::X);
    const Mat2 v = lie_matrix(Generator::V);
    const Mat2 um = lie_matrix(Generator::UMinus);

    CasimirReport r;
    const double xx = second(Generator::X);
    const double vv = second(Generator::V);
    r.omega_main = xx + second(Generator::XPerp) - vv;

    const double x2 = lie_second_derivative(f, y, x, h);
    const double v2 = lie_second_derivative(f, y, v, h);
    r.omega_ref = x2 - v2 + lie_second_derivative(f, y, um + v, h);
    r.residual = std::abs(r.omega_main - r.omega_ref);

    r.literal_grouping = x2 - v2 + lie_second_derivative(f, y, 2.0 * um + v, h);
    r.literal_expanded = x2 - lie_derivative(f, y, x, h) + 4.0 * lie_derivative(f, y, um, h) +
                         4.0 * lie_mixed_derivative(f, y, v, um, h);
    return r;
}

double casimir_residual(const UnitTangentPoint& y, double h, const BundleFunction& f) {
    return casimir_report(y, h, f).residual;
}

}  // namespace zetalab
