#pragma once

// Model-space calculus on the disk and its boundary circle: Fourier
// densities, the scattering multiplier, the Poisson-Helgason transform and
// finite-difference checks of the operators acting on the unit tangent bundle.

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "zetalab/moebius.hpp"

namespace zetalab {

/// Trigonometric polynomial density ω(e^{iα}) = Σ c_k e^{ikα} against dα.
class FourierDistribution {
public:
    FourierDistribution() = default;
    explicit FourierDistribution(std::map<int, cplx> coeffs);

    static FourierDistribution constant(cplx c) { return FourierDistribution({{0, c}}); }
    static FourierDistribution mode(int k, cplx c = 1.0) { return FourierDistribution({{k, c}}); }

    const std::map<int, cplx>& coeffs() const { return coeffs_; }
    cplx coeff(int k) const;
    int max_mode() const;
    /// c_{-k} = conj(c_k) within `tol`.
    bool is_real(double tol = 0.0) const;

    cplx operator()(double alpha) const;

private:
    std::map<int, cplx> coeffs_;
};

/// σ_k(s) = Γ(|k|+s) / Γ(|k|+1-s). Throws AtPole for s in -N0.
cplx scattering_eigenvalue(int k, cplx s);

struct ScatteringMultiplier {
    cplx s;
    std::map<int, cplx> eigenvalues;
};

ScatteringMultiplier scattering_multiplier(cplx s, int max_mode);

FourierDistribution scattering_apply(cplx s, const FourierDistribution& omega);

struct QuadratureOptions {
    double tol = 1e-12;
    int initial_nodes = 64;
    int max_nodes = 1 << 16;
};

/// ∫_0^{2π} f(α) dα by the trapezoid rule, doubling until two successive
/// estimates agree to tol·max(1,|I|). Throws QuadratureStall.
cplx integrate_circle(const std::function<cplx(double)>& f, const QuadratureOptions& opts = {});

/// 𝒫_λ(ω)(x) = ∫ ω(ν) P(x,ν)^{1+λ} dα.
cplx poisson_helgason(cplx lambda, const FourierDistribution& omega, cplx x,
                      const QuadratureOptions& opts = {});

/// Same transform for a density given pointwise.
cplx poisson_helgason(cplx lambda, const std::function<cplx(double)>& density, cplx x,
                      const QuadratureOptions& opts = {});

/// |(Δ_H + λ(1+λ)) 𝒫_λ(ω)(x)| with a 5-point stencil of step h.
double harmonicity_residual(cplx lambda, const FourierDistribution& omega, cplx x, double h);

/// max over `samples` of |𝒫_{-n}(e^{ikα})(z)|.
double kernel_check_Pn(int n, int k, const std::vector<cplx>& samples);

/// |𝒫_λ(ω)(γx) − 𝒫_λ(|dγ|^{-λ} ω∘γ)(x)|.
double equivariance_residual(cplx lambda, const FourierDistribution& omega, const MoebiusMap& gamma,
                             cplx x);

// ---------------------------------------------------------------------------
// Second-order operators on the unit tangent bundle by nested differences.

using BundleFunction = std::function<double(const UnitTangentPoint&)>;

/// exp(tA) for a trace-free 2×2 matrix A, closed form through A² = -det(A)·I.
MoebiusMap exp_lie(const Mat2& a, double t);

/// A f(y) by a central difference along y·exp(tA).
double lie_derivative(const BundleFunction& f, const UnitTangentPoint& y, const Mat2& a, double h);
/// A² f(y) by the second central difference along y·exp(tA).
double lie_second_derivative(const BundleFunction& f, const UnitTangentPoint& y, const Mat2& a,
                             double h);
/// A(B f)(y) by nested central differences.
double lie_mixed_derivative(const BundleFunction& f, const UnitTangentPoint& y, const Mat2& a,
                            const Mat2& b, double h);

/// Smooth test function used when none is given: Φ₊ + ½Φ₋² + Re(x)·Im(dir).
double casimir_test_function(const UnitTangentPoint& y);

struct CasimirReport {
    double omega_main = 0.0;        // (X² + X⊥² − V²) f
    double omega_ref = 0.0;         // (X² − V² + (U₋+V)²) f
    double residual = 0.0;          // |omega_main − omega_ref|
    double literal_grouping = 0.0;  // (X² − V² + (2U₋+V)²) f, reported only
    double literal_expanded = 0.0;  // (X² − X + 4U₋ + 4VU₋) f, reported only
};

CasimirReport casimir_report(const UnitTangentPoint& y, double h,
                             const BundleFunction& f = casimir_test_function);

/// |omega_main − omega_ref| from casimir_report.
double casimir_residual(const UnitTangentPoint& y, double h,
                        const BundleFunction& f = casimir_test_function);

}  // namespace zetalab
