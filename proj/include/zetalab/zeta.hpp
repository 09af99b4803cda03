#pragma once

// Selberg and Ruelle zeta functions as Euler products over a length spectrum:
//   log Z_S(s) = Σ_γ Σ_{k=0}^{k_max} Log(1 − e^{−(s+k)ℓ(γ)})
//   log Z_X(λ) = Σ_γ Σ_{m=1}^{m_max} m·Log(1 − e^{−(λ+m)ℓ(γ)})

#include <string>

#include "zetalab/schottky.hpp"

namespace zetalab {

enum class ZetaMethod { EulerProduct, TransferDeterminant };
enum class ZetaFunction { Selberg, Ruelle };

const char* to_string(ZetaMethod m);
const char* to_string(ZetaFunction f);

struct ZetaEvaluation {
    cplx s;
    cplx log_value;
    cplx value;
    /// Estimated truncation error on log_value; +inf when no estimate exists
    /// (for instance left of the abscissa of convergence).
    double tail_bound = 0.0;
    ZetaMethod method = ZetaMethod::EulerProduct;
};

constexpr int kDefaultKMax = 64;
constexpr int kDefaultPMax = 48;

/// Throws SpectrumEmpty when the spectrum has no geodesics.
ZetaEvaluation selberg_zeta(cplx s, const LengthSpectrum& spec, int k_max = kDefaultKMax);
ZetaEvaluation ruelle_zeta(cplx lambda, const LengthSpectrum& spec, int m_max = kDefaultKMax);

/// |e^{−kℓ/2}(1−e^{−kℓ})^{−1} − Σ_{p=0}^{p_max} e^{−kℓ(1/2+p)}|.
double poincare_identity_check(double length, int k, int p_max);
/// e^{−kℓ(3/2+p_max)} / (1 − e^{−kℓ}).
double poincare_identity_bound(double length, int k, int p_max);

struct FactorizationResult {
    /// |log Z_X(λ) − Σ_{p=1}^{p_max} log Z_S(λ+p)|
    double residual = 0.0;
    /// |log Z_S(λ) − (log Z_X(λ−1) − log Z_X(λ))|, imaginary part taken mod 2π
    double quotient_residual = 0.0;
    /// Sum of the tail bounds of every evaluation involved.
    double tail_bound = 0.0;
};

FactorizationResult factorization_check(cplx lambda, const LengthSpectrum& spec,
                                        int p_max = kDefaultPMax, int k_max = kDefaultKMax);

}  // namespace zetalab
