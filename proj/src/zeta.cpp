#include "zetalab/zeta.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Truncation estimate: k-tails of the included classes, full contributions of
// the enumerated classes beyond the cutoff, and a geometric extrapolation of
// the word-length shells that were never enumerated.
template <typename FullBound, typename KTailBound>
double tail_estimate(const LengthSpectrum& spec, FullBound full, KTailBound ktail) {
    double total = 0.0;
    std::map<std::size_t, double> shell;
    for (const auto& g : spec.geodesics) {
        total += ktail(g.length);
        shell[g.class_word.size()] += full(g.length);
    }
    for (const auto& g : spec.tail) {
        const double b = full(g.length);
        total += b;
        shell[g.class_word.size()] += b;
    }
    // Shell sums need not decrease from one word length to the next (minimal
    // lengths often repeat in pairs), so the decay rate is read off two steps
    // apart and the larger of the last two shells is extrapolated.
    const auto w = static_cast<std::size_t>(spec.max_word_length);
    auto at = [&](std::size_t k) { return k >= 1 && shell.count(k) ? shell[k] : 0.0; };
    const double last = std::max(at(w), at(w - 1));
    if (last > 0.0) {
        double q = 0.0;
        if (w >= 3) {
            for (std::size_t k : {w, w - 1}) {
                if (!(at(k - 2) > 0.0)) return kInf;
                q = std::max(q, std::sqrt(at(k) / at(k - 2)));
            }
        } else {
            if (!(at(w - 1) > 0.0)) return kInf;
            q = at(w) / at(w - 1);
        }
        if (!(q < 1.0)) return kInf;
        // Shell ratios fluctuate by tens of percent; the factor 2 absorbs that.
        total += 2.0 * last * q / (1.0 - q);
    }
    return std::isfinite(total) ? total : kInf;
}

// log(1 − x) without the cancellation of forming 1 − x for small |x|.
cplx log1m(cplx x) {
    if (std::abs(x) >= 0.05) return std::log(1.0 - x);
    cplx sum = 0.0, power = x;
    for (int n = 1; n < 40; ++n) {
        const cplx term = power / static_cast<double>(n);
        sum -= term;
        if (std::abs(term) < 1e-18 * std::abs(x)) break;
        power *= x;
    }
    return sum;
}

// Accumulated rounding of a sum of terms with the given total magnitude.
double rounding_bound(double magnitude) {
    return 32.0 * std::numeric_limits<double>::epsilon() * magnitude;
}

void require_nonempty(const LengthSpectrum& spec) {
    if (spec.geodesics.empty()) {
        throw SpectrumEmpty("no primitive geodesic of length <= " + std::to_string(spec.cutoff));
    }
}

double wrap_phase(double x) {
    return std::remainder(x, 2.0 * std::numbers::pi);
}

}  // namespace

const char* to_string(ZetaMethod m) {
    return m == ZetaMethod::EulerProduct ? "EulerProduct" : "TransferDeterminant";
}

const char* to_string(ZetaFunction f) {
    return f == ZetaFunction::Selberg ? "selberg" : "ruelle";
}

ZetaEvaluation selberg_zeta(cplx s, const LengthSpectrum& spec, int k_max) {
    require_nonempty(spec);
    if (k_max < 0) throw BadInput("k_max must be nonnegative");
    cplx log_value = 0.0;
    double magnitude = 0.0;
    for (const auto& g : spec.geodesics) {
        for (int k = 0; k <= k_max; ++k) {
            const cplx term = log1m(std::exp(-(s + static_cast<double>(k)) * g.length));
            log_value += term;
            magnitude += std::abs(term);
        }
    }
    const double sigma = s.real();
    auto full = [&](double l) {
        const double a = std::exp(-sigma * l), r = std::exp(-l);
        return a < 1.0 ? a / ((1.0 - r) * (1.0 - a)) : kInf;
    };
    auto ktail = [&](double l) {
        const double a = std::exp(-(sigma + k_max + 1) * l), r = std::exp(-l);
        return a < 1.0 ? a / ((1.0 - r) * (1.0 - a)) : kInf;
    };
    return {s, log_value, std::exp(log_value),
            tail_estimate(spec, full, ktail) + rounding_bound(magnitude), ZetaMethod::EulerProduct};
}

ZetaEvaluation ruelle_zeta(cplx lambda, const LengthSpectrum& spec, int m_max) {
    require_nonempty(spec);
    if (m_max < 1) throw BadInput("m_max must be positive");
    cplx log_value = 0.0;
    double magnitude = 0.0;
    for (const auto& g : spec.geodesics) {
        for (int m = 1; m <= m_max; ++m) {
            const cplx term = static_cast<double>(m) *
                              log1m(std::exp(-(lambda + static_cast<double>(m)) * g.length));
            log_value += term;
            magnitude += std::abs(term);
        }
    }
    const double sigma = lambda.real();
    // Σ_{m≥n} m r^m = r^n (n − (n−1) r) / (1 − r)^2
    auto weighted = [](double r, int n) {
        return std::pow(r, n) * (n - (n - 1) * r) / ((1.0 - r) * (1.0 - r));
    };
    auto full = [&](double l) {
        const double a = std::exp(-(sigma + 1.0) * l), r = std::exp(-l);
        return a < 1.0 ? std::exp(-sigma * l) * weighted(r, 1) / (1.0 - a) : kInf;
    };
    auto ktail = [&](double l) {
        const double a = std::exp(-(sigma + m_max + 1) * l), r = std::exp(-l);
        return a < 1.0 ? std::exp(-sigma * l) * weighted(r, m_max + 1) / (1.0 - a) : kInf;
    };
    return {lambda, log_value, std::exp(log_value),
            tail_estimate(spec, full, ktail) + rounding_bound(magnitude), ZetaMethod::EulerProduct};
}

double poincare_identity_check(double length, int k, int p_max) {
    if (!(length > 0.0) || k < 1 || p_max < 0) throw BadInput("need l > 0, k >= 1, p_max >= 0");
    // The residual is exactly the geometric tail, far below the rounding
    // error of the O(1/kl) closed form in double precision.
    using Big = boost::multiprecision::cpp_bin_float_100;
    const Big kl = Big(k) * Big(length);
    const Big closed = exp(-kl / 2) / (1 - exp(-kl));
    Big partial = 0;
    for (int p = p_max; p >= 0; --p) partial += exp(-kl * (Big(p) + Big(1) / 2));
    return static_cast<double>(abs(closed - partial));
}

double poincare_identity_bound(double length, int k, int p_max) {
    return std::exp(-k * length * (1.5 + p_max)) / (1.0 - std::exp(-k * length));
}

FactorizationResult factorization_check(cplx lambda, const LengthSpectrum& spec, int p_max,
                                        int k_max) {
    if (p_max < 1) throw BadInput("p_max must be positive");
    FactorizationResult out;
    const ZetaEvaluation zx = ruelle_zeta(lambda, spec, k_max);
    cplx sum = 0.0;
    out.tail_bound = zx.tail_bound;
    for (int p = 1; p <= p_max; ++p) {
        const ZetaEvaluation zs = selberg_zeta(lambda + static_cast<double>(p), spec, k_max);
        sum += zs.log_value;
        out.tail_bound += zs.tail_bound;
    }
    const cplx d = zx.log_value - sum;
    out.residual = std::abs(cplx(d.real(), wrap_phase(d.imag())));

    const ZetaEvaluation zs = selberg_zeta(lambda, spec, k_max - 1);
    const ZetaEvaluation zx_shift = ruelle_zeta(lambda - 1.0, spec, k_max);
    const cplx q = zs.log_value - (zx_shift.log_value - zx.log_value);
    out.quotient_residual = std::abs(cplx(q.real(), wrap_phase(q.imag())));
    out.tail_bound += zs.tail_bound + zx_shift.tail_bound;
    return out;
}

}  // namespace zetalab
