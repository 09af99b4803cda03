#include "zetalab/special.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace zetalab {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

const double kHalfLogTwoPi = 0.5 * std::log(2.0 * std::numbers::pi);

// Lanczos series for Re z >= 1/2: returns (log of the prefactor part, series).
cplx lanczos_log(cplx z) {
    z -= 1.0;
    cplx x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) {
        x += kLanczos[i] / (z + static_cast<double>(i));
    }
    const cplx t = z + kLanczosG + 0.5;
    return kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

bool is_nonpositive_integer(cplx z, double tol) {
    if (std::abs(z.imag()) > tol || z.real() > tol) return false;
    return std::abs(z.real() - std::round(z.real())) <= tol;
}

cplx gamma(cplx z) {
    if (is_nonpositive_integer(z, 0.0)) {
        return {std::numeric_limits<double>::infinity(), 0.0};
    }
    if (z.real() < 0.5) {
        const double pi = std::numbers::pi;
        return pi / (std::sin(pi * z) * gamma(1.0 - z));
    }
    return std::exp(lanczos_log(z));
}

cplx rgamma(cplx z) {
    if (is_nonpositive_integer(z, 0.0)) return 0.0;
    if (z.real() < 0.5) {
        const double pi = std::numbers::pi;
        return std::sin(pi * z) * gamma(1.0 - z) / pi;
    }
    return std::exp(-lanczos_log(z));
}

cplx lgamma(cplx z) {
    if (z.real() < 0.5) {
        const double pi = std::numbers::pi;
        return std::log(pi) - std::log(std::sin(pi * z)) - lgamma(1.0 - z);
    }
    return lanczos_log(z);
}

}  // namespace zetalab
