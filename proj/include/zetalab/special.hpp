#pragma once

#include <complex>

namespace zetalab {

using cplx = std::complex<double>;

/// Complex Gamma via the Lanczos approximation (g = 7, 9 coefficients) with
/// reflection for Re z < 1/2. Returns an infinite value at the poles.
cplx gamma(cplx z);

/// 1/Gamma(z); entire, exactly zero at non-positive integers.
cplx rgamma(cplx z);

/// A branch of log Gamma(z) (agrees with the principal branch for Re z >= 1/2).
cplx lgamma(cplx z);

/// True when z is within `tol` of a non-positive integer.
bool is_nonpositive_integer(cplx z, double tol = 1e-14);

}  // namespace zetalab
