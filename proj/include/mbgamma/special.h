#pragma once

#include <complex>

namespace mbgamma {

using cplx = std::complex<double>;

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// 1/Gamma(s), entire. Exact zero at s = 0, -1, -2, ...
///
/// Shifts s upward until |s| >= 15, where the Stirling series for log Gamma is summed to
/// double precision, and divides out the shift factors. For Re(s) < 1/2 the reflection
/// 1/Gamma(s) = sin(pi s) Gamma(1 - s) / pi is used with sin(pi s) evaluated on the reduced
/// argument, so values next to the zeros keep full relative accuracy.
cplx reciprocal_gamma(cplx s);

/// H_k = sum_{j=1}^k 1/j, H_0 = 0.
double harmonic(int k);

/// sin(pi s) with the real part of s reduced mod 2 before scaling by pi.
cplx sin_pi(cplx s);

}  // namespace mbgamma
