#include "mbgamma/special.h"

#include <array>
#include <cmath>
#include <numbers>

namespace mbgamma {

namespace {

// B_{2j} / (2j (2j-1)), j = 1..8
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,          1.0 / 1260.0,        -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0,     1.0 / 156.0,         -3617.0 / 122400.0};

cplx log_gamma_large(cplx z) {
    const cplx inv = 1.0 / z;
    const cplx inv2 = inv * inv;
    cplx series{0.0, 0.0};
    for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) series = series * inv2 + *it;
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series * inv;
}

cplx reciprocal_gamma_right(cplx s) {
    cplx shift{1.0, 0.0};
    while (std::abs(s) < 15.0 || s.real() < 0.5) {
        shift *= s;
        s += 1.0;
    }
    return shift * std::exp(-log_gamma_large(s));
}

cplx gamma_right(cplx s) {
    cplx shift{1.0, 0.0};
    while (std::abs(s) < 15.0 || s.real() < 0.5) {
        shift *= s;
        s += 1.0;
    }
    return std::exp(log_gamma_large(s)) / shift;
}

}  // namespace

cplx sin_pi(cplx s) {
    const double n = std::round(s.real());
    const double x = s.real() - n;
    const double sign = std::fmod(std::abs(n), 2.0) == 1.0 ? -1.0 : 1.0;
    const double y = std::numbers::pi * s.imag();
    const double px = std::numbers::pi * x;
    return sign * cplx(std::sin(px) * std::cosh(y), std::cos(px) * std::sinh(y));
}

cplx reciprocal_gamma(cplx s) {
    if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::round(s.real())) return {0.0, 0.0};
    if (s.real() >= 0.5) return reciprocal_gamma_right(s);
    return sin_pi(s) * gamma_right(1.0 - s) / std::numbers::pi;
}

double harmonic(int k) {
    double h = 0.0;
    for (int j = k; j >= 1; --j) h += 1.0 / j;
    return h;
}

}  // namespace mbgamma
