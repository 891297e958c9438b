#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace mbgamma {

using cplx = std::complex<double>;

struct QuadratureOptions {
    double rel_tol = 1e-11;
    double abs_tol = 0.0;
    int max_intervals = 4000;
};

struct QuadratureResult {
    cplx value;
    double error = 0.0;
    int intervals = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod quadrature of a complex-valued integrand over
/// [breakpoints.front(), breakpoints.back()], starting from the given partition. Stops when
/// the summed |K15 - G7| estimate drops below max(abs_tol, rel_tol * |value|); throws
/// AccuracyError when max_intervals is exhausted first.
QuadratureResult integrate(const std::function<cplx(double)>& f, std::span<const double> breakpoints,
                           const QuadratureOptions& options = {});

QuadratureResult integrate(const std::function<cplx(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

/// Geometric partition a, 2a, 4a, ... of [a, b] (a > 0), ending exactly at b.
std::vector<double> geometric_breakpoints(double a, double b);

}  // namespace mbgamma
