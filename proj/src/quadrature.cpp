#include "mbgamma/quadrature.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "mbgamma/errors.h"

namespace mbgamma {

namespace {

// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    cplx value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel kronrod15(const std::function<cplx(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const cplx fc = f(center);
    cplx kronrod = fc * kWgk[7];
    cplx gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const cplx sum = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * sum;
        if (j % 2 == 1) gauss += kWg[j / 2] * sum;
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate(const std::function<cplx(double)>& f, std::span<const double> breakpoints,
                           const QuadratureOptions& options) {
    std::priority_queue<Panel> panels;
    cplx total{0.0, 0.0};
    double error = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i + 1] == breakpoints[i]) continue;
        Panel p = kronrod15(f, breakpoints[i], breakpoints[i + 1]);
        total += p.value;
        error += p.error;
        panels.push(p);
    }

    auto converged = [&] { return error <= std::max(options.abs_tol, options.rel_tol * std::abs(total)); };
    while (!panels.empty() && !converged()) {
        if (static_cast<int>(panels.size()) >= options.max_intervals)
            throw AccuracyError("adaptive quadrature exhausted its interval budget", error);
        Panel worst = panels.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // cannot bisect further; accept this panel's contribution as final
            if (!std::isfinite(worst.error)) throw AccuracyError("non-finite integrand", worst.error);
            break;
        }
        panels.pop();
        const Panel left = kronrod15(f, worst.a, mid);
        const Panel right = kronrod15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }
    if (!std::isfinite(total.real()) || !std::isfinite(total.imag()))
        throw AccuracyError("adaptive quadrature produced a non-finite value",
                            std::numeric_limits<double>::infinity());
    return {total, error, static_cast<int>(panels.size())};
}

QuadratureResult integrate(const std::function<cplx(double)>& f, double a, double b,
                           const QuadratureOptions& options) {
    const std::array<double, 2> bp = {a, b};
    return integrate(f, bp, options);
}

std::vector<double> geometric_breakpoints(double a, double b) {
    std::vector<double> bp{a};
    for (double x = 2.0 * a; x < b; x *= 2.0) bp.push_back(x);
    bp.push_back(b);
    return bp;
}

}  // namespace mbgamma
