#include "mbgamma/bm_gamma.h"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbgamma/errors.h"
#include "mbgamma/quadrature.h"

namespace mbgamma {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

constexpr int kSmallTerms = 10;

// x / (1 - e^{-x}) = sum_n c_n x^n, taken from the inverse of sum_m (-x)^m / (m+1)!
const std::array<cplx, kSmallTerms>& small_argument_coefficients() {
    static const std::array<cplx, kSmallTerms> coeffs = [] {
        const LaurentSeries inv = omega_kernel_series(Weights{1.0}, kSmallTerms - 2).shifted(1);
        std::array<cplx, kSmallTerms> c{};
        for (int n = 0; n < kSmallTerms; ++n) c[n] = inv[n];
        return c;
    }();
    return coeffs;
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void require_rank_and_half_plane(int k, cplx w, const Weights& omega) {
    if (k < -omega.rank())
        throw DomainError("P_r(k, .) needs k >= -r (k = " + std::to_string(k) + ", r = " +
                          std::to_string(omega.rank()) + ")");
    if (!(w.real() > 0.0)) throw DomainError("w must have positive real part");
}

double ray_limit(int k, cplx w, double lambda, double scale) {
    const double growth = std::max(0, -k - 1);
    double t = lambda + scale / w.real();
    for (int i = 0; i < 6; ++i) t = lambda + (scale + growth * std::log(std::max(1.0, t / lambda))) / w.real();
    return t;
}

// Loop term (1/2 pi i) \oint G(t) (log lambda + i theta) dt from G sampled at
// lambda e^{2 pi i j / nodes}, j = 0 .. nodes-1 (every `stride`-th entry of `samples`).
cplx circle_term(const std::vector<cplx>& samples, int stride, double lambda) {
    const int n = static_cast<int>(samples.size()) / stride;
    std::vector<cplx> roots(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) roots[j] = std::polar(1.0, -2.0 * kPi * j / n);

    const cplx log_term = std::log(lambda) + kI * kPi;
    cplx acc{0.0, 0.0};
    for (int j = 0; j < n; ++j) {
        const cplx g = samples[static_cast<std::size_t>(j * stride)];
        // sum over m in (-n/2, n/2), m != -1, of e^{-i m theta_j} / (m + 1); d_{-1} carries the log
        cplx weight = log_term * std::conj(roots[j]);
        for (int m = -n / 2 + 1; m < n / 2; ++m) {
            if (m == -1) continue;
            const int idx = ((m * j) % n + n) % n;
            weight += roots[idx] / static_cast<double>(m + 1);
        }
        acc += g * weight;
    }
    return lambda * acc / static_cast<double>(n);
}

}  // namespace

cplx f_omega_eval(cplx t, const Weights& omega) {
    if (t == cplx{0.0, 0.0}) throw DomainError("f_omega has a pole of order r at t = 0");
    cplx prod{1.0, 0.0};
    for (const cplx& om : omega.entries()) {
        const cplx x = om * t;
        const double m = std::round(x.imag() / (2.0 * kPi));
        if (m != 0.0 && std::abs(x - cplx(0.0, 2.0 * kPi * m)) < 1e-8)
            throw PoleError("t is within 1e-8 of a pole of f_omega");
        if (std::abs(x) < 1e-2) {
            const auto& c = small_argument_coefficients();
            cplx acc{0.0, 0.0};
            for (int n = kSmallTerms - 1; n >= 0; --n) acc = acc * x + c[n];
            prod *= acc / x;
        } else {
            prod /= 1.0 - std::exp(-x);
        }
    }
    return prod;
}

double ContourConfig::radius_for(cplx w, const Weights& omega) const {
    if (circle_nodes < 32 || circle_nodes % 2 != 0)
        throw std::invalid_argument("circle_nodes must be even and at least 32");
    const double bound = omega.pole_radius();
    double radius;
    if (lambda) {
        radius = *lambda;
    } else {
        if (!(lambda_fraction > 0.0 && lambda_fraction < 1.0))
            throw std::invalid_argument("lambda_fraction must lie in (0, 1)");
        radius = std::min(lambda_fraction * bound, w_scale / std::abs(w));
    }
    if (!(radius > 0.0 && radius < bound))
        throw std::invalid_argument("contour radius " + std::to_string(radius) +
                                    " must lie strictly between 0 and min|2 pi / w_i| = " + std::to_string(bound));
    return radius;
}

Rational AnalyticConstants::harmonic_exact(int k) const {
    Rational h = 0;
    for (int j = 1; j <= k; ++j) h += Rational(1, j);
    return h;
}

ContourEvaluation hankel_log_integral(int k, cplx w, const Weights& omega, const ContourConfig& cfg) {
    require_rank_and_half_plane(k, w, omega);
    const double lambda = cfg.radius_for(w, omega);

    auto integrand = [&](cplx t) { return f_omega_eval(t, omega) * std::exp(-w * t) * std::pow(t, -k - 1); };

    const double upper = ray_limit(k, w, lambda, cfg.line_truncation_scale);
    const cplx ray = integrate([&](double t) { return integrand(t); }, geometric_breakpoints(lambda, upper),
                               {cfg.line_rel_tol, 0.0})
                         .value;

    const int nodes = cfg.self_check ? 2 * cfg.circle_nodes : cfg.circle_nodes;
    std::vector<cplx> samples(static_cast<std::size_t>(nodes));
    for (int j = 0; j < nodes; ++j) samples[j] = integrand(lambda * std::polar(1.0, 2.0 * kPi * j / nodes));

    ContourEvaluation out;
    out.lambda = lambda;
    if (cfg.self_check) {
        const cplx coarse = ray + circle_term(samples, 2, lambda);
        out.value = ray + circle_term(samples, 1, lambda);
        out.doubling_delta = std::abs(out.value - coarse);
    } else {
        out.value = ray + circle_term(samples, 1, lambda);
    }
    return out;
}

cplx hankel_log_integral_traversal(int k, cplx w, const Weights& omega, double lambda, double rel_tol) {
    require_rank_and_half_plane(k, w, omega);
    if (!(lambda > 0.0 && lambda < omega.pole_radius()))
        throw std::invalid_argument("lambda must lie strictly inside the pole radius");
    auto g = [&](cplx t) { return f_omega_eval(t, omega) * std::exp(-w * t) * std::pow(t, -k - 1); };
    const double upper = ray_limit(k, w, lambda, 45.0);
    const auto bp = geometric_breakpoints(lambda, upper);
    const QuadratureOptions opts{rel_tol, 0.0};

    // incoming ray, +inf -> lambda, arg t = 0
    const cplx incoming = -integrate([&](double t) { return g(t) * std::log(t); }, bp, opts).value;
    // circle, theta 0 -> 2 pi, log t = log lambda + i theta
    std::vector<double> arc;
    for (int j = 0; j <= 16; ++j) arc.push_back(2.0 * kPi * j / 16);
    const cplx loop = integrate(
                          [&](double theta) {
                              const cplx e = std::polar(1.0, theta);
                              return g(lambda * e) * (std::log(lambda) + kI * theta) * kI * lambda * e;
                          },
                          arc, opts)
                          .value;
    // outgoing ray, lambda -> +inf, arg t = 2 pi
    const cplx outgoing =
        integrate([&](double t) { return g(t) * (std::log(t) + 2.0 * kPi * kI); }, bp, opts).value;
    return (incoming + loop + outgoing) / (2.0 * kPi * kI);
}

ContourEvaluation hankel_P_checked(int k, cplx w, const Weights& omega, const ContourConfig& cfg,
                                   const AnalyticConstants& consts) {
    ContourEvaluation eval = hankel_log_integral(k, w, omega, cfg);
    eval.value += (consts.euler_gamma - kI * kPi) * multiple_bernoulli_closed(k, w, omega);
    if (cfg.self_check && eval.doubling_delta > cfg.self_check_tol * std::max(1.0, std::abs(eval.value)))
        throw AccuracyError("contour circle changed under node doubling", eval.doubling_delta);
    return eval;
}

cplx hankel_P(int k, cplx w, const Weights& omega, const ContourConfig& cfg, const AnalyticConstants& consts) {
    return hankel_P_checked(k, w, omega, cfg, consts).value;
}

cplx log_gamma_r(cplx w, const Weights& omega, const ContourConfig& cfg) {
    const ContourEvaluation eval = hankel_log_integral(0, w, omega, cfg);
    const cplx value = eval.value + (kEulerGamma - kI * kPi) * zeta_special_value(0, w, omega);
    if (cfg.self_check && eval.doubling_delta > cfg.self_check_tol * std::max(1.0, std::abs(value)))
        throw AccuracyError("contour circle changed under node doubling", eval.doubling_delta);
    return value;
}

cplx log_gamma_rk(int k, cplx w, const Weights& omega, const ContinuationConfig& cfg) {
    ContinuationConfig adjusted = cfg;
    adjusted.expansion_order = std::max(cfg.expansion_order, k + 2);
    return zeta_derivative(k, w, omega, adjusted);
}

cplx log_gamma_rk_contour(int k, cplx w, const Weights& omega, const ContourConfig& cfg) {
    if (k < 0) throw DomainError("log Gamma_{r,k} needs k >= 0");
    const cplx p = hankel_P(k, w, omega, cfg);
    const double sign = (k % 2) ? -1.0 : 1.0;
    return sign * factorial(k) * (p - harmonic(k) * multiple_bernoulli_closed(k, w, omega));
}

cplx P0_closed(int n, cplx w) {
    if (n < 0) throw DomainError("P0_closed needs n >= 0");
    if (!(w.real() > 0.0)) throw DomainError("w must have positive real part");
    const double sign = (n % 2) ? -1.0 : 1.0;
    return sign / factorial(n) * (harmonic(n) - std::log(w)) * std::pow(w, n);
}

}  // namespace mbgamma
