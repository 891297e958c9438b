#include "mbgamma/zeta.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbgamma/bernoulli.h"
#include "mbgamma/errors.h"
#include "mbgamma/kernel.h"
#include "mbgamma/quadrature.h"
#include "mbgamma/special.h"

namespace mbgamma {

namespace {

bool is_integer(cplx s) { return s.imag() == 0.0 && s.real() == std::round(s.real()); }

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void require_right_half_plane(cplx w) {
    if (!(w.real() > 0.0)) throw DomainError("w must have positive real part");
}

// I1 upper limit: the integrand decays like e^{-Re(w) t} t^{Re(s)-1}.
double outer_limit(cplx s, cplx w, double scale) {
    const double growth = std::max(0.0, s.real() - 1.0);
    double t = 1.0 + scale / w.real();
    for (int i = 0; i < 6; ++i) t = 1.0 + (scale + growth * std::log(t)) / w.real();
    return t;
}

struct CircleSamples {
    std::vector<cplx> values;  // zeta at -k + rho e^{i theta_j}, theta_j = 2 pi j / size
    std::vector<cplx> nodes;   // e^{i theta_j}
};

CircleSamples sample_circle(int k, cplx w, const Weights& omega, const ContinuationConfig& cfg, int nodes) {
    CircleSamples out;
    out.values.reserve(static_cast<std::size_t>(nodes));
    out.nodes.reserve(static_cast<std::size_t>(nodes));
    for (int j = 0; j < nodes; ++j) {
        const cplx e = std::polar(1.0, 2.0 * std::numbers::pi * j / nodes);
        out.nodes.push_back(e);
        out.values.push_back(zeta_continued({-static_cast<double>(k) + cfg.circle_radius * e, w, omega}, cfg));
    }
    return out;
}

// (1/N) sum_j g_j e^{-i m theta_j} over every `stride`-th node
cplx circle_moment(const CircleSamples& c, int m, int stride) {
    cplx acc{0.0, 0.0};
    int count = 0;
    for (std::size_t j = 0; j < c.values.size(); j += static_cast<std::size_t>(stride), ++count)
        acc += c.values[j] * std::pow(std::conj(c.nodes[j]), m);
    return acc / static_cast<double>(count);
}

}  // namespace

void ContinuationConfig::validate_for(cplx s) const {
    const int needed = std::max(0, static_cast<int>(std::ceil(-s.real())));
    if (expansion_order < needed)
        throw std::invalid_argument("expansion_order " + std::to_string(expansion_order) +
                                    " too small for Re(s) = " + std::to_string(s.real()) + " (need " +
                                    std::to_string(needed) + ")");
    if (!(switch_point > 0.0 && switch_point < 1.0))
        throw std::invalid_argument("switch_point must lie in (0, 1)");
    if (tail_terms < 1 || circle_nodes < 4 || !(circle_radius > 0.0 && circle_radius < 1.0) ||
        !(quad_rel_tol > 0.0))
        throw std::invalid_argument("invalid continuation settings");
}

int default_direct_cutoff(int r) { return r <= 1 ? 4000 : 1500; }

cplx zeta_direct(const ZetaArgument& arg, int cutoff) {
    const int r = arg.omega.rank();
    const cplx s = arg.s;
    const cplx w = arg.w;
    require_right_half_plane(w);
    if (r > 2) throw DomainError("direct lattice summation is limited to r <= 2");
    if (s.real() < r + 1.5) throw DomainError("direct summation needs Re(s) >= r + 1.5");
    if (cutoff < 100) throw DomainError("direct summation needs cutoff >= 100");

    auto term = [&](cplx base) { return std::exp(-s * std::log(base)); };
    const double edge = cutoff + 0.5;

    if (r == 0) return term(w);
    if (r == 1) {
        const cplx om = arg.omega[0];
        cplx sum{0.0, 0.0};
        for (int n = cutoff; n >= 0; --n) sum += term(static_cast<double>(n) * om + w);
        return sum + std::exp((1.0 - s) * std::log(edge * om + w)) / (om * (s - 1.0));
    }

    const cplx om1 = arg.omega[0];
    const cplx om2 = arg.omega[1];
    cplx sum{0.0, 0.0};
    for (int n1 = cutoff; n1 >= 0; --n1) {
        const cplx base = static_cast<double>(n1) * om1 + w;
        cplx row{0.0, 0.0};
        for (int n2 = cutoff; n2 >= 0; --n2) row += term(base + static_cast<double>(n2) * om2);
        // n2 > cutoff strip for this n1, and the mirror strip n1 -> n2
        row += std::exp((1.0 - s) * std::log(edge * om2 + base)) / (om2 * (s - 1.0));
        row += std::exp((1.0 - s) * std::log(edge * om1 + static_cast<double>(n1) * om2 + w)) /
               (om1 * (s - 1.0));
        sum += row;
    }
    sum += std::exp((2.0 - s) * std::log(edge * (om1 + om2) + w)) / (om1 * om2 * (s - 1.0) * (s - 2.0));
    return sum;
}

cplx zeta_continued(const ZetaArgument& arg, const ContinuationConfig& cfg) {
    const int r = arg.omega.rank();
    const cplx s = arg.s;
    const cplx w = arg.w;
    require_right_half_plane(w);
    if (is_integer(s)) {
        const double re = s.real();
        if (re >= 1.0 && re <= r) throw PoleError("zeta_r has a pole at s = " + std::to_string(static_cast<int>(re)));
        if (re <= 0.0)
            throw DomainError("s is a nonpositive integer; use zeta_special_value or zeta_limit");
    }
    cfg.validate_for(s);

    // Gamma(s) zeta = int_sp^inf f e^{-wt} t^{s-1} dt + sum_k a_k sp^{k+s} / (k+s).
    // The sum is the termwise integral over [0, sp] of the Laurent expansion (I2 plus the I3 head
    // subtraction folded together); the remaining integrand carries no subtraction and hence no cancellation.
    const int n = cfg.expansion_order;
    const LaurentSeries series = multiple_bernoulli_series(w, arg.omega, n + cfg.tail_terms);
    const auto a = series.coeffs();  // a[k + r] = a_{r,k}

    // keep the truncated tail inside a quarter of the convergence radius 2 pi / max|omega_i|
    const double sp = std::min(cfg.switch_point, 0.25 * arg.omega.pole_radius());
    const double log_sp = std::log(sp);
    cplx head{0.0, 0.0};
    double head_scale = 0.0;
    for (int k = n + cfg.tail_terms; k >= -r; --k) {
        const cplx e = s + static_cast<double>(k);
        const cplx term = a[static_cast<std::size_t>(k + r)] * std::exp(e * log_sp) / e;
        head += term;
        head_scale = std::max(head_scale, std::abs(term));
    }

    auto integrand = [&](double t) { return f_omega_eval(t, arg.omega) * std::exp(-w * t + (s - 1.0) * std::log(t)); };
    const QuadratureOptions opts{cfg.quad_rel_tol, 1e-2 * cfg.quad_rel_tol * std::max(head_scale, 1e-300)};
    const double upper = outer_limit(s, w, cfg.truncation_scale);
    const cplx body = integrate(integrand, geometric_breakpoints(sp, upper), opts).value;

    return reciprocal_gamma(s) * (body + head);
}

cplx zeta_special_value(int n, cplx w, const Weights& omega) {
    if (n < 0) throw DomainError("special values are defined at s = -n with n >= 0");
    require_right_half_plane(w);
    const double sign = (n % 2) ? -1.0 : 1.0;
    return sign * factorial(n) * multiple_bernoulli_closed(n, w, omega);
}

cplx zeta_limit(int n, cplx w, const Weights& omega, const ContinuationConfig& cfg) {
    if (n < 0) throw DomainError("zeta_limit needs n >= 0");
    if (cfg.expansion_order < n + 1)
        throw std::invalid_argument("zeta_limit at s = -" + std::to_string(n) + " needs expansion_order >= " +
                                    std::to_string(n + 1));
    const CircleSamples c = sample_circle(n, w, omega, cfg, 2 * cfg.circle_nodes);
    const cplx coarse = circle_moment(c, 0, 2);
    const cplx fine = circle_moment(c, 0, 1);
    const double delta = std::abs(fine - coarse);
    if (delta > cfg.circle_tol * std::max(1.0, std::abs(fine)))
        throw AccuracyError("Cauchy-circle limit did not settle under node doubling", delta);
    return fine;
}

cplx zeta_derivative(int k, cplx w, const Weights& omega, const ContinuationConfig& cfg) {
    if (k < 0) throw DomainError("zeta_derivative needs k >= 0");
    if (cfg.expansion_order < k + 2)
        throw std::invalid_argument("zeta_derivative at s = -" + std::to_string(k) +
                                    " needs expansion_order >= " + std::to_string(k + 2));
    const CircleSamples c = sample_circle(k, w, omega, cfg, 2 * cfg.circle_nodes);
    const cplx coarse = circle_moment(c, 1, 2) / cfg.circle_radius;
    const cplx fine = circle_moment(c, 1, 1) / cfg.circle_radius;
    const double delta = std::abs(fine - coarse);
    if (delta > cfg.circle_tol * std::max(1.0, std::abs(fine)))
        throw AccuracyError("Cauchy-circle derivative did not settle under node doubling", delta);
    return fine;
}

cplx zeta(cplx s, cplx w, const Weights& omega, const ContinuationConfig& cfg) {
    if (is_integer(s) && s.real() <= 0.0) return zeta_special_value(static_cast<int>(-s.real()), w, omega);
    if (omega.empty()) return zeta_direct({s, w, omega}, default_direct_cutoff(0));
    ContinuationConfig adjusted = cfg;
    adjusted.expansion_order = std::max(cfg.expansion_order, static_cast<int>(std::ceil(-s.real())));
    return zeta_continued({s, w, omega}, adjusted);
}

}  // namespace mbgamma
