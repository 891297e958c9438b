#pragma once

#include <complex>
#include <optional>

#include "mbgamma/bernoulli.h"
#include "mbgamma/kernel.h"
#include "mbgamma/special.h"
#include "mbgamma/weights.h"
#include "mbgamma/zeta.h"

namespace mbgamma {

using cplx = std::complex<double>;

/// The Hankel path I(lambda, inf): the ray from +inf to lambda (arg t = 0), the circle
/// |t| = lambda counterclockwise, and the ray from lambda back to +inf (arg t = 2 pi).
struct ContourConfig {
    /// Explicit radius; when unset the radius is
    ///   min(lambda_fraction * min_i |2 pi / w_i|, w_scale / |w|).
    std::optional<double> lambda;
    double lambda_fraction = 0.5;
    /// Caps |w| lambda, which bounds |e^{-wt}| on the circle by e^{w_scale}.
    double w_scale = 1.0;
    int circle_nodes = 256;
    double line_rel_tol = 1e-11;
    /// Ray truncated at T = lambda + line_truncation_scale / Re(w) (lengthened when t^{-k-1} grows).
    double line_truncation_scale = 45.0;
    /// Evaluate the circle again with 2 * circle_nodes and require agreement.
    bool self_check = true;
    double self_check_tol = 1e-9;

    /// The loop radius for this (w, omega). Throws std::invalid_argument when the radius is not
    /// strictly inside the pole radius or circle_nodes is odd or below 32.
    double radius_for(cplx w, const Weights& omega) const;
};

struct AnalyticConstants {
    double euler_gamma = kEulerGamma;
    Rational harmonic_exact(int k) const;
    double harmonic(int k) const { return mbgamma::harmonic(k); }
};

struct ContourEvaluation {
    cplx value;
    double lambda = 0.0;
    /// |value(2N nodes) - value(N nodes)|; zero when the self-check is disabled.
    double doubling_delta = 0.0;
};

/// (1/2 pi i) int_{I(lambda,inf)} f_omega(t) e^{-wt} t^{-k-1} log t dt.
///
/// The two rays combine into int_lambda^T f e^{-wt} t^{-k-1} dt. On the circle, with Laurent
/// coefficients c_m of G = f e^{-wt} t^{-k-1} and log t = log lambda + i theta, the loop term is
///   c_{-1} (log lambda + i pi) + sum_{m != -1} c_m lambda^{m+1} / (m+1);
/// the c_m lambda^m are read off a discrete Fourier transform of G on the circle.
ContourEvaluation hankel_log_integral(int k, cplx w, const Weights& omega, const ContourConfig& cfg = {});

/// The same integral by walking the three pieces of the path separately, with log t carried
/// explicitly on each piece and adaptive quadrature everywhere. Reference route for the
/// reduction above.
cplx hankel_log_integral_traversal(int k, cplx w, const Weights& omega, double lambda, double rel_tol = 1e-12);

/// Modified BM gamma function
///   P_r(k, w; omega) = (1/2 pi i) int_{I(lambda,inf)} f e^{-wt} t^{-k-1} log t dt + (gamma - pi i) a_{r,k}(w; omega),
/// k >= -r. P_r(0, .) = log Gamma_r. Throws AccuracyError when the node-doubling check fails.
cplx hankel_P(int k, cplx w, const Weights& omega, const ContourConfig& cfg = {},
              const AnalyticConstants& consts = {});

/// hankel_P with the contour diagnostics.
ContourEvaluation hankel_P_checked(int k, cplx w, const Weights& omega, const ContourConfig& cfg = {},
                                   const AnalyticConstants& consts = {});

/// log Gamma_r(w; omega) from the Hankel representation
///   (1/2 pi i) int f e^{-wt} (log t / t) dt + (gamma - pi i) zeta_r(0, w; omega).
cplx log_gamma_r(cplx w, const Weights& omega, const ContourConfig& cfg = {});

/// log Gamma_{r,k}(w; omega) = d/ds zeta_r(s, w; omega) at s = -k (Cauchy-circle route).
/// The expansion order is raised to k + 2 when needed.
cplx log_gamma_rk(int k, cplx w, const Weights& omega, const ContinuationConfig& cfg = {});

/// log Gamma_{r,k} from the contour:  (-1)^k k! (P_r(k, w; omega) - H_k a_{r,k}(w; omega)).
cplx log_gamma_rk_contour(int k, cplx w, const Weights& omega, const ContourConfig& cfg = {});

/// P_0(n, w; empty) = ((-1)^n / n!) (H_n - log w) w^n.
cplx P0_closed(int n, cplx w);

}  // namespace mbgamma
