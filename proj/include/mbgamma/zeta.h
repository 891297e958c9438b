#pragma once

#include <complex>

#include "mbgamma/weights.h"

namespace mbgamma {

using cplx = std::complex<double>;

/// Settings for the split-integral continuation
///   Gamma(s) zeta_r(s, w; omega) = I1(s) + I2(s) + I3(s),
///   I1 = int_1^inf f e^{-wt} t^{s-1},  I2 = sum_{k=-r}^{n} a_{r,k} / (s+k),
///   I3 = int_0^1 (f e^{-wt} - sum_{k=-r}^{n} a_{r,k} t^k) t^{s-1},
/// valid for Re(s) > -n - 1, where n is expansion_order.
struct ContinuationConfig {
    int expansion_order = 8;
    double quad_rel_tol = 1e-11;
    /// On [0, switch_point] the Laurent expansion up to k = n + tail_terms is integrated term by term;
    /// capped at a quarter of the convergence radius 2 pi / max|omega_i|.
    double switch_point = 0.75;
    int tail_terms = 25;
    /// Truncation of I1 at T with Re(w) (T - 1) - (Re(s) - 1) log T >= truncation_scale.
    double truncation_scale = 45.0;
    /// Cauchy circle around s = -k used for limits and derivatives.
    int circle_nodes = 64;
    double circle_radius = 0.5;
    double circle_tol = 1e-10;

    /// Throws std::invalid_argument unless the settings are usable at s.
    void validate_for(cplx s) const;
};

struct ZetaArgument {
    cplx s;
    cplx w;
    Weights omega;
};

/// Lattice sum over 0 <= n_i <= cutoff plus a midpoint-integral tail estimate.
/// Requires Re(s) >= r + 1.5, r <= 2, cutoff >= 100 (DomainError otherwise).
cplx zeta_direct(const ZetaArgument& arg, int cutoff);

/// Default cutoff for zeta_direct: 4000 for r <= 1, 1500 per axis for r = 2.
int default_direct_cutoff(int r);

/// Analytic continuation via the split integral. PoleError at s in {1..r}; DomainError at
/// s in {0, -1, -2, ...} (use zeta_special_value or zeta_limit there) and for Re(w) <= 0.
cplx zeta_continued(const ZetaArgument& arg, const ContinuationConfig& cfg = {});

/// zeta_r(-n, w; omega) = (-1)^n n! a_{r,n}(w; omega).
cplx zeta_special_value(int n, cplx w, const Weights& omega);

/// zeta_r(-n, w; omega) as the mean of zeta_continued over the circle |s + n| = circle_radius.
/// Needs expansion_order >= n + 1.
cplx zeta_limit(int n, cplx w, const Weights& omega, const ContinuationConfig& cfg = {});

/// d/ds zeta_r(s, w; omega) at s = -k by the Cauchy integral over |s + k| = circle_radius with
/// the trapezoidal rule; the node count is doubled once and the two results must agree to
/// circle_tol * max(1, |value|), else AccuracyError. Needs expansion_order >= k + 2.
cplx zeta_derivative(int k, cplx w, const Weights& omega, const ContinuationConfig& cfg = {});

/// Picks the evaluation path: special value at nonpositive integers, the direct sum where it
/// is a valid oracle, the continuation elsewhere.
cplx zeta(cplx s, cplx w, const Weights& omega, const ContinuationConfig& cfg = {});

}  // namespace mbgamma
