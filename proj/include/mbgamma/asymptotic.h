#pragma once

#include <complex>
#include <span>
#include <vector>

#include "mbgamma/bm_gamma.h"
#include "mbgamma/weights.h"

namespace mbgamma {

using cplx = std::complex<double>;

/// One instance of the generalized Stirling expansion
///   P_{r+l}(k, w + a; (omega, alpha)) ~ sum_{N=-l}^{r+k} a_{l,N}(a; alpha) P_r(k - N, w; omega).
struct ExpansionSpec {
    Weights omega;
    Weights alpha;
    int k = 0;
    cplx a{0.0, 0.0};

    int r() const noexcept { return omega.rank(); }
    int l() const noexcept { return alpha.rank(); }
    /// Throws DomainError unless l >= 1, k >= -(r + l) and Re(a) >= 0.
    void validate() const;
};

struct ExpansionReport {
    cplx w;
    cplx lhs;
    cplx rhs;
    double residual = 0.0;
};

/// The truncated sum on the right-hand side.
cplx stirling_expand(const ExpansionSpec& spec, cplx w, const ContourConfig& cfg = {});

/// P_{r+l}(k, w + a; (omega, alpha)) evaluated directly on the concatenated weights.
cplx stirling_direct(const ExpansionSpec& spec, cplx w, const ContourConfig& cfg = {});

/// One report per grid point, ordered by |w|.
std::vector<ExpansionReport> residual_report(const ExpansionSpec& spec, std::span<const cplx> grid,
                                             const ContourConfig& cfg = {});

/// Least-squares slope of log(residual) against log|w|. Residuals below 1e-13 are dropped;
/// fewer than four usable points is a DomainError.
double decay_slope(std::span<const ExpansionReport> reports);

/// (w + a - 1/2) log w - w.
cplx classical_stirling(cplx w, cplx a);

}  // namespace mbgamma
