#pragma once

#include <complex>
#include <span>
#include <vector>

namespace mbgamma {

using cplx = std::complex<double>;

/// Truncated Laurent series  sum_{n=min_degree}^{order} c_n t^n  with complex coefficients.
///
/// Coefficients below min_degree are zero; coefficients above order are unknown, and asking
/// for one raises TruncationError. An empty coefficient vector is allowed and means
/// order == min_degree - 1 (nothing is known yet).
class LaurentSeries {
public:
    LaurentSeries() = default;
    LaurentSeries(int min_degree, std::vector<cplx> coeffs);

    static LaurentSeries constant(cplx c, int order);
    static LaurentSeries monomial(int degree, cplx c, int order);

    int min_degree() const noexcept { return min_degree_; }
    int order() const noexcept { return min_degree_ + static_cast<int>(coeffs_.size()) - 1; }
    std::span<const cplx> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of t^n. Zero below min_degree, TruncationError above order.
    cplx operator[](int n) const;

    LaurentSeries truncated(int order) const;
    /// Multiplies by t^by.
    LaurentSeries shifted(int by) const;
    LaurentSeries scaled(cplx factor) const;

    /// Horner evaluation of the retained terms at t (t != 0 when min_degree < 0).
    cplx evaluate(cplx t) const;

private:
    int min_degree_ = 0;
    std::vector<cplx> coeffs_;
};

/// Product truncated at `order`. Every reported coefficient must be exact, i.e.
/// order <= min(A.order + B.min_degree, B.order + A.min_degree).
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b, int order);

/// Multiplicative inverse truncated at `order`. The coefficient at a.min_degree must be
/// nonzero; the result starts at -a.min_degree.
LaurentSeries series_invert(const LaurentSeries& a, int order);

/// exp(c t) truncated at `order`.
LaurentSeries exp_series(cplx c, int order);

}  // namespace mbgamma
