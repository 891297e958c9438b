#include "mbgamma/laurent_series.h"

#include <algorithm>
#include <string>

#include "mbgamma/errors.h"

namespace mbgamma {

LaurentSeries::LaurentSeries(int min_degree, std::vector<cplx> coeffs)
    : min_degree_(min_degree), coeffs_(std::move(coeffs)) {}

LaurentSeries LaurentSeries::constant(cplx c, int order) { return monomial(0, c, order); }

LaurentSeries LaurentSeries::monomial(int degree, cplx c, int order) {
    std::vector<cplx> coeffs(static_cast<std::size_t>(std::max(0, order - degree + 1)));
    if (!coeffs.empty()) coeffs.front() = c;
    return LaurentSeries(degree, std::move(coeffs));
}

cplx LaurentSeries::operator[](int n) const {
    if (n > order())
        throw TruncationError("coefficient of t^" + std::to_string(n) +
                              " requested from a series truncated at order " + std::to_string(order()));
    if (n < min_degree_) return {0.0, 0.0};
    return coeffs_[static_cast<std::size_t>(n - min_degree_)];
}

LaurentSeries LaurentSeries::truncated(int new_order) const {
    if (new_order > order())
        throw TruncationError("cannot extend a series from order " + std::to_string(order()) + " to " +
                              std::to_string(new_order));
    std::vector<cplx> coeffs(coeffs_.begin(),
                             coeffs_.begin() + std::max(0, new_order - min_degree_ + 1));
    return LaurentSeries(min_degree_, std::move(coeffs));
}

LaurentSeries LaurentSeries::shifted(int by) const { return LaurentSeries(min_degree_ + by, coeffs_); }

LaurentSeries LaurentSeries::scaled(cplx factor) const {
    std::vector<cplx> coeffs(coeffs_);
    for (auto& c : coeffs) c *= factor;
    return LaurentSeries(min_degree_, std::move(coeffs));
}

cplx LaurentSeries::evaluate(cplx t) const {
    cplx acc{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    if (min_degree_ != 0) acc *= std::pow(t, min_degree_);
    return acc;
}

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b, int order) {
    const int exact = std::min(a.order() + b.min_degree(), b.order() + a.min_degree());
    if (order > exact)
        throw TruncationError("product requested to order " + std::to_string(order) +
                              " but the factors only determine it to order " + std::to_string(exact));
    const int lo = a.min_degree() + b.min_degree();
    std::vector<cplx> coeffs(static_cast<std::size_t>(std::max(0, order - lo + 1)));
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        cplx sum{0.0, 0.0};
        for (std::size_t i = 0; i < ac.size() && i <= n; ++i) {
            if (n - i < bc.size()) sum += ac[i] * bc[n - i];
        }
        coeffs[n] = sum;
    }
    return LaurentSeries(lo, std::move(coeffs));
}

LaurentSeries series_invert(const LaurentSeries& a, int order) {
    const auto ac = a.coeffs();
    if (ac.empty() || ac.front() == cplx{0.0, 0.0})
        throw NotInvertibleError("series with vanishing leading coefficient is not invertible");
    const int lo = -a.min_degree();
    // result coefficient at degree lo + j needs a's coefficients c_0..c_j
    const int exact = a.order() - 2 * a.min_degree();
    if (order > exact)
        throw TruncationError("inverse requested to order " + std::to_string(order) +
                              " but the series only determines it to order " + std::to_string(exact));
    std::vector<cplx> inv(static_cast<std::size_t>(std::max(0, order - lo + 1)));
    const cplx lead_inv = 1.0 / ac.front();
    for (std::size_t j = 0; j < inv.size(); ++j) {
        cplx sum = (j == 0) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
        for (std::size_t i = 1; i <= j; ++i) sum -= ac[i] * inv[j - i];
        inv[j] = sum * lead_inv;
    }
    return LaurentSeries(lo, std::move(inv));
}

LaurentSeries exp_series(cplx c, int order) {
    std::vector<cplx> coeffs(static_cast<std::size_t>(std::max(0, order + 1)));
    cplx term{1.0, 0.0};
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        coeffs[n] = term;
        term *= c / static_cast<double>(n + 1);
    }
    return LaurentSeries(0, std::move(coeffs));
}

}  // namespace mbgamma
