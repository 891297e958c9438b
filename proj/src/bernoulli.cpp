#include "mbgamma/bernoulli.h"

#include <algorithm>
#include <functional>

namespace mbgamma {

namespace {

using boost::multiprecision::cpp_int;

std::vector<cpp_int> binomial_row(int n) {
    std::vector<cpp_int> row(static_cast<std::size_t>(n) + 1, 1);
    for (int k = 1; k < n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
    return row;
}

std::vector<double> inverse_factorials(int n) {
    std::vector<double> f(static_cast<std::size_t>(std::max(n, 0)) + 1, 1.0);
    for (int i = 1; i <= n; ++i) f[i] = f[i - 1] / i;
    return f;
}

}  // namespace

std::vector<Rational> bernoulli_numbers(int n) {
    std::vector<Rational> b(static_cast<std::size_t>(std::max(n, 0)) + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        const auto c = binomial_row(m + 1);
        Rational sum = 0;
        for (int j = 0; j < m; ++j) sum += Rational(c[j]) * b[j];
        b[m] = -sum / (m + 1);
    }
    return b;
}

BernoulliPolynomial classical_bernoulli(int n) {
    const auto b = bernoulli_numbers(n);
    const auto c = binomial_row(n);
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) coeffs[i] = Rational(c[i]) * b[n - i];
    return BernoulliPolynomial(std::move(coeffs));
}

cplx evaluate(const BernoulliPolynomial& p, cplx w) {
    cplx acc{0.0, 0.0};
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * w + it->convert_to<double>();
    return acc;
}

LaurentSeries omega_kernel_series(const Weights& omega, int order) {
    const int r = omega.rank();
    const int unit_order = order + r;
    if (unit_order < 0) return LaurentSeries(-r, {});

    // 1/(1 - e^{-x}) = x^{-1} / E(x),  E(x) = sum_m (-x)^m / (m+1)!
    const auto inv_fact = inverse_factorials(unit_order + 1);
    LaurentSeries unit = LaurentSeries::constant(1.0 / omega.product(), unit_order);
    for (const cplx& w : omega.entries()) {
        std::vector<cplx> e(static_cast<std::size_t>(unit_order) + 1);
        cplx power{1.0, 0.0};
        for (int m = 0; m <= unit_order; ++m) {
            e[m] = power * inv_fact[m + 1];
            power *= -w;
        }
        unit = series_mul(unit, series_invert(LaurentSeries(0, std::move(e)), unit_order), unit_order);
    }
    return unit.shifted(-r);
}

LaurentSeries multiple_bernoulli_series(cplx w, const Weights& omega, int order) {
    const int r = omega.rank();
    if (order < -r) return LaurentSeries(-r, {});
    return series_mul(omega_kernel_series(omega, order), exp_series(-w, order + r), order);
}

cplx multiple_bernoulli_closed(int n, cplx w, const Weights& omega) {
    const int r = omega.rank();
    const int total = n + r;
    if (total < 0) return {0.0, 0.0};

    // The individual terms grow like |w|omega||^m / m! while the sum stays O(1); accumulate in long double.
    using xcplx = std::complex<long double>;
    const auto bnum = bernoulli_numbers(total);
    std::vector<long double> inv_fact(static_cast<std::size_t>(total) + 1, 1.0L);
    for (int i = 1; i <= total; ++i) inv_fact[i] = inv_fact[i - 1] / i;

    const xcplx wx(w.real(), w.imag());
    // bpoly[m] = B_m(w); factor[0][m] = (w (|omega| - 1))^m / m!, factor[j][m] = B_m(w) (-omega_j)^m / m!
    std::vector<xcplx> bpoly(static_cast<std::size_t>(total) + 1);
    for (int m = 0; m <= total; ++m) {
        const auto c = binomial_row(m);
        xcplx acc{0.0L, 0.0L};
        for (int i = m; i >= 0; --i) acc = acc * wx + (Rational(c[i]) * bnum[m - i]).convert_to<long double>();
        bpoly[m] = acc;
    }
    std::vector<std::vector<xcplx>> factor(static_cast<std::size_t>(r) + 1,
                                           std::vector<xcplx>(static_cast<std::size_t>(total) + 1));
    const cplx sum = omega.sum();
    const xcplx shift = wx * (xcplx(sum.real(), sum.imag()) - 1.0L);
    xcplx power{1.0L, 0.0L};
    for (int m = 0; m <= total; ++m, power *= shift) factor[0][m] = power * inv_fact[m];
    for (int j = 0; j < r; ++j) {
        const xcplx step(-omega[j].real(), -omega[j].imag());
        power = 1.0L;
        for (int m = 0; m <= total; ++m, power *= step) factor[j + 1][m] = bpoly[m] * power * inv_fact[m];
    }

    // sum over all compositions n_0 + ... + n_r = total
    std::function<xcplx(int, int)> compose = [&](int part, int remaining) -> xcplx {
        if (part == r) return factor[part][remaining];
        xcplx acc{0.0L, 0.0L};
        for (int m = 0; m <= remaining; ++m) acc += factor[part][m] * compose(part + 1, remaining - m);
        return acc;
    };
    const cplx prod = omega.product();
    const xcplx v = compose(0, total) / xcplx(prod.real(), prod.imag());
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

ComplexPolynomial multiple_bernoulli_polynomial(int n, const Weights& omega) {
    const int r = omega.rank();
    if (n < -r) return ComplexPolynomial();
    const LaurentSeries kernel = omega_kernel_series(omega, n);
    const auto inv_fact = inverse_factorials(n + r);
    std::vector<cplx> coeffs(static_cast<std::size_t>(n + r) + 1);
    for (int m = 0; m <= n + r; ++m) coeffs[m] = kernel[n - m] * ((m % 2 ? -1.0 : 1.0) * inv_fact[m]);
    return ComplexPolynomial(std::move(coeffs));
}

int default_truncation_order(int n, int r, int k_max) { return std::max(n, r + k_max + 4); }

}  // namespace mbgamma
