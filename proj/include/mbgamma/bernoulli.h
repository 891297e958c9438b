#pragma once

#include <complex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mbgamma/laurent_series.h"
#include "mbgamma/weights.h"

namespace mbgamma {

using Rational = boost::multiprecision::cpp_rational;

/// Dense polynomial in w, constant term first.
template <class T>
class Polynomial {
public:
    Polynomial() : coeffs_{T(0)} {}
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(T(0));
    }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<T>& coeffs() const noexcept { return coeffs_; }
    const T& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

    template <class U>
    U operator()(const U& w) const {
        U acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * w + U(*it);
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() == 1) return Polynomial();
        std::vector<T> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * T(static_cast<int>(i));
        return Polynomial(std::move(d));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<T> coeffs_;
};

using BernoulliPolynomial = Polynomial<Rational>;
using ComplexPolynomial = Polynomial<cplx>;

/// Bernoulli numbers B_0..B_n (B_1 = -1/2) from  sum_{j=0}^{m} C(m+1, j) B_j = 0.
std::vector<Rational> bernoulli_numbers(int n);

/// Classical Bernoulli polynomial B_n(w) = sum_j C(n, j) B_j w^{n-j}, exact coefficients.
BernoulliPolynomial classical_bernoulli(int n);

/// B_n(w) at complex w.
cplx evaluate(const BernoulliPolynomial& p, cplx w);

/// prod_j 1/(1 - e^{-w_j t}) truncated at `order`; starts at t^{-r}.
LaurentSeries omega_kernel_series(const Weights& omega, int order);

/// Laurent series of e^{-wt} / prod_j (1 - e^{-w_j t}) truncated at `order`; the coefficient
/// of t^n is the multiple Bernoulli polynomial a_{r,n}(w; omega).
LaurentSeries multiple_bernoulli_series(cplx w, const Weights& omega, int order);

/// a_{r,n}(w; omega) by direct evaluation of the finite composition sum
///   (1/|w|_x) sum_{n_0+...+n_r = n+r} w^{n_0} B_{n_1}(w)...B_{n_r}(w) / (n_0!...n_r!)
///             * (|w|-1)^{n_0} (-w_1)^{n_1} ... (-w_r)^{n_r}.
/// Zero for n < -r.
cplx multiple_bernoulli_closed(int n, cplx w, const Weights& omega);

/// a_{r,n}(.; omega) as a polynomial in w of degree n + r (zero polynomial for n < -r).
ComplexPolynomial multiple_bernoulli_polynomial(int n, const Weights& omega);

/// Truncation order for downstream use of coefficients up to degree `n` in a rank-r
/// expansion that also needs degrees up to r + k_max: max(n, r + k_max + 4).
int default_truncation_order(int n, int r, int k_max);

}  // namespace mbgamma
