#include <doctest.h>

#include "mbgamma/errors.h"
#include "mbgamma/laurent_series.h"

using namespace mbgamma;

namespace {

bool same(const LaurentSeries& a, const LaurentSeries& b, double tol = 1e-15) {
    if (a.min_degree() != b.min_degree() || a.order() != b.order()) return false;
    for (int n = a.min_degree(); n <= a.order(); ++n)
        if (std::abs(a[n] - b[n]) > tol) return false;
    return true;
}

}  // namespace

TEST_CASE("series_mul examples") {
    const LaurentSeries p(0, {1.0, 1.0, 0.0});
    const LaurentSeries m(0, {1.0, -1.0, 0.0});
    CHECK(same(series_mul(p, m, 2), LaurentSeries(0, {1.0, 0.0, -1.0})));

    const LaurentSeries a(-1, {2.0, 3.0, 5.0, 7.0});
    CHECK(same(series_mul(LaurentSeries::constant(1.0, 3), a, 2), a));

    const auto prod = series_mul(LaurentSeries::monomial(-1, 1.0, 0), LaurentSeries::monomial(1, 1.0, 2), 0);
    CHECK(prod.min_degree() == 0);
    CHECK(prod[0] == cplx(1.0));
}

TEST_CASE("series_mul refuses orders the truncations cannot support") {
    const LaurentSeries a(0, {1.0, 1.0});
    const LaurentSeries b(0, {1.0, 1.0, 1.0});
    CHECK_NOTHROW(series_mul(a, b, 1));
    CHECK_THROWS_AS(series_mul(a, b, 2), TruncationError);
}

TEST_CASE("coefficients above the order are not reported") {
    const LaurentSeries a(-2, {1.0, 2.0});
    CHECK(a[-3] == cplx(0.0));
    CHECK(a[-1] == cplx(2.0));
    CHECK_THROWS_AS(a[0], TruncationError);
}

TEST_CASE("series_invert examples") {
    const auto geo = series_invert(LaurentSeries(0, {1.0, -1.0, 0.0, 0.0, 0.0, 0.0}), 5);
    for (int n = 0; n <= 5; ++n) CHECK(geo[n] == cplx(1.0));

    const auto inv_t = series_invert(LaurentSeries::monomial(1, 1.0, 4), 2);
    CHECK(inv_t.min_degree() == -1);
    CHECK(inv_t[-1] == cplx(1.0));
    CHECK(inv_t[0] == cplx(0.0));
    CHECK(inv_t[2] == cplx(0.0));

    CHECK(series_invert(LaurentSeries::constant(2.0, 3), 3)[0] == cplx(0.5));
}

TEST_CASE("series_invert round trip") {
    const LaurentSeries a(-1, {cplx(2.0, 1.0), 0.5, cplx(0.0, -3.0), 1.0, 0.25, -0.125, 2.0, 1.0});
    const auto inv = series_invert(a, 4);
    CHECK(inv.min_degree() == 1);
    const auto one = series_mul(a, inv, 3);
    CHECK(std::abs(one[0] - 1.0) < 1e-14);
    for (int n = 1; n <= 3; ++n) CHECK(std::abs(one[n]) < 1e-14);
}

TEST_CASE("series_invert rejects a vanishing leading coefficient") {
    CHECK_THROWS_AS(series_invert(LaurentSeries(0, {0.0, 1.0}), 0), NotInvertibleError);
}

TEST_CASE("exp_series examples") {
    const auto zero = exp_series(0.0, 3);
    CHECK(zero[0] == cplx(1.0));
    CHECK(zero[1] == cplx(0.0));

    const auto e = exp_series(1.0, 2);
    CHECK(e.order() == 2);
    CHECK(e[2] == cplx(0.5));

    const cplx w(0.7, -0.4);
    const auto ew = exp_series(-w, 6);
    cplx expect = 1.0;
    for (int n = 0; n <= 6; ++n) {
        CHECK(std::abs(ew[n] - expect) < 1e-15);
        expect *= -w / static_cast<double>(n + 1);
    }
}
