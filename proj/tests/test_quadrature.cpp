#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mbgamma/errors.h"
#include "mbgamma/quadrature.h"

using namespace mbgamma;

TEST_CASE("polynomials are integrated exactly") {
    const auto r = integrate([](double x) { return cplx(x * x * x - 2 * x, x); }, -1.0, 2.0);
    CHECK(std::abs(r.value - cplx(15.0 / 4 - 3.0, 1.5)) < 1e-14);
}

TEST_CASE("smooth oscillatory integrand") {
    const auto r = integrate([](double x) { return std::exp(cplx(0.0, 20.0 * x)); }, 0.0, 1.0);
    const cplx exact = (std::exp(cplx(0.0, 20.0)) - 1.0) / cplx(0.0, 20.0);
    CHECK(std::abs(r.value - exact) < 1e-12);
}

TEST_CASE("endpoint singularity with geometric breakpoints") {
    // int_1e-8^1 x^{-1/2} dx
    const auto bp = geometric_breakpoints(1e-8, 1.0);
    CHECK(bp.front() == 1e-8);
    CHECK(bp.back() == 1.0);
    const auto r = integrate([](double x) { return cplx(1.0 / std::sqrt(x)); }, bp);
    CHECK(std::abs(r.value - (2.0 - 2e-4)) < 1e-11);
}

TEST_CASE("exponential tail") {
    const auto r = integrate([](double x) { return cplx(std::exp(-x)); }, geometric_breakpoints(1.0, 60.0));
    CHECK(std::abs(r.value - (std::exp(-1.0) - std::exp(-60.0))) < 1e-14);
}

TEST_CASE("budget exhaustion raises an accuracy error") {
    QuadratureOptions opts;
    opts.max_intervals = 3;
    opts.rel_tol = 1e-15;
    CHECK_THROWS_AS(integrate([](double x) { return cplx(std::sin(1.0 / x)); }, 1e-4, 1.0, opts), AccuracyError);
}

TEST_CASE("non-finite values are reported") {
    CHECK_THROWS_AS(integrate([](double) { return cplx(std::nan("")); }, 0.0, 1.0), AccuracyError);
}
