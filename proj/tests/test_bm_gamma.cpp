#include <doctest.h>

#include <random>
#include <stdexcept>

#include "mbgamma/bernoulli.h"
#include "mbgamma/bm_gamma.h"
#include "mbgamma/errors.h"
#include "mbgamma/zeta.h"
#include "oracles.h"

using namespace mbgamma;
using oracle::rel;

namespace {

double scaled(cplx x, cplx ref) { return std::abs(x - ref) / (1.0 + std::abs(ref)); }

}  // namespace

TEST_CASE("P0 closed form examples") {
    CHECK(rel(P0_closed(0, 3.0), -std::log(3.0)) < 1e-15);
    CHECK(std::abs(P0_closed(1, std::exp(1.0))) < 1e-15);
    CHECK(rel(P0_closed(3, 1.0), -11.0 / 36) < 1e-15);
    CHECK_THROWS_AS(P0_closed(-1, 1.0), DomainError);
}

TEST_CASE("hankel_P examples") {
    CHECK(rel(hankel_P(0, 2.0, Weights{}), -std::log(2.0)) < 1e-10);
    CHECK(rel(hankel_P(2, 2.0, Weights{}), 2.0 * (1.5 - std::log(2.0))) < 1e-10);
    CHECK(rel(hankel_P(0, 1.0, Weights{1.0}), -oracle::kLogSqrt2Pi) < 1e-10);
}

TEST_CASE("r = 0 contour against the closed form") {
    for (int k = 0; k <= 4; ++k)
        for (const cplx w : {cplx(0.5, 0.0), cplx(1.7, 0.9), cplx(4.8, -2.0)})
            CHECK(scaled(hankel_P(k, w, Weights{}), P0_closed(k, w)) < 1e-10);
}

TEST_CASE("P is real for real arguments") {
    // the +i pi a_{r,k} from the circle cancels the -i pi a_{r,k} constant
    for (int k = 0; k <= 2; ++k) CHECK(std::abs(hankel_P(k, 1.3, Weights{0.7, 1.5}).imag()) < 1e-12);
}

TEST_CASE("log Gamma_r examples") {
    CHECK(std::abs(log_gamma_r(1.0, Weights{1.0}) + oracle::kLogSqrt2Pi) < 1e-10);
    CHECK(std::abs(log_gamma_r(5.0, Weights{1.0}) - (std::log(24.0) - oracle::kLogSqrt2Pi)) < 1e-10);
    CHECK(rel(log_gamma_r(3.0, Weights{}), -std::log(3.0)) < 1e-10);
    for (const cplx w : {cplx(0.4, 0.0), cplx(1.2, 2.5), cplx(7.5, -1.0)})
        CHECK(std::abs(log_gamma_r(w, Weights{1.0}) - (oracle::log_gamma(w) - oracle::kLogSqrt2Pi)) < 1e-9);
}

TEST_CASE("log Gamma_{r,k} examples") {
    const cplx w(1.6, 0.2);
    const Weights om{0.9, 1.4};
    CHECK(rel(log_gamma_rk(0, w, om), log_gamma_r(w, om)) < 1e-8);
    CHECK(std::abs(log_gamma_rk(1, 1.0, Weights{})) < 1e-12);
    CHECK(std::abs(log_gamma_rk(1, 1.0, Weights{1.0}) - (1.0 / 12 - std::log(oracle::kGlaisher))) < 1e-10);
    CHECK_THROWS_AS(log_gamma_rk(-1, 1.0, Weights{1.0}), DomainError);
}

TEST_CASE("contour and zeta routes give the same log Gamma_{r,k}") {
    for (int r = 0; r <= 2; ++r) {
        const Weights om = Weights::ones(r).scaled(0.8);
        for (int k = 0; k <= 3; ++k) {
            const cplx w(1.1, 0.4);
            CHECK(scaled(log_gamma_rk_contour(k, w, om), log_gamma_rk(k, w, om)) < 1e-8);
        }
    }
}

TEST_CASE("zeta'(-k) = (-1)^k k! (P_r(k) - H_k a_{r,k})") {
    const Weights om{1.0};
    const cplx w(0.8, 0.3);
    double fact = 1;
    for (int k = 0; k <= 3; ++k) {
        if (k > 0) fact *= k;
        const cplx P = hankel_P(k, w, om);
        const cplx rhs = (k % 2 ? -fact : fact) * (P - oracle::harmonic(k) * multiple_bernoulli_closed(k, w, om));
        CHECK(scaled(oracle::hurwitz_ds(-static_cast<double>(k), w), rhs) < 1e-8);
    }
}

TEST_CASE("reduced contour equals explicit traversal") {
    const Weights om{0.8, cplx(1.3, 0.2)};
    const cplx w(1.2, -0.4);
    for (int k = -2; k <= 2; ++k) {
        const double lambda = ContourConfig{}.radius_for(w, om);
        CHECK(scaled(hankel_log_integral(k, w, om).value, hankel_log_integral_traversal(k, w, om, lambda)) < 1e-10);
    }
}

TEST_CASE("independence of the contour radius") {
    const Weights om{0.6, 1.7};
    const cplx w(0.9, 0.2);
    const cplx ref = hankel_P(1, w, om);
    for (const double f : {0.3, 0.6, 0.9}) {
        ContourConfig cfg;
        cfg.lambda = f * om.pole_radius() / 2;
        CHECK(scaled(hankel_P(1, w, om, cfg), ref) < 1e-9);
    }
}

TEST_CASE("ladder in the weights") {
    const Weights om{0.7, 1.3, 1.9};
    const cplx w(1.1, 0.3);
    for (int k = 0; k <= 2; ++k) {
        for (std::size_t i = 0; i < 3; ++i) {
            const cplx lhs = hankel_P(k, w, om) - hankel_P(k, w + om[i], om);
            CHECK(scaled(lhs, hankel_P(k, w, weights_without(om, i))) < 1e-8);
        }
    }
}

TEST_CASE("classical functional equation") {
    for (const cplx w : {cplx(0.5, 0.0), cplx(2.0, 1.0), cplx(6.0, 0.0)})
        CHECK(std::abs(hankel_P(0, w, Weights{1.0}) - hankel_P(0, w + 1.0, Weights{1.0}) + std::log(w)) < 1e-9);
}

TEST_CASE("contour configuration errors") {
    ContourConfig cfg;
    cfg.circle_nodes = 30;
    CHECK_THROWS_AS(hankel_P(0, 1.0, Weights{1.0}, cfg), std::invalid_argument);
    cfg = ContourConfig{};
    cfg.lambda = 7.0;  // beyond 2 pi
    CHECK_THROWS_AS(hankel_P(0, 1.0, Weights{1.0}, cfg), std::invalid_argument);
    CHECK_THROWS_AS(hankel_P(-2, 1.0, Weights{1.0}), DomainError);
    CHECK_THROWS_AS(hankel_P(0, cplx(-0.5, 0.0), Weights{1.0}), DomainError);
}

TEST_CASE("node doubling self-check") {
    const auto ev = hankel_P_checked(1, 1.5, Weights{1.0, 2.0});
    CHECK(ev.doubling_delta < 1e-9 * std::max(1.0, std::abs(ev.value)));
    ContourConfig coarse;
    coarse.circle_nodes = 32;
    coarse.lambda = 3.1;
    coarse.self_check_tol = 1e-15;
    CHECK_THROWS_AS(hankel_P(3, 20.0, Weights{1.0}, coarse), AccuracyError);
}

TEST_CASE("analytic constants") {
    const AnalyticConstants c;
    CHECK(c.harmonic_exact(0) == Rational(0));
    CHECK(c.harmonic_exact(4) == Rational(25, 12));
    for (int k = 1; k <= 10; ++k) CHECK(c.harmonic_exact(k) - c.harmonic_exact(k - 1) == Rational(1, k));
    CHECK(c.harmonic(4) == doctest::Approx(25.0 / 12));
}
