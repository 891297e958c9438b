#include <doctest.h>

#include <array>
#include <vector>

#include "mbgamma/asymptotic.h"
#include "mbgamma/bernoulli.h"
#include "mbgamma/errors.h"
#include "oracles.h"

using namespace mbgamma;

namespace {

const std::array<cplx, 4> kGrid{10.0, 20.0, 40.0, 80.0};

std::vector<ExpansionReport> power_law(double c, double p) {
    std::vector<ExpansionReport> reps;
    for (const cplx w : kGrid) reps.push_back({w, 0.0, 0.0, c * std::pow(std::abs(w), p)});
    return reps;
}

}  // namespace

TEST_CASE("classical_stirling examples") {
    CHECK(std::abs(classical_stirling(100.0, 0.0) - (99.5 * std::log(100.0) - 100.0)) < 1e-12);
    CHECK(std::abs(classical_stirling(100.0, 0.0) - 358.214433505815) < 1e-9);
    const cplx w(7.0, 2.0);
    CHECK(std::abs(classical_stirling(w, 0.5 - w) + w) < 1e-14);
    CHECK(std::abs(classical_stirling(10.0, 0.3) - (9.8 * std::log(10.0) - 10.0)) < 1e-13);
    // log Gamma(100) - log sqrt(2 pi) from the exact factorial
    const double lhs = oracle::log_factorial(99) - oracle::kLogSqrt2Pi;
    CHECK(std::abs(lhs - classical_stirling(100.0, 0.0)) < 1.2 / 1200);
}

TEST_CASE("stirling_expand examples") {
    const ExpansionSpec classical{Weights{}, Weights{1.0}, 0, 0.3};
    for (const cplx w : {cplx(3.0, 0.0), cplx(12.0, 5.0)})
        CHECK(std::abs(stirling_expand(classical, w) - classical_stirling(w, 0.3)) < 1e-9);

    // a = 0: the expansion approximates P_{r+1}(k, w; (omega, alpha_1))
    const ExpansionSpec plain{Weights{0.8}, Weights{1.3}, 1, 0.0};
    const double near = std::abs(stirling_expand(plain, 60.0) - hankel_P(1, 60.0, Weights{0.8, 1.3}));
    CHECK(near < 0.05);

    const ExpansionSpec s{Weights{1.0}, Weights{1.0}, 0, 0.3};
    const double r40 = std::abs(stirling_expand(s, 40.0) - hankel_P(0, 40.3, Weights{1.0, 1.0}));
    const double r80 = std::abs(stirling_expand(s, 80.0) - hankel_P(0, 80.3, Weights{1.0, 1.0}));
    CHECK(r80 < 0.6 * r40);
}

TEST_CASE("ExpansionSpec validation") {
    CHECK_THROWS_AS(stirling_expand({Weights{1.0}, Weights{}, 0, 0.0}, 10.0), DomainError);
    CHECK_THROWS_AS(stirling_expand({Weights{}, Weights{1.0}, -2, 0.0}, 10.0), DomainError);
    CHECK_THROWS_AS(stirling_expand({Weights{}, Weights{1.0}, 0, -0.5}, 10.0), DomainError);
}

TEST_CASE("residual_report examples") {
    const ExpansionSpec classical{Weights{}, Weights{1.0}, 0, 0.0};
    const auto reps = residual_report(classical, kGrid);
    REQUIRE(reps.size() == 4);
    for (std::size_t i = 1; i < reps.size(); ++i) CHECK(reps[i].residual < reps[i - 1].residual);
    for (const auto& rep : reps) {
        CHECK(rep.residual == std::abs(rep.lhs - rep.rhs));
        // lhs = log Gamma(w) - log sqrt(2 pi), rhs = classical Stirling
        const unsigned n = static_cast<unsigned>(rep.w.real());
        const double oracle_residual =
            std::abs(oracle::log_factorial(n - 1) - oracle::kLogSqrt2Pi - classical_stirling(rep.w, 0.0).real());
        CHECK(std::abs(rep.residual - oracle_residual) < 1e-9);
    }

    const std::array<cplx, 1> single{25.0};
    const auto one = residual_report({Weights{1.0}, Weights{2.0}, 1, 0.5}, single);
    REQUIRE(one.size() == 1);
    CHECK(one[0].residual == std::abs(one[0].lhs - one[0].rhs));

    const auto r = residual_report({Weights{1.0}, Weights{2.0}, 1, 0.5}, std::array<cplx, 2>{80.0, 10.0});
    CHECK(r[0].w == cplx(10.0));
    CHECK(r[1].residual * 4 <= r[0].residual);
}

TEST_CASE("decay_slope examples") {
    CHECK(decay_slope(power_law(3.0, -1.0)) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(decay_slope(power_law(0.1, -2.0)) == doctest::Approx(-2.0).epsilon(1e-12));
    const double classical = decay_slope(residual_report({Weights{}, Weights{1.0}, 0, 0.0}, kGrid));
    CHECK(classical >= -1.2);
    CHECK(classical <= -0.8);

    auto reps = power_law(1.0, -1.0);
    reps[2].residual = 0.0;
    CHECK_THROWS_AS(decay_slope(reps), DomainError);
    CHECK_THROWS_AS(decay_slope(std::vector<ExpansionReport>(3, {10.0, 0.0, 0.0, 1.0})), DomainError);
}

TEST_CASE("decay over the main shapes") {
    struct Shape {
        Weights omega;
        Weights alpha;
        int k;
    };
    const std::vector<Shape> shapes{{Weights{}, Weights{1.3}, 0},
                                    {Weights{0.9}, Weights{1.6}, 0},
                                    {Weights{0.9}, Weights{1.6}, 1},
                                    {Weights{}, Weights{0.7, 1.8}, 0},
                                    {Weights{1.2, 0.6}, Weights{1.1}, 0}};
    for (const auto& sh : shapes) {
        const double slope = decay_slope(residual_report({sh.omega, sh.alpha, sh.k, 0.3}, kGrid));
        CHECK(slope <= -0.8);
        CHECK(slope >= -1.6);
    }
}

TEST_CASE("a vanishing leading coefficient speeds up the decay") {
    // a_{1,2}(0; alpha) is a multiple of B_3(0) = 0, so (r, l, k) = (1, 1, 0) at a = 0 decays like 1/w^2
    CHECK(multiple_bernoulli_closed(2, 0.0, Weights{1.6}) == cplx(0.0));
    const double slope = decay_slope(residual_report({Weights{0.9}, Weights{1.6}, 0, 0.0}, kGrid));
    CHECK(slope == doctest::Approx(-2.0).epsilon(0.1));
}

TEST_CASE("every term of the truncated sum is needed") {
    const ExpansionSpec spec{Weights{0.9}, Weights{1.6}, 1, 0.3};
    const int r = spec.r(), l = spec.l();
    for (int drop = -l; drop <= r + spec.k; ++drop) {
        const cplx coeff = multiple_bernoulli_closed(drop, spec.a, spec.alpha);
        if (coeff == cplx(0.0)) continue;
        std::vector<ExpansionReport> reps;
        for (const cplx w : kGrid) {
            const cplx lhs = stirling_direct(spec, w);
            const cplx rhs = stirling_expand(spec, w) - coeff * hankel_P(spec.k - drop, w, spec.omega);
            reps.push_back({w, lhs, rhs, std::abs(lhs - rhs)});
        }
        CHECK(decay_slope(reps) > -0.5);
    }
}
