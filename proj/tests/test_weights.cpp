#include <doctest.h>

#include <stdexcept>

#include "mbgamma/errors.h"
#include "mbgamma/weights.h"

using namespace mbgamma;

TEST_CASE("empty weights") {
    const Weights w;
    CHECK(w.rank() == 0);
    CHECK(w.sum() == cplx(0.0));
    CHECK(w.product() == cplx(1.0));
    CHECK(std::isinf(w.pole_radius()));
}

TEST_CASE("real parts must be positive") {
    CHECK_THROWS_AS(Weights({1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(Weights({cplx(-0.5, 1.0)}), DomainError);
    CHECK_NOTHROW(Weights({cplx(0.5, -3.0)}));
}

TEST_CASE("sum, product and pole radius") {
    const Weights w{1.0, 2.0, cplx(1.0, 1.0)};
    CHECK(w.sum() == cplx(4.0, 1.0));
    CHECK(std::abs(w.product() - cplx(2.0, 2.0)) < 1e-15);
    CHECK(w.pole_radius() == doctest::Approx(2 * 3.141592653589793 / 2.0));
}

TEST_CASE("weights_without examples (indices are zero-based)") {
    const auto a = weights_without(Weights{1.0, 2.0}, 0);
    CHECK(a.rank() == 1);
    CHECK(a[0] == cplx(2.0));

    const auto b = weights_without(Weights{1.0}, 0);
    CHECK(b.empty());
    CHECK(b.product() == cplx(1.0));

    const auto c = weights_without(Weights{1.0, 2.0, 3.0}, 1);
    CHECK(c.rank() == 2);
    CHECK(c[0] == cplx(1.0));
    CHECK(c[1] == cplx(3.0));
    CHECK(c.sum() == cplx(4.0));
    CHECK(c.product() == cplx(3.0));

    CHECK_THROWS_AS(weights_without(Weights{1.0}, 1), std::out_of_range);
}

TEST_CASE("concat and ones") {
    const auto j = concat(Weights{1.0}, Weights{2.0, 3.0});
    CHECK(j.rank() == 3);
    CHECK(j.product() == cplx(6.0));
    CHECK(Weights::ones(4).sum() == cplx(4.0));
}
