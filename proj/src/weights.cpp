#include "mbgamma/weights.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mbgamma/errors.h"

namespace mbgamma {

Weights::Weights(std::vector<cplx> entries) : entries_(std::move(entries)) {
    for (const cplx& e : entries_) {
        if (!(e.real() > 0.0))
            throw DomainError("weights must have positive real part");
        sum_ += e;
        product_ *= e;
    }
}

Weights::Weights(std::initializer_list<cplx> entries) : Weights(std::vector<cplx>(entries)) {}

Weights Weights::ones(int r) { return Weights(std::vector<cplx>(static_cast<std::size_t>(r), 1.0)); }

double Weights::pole_radius() const noexcept {
    double radius = std::numeric_limits<double>::infinity();
    for (const cplx& e : entries_) radius = std::min(radius, 2.0 * std::numbers::pi / std::abs(e));
    return radius;
}

Weights Weights::scaled(double c) const {
    std::vector<cplx> v(entries_);
    for (auto& e : v) e *= c;
    return Weights(std::move(v));
}

Weights weights_without(const Weights& omega, std::size_t i) {
    if (i >= static_cast<std::size_t>(omega.rank()))
        throw std::out_of_range("weight index " + std::to_string(i) + " out of range for rank " +
                                std::to_string(omega.rank()));
    std::vector<cplx> v(omega.entries().begin(), omega.entries().end());
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
    return Weights(std::move(v));
}

Weights concat(const Weights& omega, const Weights& alpha) {
    std::vector<cplx> v(omega.entries().begin(), omega.entries().end());
    v.insert(v.end(), alpha.entries().begin(), alpha.entries().end());
    return Weights(std::move(v));
}

}  // namespace mbgamma
