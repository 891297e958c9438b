#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace mbgamma {

using cplx = std::complex<double>;

/// Parameter vector (w_1, ..., w_r) of a multiple zeta/gamma function. Every entry has a
/// positive real part; r = 0 is allowed, with sum 0 and product 1.
class Weights {
public:
    Weights() = default;
    explicit Weights(std::vector<cplx> entries);
    Weights(std::initializer_list<cplx> entries);

    /// (1, ..., 1) of length r.
    static Weights ones(int r);

    int rank() const noexcept { return static_cast<int>(entries_.size()); }
    bool empty() const noexcept { return entries_.empty(); }
    std::span<const cplx> entries() const noexcept { return entries_; }
    cplx operator[](std::size_t i) const { return entries_.at(i); }

    /// |w| = sum of entries.
    cplx sum() const noexcept { return sum_; }
    /// |w|_x = product of entries.
    cplx product() const noexcept { return product_; }

    /// min_i |2 pi / w_i|, the distance from 0 to the nearest nonzero pole of f_w.
    /// Infinite for r = 0.
    double pole_radius() const noexcept;

    /// Entrywise multiplication by c.
    Weights scaled(double c) const;

    friend bool operator==(const Weights& a, const Weights& b) { return a.entries_ == b.entries_; }

private:
    std::vector<cplx> entries_;
    cplx sum_{0.0, 0.0};
    cplx product_{1.0, 0.0};
};

/// Removes entry i (zero-based). Throws std::out_of_range when i >= rank.
Weights weights_without(const Weights& omega, std::size_t i);

/// Concatenation (w, a).
Weights concat(const Weights& omega, const Weights& alpha);

}  // namespace mbgamma
