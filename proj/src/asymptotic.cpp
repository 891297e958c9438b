#include "mbgamma/asymptotic.h"

#include <algorithm>
#include <cmath>

#include "mbgamma/bernoulli.h"
#include "mbgamma/errors.h"

namespace mbgamma {

void ExpansionSpec::validate() const {
    if (l() < 1) throw DomainError("the expansion needs at least one shifted weight (l >= 1)");
    if (k < -(r() + l())) throw DomainError("the expansion needs k >= -(r + l)");
    if (a.real() < 0.0) throw DomainError("the shift a needs Re(a) >= 0");
}

cplx stirling_expand(const ExpansionSpec& spec, cplx w, const ContourConfig& cfg) {
    spec.validate();
    const int r = spec.r();
    const int l = spec.l();
    const LaurentSeries shift = multiple_bernoulli_series(spec.a, spec.alpha, r + spec.k);
    cplx sum{0.0, 0.0};
    for (int n = -l; n <= r + spec.k; ++n) {
        const cplx coeff = shift[n];
        if (coeff == cplx{0.0, 0.0}) continue;
        sum += coeff * hankel_P(spec.k - n, w, spec.omega, cfg);
    }
    return sum;
}

cplx stirling_direct(const ExpansionSpec& spec, cplx w, const ContourConfig& cfg) {
    spec.validate();
    return hankel_P(spec.k, w + spec.a, concat(spec.omega, spec.alpha), cfg);
}

std::vector<ExpansionReport> residual_report(const ExpansionSpec& spec, std::span<const cplx> grid,
                                             const ContourConfig& cfg) {
    std::vector<ExpansionReport> reports;
    reports.reserve(grid.size());
    for (const cplx& w : grid) {
        if (!(w.real() > 0.0) || !((w + spec.a).real() > 0.0))
            throw DomainError("grid points need Re(w) > 0 and Re(w + a) > 0");
        ExpansionReport rep{w, stirling_direct(spec, w, cfg), stirling_expand(spec, w, cfg), 0.0};
        rep.residual = std::abs(rep.lhs - rep.rhs);
        reports.push_back(rep);
    }
    std::stable_sort(reports.begin(), reports.end(),
                     [](const ExpansionReport& x, const ExpansionReport& y) { return std::abs(x.w) < std::abs(y.w); });
    return reports;
}

double decay_slope(std::span<const ExpansionReport> reports) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& rep : reports) {
        if (rep.residual < 1e-13) continue;
        xs.push_back(std::log(std::abs(rep.w)));
        ys.push_back(std::log(rep.residual));
    }
    if (xs.size() < 4) throw DomainError("decay_slope needs at least four nonzero residuals");
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    if (sxx == 0.0) throw DomainError("decay_slope needs distinct |w|");
    return sxy / sxx;
}

cplx classical_stirling(cplx w, cplx a) {
    if (!(w.real() > 0.0)) throw DomainError("w must have positive real part");
    return (w + a - 0.5) * std::log(w) - w;
}

}  // namespace mbgamma
