#include "mbgamma/verify.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "mbgamma/asymptotic.h"
#include "mbgamma/bernoulli.h"
#include "mbgamma/special.h"

namespace mbgamma::verify {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFloor = 1e-14;

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
    cplx point(double re_lo, double re_hi, double im) { return {uniform(re_lo, re_hi), uniform(-im, im)}; }

    Weights weights(int r, double lo = 0.5, double hi = 2.0, double im = 0.0) {
        std::vector<cplx> v;
        for (int i = 0; i < r; ++i) v.push_back(point(lo, hi, im));
        return Weights(std::move(v));
    }

private:
    std::mt19937_64 gen_;
};

// relative error with an absolute floor: |x - ref| <= tol * |ref| or |x - ref| <= kFloor
double rel_error(cplx x, cplx ref, double tol) { return std::abs(x - ref) / std::max(std::abs(ref), kFloor / tol); }

double scaled_error(cplx x, cplx ref) { return std::abs(x - ref) / (1.0 + std::abs(ref)); }

class Tally {
public:
    Tally(std::string suite, std::string property, double bound)
        : result_{std::move(suite), std::move(property), 0.0, bound, true, {}} {}

    void add(double err, const std::string& where = {}) {
        if (!(err <= result_.achieved)) {
            result_.achieved = err;
            if (!where.empty()) worst_ = where;
        }
    }

    // Runs `body`, turning numerical exceptions into a failed check.
    void guard(const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            result_.achieved = std::numeric_limits<double>::infinity();
            worst_ = e.what();
        }
    }

    CheckResult finish() {
        result_.passed = result_.achieved <= result_.bound;
        if (!worst_.empty()) result_.detail = "worst at " + worst_;
        return result_;
    }

private:
    CheckResult result_;
    std::string worst_;
};

std::string describe(const char* fmt, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, fmt, a, b, c);
    return buf;
}

// ---------------------------------------------------------------- bernoulli

void bernoulli_suite(const Options& opt, std::vector<CheckResult>& out) {
    Sampler rng(opt.seed);

    Tally eq("bernoulli", "closed-vs-series", 1e-12);
    for (int inst = 0; inst < 20; ++inst) {
        for (int r = 0; r <= 3; ++r) {
            const cplx w = rng.point(0.05, 3.0, 1.0);
            const Weights om = rng.weights(r, 0.5, 2.0, 0.5);
            const LaurentSeries s = multiple_bernoulli_series(w, om, 5);
            for (int n = -r; n <= 5; ++n)
                eq.add(scaled_error(multiple_bernoulli_closed(n, w, om), s[n]), describe("r=%g n=%g", r, n));
        }
    }
    out.push_back(eq.finish());

    Tally fd("bernoulli", "derivative-finite-difference", 1e-7);
    Tally poly("bernoulli", "derivative-polynomial", 1e-12);
    for (int inst = 0; inst < 5; ++inst) {
        for (int r = 0; r <= 3; ++r) {
            const cplx w = rng.point(0.05, 3.0, 1.0);
            const Weights om = rng.weights(r);
            const double h = 1e-5;
            for (int n = -r; n <= 4; ++n) {
                const cplx d = (multiple_bernoulli_closed(n, w + h, om) - multiple_bernoulli_closed(n, w - h, om)) / (2 * h);
                const cplx ref = -multiple_bernoulli_closed(n - 1, w, om);
                fd.add(scaled_error(d, ref), describe("r=%g n=%g", r, n));
                const auto dp = multiple_bernoulli_polynomial(n, om).derivative();
                const auto lower = multiple_bernoulli_polynomial(n - 1, om);
                const int deg = std::max(dp.degree(), lower.degree());
                for (int i = 0; i <= deg; ++i) {
                    const cplx x = i <= dp.degree() ? dp[i] : cplx{};
                    const cplx y = i <= lower.degree() ? -lower[i] : cplx{};
                    poly.add(scaled_error(x, y), describe("r=%g n=%g coefficient %g", r, n, i));
                }
            }
        }
    }
    out.push_back(fd.finish());
    out.push_back(poly.finish());

    Tally conv("bernoulli", "convolution", 1e-10);
    for (int inst = 0; inst < 5; ++inst) {
        for (int r = 0; r <= 2; ++r) {
            for (int l = 0; l <= 2; ++l) {
                const Weights om = rng.weights(r, 0.5, 2.0, 0.3);
                const Weights al = rng.weights(l, 0.5, 2.0, 0.3);
                const cplx a = rng.point(-1.0, 2.0, 1.0);
                const cplx b = rng.point(-1.0, 2.0, 1.0);
                const Weights joint = concat(om, al);
                for (int k = -(r + l); k <= 3; ++k) {
                    cplx sum{};
                    for (int N = -l; N <= r + k; ++N)
                        sum += multiple_bernoulli_closed(k - N, a, om) * multiple_bernoulli_closed(N, b, al);
                    conv.add(rel_error(sum, multiple_bernoulli_closed(k, a + b, joint), 1e-10),
                             describe("r=%g l=%g k=%g", r, l, k));
                }
            }
        }
    }
    out.push_back(conv.finish());

    Tally ladder("bernoulli", "coefficient-ladder", 1e-10);
    for (int inst = 0; inst < 5; ++inst) {
        for (int r = 1; r <= 3; ++r) {
            const Weights om = rng.weights(r, 0.5, 2.0, 0.3);
            const cplx w = rng.point(0.05, 3.0, 1.0);
            for (int i = 0; i < r; ++i) {
                const Weights reduced = weights_without(om, static_cast<std::size_t>(i));
                for (int k = -r; k <= 4; ++k) {
                    const cplx lhs = multiple_bernoulli_closed(k, w, om) - multiple_bernoulli_closed(k, w + om[i], om);
                    ladder.add(rel_error(lhs, multiple_bernoulli_closed(k, w, reduced), 1e-10),
                               describe("r=%g i=%g k=%g", r, i, k));
                }
            }
        }
    }
    out.push_back(ladder.finish());

    // B_n(w) = (-1)^n n! a_{1,n-1}(w; 1): exact against a rational series inversion, then in floating point
    Tally exact("bernoulli", "classical-bridge-exact", 0.0);
    {
        const int nmax = 8;
        std::vector<Rational> e(nmax + 2), inv(nmax + 2);
        Rational fact = 1;
        for (int m = 0; m <= nmax + 1; ++m) {
            fact *= (m + 1);
            e[m] = Rational((m % 2) ? -1 : 1) / fact;  // (-t)^m / (m+1)!
        }
        for (int j = 0; j <= nmax + 1; ++j) {
            Rational s = (j == 0) ? 1 : 0;
            for (int i = 1; i <= j; ++i) s -= e[i] * inv[j - i];
            inv[j] = s;  // 1/(1 - e^{-t}) = t^{-1} sum_j inv[j] t^j
        }
        for (int n = 0; n <= nmax; ++n) {
            // a_{1,n-1}(w;1) = sum_m inv[n-m] (-w)^m / m!
            std::vector<Rational> coeffs(n + 1);
            Rational mf = 1;
            for (int m = 0; m <= n; ++m) {
                if (m > 0) mf *= m;
                coeffs[m] = inv[n - m] * Rational((m % 2) ? -1 : 1) / mf;
            }
            Rational nf = 1;
            for (int i = 2; i <= n; ++i) nf *= i;
            for (auto& c : coeffs) c *= Rational((n % 2) ? -1 : 1) * nf;
            if (!(BernoulliPolynomial(coeffs) == classical_bernoulli(n))) exact.add(1.0, describe("n=%g", n));
        }
    }
    out.push_back(exact.finish());

    Tally flt("bernoulli", "classical-bridge-float", 1e-12);
    for (int inst = 0; inst < 10; ++inst) {
        const cplx w = rng.point(-2.0, 3.0, 1.0);
        double nf = 1.0;
        for (int n = 0; n <= 8; ++n) {
            if (n > 0) nf *= n;
            const cplx a = multiple_bernoulli_series(w, Weights{1.0}, n - 1)[n - 1];
            flt.add(scaled_error(((n % 2) ? -1.0 : 1.0) * nf * a, evaluate(classical_bernoulli(n), w)), describe("n=%g", n));
        }
    }
    out.push_back(flt.finish());
}

// ---------------------------------------------------------------- zeta

void zeta_suite(const Options& opt, std::vector<CheckResult>& out) {
    Sampler rng(opt.seed + 1);
    const ContinuationConfig& cfg = opt.continuation;

    Tally agree("zeta", "direct-vs-continued", 1e-9);
    agree.guard([&] {
        for (int inst = 0; inst < 2; ++inst) {
            for (int r = 0; r <= 2; ++r) {
                const cplx s = rng.point(r + 1.5, r + 4.0, 1.0);
                const cplx w = rng.point(0.5, 3.0, 1.0);
                const Weights om = rng.weights(r);
                const cplx d = zeta_direct({s, w, om}, default_direct_cutoff(r));
                agree.add(scaled_error(zeta_continued({s, w, om}, cfg), d), describe("r=%g Re s=%g", r, s.real()));
            }
        }
        agree.add(scaled_error(zeta_continued({2.0, 1.0, Weights{1.0}}, cfg), kPi * kPi / 6.0), "Basel");
    });
    out.push_back(agree.finish());

    Tally special("zeta", "special-values", opt.tol);
    special.guard([&] {
        ContinuationConfig c = cfg;
        c.expansion_order = std::max(c.expansion_order, 6);
        for (int inst = 0; inst < 2; ++inst) {
            for (int r = 0; r <= 3; ++r) {
                const cplx w = rng.point(0.5, 3.0, 0.5);
                const Weights om = rng.weights(r);
                for (int n = 0; n <= 4; ++n)
                    special.add(rel_error(zeta_limit(n, w, om, c), zeta_special_value(n, w, om), opt.tol),
                                describe("r=%g n=%g", r, n));
            }
        }
        for (double w : {0.5, 1.0, 2.7}) {
            const cplx ref = -(w * w - w + 1.0 / 6.0) / 2.0;
            special.add(rel_error(zeta_special_value(1, w, Weights{1.0}), ref, opt.tol), "zeta_1(-1, w; 1)");
        }
    });
    out.push_back(special.finish());

    Tally homog("zeta", "homogeneity", 1e-10);
    homog.guard([&] {
        const double c = 2.5;
        for (int r = 0; r <= 2; ++r) {
            const Weights om = rng.weights(r);
            const cplx w = rng.point(0.5, 2.0, 0.5);
            for (cplx s : {cplx(r + 2.2, 0.4), cplx(-0.5, 0.3), cplx(0.5, 0.0), cplx(-2.3, -0.2)}) {
                if (r == 0 && s.real() < 0) continue;
                ContinuationConfig cc = cfg;
                const cplx lhs = zeta_continued({s, c * w, om.scaled(c)}, cc);
                const cplx rhs = std::exp(-s * std::log(c)) * zeta_continued({s, w, om}, cc);
                homog.add(rel_error(lhs, rhs, 1e-10), describe("r=%g Re s=%g", r, s.real()));
            }
        }
    });
    out.push_back(homog.finish());

    // (s - j) zeta_r(s) -> a_{r,-j} / Gamma(j) as s -> j
    Tally pole("zeta", "pole-residues-bounded", 1e-2);
    pole.guard([&] {
        const double eps = 1e-3;
        for (int r = 1; r <= 3; ++r) {
            const Weights om = rng.weights(r);
            const cplx w = rng.point(0.5, 2.0, 0.5);
            for (int j = 1; j <= r; ++j) {
                const cplx residue = multiple_bernoulli_closed(-j, w, om) * reciprocal_gamma(static_cast<double>(j));
                for (int q = 0; q < 8; ++q) {
                    const cplx d = eps * std::polar(1.0, 2 * kPi * q / 8);
                    const cplx v = d * zeta_continued({static_cast<double>(j) + d, w, om}, cfg);
                    if (!std::isfinite(std::abs(v))) pole.add(INFINITY, describe("r=%g j=%g", r, j));
                    pole.add(scaled_error(v, residue), describe("r=%g j=%g", r, j));
                }
            }
        }
    });
    out.push_back(pole.finish());
}

// ---------------------------------------------------------------- gamma

void gamma_suite(const Options& opt, std::vector<CheckResult>& out) {
    Sampler rng(opt.seed + 2);
    const ContourConfig& cc = opt.contour;
    double worst_doubling = 0.0;
    auto P = [&](int k, cplx w, const Weights& om) {
        const ContourEvaluation e = hankel_P_checked(k, w, om, cc);
        worst_doubling = std::max(worst_doubling, e.doubling_delta / std::max(1.0, std::abs(e.value)));
        return e.value;
    };

    Tally closed("gamma", "r0-closed-form", opt.tol);
    closed.guard([&] {
        for (int inst = 0; inst < 4; ++inst) {
            const cplx w = rng.point(0.5, 5.0, 1.0);
            for (int k = 0; k <= 4; ++k) closed.add(rel_error(P(k, w, Weights{}), P0_closed(k, w), opt.tol), describe("k=%g", k));
        }
    });
    out.push_back(closed.finish());

    Tally k0("gamma", "k0-contour-vs-zeta-derivative", opt.tol);
    k0.guard([&] {
        for (int r = 0; r <= 2; ++r) {
            const cplx w = rng.point(0.5, 3.0, 0.5);
            const Weights om = rng.weights(r);
            const cplx p = P(0, w, om);
            k0.add(rel_error(p, log_gamma_r(w, om, cc), opt.tol), describe("r=%g log_gamma_r", r));
            k0.add(rel_error(p, zeta_derivative(0, w, om, opt.continuation), opt.tol), describe("r=%g zeta'", r));
        }
    });
    out.push_back(k0.finish());

    Tally reduce("gamma", "contour-reduction-vs-traversal", 1e-10);
    reduce.guard([&] {
        for (int inst = 0; inst < 4; ++inst) {
            const int r = inst % 3;
            const int k = (inst * 2) % 3;
            const cplx w = rng.point(0.5, 3.0, 0.5);
            const Weights om = rng.weights(r);
            const ContourEvaluation e = hankel_log_integral(k, w, om, cc);
            reduce.add(scaled_error(e.value, hankel_log_integral_traversal(k, w, om, e.lambda)),
                       describe("r=%g k=%g", r, k));
        }
    });
    out.push_back(reduce.finish());

    Tally lam("gamma", "lambda-independence", 1e-9);
    lam.guard([&] {
        for (int inst = 0; inst < 4; ++inst) {
            const int r = inst % 3;
            const int k = inst % 3;
            const cplx w = rng.point(0.5, 3.0, 0.5);
            const Weights om = rng.weights(r);
            const double base = cc.radius_for(w, om);
            ContourConfig c = cc;
            const cplx ref = P(k, w, om);
            for (double f : {0.3, 0.6, 0.9}) {
                c.lambda = f * base;
                lam.add(scaled_error(hankel_P(k, w, om, c), ref), describe("r=%g k=%g fraction %g", r, k, f));
            }
        }
    });
    out.push_back(lam.finish());

    Tally fe("gamma", "functional-equation", 1e-9);
    fe.guard([&] {
        for (double w : {0.7, 1.0, 2.5, 6.0}) {
            const cplx lhs = P(0, w, Weights{1.0}) - P(0, w + 1.0, Weights{1.0});
            fe.add(scaled_error(lhs, -std::log(w)), describe("w=%g", w));
        }
    });
    out.push_back(fe.finish());

    Tally gam("gamma", "gamma-reproduction", opt.tol);
    gam.guard([&] {
        double log_fact = 0.0;
        for (int w = 1; w <= 8; ++w) {
            if (w > 1) log_fact += std::log(w - 1.0);
            const cplx ref = log_fact - 0.5 * std::log(2 * kPi);
            gam.add(scaled_error(log_gamma_r(static_cast<double>(w), Weights{1.0}, cc), ref), describe("w=%g", w));
        }
    });
    out.push_back(gam.finish());

    Tally norm("gamma", "bm-gamma-normalization", opt.tol);
    norm.guard([&] {
        for (int r = 0; r <= 2; ++r) {
            const cplx w = rng.point(0.5, 3.0, 0.5);
            const Weights om = rng.weights(r);
            for (int k = 1; k <= 2; ++k)
                norm.add(scaled_error(log_gamma_rk_contour(k, w, om, cc), log_gamma_rk(k, w, om, opt.continuation)),
                         describe("r=%g k=%g", r, k));
        }
        const double glaisher = 1.28242712910062263687534256886979;
        norm.add(scaled_error(log_gamma_rk(1, 1.0, Weights{1.0}, opt.continuation), 1.0 / 12.0 - std::log(glaisher)),
                 "zeta'(-1)");
    });
    out.push_back(norm.finish());

    Tally dbl("gamma", "node-doubling", 1e-9);
    dbl.add(worst_doubling);
    out.push_back(dbl.finish());
}

// ---------------------------------------------------------------- ladder

void ladder_suite(const Options& opt, std::vector<CheckResult>& out) {
    Sampler rng(opt.seed + 3);
    Tally t("ladder", "P-ladder", opt.tol);
    t.guard([&] {
        for (int inst = 0; inst < 2; ++inst) {
            for (int r = 1; r <= 3; ++r) {
                const Weights om = rng.weights(r);
                const cplx w = rng.point(0.5, 3.0, 0.5);
                for (int k = 0; k <= 2; ++k) {
                    for (int i = 0; i < r; ++i) {
                        const cplx lhs = hankel_P(k, w, om, opt.contour) - hankel_P(k, w + om[i], om, opt.contour);
                        const cplx rhs = hankel_P(k, w, weights_without(om, static_cast<std::size_t>(i)), opt.contour);
                        t.add(rel_error(lhs, rhs, opt.tol), describe("r=%g k=%g i=%g", r, k, i));
                    }
                }
            }
        }
    });
    out.push_back(t.finish());
}

// ---------------------------------------------------------------- stirling

void stirling_suite(const Options& opt, std::vector<CheckResult>& out) {
    Sampler rng(opt.seed + 4);
    const std::array<cplx, 4> grid = {10.0, 20.0, 40.0, 80.0};
    struct Shape {
        int r, l, k;
    };
    for (const Shape sh : {Shape{0, 1, 0}, Shape{1, 1, 0}, Shape{1, 1, 1}, Shape{0, 2, 0}, Shape{2, 1, 0}}) {
        for (double a : {0.0, 0.3}) {
            char name[64];
            std::snprintf(name, sizeof name, "decay(r=%d,l=%d,k=%d,a=%g)", sh.r, sh.l, sh.k, a);
            CheckResult res{"stirling", name, 0.0, -0.8, false, "slope window [-1.6, -0.8]"};
            const ExpansionSpec spec{rng.weights(sh.r), rng.weights(sh.l), sh.k, a};
            try {
                const auto reports = residual_report(spec, grid, opt.contour);
                res.achieved = decay_slope(reports);
                res.passed = res.achieved >= -1.6 && res.achieved <= -0.8;
            } catch (const std::exception& e) {
                res.achieved = NAN;
                res.detail = e.what();
            }
            out.push_back(res);
        }
    }

    Tally classical("stirling", "classical-stirling-w100", 1.2 / 1200.0);
    classical.add(std::abs(std::lgamma(100.0) - 0.5 * std::log(2 * kPi) - classical_stirling(100.0, 0.0)));
    out.push_back(classical.finish());

    Tally cons("stirling", "report-matches-log-gamma", 1e-9);
    cons.guard([&] {
        const ExpansionSpec spec{Weights{}, Weights{1.0}, 0, 0.0};
        const auto reports = residual_report(spec, grid, opt.contour);
        for (const auto& rep : reports) {
            const double w = rep.w.real();
            const double ref = std::abs(std::lgamma(w) - 0.5 * std::log(2 * kPi) - classical_stirling(w, 0.0));
            cons.add(std::abs(rep.residual - ref), describe("w=%g", w));
        }
    });
    out.push_back(cons.finish());
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"bernoulli", "zeta", "gamma", "ladder", "stirling"};
    return names;
}

std::vector<CheckResult> run_suite(std::string_view name, const Options& options) {
    std::vector<CheckResult> out;
    const bool all = name == "all";
    bool known = all;
    auto want = [&](std::string_view s) {
        const bool hit = all || name == s;
        known = known || hit;
        return hit;
    };
    if (want("bernoulli")) bernoulli_suite(options, out);
    if (want("zeta")) zeta_suite(options, out);
    if (want("gamma")) gamma_suite(options, out);
    if (want("ladder")) ladder_suite(options, out);
    if (want("stirling")) stirling_suite(options, out);
    if (!known) throw std::invalid_argument("unknown verification suite '" + std::string(name) + "'");
    return out;
}

std::string format(const CheckResult& r) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s  %s/%s  achieved=%.3e  bound=%.3e", r.passed ? "PASS" : "FAIL", r.suite.c_str(),
                  r.property.c_str(), r.achieved, r.bound);
    std::string line = buf;
    if (!r.detail.empty()) line += "  (" + r.detail + ")";
    return line;
}

}  // namespace mbgamma::verify
