#include "cli.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mbgamma/asymptotic.h"
#include "mbgamma/bernoulli.h"
#include "mbgamma/bm_gamma.h"
#include "mbgamma/errors.h"
#include "mbgamma/verify.h"
#include "mbgamma/zeta.h"

namespace mbgamma::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool parse_double(std::string_view s, double& value, std::size_t& used) {
    const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    used = static_cast<std::size_t>(res.ptr - s.data());
    return res.ec == std::errc() && used > 0;
}

std::string number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string pair(cplx z) { return number(z.real()) + " " + number(z.imag()); }

// inverse of parse_complex
std::string format_complex(cplx z) {
    if (z.imag() == 0.0) return number(z.real());
    return number(z.real()) + (z.imag() < 0 ? "-" : "+") + number(std::abs(z.imag())) + "i";
}

struct Shared {
    int r = 0;
    std::string omega;
    std::string w = "1";
    double lambda_frac = 0.5;
    int circle_nodes = 256;
    double quad_tol = 1e-11;

    CLI::Option* r_opt = nullptr;
    CLI::Option* omega_opt = nullptr;

    void add_weights(CLI::App* sub) {
        r_opt = sub->add_option("--r", r, "rank; with no --omega the weights are (1, ..., 1)")->check(CLI::NonNegativeNumber);
        omega_opt = sub->add_option("--omega", omega, "comma-separated complex weights, \"\" for none");
    }
    void add_contour(CLI::App* sub) {
        sub->add_option("--lambda-frac", lambda_frac, "contour radius as a fraction of min|2pi/omega_i|");
        sub->add_option("--circle-nodes", circle_nodes, "trapezoid nodes on the contour circle");
        sub->add_option("--quad-tol", quad_tol, "relative tolerance of the adaptive quadratures");
    }

    Weights weights() const {
        if (omega_opt && omega_opt->count() > 0) {
            Weights om = parse_weights(omega);
            if (r_opt->count() > 0 && r != om.rank())
                throw std::invalid_argument("--r " + std::to_string(r) + " does not match " +
                                            std::to_string(om.rank()) + " weights in --omega");
            return om;
        }
        return Weights::ones(r);
    }
    ContourConfig contour() const {
        ContourConfig c;
        c.lambda_fraction = lambda_frac;
        c.circle_nodes = circle_nodes;
        c.line_rel_tol = quad_tol;
        return c;
    }
    ContinuationConfig continuation() const {
        ContinuationConfig c;
        c.quad_rel_tol = quad_tol;
        return c;
    }
};

void write_exact(std::ostream& out, const BernoulliPolynomial& p) {
    for (int i = 0; i <= p.degree(); ++i) out << (i ? " " : "") << p[i].str();
    out << '\n';
}

}  // namespace

cplx parse_complex(std::string_view text) {
    const std::string_view s = trim(text);
    double re = 0.0;
    std::size_t used = 0;
    if (s.empty() || (s.front() == '+') || !parse_double(s, re, used))
        throw std::invalid_argument("cannot parse complex number '" + std::string(text) + "'");
    std::string_view rest = s.substr(used);
    if (rest.empty()) return {re, 0.0};
    const char sign = rest.front();
    rest.remove_prefix(1);
    double im = 0.0;
    if ((sign != '+' && sign != '-') || rest.empty() || rest.front() == '+' || rest.front() == '-' ||
        !parse_double(rest, im, used) || rest.substr(used) != "i")
        throw std::invalid_argument("cannot parse complex number '" + std::string(text) + "' (expected RE, RE+IMi or RE-IMi)");
    return {re, sign == '-' ? -im : im};
}

std::vector<cplx> parse_complex_list(std::string_view text) {
    std::vector<cplx> values;
    if (trim(text).empty()) return values;
    while (true) {
        const std::size_t comma = text.find(',');
        values.push_back(parse_complex(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return values;
}

Weights parse_weights(std::string_view text) {
    auto values = parse_complex_list(text);
    for (const cplx& v : values)
        if (!(v.real() > 0.0)) throw std::invalid_argument("weights need positive real parts: '" + std::string(text) + "'");
    return Weights(std::move(values));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multiple Bernoulli polynomials, multiple Hurwitz zeta and BM multiple gamma functions"};
    app.require_subcommand(1);

    // bernoulli
    Shared bern;
    int n_min = 0, n_max = 5;
    std::string method = "series";
    bool polynomial = false, classical = false;
    auto* sub_bern = app.add_subcommand("bernoulli", "print a_{r,n}(w; omega) for n in a range");
    bern.add_weights(sub_bern);
    sub_bern->add_option("--w", bern.w, "complex argument w");
    auto* nmin_opt = sub_bern->add_option("--n-min", n_min, "first n (default -r)");
    sub_bern->add_option("--n-max", n_max, "last n");
    sub_bern->add_option("--method", method, "series | closed")->check(CLI::IsMember({"series", "closed"}));
    sub_bern->add_flag("--polynomial", polynomial, "print a_{r,n} as polynomial coefficients in w");
    sub_bern->add_flag("--classical", classical, "print exact coefficients of B_n(w) instead");

    // zeta
    Shared zet;
    std::string s_text = "2";
    std::string path = "auto";
    int cutoff = 0, expansion_order = 8;
    auto* sub_zeta = app.add_subcommand("zeta", "print zeta_r(s, w; omega)");
    zet.add_weights(sub_zeta);
    zet.add_contour(sub_zeta);
    sub_zeta->add_option("--s", s_text, "complex s")->required();
    sub_zeta->add_option("--w", zet.w, "complex w, Re(w) > 0");
    sub_zeta->add_option("--path", path, "auto | direct | continued | special | limit")
        ->check(CLI::IsMember({"auto", "direct", "continued", "special", "limit"}));
    sub_zeta->add_option("--cutoff", cutoff, "lattice cutoff for the direct path");
    sub_zeta->add_option("--expansion-order", expansion_order, "Laurent terms used near t = 0 in the continuation");

    // pfun
    Shared pf;
    int pk = 0;
    auto* sub_pfun = app.add_subcommand("pfun", "print the modified BM gamma function P_r(k, w; omega)");
    pf.add_weights(sub_pfun);
    pf.add_contour(sub_pfun);
    sub_pfun->add_option("--k", pk, "order k >= -r");
    sub_pfun->add_option("--w", pf.w, "complex w, Re(w) > 0");
    bool pclosed = false;
    sub_pfun->add_flag("--closed", pclosed, "closed form of P_0(k, w) (needs r = 0)");

    // gamma
    Shared gm;
    int gk = 0;
    std::string route = "auto";
    auto* sub_gamma = app.add_subcommand("gamma", "print log Gamma_r(w; omega), or log Gamma_{r,k} with --k");
    gm.add_weights(sub_gamma);
    gm.add_contour(sub_gamma);
    sub_gamma->add_option("--w", gm.w, "complex w, Re(w) > 0");
    auto* gk_opt = sub_gamma->add_option("--k", gk, "BM order k >= 0")->check(CLI::NonNegativeNumber);
    sub_gamma->add_option("--route", route, "auto | contour | zeta")->check(CLI::IsMember({"auto", "contour", "zeta"}));

    // stirling
    Shared st;
    int l = 1, sk = 0;
    std::string alpha = "1", a_text = "0", grid_text = "10,20,40,80", out_path;
    auto* sub_st = app.add_subcommand("stirling", "CSV residuals of the generalized Stirling expansion");
    st.add_weights(sub_st);
    st.add_contour(sub_st);
    auto* l_opt = sub_st->add_option("--l", l, "number of shifted weights");
    sub_st->add_option("--k", sk, "order k");
    sub_st->add_option("--alpha", alpha, "comma-separated shifted weights");
    sub_st->add_option("--a", a_text, "complex shift a, Re(a) >= 0");
    sub_st->add_option("--w-grid", grid_text, "comma-separated complex w values");
    sub_st->add_option("--out", out_path, "write CSV here instead of standard output");
    bool slope = false, classical_only = false;
    sub_st->add_flag("--slope", slope, "print the fitted log-log decay slope of the residuals instead of CSV");
    auto* cls_flag = sub_st->add_flag("--classical", classical_only,
                                      "print (w + a - 1/2) log w - w for each grid point instead of CSV");
    cls_flag->excludes(sub_st->get_option("--slope"));

    // verify
    Shared vf;
    std::string suite = "all";
    double tol = 1e-8;
    std::uint64_t seed = verify::Options{}.seed;
    auto* sub_verify = app.add_subcommand("verify", "run an invariant suite and report PASS/FAIL per property");
    vf.add_contour(sub_verify);
    sub_verify->add_option("--suite", suite, "bernoulli | zeta | gamma | ladder | stirling | all")
        ->check(CLI::IsMember({"bernoulli", "zeta", "gamma", "ladder", "stirling", "all"}));
    sub_verify->add_option("--tol", tol, "tolerance for the continuation and contour identities");
    sub_verify->add_option("--seed", seed, "seed for the random instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? kOk : kUsage;
    }

    std::string context;
    try {
        if (sub_bern->parsed()) {
            const Weights om = bern.weights();
            const cplx w = parse_complex(bern.w);
            const int lo = nmin_opt->count() ? n_min : -om.rank();
            if (classical) {
                for (int n = std::max(0, lo); n <= n_max; ++n) {
                    out << n << ": ";
                    write_exact(out, classical_bernoulli(n));
                }
                return kOk;
            }
            context = "bernoulli";
            if (polynomial) {
                for (int n = lo; n <= n_max; ++n) {
                    const ComplexPolynomial p = multiple_bernoulli_polynomial(n, om);
                    out << n;
                    for (const cplx& c : p.coeffs()) out << ' ' << pair(c);
                    out << '\n';
                }
                return kOk;
            }
            const LaurentSeries series = multiple_bernoulli_series(w, om, std::max(n_max, -om.rank()));
            for (int n = lo; n <= n_max; ++n) {
                const cplx v = method == "closed" ? multiple_bernoulli_closed(n, w, om) : series[n];
                out << n << ' ' << pair(v) << '\n';
            }
            return kOk;
        }
        if (sub_zeta->parsed()) {
            const Weights om = zet.weights();
            const cplx s = parse_complex(s_text);
            const cplx w = parse_complex(zet.w);
            ContinuationConfig cfg = zet.continuation();
            cfg.expansion_order = expansion_order;
            context = "zeta(s=" + s_text + ", w=" + zet.w + ")";
            cplx v;
            const bool nonpositive_integer = s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::round(s.real());
            if (path == "direct") {
                v = zeta_direct({s, w, om}, cutoff > 0 ? cutoff : default_direct_cutoff(om.rank()));
            } else if (path == "continued") {
                v = zeta_continued({s, w, om}, cfg);
            } else if (path == "special" || path == "limit") {
                if (!nonpositive_integer) throw std::invalid_argument("--path " + path + " needs s = 0, -1, -2, ...");
                const int n = static_cast<int>(-s.real());
                if (path == "special") {
                    v = zeta_special_value(n, w, om);
                } else {
                    cfg.expansion_order = std::max(cfg.expansion_order, n + 1);
                    v = zeta_limit(n, w, om, cfg);
                }
            } else {
                v = zeta(s, w, om, cfg);
            }
            out << pair(v) << '\n';
            return kOk;
        }
        if (sub_pfun->parsed()) {
            const Weights om = pf.weights();
            context = "pfun(k=" + std::to_string(pk) + ", w=" + pf.w + ")";
            if (pclosed) {
                if (!om.empty()) throw std::invalid_argument("--closed needs r = 0");
                out << pair(P0_closed(pk, parse_complex(pf.w))) << '\n';
                return kOk;
            }
            out << pair(hankel_P(pk, parse_complex(pf.w), om, pf.contour())) << '\n';
            return kOk;
        }
        if (sub_gamma->parsed()) {
            const Weights om = gm.weights();
            const cplx w = parse_complex(gm.w);
            context = "gamma(w=" + gm.w + ")";
            cplx v;
            if (gk_opt->count() == 0) {
                if (route == "zeta") v = log_gamma_rk(0, w, om, gm.continuation());
                else v = log_gamma_r(w, om, gm.contour());
            } else if (route == "contour") {
                v = log_gamma_rk_contour(gk, w, om, gm.contour());
            } else {
                v = log_gamma_rk(gk, w, om, gm.continuation());
            }
            out << pair(v) << '\n';
            return kOk;
        }
        if (sub_st->parsed()) {
            ExpansionSpec spec{st.weights(), parse_weights(alpha), sk, parse_complex(a_text)};
            if (l_opt->count() && l != spec.l())
                throw std::invalid_argument("--l " + std::to_string(l) + " does not match " +
                                            std::to_string(spec.l()) + " weights in --alpha");
            spec.validate();
            const auto grid = parse_complex_list(grid_text);
            if (classical_only) {
                for (const cplx& w : grid) out << format_complex(w) << ' ' << pair(classical_stirling(w, spec.a)) << '\n';
                return kOk;
            }
            context = "stirling";
            const auto reports = residual_report(spec, grid, st.contour());
            if (slope) {
                out << number(decay_slope(reports)) << '\n';
                return kOk;
            }
            std::ofstream file;
            if (!out_path.empty()) {
                file.open(out_path);
                if (!file) throw std::invalid_argument("cannot open --out " + out_path);
            }
            std::ostream& dst = out_path.empty() ? out : file;
            dst << "w,lhs_re,lhs_im,rhs_re,rhs_im,abs_residual\n";
            for (const auto& rep : reports) {
                dst << format_complex(rep.w) << ',' << number(rep.lhs.real()) << ',' << number(rep.lhs.imag()) << ','
                    << number(rep.rhs.real()) << ',' << number(rep.rhs.imag()) << ',' << number(rep.residual) << '\n';
            }
            return kOk;
        }
        if (sub_verify->parsed()) {
            verify::Options opts;
            opts.tol = tol;
            opts.seed = seed;
            opts.contour = vf.contour();
            opts.continuation = vf.continuation();
            bool all_pass = true;
            for (const auto& res : verify::run_suite(suite, opts)) {
                out << verify::format(res) << '\n';
                all_pass = all_pass && res.passed;
            }
            return all_pass ? kOk : kNumerical;
        }
    } catch (const AccuracyError& e) {
        err << "numerical failure in " << context << ": " << e.what() << '\n';
        return kNumerical;
    } catch (const TruncationError& e) {
        err << "numerical failure in " << context << ": " << e.what() << '\n';
        return kNumerical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace mbgamma::cli
