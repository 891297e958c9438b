#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mbgamma/asymptotic.h"
#include "mbgamma/bernoulli.h"
#include "mbgamma/bm_gamma.h"
#include "mbgamma/errors.h"
#include "mbgamma/special.h"
#include "mbgamma/verify.h"
#include "mbgamma/zeta.h"

namespace py = pybind11;
using namespace mbgamma;

namespace {

Weights to_weights(const std::vector<cplx>& v) { return Weights(v); }

std::vector<cplx> series_coeffs(const LaurentSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Multiple Bernoulli polynomials, multiple Hurwitz zeta and BM multiple gamma functions";

    py::register_exception<AccuracyError>(m, "AccuracyError", PyExc_RuntimeError);
    py::register_exception<TruncationError>(m, "TruncationError", PyExc_RuntimeError);
    py::register_exception<PoleError>(m, "PoleError", PyExc_ValueError);

    py::class_<ContinuationConfig>(m, "ContinuationConfig")
        .def(py::init<>())
        .def_readwrite("expansion_order", &ContinuationConfig::expansion_order)
        .def_readwrite("quad_rel_tol", &ContinuationConfig::quad_rel_tol)
        .def_readwrite("switch_point", &ContinuationConfig::switch_point)
        .def_readwrite("circle_nodes", &ContinuationConfig::circle_nodes)
        .def_readwrite("circle_radius", &ContinuationConfig::circle_radius);

    py::class_<ContourConfig>(m, "ContourConfig")
        .def(py::init<>())
        .def_readwrite("lambda_", &ContourConfig::lambda)
        .def_readwrite("lambda_fraction", &ContourConfig::lambda_fraction)
        .def_readwrite("w_scale", &ContourConfig::w_scale)
        .def_readwrite("circle_nodes", &ContourConfig::circle_nodes)
        .def_readwrite("line_rel_tol", &ContourConfig::line_rel_tol)
        .def_readwrite("self_check", &ContourConfig::self_check);

    m.def("multiple_bernoulli_series",
          [](cplx w, const std::vector<cplx>& omega, int order) {
              return series_coeffs(multiple_bernoulli_series(w, to_weights(omega), order));
          },
          py::arg("w"), py::arg("omega"), py::arg("order"),
          "Coefficients a_{r,n}(w; omega) for n = -r .. order.");
    m.def("multiple_bernoulli_closed",
          [](int n, cplx w, const std::vector<cplx>& omega) { return multiple_bernoulli_closed(n, w, to_weights(omega)); },
          py::arg("n"), py::arg("w"), py::arg("omega"));
    m.def("classical_bernoulli",
          [](int n) {
              const BernoulliPolynomial b = classical_bernoulli(n);
              std::vector<std::string> out;
              for (const auto& c : b.coeffs()) out.push_back(c.str());
              return out;
          },
          py::arg("n"), "Exact coefficients of B_n(w), constant term first, as 'p/q' strings.");

    m.def("reciprocal_gamma", &reciprocal_gamma, py::arg("s"));
    m.def("f_omega", [](cplx t, const std::vector<cplx>& omega) { return f_omega_eval(t, to_weights(omega)); },
          py::arg("t"), py::arg("omega"));

    m.def("zeta_direct",
          [](cplx s, cplx w, const std::vector<cplx>& omega, int cutoff) {
              const Weights om = to_weights(omega);
              return zeta_direct({s, w, om}, cutoff > 0 ? cutoff : default_direct_cutoff(om.rank()));
          },
          py::arg("s"), py::arg("w"), py::arg("omega"), py::arg("cutoff") = 0);
    m.def("zeta_continued",
          [](cplx s, cplx w, const std::vector<cplx>& omega, const ContinuationConfig& cfg) {
              return zeta_continued({s, w, to_weights(omega)}, cfg);
          },
          py::arg("s"), py::arg("w"), py::arg("omega"), py::arg("config") = ContinuationConfig{});
    m.def("zeta_special_value",
          [](int n, cplx w, const std::vector<cplx>& omega) { return zeta_special_value(n, w, to_weights(omega)); },
          py::arg("n"), py::arg("w"), py::arg("omega"));
    m.def("zeta_limit",
          [](int n, cplx w, const std::vector<cplx>& omega, const ContinuationConfig& cfg) {
              return zeta_limit(n, w, to_weights(omega), cfg);
          },
          py::arg("n"), py::arg("w"), py::arg("omega"), py::arg("config") = ContinuationConfig{});
    m.def("zeta_derivative",
          [](int k, cplx w, const std::vector<cplx>& omega, const ContinuationConfig& cfg) {
              return zeta_derivative(k, w, to_weights(omega), cfg);
          },
          py::arg("k"), py::arg("w"), py::arg("omega"), py::arg("config") = ContinuationConfig{});
    m.def("zeta",
          [](cplx s, cplx w, const std::vector<cplx>& omega) { return zeta(s, w, to_weights(omega)); },
          py::arg("s"), py::arg("w"), py::arg("omega"));

    m.def("hankel_P",
          [](int k, cplx w, const std::vector<cplx>& omega, const ContourConfig& cfg) {
              return hankel_P(k, w, to_weights(omega), cfg);
          },
          py::arg("k"), py::arg("w"), py::arg("omega"), py::arg("config") = ContourConfig{});
    m.def("log_gamma_r",
          [](cplx w, const std::vector<cplx>& omega, const ContourConfig& cfg) {
              return log_gamma_r(w, to_weights(omega), cfg);
          },
          py::arg("w"), py::arg("omega"), py::arg("config") = ContourConfig{});
    m.def("log_gamma_rk",
          [](int k, cplx w, const std::vector<cplx>& omega) { return log_gamma_rk(k, w, to_weights(omega)); },
          py::arg("k"), py::arg("w"), py::arg("omega"));
    m.def("log_gamma_rk_contour",
          [](int k, cplx w, const std::vector<cplx>& omega, const ContourConfig& cfg) {
              return log_gamma_rk_contour(k, w, to_weights(omega), cfg);
          },
          py::arg("k"), py::arg("w"), py::arg("omega"), py::arg("config") = ContourConfig{});
    m.def("P0_closed", &P0_closed, py::arg("n"), py::arg("w"));

    m.def("stirling_expand",
          [](const std::vector<cplx>& omega, const std::vector<cplx>& alpha, int k, cplx a, cplx w) {
              return stirling_expand({to_weights(omega), to_weights(alpha), k, a}, w);
          },
          py::arg("omega"), py::arg("alpha"), py::arg("k"), py::arg("a"), py::arg("w"));
    m.def("residual_report",
          [](const std::vector<cplx>& omega, const std::vector<cplx>& alpha, int k, cplx a,
             const std::vector<cplx>& grid) {
              py::list rows;
              for (const auto& rep : residual_report({to_weights(omega), to_weights(alpha), k, a}, grid)) {
                  py::dict d;
                  d["w"] = rep.w;
                  d["lhs"] = rep.lhs;
                  d["rhs"] = rep.rhs;
                  d["residual"] = rep.residual;
                  rows.append(d);
              }
              return rows;
          },
          py::arg("omega"), py::arg("alpha"), py::arg("k"), py::arg("a"), py::arg("grid"));
    m.def("decay_slope",
          [](const std::vector<cplx>& w, const std::vector<double>& residuals) {
              if (w.size() != residuals.size()) throw std::invalid_argument("w and residuals differ in length");
              std::vector<ExpansionReport> reps;
              for (std::size_t i = 0; i < w.size(); ++i) reps.push_back({w[i], 0.0, 0.0, residuals[i]});
              return decay_slope(reps);
          },
          py::arg("w"), py::arg("residuals"));
    m.def("classical_stirling", &classical_stirling, py::arg("w"), py::arg("a"));

    m.def("verify",
          [](const std::string& suite, double tol) {
              verify::Options opts;
              opts.tol = tol;
              py::list rows;
              for (const auto& r : verify::run_suite(suite, opts)) {
                  py::dict d;
                  d["suite"] = r.suite;
                  d["property"] = r.property;
                  d["achieved"] = r.achieved;
                  d["bound"] = r.bound;
                  d["passed"] = r.passed;
                  rows.append(d);
              }
              return rows;
          },
          py::arg("suite") = "all", py::arg("tol") = 1e-8);

    m.attr("__version__") = "0.1.0";
}
