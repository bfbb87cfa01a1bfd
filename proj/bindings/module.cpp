// Python bindings for the core evidence computations. Exceptions map to
// Python's built-ins (std::domain_error / std::invalid_argument ->
// ValueError) via pybind11's default translators.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swingbf/ci_intrinsic.hpp"
#include "swingbf/default_test.hpp"
#include "swingbf/frequentist.hpp"
#include "swingbf/full_intrinsic.hpp"
#include "swingbf/model_core.hpp"
#include "swingbf/sensitivity.hpp"

namespace py = pybind11;
using namespace swingbf;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bayes factors for equality of two correlated proportions from a "
            "2x2 matched-pairs table";

  py::class_<ContingencyTable>(m, "ContingencyTable")
      .def(py::init<>())
      .def(py::init([](std::int64_t n00, std::int64_t n01, std::int64_t n10,
                       std::int64_t n11) {
             return ContingencyTable{n00, n01, n10, n11};
           }),
           py::arg("n00"), py::arg("n01"), py::arg("n10"), py::arg("n11"))
      .def_readwrite("n00", &ContingencyTable::n00)
      .def_readwrite("n01", &ContingencyTable::n01)
      .def_readwrite("n10", &ContingencyTable::n10)
      .def_readwrite("n11", &ContingencyTable::n11)
      .def("n_triangle", &ContingencyTable::n_triangle)
      .def("n_plus_plus", &ContingencyTable::n_plus_plus)
      .def("validate", &ContingencyTable::validate);

  py::class_<DirichletHyper>(m, "DirichletHyper")
      .def(py::init<>())
      .def(py::init([](double a00, double a01, double a10, double a11) {
             return DirichletHyper{a00, a01, a10, a11};
           }),
           py::arg("a00") = 1.0, py::arg("a01") = 1.0, py::arg("a10") = 1.0,
           py::arg("a11") = 1.0)
      .def_readwrite("a00", &DirichletHyper::a00)
      .def_readwrite("a01", &DirichletHyper::a01)
      .def_readwrite("a10", &DirichletHyper::a10)
      .def_readwrite("a11", &DirichletHyper::a11)
      .def("a_triangle", &DirichletHyper::a_triangle)
      .def("a_plus_plus", &DirichletHyper::a_plus_plus)
      .def("validate", &DirichletHyper::validate);

  py::class_<BetaParams>(m, "BetaParams")
      .def_readonly("alpha", &BetaParams::alpha)
      .def_readonly("beta", &BetaParams::beta);

  py::class_<ReparamPrior>(m, "ReparamPrior")
      .def_readonly("eta_law", &ReparamPrior::eta_law)
      .def_readonly("theta_law", &ReparamPrior::theta_law)
      .def_readonly("gamma_law", &ReparamPrior::gamma_law);

  py::class_<ImaginaryData>(m, "ImaginaryData")
      .def(py::init<>())
      .def_readwrite("x01", &ImaginaryData::x01)
      .def_readwrite("x_triangle", &ImaginaryData::x_triangle)
      .def_readwrite("x_plus_plus", &ImaginaryData::x_plus_plus);

  py::enum_<Method>(m, "Method")
      .value("default_bf", Method::default_bf)
      .value("ci_intrinsic", Method::ci_intrinsic)
      .value("i_intrinsic", Method::i_intrinsic);

  py::class_<EvidenceSummary>(m, "EvidenceSummary")
      .def_readonly("log_bf_h_vs_h0", &EvidenceSummary::log_bf_h_vs_h0)
      .def_readonly("posterior_prob_h0", &EvidenceSummary::posterior_prob_h0)
      .def_readonly("method", &EvidenceSummary::method);

  py::class_<BetaComponent>(m, "BetaComponent")
      .def_readonly("log_weight", &BetaComponent::log_weight)
      .def_readonly("alpha", &BetaComponent::alpha)
      .def_readonly("beta", &BetaComponent::beta);

  py::class_<BetaMixture>(m, "BetaMixture")
      .def_readonly("components", &BetaMixture::components);

  py::class_<ImaginaryWeightTable>(m, "ImaginaryWeightTable")
      .def_readonly("x_plus_plus", &ImaginaryWeightTable::x_plus_plus)
      .def("log_weight", &ImaginaryWeightTable::log_weight, py::arg("x01"),
           py::arg("x_triangle"))
      .def("__len__", &ImaginaryWeightTable::size);

  py::class_<CurvePoint>(m, "CurvePoint")
      .def_readonly("theta", &CurvePoint::theta)
      .def_readonly("density", &CurvePoint::density);

  py::enum_<SensitivityMethod>(m, "SensitivityMethod")
      .value("ci_intrinsic", SensitivityMethod::ci_intrinsic)
      .value("i_intrinsic", SensitivityMethod::i_intrinsic);

  py::class_<SensitivityPoint>(m, "SensitivityPoint")
      .def_readonly("q", &SensitivityPoint::q)
      .def_readonly("x", &SensitivityPoint::x)
      .def_readonly("posterior_prob_h0", &SensitivityPoint::posterior_prob_h0);

  py::class_<SensitivityCurve>(m, "SensitivityCurve")
      .def_readonly("method", &SensitivityCurve::method)
      .def_readonly("points", &SensitivityCurve::points);

  py::enum_<DiagonalSplit>(m, "DiagonalSplit")
      .value("all_n00", DiagonalSplit::all_n00)
      .value("even", DiagonalSplit::even);

  py::class_<NppCurves>(m, "NppCurves")
      .def_readonly("n_plus_plus", &NppCurves::n_plus_plus)
      .def_readonly("ci_prob", &NppCurves::ci_prob)
      .def_readonly("i_prob", &NppCurves::i_prob);

  py::enum_<McnemarVariant>(m, "McnemarVariant")
      .value("chi_square_cc", McnemarVariant::chi_square_cc)
      .value("chi_square_plain", McnemarVariant::chi_square_plain)
      .value("exact_binomial", McnemarVariant::exact_binomial);

  py::class_<FrequentistResult>(m, "FrequentistResult")
      .def_readonly("statistic", &FrequentistResult::statistic)
      .def_readonly("p_value", &FrequentistResult::p_value)
      .def_readonly("variant", &FrequentistResult::variant);

  m.def("reparametrize", &reparametrize, py::arg("hyper"));
  m.def("default_log_bf", &default_log_bf, py::arg("table"), py::arg("hyper"));
  m.def("ci_log_bf", &ci_log_bf, py::arg("table"), py::arg("hyper"),
        py::arg("x_triangle"));
  m.def("i_log_bf", &i_log_bf, py::arg("table"), py::arg("hyper"),
        py::arg("x_plus_plus"));
  m.def("i_log_bf_via_mixture_identity", &i_log_bf_via_mixture_identity,
        py::arg("table"), py::arg("hyper"), py::arg("x_plus_plus"));
  m.def("to_summary", &to_summary, py::arg("log_bf"), py::arg("method"),
        py::arg("prior_config") = std::optional<ImaginaryData>{});
  m.def("mcnemar_test", &mcnemar_test, py::arg("table"),
        py::arg("variant") = McnemarVariant::chi_square_cc);
  m.def("ci_prior", &ci_prior, py::arg("hyper"), py::arg("x_triangle"));
  m.def("mixture_density", &mixture_density, py::arg("mixture"),
        py::arg("theta"));
  m.def("h0_weights", &h0_weights, py::arg("hyper"), py::arg("x_plus_plus"));
  m.def("i_prior_density", &i_prior_density, py::arg("hyper"),
        py::arg("x_plus_plus"), py::arg("eta"), py::arg("theta"));
  m.def("i_prior_theta_marginal", &i_prior_theta_marginal, py::arg("hyper"),
        py::arg("x_plus_plus"));
  m.def(
      "i_prior_eta_marginal",
      [](const DirichletHyper& a, std::int64_t x_plus_plus,
         const std::vector<double>& eta_grid) {
        return i_prior_eta_marginal(a, x_plus_plus, eta_grid);
      },
      py::arg("hyper"), py::arg("x_plus_plus"), py::arg("eta_grid"));
  m.def(
      "sensitivity_curve",
      [](const ContingencyTable& n, const DirichletHyper& a,
         SensitivityMethod method, const std::vector<double>& q_grid) {
        return sensitivity_curve(n, a, method, q_grid);
      },
      py::arg("table"), py::arg("hyper"), py::arg("method"),
      py::arg("q_grid"));
  m.def("default_q_grid", &default_q_grid);
  m.def(
      "npp_dependence_curve",
      [](std::int64_t n01, std::int64_t n10, std::int64_t x_plus_plus,
         std::int64_t x_triangle, const DirichletHyper& a,
         const std::vector<std::int64_t>& npp_grid, DiagonalSplit split) {
        return npp_dependence_curve(n01, n10, x_plus_plus, x_triangle, a,
                                    npp_grid, split);
      },
      py::arg("n01"), py::arg("n10"), py::arg("x_plus_plus"),
      py::arg("x_triangle"), py::arg("hyper"), py::arg("npp_grid"),
      py::arg("split") = DiagonalSplit::all_n00);
  m.def(
      "normalized_likelihood_curve",
      [](const ContingencyTable& n, const std::vector<double>& grid) {
        return normalized_likelihood_curve(n, grid);
      },
      py::arg("table"), py::arg("grid"));
  m.def("grid_midpoints", &grid_midpoints, py::arg("points"));
}
