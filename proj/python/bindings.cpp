#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include "qep/calculus.hpp"
#include "qep/cli.hpp"
#include "qep/parser.hpp"
#include "qep/printer.hpp"

namespace py = pybind11;

namespace {

qep::CalcType to_type(int n) {
  if (n != 1 && n != 2)
    throw py::value_error("calculus type must be 1 or 2");
  return n == 1 ? qep::CalcType::type1 : qep::CalcType::type2;
}

std::string dump(const nlohmann::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "symbolic engine for the two-parameter exterior plane calculus";

  m.def(
      "normalize",
      [](const std::string& expr, int type) {
        return qep::format_expr(qep::build_ruleset(to_type(type))
                                    .normalize(qep::parse_expr(expr)));
      },
      py::arg("expr"), py::arg("calculus") = 1,
      "normal form of an expression in the given calculus");
  m.def(
      "exterior_d",
      [](const std::string& expr, int type) {
        auto rs = qep::build_ruleset(to_type(type));
        return qep::format_expr(qep::exterior_d(qep::parse_expr(expr), rs));
      },
      py::arg("expr"), py::arg("calculus") = 1,
      "normalized exterior derivative");
  m.def(
      "derivative",
      [](const std::string& expr, const std::string& wrt, int type) {
        if (wrt != "theta" && wrt != "phi")
          throw py::value_error("wrt must be 'theta' or 'phi'");
        auto rs = qep::build_ruleset(to_type(type));
        return qep::format_expr(qep::apply_derivative(
            wrt == "theta" ? 1 : 2, qep::parse_expr(expr), rs));
      },
      py::arg("expr"), py::arg("wrt"), py::arg("calculus") = 1,
      "action of a partial derivative");
  m.def(
      "parse_roundtrip",
      [](const std::string& expr) {
        return qep::format_expr(qep::parse_expr(expr));
      },
      py::arg("expr"), "parse and pretty-print (canonical form)");

  m.def("solve_ansatz_json",
        [] { return dump(qep::cli::solve_ansatz_payload()); });
  m.def(
      "consistency_json",
      [](int type, bool flipped) {
        return dump(qep::cli::consistency_payload(to_type(type), flipped));
      },
      py::arg("calculus"), py::arg("flipped_sign") = false);
  m.def(
      "confluence_json",
      [](int type, bool flipped) {
        return dump(qep::cli::confluence_payload(to_type(type), flipped));
      },
      py::arg("calculus"), py::arg("flipped_sign") = false);
  m.def(
      "ybe_json",
      [](int type) { return dump(qep::cli::ybe_payload(to_type(type))); },
      py::arg("calculus"));
  m.def(
      "rcheck_json",
      [](int type) { return dump(qep::cli::rcheck_payload(to_type(type))); },
      py::arg("calculus"));
  m.def(
      "rtt_json",
      [](int type) { return dump(qep::cli::rtt_payload(to_type(type))); },
      py::arg("calculus"));
  m.def(
      "covariance_json",
      [](int type, bool commutative) {
        return dump(qep::cli::covariance_payload(to_type(type), commutative));
      },
      py::arg("calculus"), py::arg("commutative_control") = false);
  m.def(
      "fock_json",
      [](int type, std::complex<double> q) {
        return dump(qep::cli::fock_payload(to_type(type), q));
      },
      py::arg("calculus"), py::arg("q"));
  m.def(
      "verify_all_json",
      [](unsigned seed) { return dump(qep::cli::verify_all_payload(seed)); },
      py::arg("seed") = 0);

  m.def(
      "run_command",
      [](const std::vector<std::string>& argv) {
        return qep::cli::run_command(argv).exit_code;
      },
      py::arg("argv"), "run a CLI command in-process; returns the exit code");
}
