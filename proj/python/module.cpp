#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sixv/oracle.hpp"
#include "sixv/runner.hpp"
#include "sixv/validate.hpp"

namespace py = pybind11;
using namespace sixv;

namespace {

HomParams make_params(const std::string& lambda, const std::string& eta, int digits) {
  Precision prec = Precision::digits(digits);
  return {run::parse_angle(lambda, prec), run::parse_angle(eta, prec)};
}

}  // namespace

PYBIND11_MODULE(sixvertex, m) {
  m.doc() = "domain wall six-vertex model: partition function and emptiness probability";

  m.def("config_count", &oracle::config_count, py::arg("n"),
        "number of configurations of the n by n domain wall lattice");

  m.def(
      "z",
      [](int n, const std::string& lambda, const std::string& eta,
         const std::string& method, int digits) {
        HomParams p = make_params(lambda, eta, digits);
        return run::format_value(run::compute_z(p, n, method));
      },
      py::arg("n"), py::arg("lambda_") = "pi/2", py::arg("eta") = "pi/6",
      py::arg("method") = "det", py::arg("digits") = 128,
      "partition function as a decimal string");

  m.def(
      "efp",
      [](int n, int r, int s, const std::string& lambda, const std::string& eta,
         const std::string& method, int digits) {
        HomParams p = make_params(lambda, eta, digits);
        return run::format_value(run::compute_efp(p, n, r, s, method));
      },
      py::arg("n"), py::arg("r"), py::arg("s"), py::arg("lambda_") = "pi/2",
      py::arg("eta") = "pi/6", py::arg("method") = "hom", py::arg("digits") = 128,
      "emptiness formation probability as a decimal string");

  m.def(
      "sweep_csv",
      [](int n, int smax, const std::string& lambda, const std::string& eta,
         const std::string& method, int workers, int digits) {
        HomParams p = make_params(lambda, eta, digits);
        return run::sweep_csv(p, n, smax, method, workers);
      },
      py::arg("n"), py::arg("smax"), py::arg("lambda_") = "pi/2",
      py::arg("eta") = "pi/6", py::arg("method") = "hom", py::arg("workers") = 1,
      py::arg("digits") = 128, "grid of emptiness values in csv form");

  m.def(
      "hgen",
      [](int n, const std::string& lambda, const std::string& eta, int digits) {
        HomParams p = make_params(lambda, eta, digits);
        return run::hgen_text(p, n);
      },
      py::arg("n"), py::arg("lambda_") = "pi/2", py::arg("eta") = "pi/6",
      py::arg("digits") = 128, "first-row distribution, one line per position");

  m.def(
      "validate",
      [](const std::string& only, int digits) {
        auto checks = validate::run_checks(Precision::digits(digits), only);
        py::list out;
        for (const auto& c : checks) {
          py::dict rec;
          rec["name"] = c.name;
          rec["anchor"] = c.anchor;
          rec["category"] = c.category;
          rec["max_dev"] = c.max_dev.str(3);
          rec["tol"] = c.tol.str(3);
          rec["pass"] = c.pass;
          out.append(rec);
        }
        return out;
      },
      py::arg("only") = "", py::arg("digits") = 128,
      "run the internal consistency checks, optionally filtered by category or name");
}
