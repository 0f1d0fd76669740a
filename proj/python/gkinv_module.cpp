#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gk/invariants.hpp"
#include "gk/io.hpp"

namespace py = pybind11;
using namespace gk;

namespace {

// Entries may be Python ints, Fractions or "num/den" strings.
json entry_json(const py::handle& x) { return json(py::str(x).cast<std::string>()); }

json matrix_arg(const py::sequence& rows) {
  json m = json::array();
  for (const auto& row : rows) {
    json r = json::array();
    for (const auto& x : row.cast<py::sequence>()) r.push_back(entry_json(x));
    m.push_back(r);
  }
  return m;
}

HalfIntegralForm form_arg(long p, const py::sequence& rows) {
  HalfIntegralForm b = parse_form(json{{"p", p}, {"matrix", matrix_arg(rows)}});
  if (b.degenerate()) throw InvalidInput("degenerate", "det B = 0");
  return b;
}

std::vector<std::vector<std::string>> matrix_out(const Matrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).get_str());
  return out;
}

py::dict egk_dict(const EGKDatum& g) {
  py::dict d;
  d["n"] = g.n;
  d["m"] = g.m;
  d["zeta"] = g.zeta;
  return d;
}

}  // namespace

PYBIND11_MODULE(gkinv, m) {
  m.doc() = "Gross-Keating invariants of half-integral symmetric matrices over Q_p";

  m.def("gk", [](long p, const py::sequence& b) { return gk::gk(form_arg(p, b)).values(); }, py::arg("p"), py::arg("matrix"));
  m.def("delta", [](long p, const py::sequence& b) { return delta(form_arg(p, b)); }, py::arg("p"), py::arg("matrix"));
  m.def("xi", [](long p, const py::sequence& b) { return xi(form_arg(p, b)); }, py::arg("p"), py::arg("matrix"));
  m.def("eta", [](long p, const py::sequence& b) { return eta(form_arg(p, b)); }, py::arg("p"), py::arg("matrix"));
  m.def("egk", [](long p, const py::sequence& b) { return egk_dict(egk_of(form_arg(p, b))); }, py::arg("p"),
        py::arg("matrix"));

  m.def(
      "reduce",
      [](long p, const py::sequence& b) {
        ReductionCertificate c = reduce(form_arg(p, b));
        py::dict d;
        d["U"] = matrix_out(c.U.matrix());
        d["R"] = matrix_out(c.R.matrix());
        d["ua"] = c.type.ua.values();
        std::vector<int> sigma;
        for (int x : c.type.sigma.images()) sigma.push_back(x + 1);
        d["sigma"] = sigma;
        return d;
      },
      py::arg("p"), py::arg("matrix"), "Certificate dict with U, R, ua and 1-indexed sigma.");

  m.def(
      "verify",
      [](long p, const py::sequence& b, const py::dict& cert) {
        HalfIntegralForm f = form_arg(p, b);
        json j{{"U", matrix_arg(cert["U"].cast<py::sequence>())},
               {"R", matrix_arg(cert["R"].cast<py::sequence>())},
               {"ua", cert["ua"].cast<std::vector<int>>()},
               {"sigma", cert["sigma"].cast<std::vector<int>>()}};
        Verification v = verify_certificate(f, parse_certificate(j, f.ctx()));
        return py::make_tuple(v.valid(), std::string(to_string(v.reason)));
      },
      py::arg("p"), py::arg("matrix"), py::arg("certificate"));

  m.def(
      "synth",
      [](const std::vector<int>& n, const std::vector<int>& ms, const std::vector<int>& zeta, long p,
         std::optional<std::vector<int>> sigma) {
        PrimeContext ctx(p);
        EGKDatum g{n, ms, zeta};
        if (ctx.dyadic()) {
          std::optional<Involution> s;
          if (sigma) s = parse_sigma(json(*sigma));
          return matrix_out(synthesize_reduced(g, s, ctx).matrix());
        }
        if (sigma) throw InvalidInput("sigma_not_applicable", "sigma is only used for p = 2");
        Validation v = validate_egk(g);
        if (!v.ok()) throw InvalidInput("invalid_egk", v.violations.front());
        return matrix_out(synthesize_nondyadic(lift(g), ctx).matrix());
      },
      py::arg("n"), py::arg("m"), py::arg("zeta"), py::arg("p") = 2, py::arg("sigma") = py::none());
}
