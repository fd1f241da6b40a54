#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "squeezelab/analysis.hpp"
#include "squeezelab/errors.hpp"
#include "squeezelab/fock_oracle.hpp"
#include "squeezelab/genfun_engine.hpp"
#include "squeezelab/semiclassical.hpp"
#include "squeezelab/sns_closed_form.hpp"
#include "squeezelab/verify.hpp"

namespace py = pybind11;
namespace sl = squeezelab;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) {
  py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

py::dict table_dict(const sl::DistributionTable& t) {
  py::dict d;
  d["coords"] = to_array(t.coords);
  d["probs"] = to_array(t.probs);
  d["truncation"] = t.meta.truncation;
  d["captured_mass"] = t.meta.captured_mass;
  d["parity_gapped"] = t.meta.parity_gapped;
  return d;
}

sl::DistributionTable table_from(py::array_t<double> coords, py::array_t<double> probs, bool parity_gapped, int m) {
  if (coords.size() != probs.size()) throw std::invalid_argument("coords and probs differ in length");
  sl::DistributionTable t;
  t.coords.assign(coords.data(), coords.data() + coords.size());
  t.probs.assign(probs.data(), probs.data() + probs.size());
  t.meta.parity_gapped = parity_gapped;
  t.meta.state.m = m;
  return t;
}

}  // namespace

PYBIND11_MODULE(_squeezelab, m) {
  m.doc() = "Photon, quadrature and Husimi representations of squeezed number states.";

  py::register_exception<sl::NonConvergenceError>(m, "NonConvergenceError", PyExc_RuntimeError);
  py::register_exception<sl::TrustRegionError>(m, "TrustRegionError", PyExc_IndexError);

  py::class_<sl::SqueezedNumberState>(m, "State")
      .def(py::init([](int mm, double r) {
             sl::SqueezedNumberState s{mm, r};
             sl::validate(s);
             return s;
           }),
           py::arg("m"), py::arg("r"))
      .def_readonly("m", &sl::SqueezedNumberState::m)
      .def_readonly("r", &sl::SqueezedNumberState::r)
      .def("__repr__", [](const sl::SqueezedNumberState& s) {
        return "State(m=" + std::to_string(s.m) + ", r=" + py::repr(py::float_(s.r)).cast<std::string>() + ")";
      });

  m.def("fock_amplitude", &sl::fock_amplitude, py::arg("n"), py::arg("state"));
  m.def(
      "photon_distribution",
      [](const sl::SqueezedNumberState& s, double eps) { return table_dict(sl::photon_distribution(s, eps)); },
      py::arg("state"), py::arg("tail_eps") = sl::kDefaultTailEps);
  m.def("position_wf", py::vectorize([](double q, sl::SqueezedNumberState s) { return sl::position_wf(q, s); }), py::arg("q"), py::arg("state"));
  m.def("momentum_wf", py::vectorize([](double p, sl::SqueezedNumberState s) { return sl::momentum_wf(p, s); }), py::arg("p"), py::arg("state"));
  m.def("coherent_amplitude", &sl::coherent_amplitude, py::arg("alpha"), py::arg("state"));
  m.def("q_function", py::vectorize([](sl::cplx a, sl::SqueezedNumberState s) { return sl::q_function(a, s); }), py::arg("alpha"), py::arg("state"));
  m.def(
      "q_grid",
      [](const sl::SqueezedNumberState& s, std::pair<double, double> re, std::pair<double, double> im, int n_re,
         int n_im, unsigned threads) {
        const sl::GridSpec g{re.first, re.second, im.first, im.second, n_re, n_im};
        std::vector<double> q;
        {
          py::gil_scoped_release release;
          q = sl::q_grid(s, g, threads);
        }
        py::array_t<double> out({n_im, n_re});
        std::copy(q.begin(), q.end(), out.mutable_data());
        return out;
      },
      py::arg("state"), py::arg("re") = std::make_pair(-4.0, 4.0), py::arg("im") = std::make_pair(-4.0, 4.0),
      py::arg("n_re") = 81, py::arg("n_im") = 81, py::arg("threads") = 1u,
      "Q on a grid as an (n_im, n_re) array; row j holds Im(alpha) = im_j.");

  m.def(
      "generating_amplitude",
      [](int n, const sl::SqueezedNumberState& s) { return sl::extract_amplitude(sl::FockRep{n}, s); },
      py::arg("n"), py::arg("state"));
  m.def("oracle_amplitude", &sl::oracle_amplitude, py::arg("n"), py::arg("m"), py::arg("r"), py::arg("dim") = 0);
  m.def("bogoliubov_residual", &sl::bogoliubov_residual, py::arg("r"), py::arg("dim"));

  m.def(
      "find_maxima",
      [](py::array_t<double> coords, py::array_t<double> probs, double floor, bool refine, bool parity_gapped,
         int parity) {
        const auto rep = sl::find_maxima(table_from(coords, probs, parity_gapped, parity), {floor, refine});
        return py::make_tuple(to_array(rep.positions), to_array(rep.values));
      },
      py::arg("coords"), py::arg("probs"), py::arg("floor") = sl::kDefaultMaximaFloor, py::arg("refine") = false,
      py::arg("parity_gapped") = false, py::arg("parity") = 0);
  m.def(
      "photon_maxima",
      [](const sl::SqueezedNumberState& s) { return sl::find_maxima(sl::photon_distribution(s)).positions; },
      py::arg("state"));
  m.def("maxima_count_law", &sl::maxima_count_law, py::arg("m"));
  m.def("momentum_zeros", &sl::momentum_zeros, py::arg("state"), py::arg("tol") = 1e-12);
  m.def(
      "transition_scan",
      [](int mm, double lo, double hi, double step) {
        const auto res = sl::transition_scan(mm, lo, hi, step);
        return py::make_tuple(res.r_star, res.trace);
      },
      py::arg("m"), py::arg("r_lo"), py::arg("r_hi"), py::arg("step") = 0.02);

  m.def("classical_boundary", &sl::classical_boundary, py::arg("m"), py::arg("r"));
  m.def(
      "approx_p", [](int mm, double r, double y) { return sl::approx_p({mm, r, y}); }, py::arg("m"), py::arg("r"),
      py::arg("y"));
  m.def(
      "compare_slice",
      [](int mm, double r, double step) {
        const auto c = sl::compare_slice(mm, r, step);
        py::dict d;
        d["y"] = to_array(c.y);
        d["approx"] = to_array(c.approx);
        d["exact"] = to_array(c.exact);
        d["scale"] = c.scale;
        d["approx_maxima"] = c.approx_maxima;
        d["exact_maxima"] = c.exact_maxima;
        d["boundary_deviation"] = c.boundary_deviation;
        d["interior_deviation"] = c.interior_deviation;
        return d;
      },
      py::arg("m"), py::arg("r"), py::arg("step") = 0.005);

  m.def(
      "verify_json",
      [](const std::string& suite, int m_max) {
        sl::VerifyScope scope;
        scope.m_max = m_max;
        return sl::run_verify(suite, scope).to_json().dump();
      },
      py::arg("suite") = "all", py::arg("m_max") = 12);
}
