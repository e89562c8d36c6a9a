// Python bindings for the main operations. Arbitrary-precision counts cross
// the boundary as native python ints via their decimal form.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rvbent/covering.hpp"
#include "rvbent/entanglement.hpp"
#include "rvbent/lattice.hpp"
#include "rvbent/oracle.hpp"
#include "rvbent/transition.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py_int(const rvbent::BigInt& v) {
  const std::string digits = rvbent::to_string(v);
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

rvbent::Lattice make_lattice(int rows, int cols, const std::string& boundary) {
  return rvbent::build_lattice(rows, cols,
                               rvbent::boundary_from_string(boundary));
}

rvbent::HoleConfig holes_of(const rvbent::Lattice& lat,
                            const std::vector<int>& holes) {
  return rvbent::make_hole_config(lat, holes);
}

py::dict average_dict(const rvbent::AverageResult& avg) {
  py::dict out;
  out["average"] = avg.average;
  out["config_count"] = avg.config_count;
  out["excluded_count"] = avg.excluded_count;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact dimer-covering counts, loop-decomposition norms and geometric "
      "entanglement on holed rectangular lattices";

  m.def(
      "is_coverable",
      [](int rows, int cols, const std::string& boundary,
         const std::vector<int>& holes) {
        const auto lat = make_lattice(rows, cols, boundary);
        return rvbent::is_coverable(lat, holes_of(lat, holes));
      },
      py::arg("rows"), py::arg("cols"), py::arg("boundary") = "open",
      py::arg("holes") = std::vector<int>{});

  m.def(
      "count_coverings",
      [](int rows, int cols, const std::string& boundary,
         const std::vector<int>& holes) {
        const auto lat = make_lattice(rows, cols, boundary);
        return to_py_int(rvbent::count_coverings(lat, holes_of(lat, holes)));
      },
      py::arg("rows"), py::arg("cols"), py::arg("boundary") = "open",
      py::arg("holes") = std::vector<int>{});

  m.def(
      "closed_form_count",
      [](int rows, int cols) { return to_py_int(rvbent::fisher_count(rows, cols)); },
      py::arg("rows"), py::arg("cols"));

  m.def(
      "hole_config_count",
      [](int rows, int cols, const std::string& boundary, int num_holes) {
        const auto lat = make_lattice(rows, cols, boundary);
        return to_py_int(rvbent::hole_config_count(lat, num_holes));
      },
      py::arg("rows"), py::arg("cols"), py::arg("boundary") = "open",
      py::arg("num_holes") = 0);

  m.def(
      "entanglement",
      [](int rows, int cols, const std::string& boundary,
         const std::vector<int>& holes) {
        const auto lat = make_lattice(rows, cols, boundary);
        const auto ev = rvbent::geometric_entanglement(lat, holes_of(lat, holes));
        py::dict out;
        out["value"] = ev.value;
        out["coverings"] = to_py_int(ev.coverings);
        out["kohmoto_sum"] = to_py_int(ev.kohmoto_sum);
        return out;
      },
      py::arg("rows"), py::arg("cols"), py::arg("boundary") = "open",
      py::arg("holes") = std::vector<int>{});

  m.def(
      "norm_sums",
      [](int rows, int cols, const std::string& boundary,
         const std::vector<int>& holes) {
        const auto lat = make_lattice(rows, cols, boundary);
        const auto covs = rvbent::enumerate_coverings(lat, holes_of(lat, holes));
        if (covs.empty())
          throw std::invalid_argument("configuration is not coverable");
        const auto nv = rvbent::norm_value(covs);
        py::dict out;
        out["coverings"] = to_py_int(rvbent::BigInt(covs.size()));
        out["kohmoto_sum"] = to_py_int(nv.kohmoto_sum);
        out["quad_loop_sum"] = to_py_int(nv.quad_loop_sum);
        return out;
      },
      py::arg("rows"), py::arg("cols"), py::arg("boundary") = "open",
      py::arg("holes") = std::vector<int>{});

  m.def(
      "average_entanglement",
      [](int rows, int cols, const std::string& boundary, int num_holes,
         bool include_noncoverable_as_zero, int workers) {
        const auto lat = make_lattice(rows, cols, boundary);
        rvbent::SweepOptions opts;
        opts.workers = workers;
        opts.include_noncoverable_as_zero = include_noncoverable_as_zero;
        return average_dict(rvbent::average_entanglement(lat, num_holes, opts));
      },
      py::arg("rows"), py::arg("cols"), py::arg("boundary") = "open",
      py::arg("num_holes") = 0, py::arg("include_noncoverable_as_zero") = false,
      py::arg("workers") = 0);

  m.def(
      "sweep",
      [](int rows, int cols, const std::string& boundary, int max_holes,
         bool include_noncoverable_as_zero, int workers) {
        const auto lat = make_lattice(rows, cols, boundary);
        if (max_holes < 0) max_holes = lat.num_sites();
        rvbent::SweepOptions opts;
        opts.workers = workers;
        opts.include_noncoverable_as_zero = include_noncoverable_as_zero;
        const auto curve = rvbent::sweep(lat, max_holes, opts);
        py::list points;
        for (const auto& pt : curve.points) {
          py::dict d;
          d["num_holes"] = pt.num_holes;
          d["density"] = pt.density;
          d["avg_entanglement"] = pt.avg_entanglement;
          d["config_count"] = pt.config_count;
          d["excluded_count"] = pt.excluded_count;
          points.append(d);
        }
        py::dict out;
        out["rows"] = curve.rows;
        out["cols"] = curve.cols;
        out["boundary"] = rvbent::to_string(curve.boundary);
        out["distribution"] = curve.distribution;
        out["points"] = points;
        out["peak_index"] = curve.peak_index();
        return out;
      },
      py::arg("rows"), py::arg("cols"), py::arg("boundary") = "open",
      py::arg("max_holes") = -1,
      py::arg("include_noncoverable_as_zero") = false, py::arg("workers") = 0);

  m.def(
      "statevector_oracle",
      [](int rows, int cols, const std::string& boundary,
         const std::vector<int>& holes) {
        const auto lat = make_lattice(rows, cols, boundary);
        const auto rec = rvbent::statevector_oracle(lat, holes_of(lat, holes));
        py::dict out;
        out["norm"] = rec.norm;
        out["af_amplitude"] = rec.af_amplitude;
        out["basis_max_amplitude"] = rec.basis_max_amplitude;
        return out;
      },
      py::arg("rows"), py::arg("cols"), py::arg("boundary") = "open",
      py::arg("holes") = std::vector<int>{});

  m.def(
      "separable_maximizer_probe",
      [](int rows, int cols, const std::string& boundary,
         const std::vector<int>& holes, int restarts) {
        const auto lat = make_lattice(rows, cols, boundary);
        return rvbent::separable_maximizer_probe(lat, holes_of(lat, holes),
                                                 restarts);
      },
      py::arg("rows"), py::arg("cols"), py::arg("boundary") = "open",
      py::arg("holes") = std::vector<int>{}, py::arg("restarts") = 16);

  m.def(
      "pathological_probability_estimate",
      [](int rows, int cols) {
        const auto est = rvbent::pathological_probability_estimate(rows, cols);
        return py::make_tuple(
            to_py_int(rvbent::BigInt(boost::multiprecision::numerator(est))),
            to_py_int(rvbent::BigInt(boost::multiprecision::denominator(est))));
      },
      py::arg("rows"), py::arg("cols"));

  m.def("catalan_constant", &rvbent::catalan_constant);
  m.def("periodic_entropy_estimate", &rvbent::periodic_entropy_estimate,
        py::arg("half_sites"));
}
