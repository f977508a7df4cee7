#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hermgeo/configuration.hpp"
#include "hermgeo/geodesic.hpp"
#include "hermgeo/io/cli.hpp"
#include "hermgeo/io/presets.hpp"
#include "hermgeo/stereographic.hpp"
#include "hermgeo/trigonometry.hpp"

namespace py = pybind11;
using namespace hermgeo;

namespace {

PyObject* geometry_error = nullptr;

using SpaceHandle = std::shared_ptr<HermitianSpace>;

Field parse_field(const std::string& f) {
  if (f == "R") return Field::Real;
  if (f == "C") return Field::Complex;
  fail(ErrorKind::Input, "field must be 'R' or 'C'");
}

ProjectivePoint pt(const SpaceHandle& s, const Vec& v) { return ProjectivePoint(s, v); }

std::vector<Vec> orthonormal(const SpaceHandle& s, const std::vector<Vec>& vs, bool pivot) {
  return pivot ? gram_schmidt_pivoted(*s, vs).basis : gram_schmidt(*s, vs);
}

py::tuple sig_tuple(const Signature& s) { return py::make_tuple(s.minus, s.zero, s.plus); }

py::dict report_dict(const TriangleReport& r) {
  py::dict d;
  d["regime"] = to_string(r.invariants.regime);
  d["vertex_sign"] = r.invariants.vertex_sign;
  d["r"] = r.invariants.r;
  d["eps"] = r.invariants.eps;
  d["lengths"] = r.lengths;
  d["angles"] = r.angles;
  d["closed_form_angles"] = r.closed_form_angles;
  d["identity_residual"] = r.identity_residual;
  d["on_projective_line"] = r.on_projective_line;
  d["area"] = r.area ? py::object(py::float_(*r.area)) : py::object(py::none());
  py::dict laws;
  for (const auto& [k, v] : r.law_residuals) laws[k.c_str()] = v ? py::object(py::float_(*v)) : py::object(py::none());
  d["law_residuals"] = laws;
  return d;
}

}  // namespace

PYBIND11_MODULE(_hermgeo, m) {
  m.doc() = "Hermitian-form geometry core";

  geometry_error = PyErr_NewException("hermgeo.GeometryError", PyExc_ValueError, nullptr);
  m.attr("GeometryError") = py::handle(geometry_error);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const GeometryError& e) {
      py::object cls = py::reinterpret_borrow<py::object>(geometry_error);
      py::object inst = cls(e.what());
      inst.attr("kind") = to_string(e.kind());
      PyErr_SetObject(geometry_error, inst.ptr());
    }
  });

  py::class_<HermitianSpace, SpaceHandle>(m, "Space")
      .def(py::init([](const std::string& field, const Mat& gram, int metric_sign, double tolerance) {
             return std::make_shared<HermitianSpace>(parse_field(field), gram, metric_sign, Tolerance{tolerance});
           }),
           py::arg("field"), py::arg("gram"), py::arg("metric_sign") = 1, py::arg("tolerance") = 1e-9)
      .def_static(
          "preset",
          [](const std::string& name, int dim) { return std::make_shared<HermitianSpace>(io::preset_space(name, dim)); },
          py::arg("name"), py::arg("dim") = 0)
      .def_property_readonly("field", [](const HermitianSpace& s) { return to_string(s.field()); })
      .def_property_readonly("dim", &HermitianSpace::dim)
      .def_property_readonly("gram", &HermitianSpace::gram)
      .def_property_readonly("metric_sign", &HermitianSpace::metric_sign)
      .def("form", &HermitianSpace::form, py::arg("v"), py::arg("w"))
      .def("__repr__", [](const HermitianSpace& s) {
        return "<Space " + std::string(to_string(s.field())) + " dim=" + std::to_string(s.dim()) + ">";
      });

  m.def("signature", [](const SpaceHandle& s) { return sig_tuple(signature(*s)); });
  m.def("signature_of_gram", [](const Mat& g) { return sig_tuple(signature_of(g)); });
  m.def("contains_signature", [](std::array<int, 3> a, std::array<int, 3> b) {
    return contains_signature({a[0], a[1], a[2]}, {b[0], b[1], b[2]});
  });
  m.def("gram_schmidt", &orthonormal, py::arg("space"), py::arg("vectors"), py::arg("pivot") = false);
  m.def("orthogonal_complement", [](const SpaceHandle& s, const std::vector<Vec>& w) {
    return orthogonal_complement(*s, Subspace(*s, w)).basis();
  });

  m.def("classify_point", [](const SpaceHandle& s, const Vec& v) { return to_string(classify_point(pt(s, v))); });
  m.def("tance", [](const SpaceHandle& s, const Vec& a, const Vec& b) { return tance(pt(s, a), pt(s, b)); });
  m.def("distance", [](const SpaceHandle& s, const Vec& a, const Vec& b, const std::string& kind) {
    if (kind != "spherical" && kind != "hyperbolic") fail(ErrorKind::Input, "kind must be spherical or hyperbolic");
    return distance(pt(s, a), pt(s, b), kind == "spherical" ? DistanceKind::Spherical : DistanceKind::Hyperbolic);
  });
  m.def("geodesic_class", [](const SpaceHandle& s, const Vec& a, const Vec& b) {
    return to_string(classify(Geodesic(s, a, b)));
  });
  m.def("geodesic_through", [](const SpaceHandle& s, const Vec& a, const Vec& b) {
    const Geodesic g = geodesic_through(pt(s, a), pt(s, b));
    return std::make_pair(g.w1(), g.w2());
  });
  m.def("vertices", [](const SpaceHandle& s, const Vec& w1, const Vec& w2) {
    auto [a, b] = vertices(Geodesic(s, w1, w2));
    return std::make_pair(a.rep(), b.rep());
  });
  m.def("geodesic_lift", [](const SpaceHandle& s, const Vec& a, const Vec& b, double arc) {
    return geodesic_lift(geodesic_through(pt(s, a), pt(s, b)), pt(s, a), arc, pt(s, b)).rep();
  }, py::arg("space"), py::arg("p"), py::arg("q"), py::arg("arc"));

  m.def("triangle_report", [](const SpaceHandle& s, const Vec& a, const Vec& b, const Vec& c) {
    return report_dict(triangle_report(pt(s, a), pt(s, b), pt(s, c)));
  });

  m.def("config_gram", [](const SpaceHandle& s, const std::vector<Vec>& w) { return config_gram(Configuration(s, w)); });
  m.def("geometrically_equal", [](const SpaceHandle& s, const std::vector<Vec>& a, const std::vector<Vec>& b) {
    return geometrically_equal(Configuration(s, a), Configuration(s, b));
  });
  m.def("witness_unitary", [](const SpaceHandle& s, const std::vector<Vec>& a, const std::vector<Vec>& b) {
    return witness_unitary(Configuration(s, a), Configuration(s, b));
  });

  m.def("stereo", [](const RealVec& p, const RealVec& q) { return stereo(SpherePoint(p), SpherePoint(q)); });
  m.def("stereo_inverse", [](const RealVec& p, const RealVec& v) { return stereo_inverse(SpherePoint(p), v).coords(); });
  m.def("conformal_factor", [](const RealVec& p, const RealVec& q) { return conformal_factor(SpherePoint(p), SpherePoint(q)); });
  m.def("subsphere_image", [](const RealVec& p, const RealVec& f, int eps) {
    const SubsphereImage img = subsphere_image(SpherePoint(p), f, eps);
    py::dict d;
    d["kind"] = to_string(img.kind);
    if (img.kind == SubsphereKind::Sphere) {
      d["center"] = img.center;
      d["radius"] = img.radius;
    } else {
      d["normal"] = img.normal;
      d["offset"] = img.offset;
    }
    return d;
  });

  m.def("poincare_klein_map", &poincare_klein_map);
  m.def("klein_poincare_map", &klein_poincare_map);
  m.def("poincare_distance", &poincare_distance);
  m.def("klein_distance", &klein_distance);

  m.def("presets", []() {
    std::vector<std::string> names;
    for (const auto& p : io::presets()) names.push_back(p.name);
    return names;
  });

  m.def("run_cli", [](std::vector<std::string> args, const std::string& stdin_text) {
    args.insert(args.begin(), "hermgeo");
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = io::run(args, in, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), py::arg("stdin") = "");
}
