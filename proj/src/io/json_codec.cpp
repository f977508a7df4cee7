#include "hermgeo/io/json_codec.hpp"

namespace hermgeo::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::Input, what); }

double number(const json& j, const char* what) {
  if (!j.is_number()) bad(std::string("expected a number for ") + what);
  return j.get<double>();
}

}  // namespace

Scalar scalar_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {number(j[0], "real part"), number(j[1], "imaginary part")};
  bad("scalar must be a number or an [re, im] pair");
}

json scalar_to_json(Scalar s, Field field) {
  if (field == Field::Real) return s.real();
  return json::array({s.real(), s.imag()});
}

Vec vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) bad("vector must be a nonempty array of scalars");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = scalar_from_json(j[i]);
  return v;
}

json vector_to_json(const Vec& v, Field field) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(scalar_to_json(v(i), field));
  return out;
}

Mat matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = -1;
  Mat m;
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Vec row = vector_from_json(j[static_cast<std::size_t>(r)]);
    if (cols < 0) {
      cols = row.size();
      m.resize(rows, cols);
    } else if (row.size() != cols) {
      bad("matrix rows have different lengths");
    }
    m.row(r) = row.transpose();
  }
  return m;
}

json matrix_to_json(const Mat& m, Field field) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r).transpose(), field));
  return out;
}

Field field_from_json(const json& j) {
  if (j == "R") return Field::Real;
  if (j == "C") return Field::Complex;
  bad("field must be \"R\" or \"C\"");
}

HermitianSpace space_from_json(const json& j, Tolerance tol) {
  if (!j.is_object()) bad("space must be an object");
  if (!j.contains("gram")) bad("space needs a gram matrix");
  const Field field = j.contains("field") ? field_from_json(j["field"]) : Field::Complex;
  int sign = 1;
  if (j.contains("metric_sign")) {
    if (!j["metric_sign"].is_number_integer()) bad("metric_sign must be 1 or -1");
    sign = j["metric_sign"].get<int>();
  }
  return HermitianSpace(field, matrix_from_json(j["gram"]), sign, tol);
}

json space_to_json(const HermitianSpace& space) {
  return {{"field", to_string(space.field())},
          {"gram", matrix_to_json(space.gram(), space.field())},
          {"metric_sign", space.metric_sign()}};
}

ProjectivePoint point_from_json(const SpacePtr& space, const json& j) {
  if (j.is_object()) {
    if (!j.contains("rep")) bad("point object needs \"rep\"");
    return ProjectivePoint(space, vector_from_json(j["rep"]));
  }
  return ProjectivePoint(space, vector_from_json(j));
}

json point_to_json(const ProjectivePoint& p) {
  return {{"rep", vector_to_json(p.rep(), p.space().field())}};
}

TangentVector tangent_from_json(const SpacePtr& space, const json& j) {
  if (!j.is_object() || !j.contains("at") || !j.contains("dir")) {
    bad("tangent needs \"at\" and \"dir\"");
  }
  return TangentVector(point_from_json(space, j["at"]), vector_from_json(j["dir"]));
}

json tangent_to_json(const TangentVector& t) {
  return {{"at", point_to_json(t.at())}, {"dir", vector_to_json(t.dir(), t.at().space().field())}};
}

Geodesic geodesic_from_json(const SpacePtr& space, const json& j) {
  if (!j.is_object() || !j.contains("span") || !j["span"].is_array() || j["span"].size() != 2) {
    bad("geodesic needs \"span\": [vector, vector]");
  }
  return Geodesic(space, vector_from_json(j["span"][0]), vector_from_json(j["span"][1]));
}

json geodesic_to_json(const Geodesic& g) {
  const Field f = g.space().field();
  return {{"span", json::array({vector_to_json(g.w1(), f), vector_to_json(g.w2(), f)})}};
}

Configuration configuration_from_json(const SpacePtr& space, const json& j) {
  const json& list = j.is_object() ? j.value("points", json()) : j;
  if (!list.is_array()) bad("configuration needs \"points\": [vector, ...]");
  std::vector<Vec> pts;
  for (const auto& v : list) pts.push_back(vector_from_json(v));
  return Configuration(space, std::move(pts));
}

json configuration_to_json(const Configuration& c) {
  json pts = json::array();
  for (const auto& w : c.points()) pts.push_back(vector_to_json(w, c.space().field()));
  return {{"points", pts}};
}

json signature_to_json(const Signature& s) { return json::array({s.minus, s.zero, s.plus}); }

}  // namespace hermgeo::io
