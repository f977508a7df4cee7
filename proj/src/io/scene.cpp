#include "hermgeo/io/scene.hpp"

#include <set>

#include "hermgeo/io/presets.hpp"

namespace hermgeo::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::Input, what); }

const json& section(const json& j, const char* key) {
  static const json empty = json::object();
  if (!j.contains(key)) return empty;
  if (!j[key].is_object()) bad(std::string("scene section \"") + key + "\" must be an object");
  return j[key];
}

}  // namespace

const char* to_string(Chart c) {
  switch (c) {
    case Chart::Poincare: return "poincare";
    case Chart::Klein: return "klein";
    case Chart::StereoSphere: return "stereo-sphere";
  }
  return "unknown";
}

Chart chart_from_string(const std::string& name) {
  for (Chart c : {Chart::Poincare, Chart::Klein, Chart::StereoSphere}) {
    if (name == to_string(c)) return c;
  }
  bad("unknown chart '" + name + "' (poincare, klein, stereo-sphere)");
}

ProjectivePoint Scene::resolve_point(const json& ref) const {
  if (ref.is_string()) {
    const auto it = points.find(ref.get<std::string>());
    if (it == points.end()) bad("unknown point '" + ref.get<std::string>() + "'");
    return it->second;
  }
  return point_from_json(space, ref);
}

SpacePtr space_from_scene(const json& j, std::optional<double> tolerance) {
  if (!j.is_object()) bad("scene must be a JSON object");
  Tolerance tol;
  if (tolerance) {
    tol.rel = *tolerance;
  } else if (j.contains("tolerance")) {
    if (!j["tolerance"].is_number()) bad("tolerance must be a number");
    tol.rel = j["tolerance"].get<double>();
  }
  if (!(tol.rel > 0.0)) bad("tolerance must be positive");
  const bool has_space = j.contains("space");
  const bool has_preset = j.contains("preset");
  if (has_space == has_preset) bad("scene needs exactly one of \"space\" and \"preset\"");
  if (has_space) return make_space(space_from_json(j["space"], tol));
  if (!j["preset"].is_string()) bad("preset must be a name");
  int dim = 0;
  if (j.contains("dim")) {
    if (!j["dim"].is_number_integer()) bad("dim must be an integer");
    dim = j["dim"].get<int>();
  }
  return make_space(preset_space(j["preset"].get<std::string>(), dim, tol));
}

Scene empty_scene(SpacePtr space) {
  Scene s;
  s.space = std::move(space);
  return s;
}

Scene parse_scene(const json& j, std::optional<double> tolerance) {
  Scene scene = empty_scene(space_from_scene(j, tolerance));
  if (j.contains("preset")) scene.preset = j["preset"].get<std::string>();

  std::set<std::string> names;
  auto claim = [&](const std::string& name) {
    if (name.empty()) bad("empty item name");
    if (!names.insert(name).second) bad("duplicate name '" + name + "'");
  };

  for (const auto& [name, value] : section(j, "points").items()) {
    claim(name);
    scene.points.emplace(name, point_from_json(scene.space, value));
  }
  for (const auto& [name, value] : section(j, "tangents").items()) {
    claim(name);
    if (!value.is_object() || !value.contains("at") || !value.contains("dir")) {
      bad("tangent '" + name + "' needs \"at\" and \"dir\"");
    }
    scene.tangents.emplace(name, TangentVector(scene.resolve_point(value["at"]), vector_from_json(value["dir"])));
  }
  for (const auto& [name, value] : section(j, "geodesics").items()) {
    claim(name);
    if (value.is_object() && value.contains("through")) {
      const json& t = value["through"];
      if (!t.is_array() || t.size() != 2) bad("geodesic '" + name + "': \"through\" needs two points");
      scene.geodesics.emplace(name, geodesic_through(scene.resolve_point(t[0]), scene.resolve_point(t[1])));
    } else if (value.is_object() && value.contains("at")) {
      const ProjectivePoint at = scene.resolve_point(value["at"]);
      if (!value.contains("dir")) bad("geodesic '" + name + "' needs \"dir\" with \"at\"");
      scene.geodesics.emplace(name, geodesic_from_tangent(at, TangentVector(at, vector_from_json(value["dir"]))));
    } else {
      scene.geodesics.emplace(name, geodesic_from_json(scene.space, value));
    }
  }
  for (const auto& [name, value] : section(j, "triangles").items()) {
    claim(name);
    const json& v = value.is_object() ? value.value("vertices", json()) : value;
    if (!v.is_array() || v.size() != 3) bad("triangle '" + name + "' needs three vertices");
    Triangle t{{}, {scene.resolve_point(v[0]), scene.resolve_point(v[1]), scene.resolve_point(v[2])}};
    for (std::size_t i = 0; i < 3; ++i) {
      if (v[i].is_string()) t.names[i] = v[i].get<std::string>();
    }
    scene.triangles.emplace(name, std::move(t));
  }
  for (const auto& [name, value] : section(j, "configurations").items()) {
    claim(name);
    scene.configurations.emplace(name, configuration_from_json(scene.space, value));
  }

  const json& r = section(j, "render");
  if (r.contains("chart")) {
    if (!r["chart"].is_string()) bad("render chart must be a string");
    scene.render.chart = chart_from_string(r["chart"].get<std::string>());
  }
  if (r.contains("size")) {
    if (!r["size"].is_number_integer() || r["size"].get<int>() < 16) bad("render size must be an integer >= 16");
    scene.render.size = r["size"].get<int>();
  }
  for (const char* key : {"samples", "samples_per_geodesic"}) {
    if (r.contains(key)) {
      if (!r[key].is_number_integer() || r[key].get<int>() < 2) bad("samples must be an integer >= 2");
      scene.render.samples = r[key].get<int>();
    }
  }
  if (r.contains("duals")) {
    if (!r["duals"].is_boolean()) bad("render duals must be true or false");
    scene.render.duals = r["duals"].get<bool>();
  }
  return scene;
}

}  // namespace hermgeo::io
