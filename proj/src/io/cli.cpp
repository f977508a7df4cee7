#include "hermgeo/io/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hermgeo/configuration.hpp"
#include "hermgeo/geodesic.hpp"
#include "hermgeo/io/format.hpp"
#include "hermgeo/io/presets.hpp"
#include "hermgeo/io/render.hpp"
#include "hermgeo/io/scene.hpp"
#include "hermgeo/stereographic.hpp"
#include "hermgeo/trigonometry.hpp"

namespace hermgeo::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::Input, what); }

struct Options {
  std::string scene_path;
  std::string gram;
  std::string field = "C";
  std::string preset;
  int metric_sign = 1;
  int dim = 0;
  std::optional<double> tolerance;
  bool csv = false;
  std::string out;

  std::string p, q, dir, vectors, geodesic, vertices, c1, c2, kind, v, f, z, to, chart;
  std::optional<double> arc;
  std::optional<int> eps;
  bool pivot = false;
  bool duals = false;
  int size = 0;
  int samples = 0;
};

// Accepts the typographic minus sign as well as '-'.
std::string ascii_minus(std::string s) {
  const std::string minus = "\xE2\x88\x92";
  for (auto pos = s.find(minus); pos != std::string::npos; pos = s.find(minus, pos)) {
    s.replace(pos, minus.size(), "-");
  }
  return s;
}

json parse_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(ascii_minus(text));
  } catch (const json::parse_error& e) {
    bad(what + " is not valid JSON: " + e.what());
  }
}

// A flag value that is either JSON or the name of a scene item.
json json_or_name(const std::string& text) {
  json j = json::parse(ascii_minus(text), nullptr, false);
  if (j.is_discarded()) return json(text);
  return j;
}

class Context {
 public:
  Context(const Options& o, std::istream& in) : opts_(o), in_(in) {}

  const Scene& scene() {
    if (!scene_) load();
    return *scene_;
  }
  const SpacePtr& space() { return scene().space; }

  ProjectivePoint point(const std::string& text, const char* flag) {
    if (text.empty()) bad(std::string("missing --") + flag);
    return scene().resolve_point(json_or_name(text));
  }

  Geodesic geodesic(const std::string& text) {
    const json j = json_or_name(text);
    if (j.is_string()) {
      const auto it = scene().geodesics.find(j.get<std::string>());
      if (it == scene().geodesics.end()) bad("unknown geodesic '" + j.get<std::string>() + "'");
      return it->second;
    }
    if (j.is_array() && j.size() == 2) {
      return Geodesic(space(), vector_from_json(j[0]), vector_from_json(j[1]));
    }
    return geodesic_from_json(space(), j);
  }

  Configuration configuration(const std::string& text, const char* flag) {
    if (text.empty()) bad(std::string("missing --") + flag);
    const json j = json_or_name(text);
    if (j.is_string()) {
      const auto it = scene().configurations.find(j.get<std::string>());
      if (it == scene().configurations.end()) bad("unknown configuration '" + j.get<std::string>() + "'");
      return it->second;
    }
    return configuration_from_json(space(), j);
  }

 private:
  void load() {
    const bool flags = !opts_.gram.empty() || !opts_.preset.empty();
    if (!opts_.scene_path.empty()) {
      if (flags) bad("give either a scene file or --gram/--preset, not both");
      json j;
      if (opts_.scene_path == "-") {
        std::stringstream buf;
        buf << in_.rdbuf();
        j = parse_text(buf.str(), "scene");
      } else {
        std::ifstream file(opts_.scene_path);
        if (!file) bad("cannot open scene file '" + opts_.scene_path + "'");
        std::stringstream buf;
        buf << file.rdbuf();
        j = parse_text(buf.str(), "scene");
      }
      scene_ = parse_scene(j, opts_.tolerance);
      return;
    }
    if (!flags) bad("no space given: pass a scene file, --gram or --preset");
    if (!opts_.gram.empty() && !opts_.preset.empty()) bad("give either --gram or --preset");
    json spec = json::object();
    if (!opts_.gram.empty()) {
      spec["space"] = {{"gram", parse_text(opts_.gram, "--gram")},
                       {"field", opts_.field},
                       {"metric_sign", opts_.metric_sign}};
    } else {
      spec["preset"] = opts_.preset;
      if (opts_.dim != 0) spec["dim"] = opts_.dim;
    }
    scene_ = empty_scene(space_from_scene(spec, opts_.tolerance));
  }

  const Options& opts_;
  std::istream& in_;
  std::optional<Scene> scene_;
};

RealVec real_vector(const std::string& text, const char* flag) {
  if (text.empty()) bad(std::string("missing --") + flag);
  const Vec v = vector_from_json(parse_text(text, std::string("--") + flag));
  if (v.imag().cwiseAbs().maxCoeff() != 0.0) bad(std::string("--") + flag + " must be real");
  return v.real();
}

json real_to_json(const RealVec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json complex_to_json(Scalar z) { return json::array({z.real(), z.imag()}); }

std::string point_class_name(const ProjectivePoint& p) { return to_string(classify_point(p)); }

json vectors_to_json(const std::vector<Vec>& vs, Field f) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(v, f));
  return out;
}

json triangle_json(const TriangleReport& r) {
  const auto& t = r.invariants;
  json laws = json::object();
  for (const auto& [name, value] : r.law_residuals) laws[name] = value ? json(*value) : json(nullptr);
  auto arr = [](const std::array<double, 3>& a) { return json::array({a[0], a[1], a[2]}); };
  return {{"regime", to_string(t.regime)},
          {"vertex_sign", t.vertex_sign},
          {"r", arr(t.r)},
          {"eps", complex_to_json(t.eps)},
          {"lengths", arr(r.lengths)},
          {"angles", arr(r.angles)},
          {"closed_form_angles", arr(r.closed_form_angles)},
          {"identity_residual", r.identity_residual},
          {"on_projective_line", r.on_projective_line},
          {"area", r.area ? json(*r.area) : json(nullptr)},
          {"law_residuals", laws}};
}

// ---- subcommands -----------------------------------------------------------

json cmd_signature(Context& ctx) { return {{"signature", signature_to_json(signature(*ctx.space()))}}; }

json cmd_gram_schmidt(Context& ctx, const Options& o) {
  const HermitianSpace& space = *ctx.space();
  std::vector<Vec> vs;
  if (o.vectors.empty()) {
    for (int i = 0; i < space.dim(); ++i) vs.push_back(Vec::Unit(space.dim(), i));
  } else {
    const json j = parse_text(o.vectors, "--vectors");
    if (!j.is_array()) bad("--vectors must be a list of vectors");
    for (const auto& v : j) vs.push_back(vector_from_json(v));
  }
  json out;
  std::vector<Vec> basis;
  if (o.pivot) {
    const OrthonormalFlag r = gram_schmidt_pivoted(space, vs);
    basis = r.basis;
    out["flag"] = vectors_to_json(r.flag, space.field());
  } else {
    basis = gram_schmidt(space, vs);
  }
  out["basis"] = vectors_to_json(basis, space.field());
  out["gram"] = matrix_to_json(space.gram_of(basis), space.field());
  return out;
}

json cmd_classify(Context& ctx, const Options& o) {
  if (!o.p.empty()) return {{"class", point_class_name(ctx.point(o.p, "p"))}};
  if (!o.geodesic.empty()) return {{"class", to_string(classify(ctx.geodesic(o.geodesic)))}};
  const Scene& s = ctx.scene();
  json pts = json::object(), geos = json::object();
  for (const auto& [name, p] : s.points) pts[name] = point_class_name(p);
  for (const auto& [name, g] : s.geodesics) geos[name] = to_string(classify(g));
  return {{"points", pts}, {"geodesics", geos}};
}

json cmd_tance(Context& ctx, const Options& o) {
  return {{"tance", tance(ctx.point(o.p, "p"), ctx.point(o.q, "q"))}};
}

DistanceKind infer_kind(const ProjectivePoint& p, const std::string& kind) {
  if (kind == "spherical") return DistanceKind::Spherical;
  if (kind == "hyperbolic") return DistanceKind::Hyperbolic;
  if (!kind.empty()) bad("--kind must be spherical or hyperbolic");
  return classify_point(p) == PointClass::Negative ? DistanceKind::Hyperbolic : DistanceKind::Spherical;
}

json cmd_distance(Context& ctx, const Options& o) {
  const ProjectivePoint p = ctx.point(o.p, "p");
  const ProjectivePoint q = ctx.point(o.q, "q");
  return {{"distance", distance(p, q, infer_kind(p, o.kind))}};
}

json cmd_geodesic(Context& ctx, const Options& o) {
  const ProjectivePoint p = ctx.point(o.p, "p");
  if (o.q.empty() == o.dir.empty()) bad("geodesic needs exactly one of --q and --dir");
  std::optional<ProjectivePoint> q;
  std::optional<Geodesic> g;
  if (!o.q.empty()) {
    q = ctx.point(o.q, "q");
    g = geodesic_through(p, *q);
  } else {
    const Vec dir = vector_from_json(parse_text(o.dir, "--dir"));
    g = geodesic_from_tangent(p, TangentVector(p, dir));
  }
  const GeodesicClass cls = classify(*g);
  json out = geodesic_to_json(*g);
  out["class"] = to_string(cls);
  if (cls == GeodesicClass::Hyperbolic) {
    auto [a, b] = vertices(*g);
    out["vertices"] = json::array({point_to_json(a)["rep"], point_to_json(b)["rep"]});
  }
  if (q && cls != GeodesicClass::Degenerate) {
    const DistanceKind k = cls == GeodesicClass::Hyperbolic ? DistanceKind::Hyperbolic : DistanceKind::Spherical;
    out["distance"] = distance(p, *q, k);
  }
  if (o.arc) out["lift"] = point_to_json(geodesic_lift(*g, p, *o.arc, q))["rep"];
  const HermitianSpace& space = *ctx.space();
  if (space.field() == Field::Real && space.dim() == 3) {
    const Signature sig = signature(space);
    if (sig.nondegenerate() && sig.minus > 0 && sig.plus > 0) out["dual"] = point_to_json(dual_of_geodesic(*g))["rep"];
  }
  return out;
}

json cmd_triangle(Context& ctx, const Options& o) {
  if (!o.vertices.empty()) {
    const json j = json_or_name(o.vertices);
    if (j.is_string()) {
      const auto it = ctx.scene().triangles.find(j.get<std::string>());
      if (it == ctx.scene().triangles.end()) bad("unknown triangle '" + j.get<std::string>() + "'");
      const auto& v = it->second.vertices;
      return triangle_json(triangle_report(v[0], v[1], v[2]));
    }
    if (!j.is_array() || j.size() != 3) bad("--vertices needs three points");
    const Scene& s = ctx.scene();
    return triangle_json(
        triangle_report(s.resolve_point(j[0]), s.resolve_point(j[1]), s.resolve_point(j[2])));
  }
  const Scene& s = ctx.scene();
  if (s.triangles.empty()) bad("no --vertices and no triangles in the scene");
  json out = json::object();
  for (const auto& [name, t] : s.triangles) {
    out[name] = triangle_json(triangle_report(t.vertices[0], t.vertices[1], t.vertices[2]));
  }
  return {{"triangles", out}};
}

json cmd_config_equal(Context& ctx, const Options& o) {
  const Configuration c1 = ctx.configuration(o.c1, "c1");
  const Configuration c2 = ctx.configuration(o.c2, "c2");
  const HermitianSpace& space = c1.space();
  const bool equal = geometrically_equal(c1, c2);
  json out = {{"equal", equal},
              {"gram1", matrix_to_json(config_gram(c1), space.field())},
              {"gram2", matrix_to_json(config_gram(c2), space.field())}};
  if (equal) {
    const Mat g = witness_unitary(c1, c2);
    double residual = 0.0;
    for (std::size_t i = 0; i < c1.size(); ++i) {
      residual = std::max(residual, (g * c1.points()[i] - c2.points()[i]).norm());
    }
    out["witness"] = matrix_to_json(g, space.field());
    out["map_residual"] = residual;
    out["form_residual"] = form_preservation_residual(space, g);
  }
  return out;
}

json cmd_stereo(const Options& o) {
  const SpherePoint p(real_vector(o.p, "p"));
  const int modes = !o.q.empty() + !o.v.empty() + !o.f.empty();
  if (modes != 1) bad("stereo needs exactly one of --q, --v and --f");
  if (!o.q.empty()) {
    const SpherePoint q(real_vector(o.q, "q"));
    return {{"image", real_to_json(stereo(p, q))}, {"conformal_factor", conformal_factor(p, q)}};
  }
  if (!o.v.empty()) return {{"point", real_to_json(stereo_inverse(p, real_vector(o.v, "v")).coords())}};
  if (!o.eps) bad("--f needs --eps 0 or 1");
  const SubsphereImage img = subsphere_image(p, real_vector(o.f, "f"), *o.eps);
  json out = {{"kind", to_string(img.kind)}};
  if (img.kind == SubsphereKind::Sphere) {
    out["center"] = real_to_json(img.center);
    out["radius"] = img.radius;
  } else {
    out["normal"] = real_to_json(img.normal);
    out["offset"] = img.offset;
  }
  return out;
}

json cmd_disc_map(const Options& o) {
  if (o.z.empty()) bad("missing --z");
  const Scalar z = scalar_from_json(parse_text(o.z, "--z"));
  if (o.to.empty() || o.to == "klein") return {{"image", complex_to_json(poincare_klein_map(z))}};
  if (o.to == "poincare") return {{"image", complex_to_json(klein_poincare_map(z))}};
  bad("--to must be klein or poincare");
}

std::string cmd_plot(Context& ctx, const Options& o) {
  Scene scene = ctx.scene();
  if (!o.chart.empty()) scene.render.chart = chart_from_string(o.chart);
  if (o.size != 0) {
    if (o.size < 16) bad("--size must be at least 16");
    scene.render.size = o.size;
  }
  if (o.samples != 0) {
    if (o.samples < 2) bad("--samples must be at least 2");
    scene.render.samples = o.samples;
  }
  if (o.duals) scene.render.duals = true;
  return to_svg(build_render_model(scene));
}

json cmd_presets() {
  json list = json::array();
  for (const auto& p : presets()) {
    const HermitianSpace s = preset_space(p.name);
    list.push_back({{"name", p.name},
                    {"field", to_string(p.field)},
                    {"gram_diagonal", p.diagonal},
                    {"signature", signature_to_json(signature(s))},
                    {"metric_sign", p.metric_sign},
                    {"description", p.description}});
  }
  return {{"presets", list}};
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) bad("cannot write '" + o.out + "'");
  file << text;
}

void report_error(const GeometryError& e, std::ostream& err) {
  json j = {{"error", to_string(e.kind())}, {"message", e.what()}};
  if (const auto* d = dynamic_cast<const DegenerateFlagError*>(&e)) j["stage"] = d->stage();
  err << dump(j) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hermitian-form geometry: signatures, geodesics, trigonometry, configurations and disc models",
               "hermgeo"};
  app.require_subcommand(1);

  auto space_opts = [&](CLI::App* sub) {
    sub->add_option("scene", o.scene_path, "Scene JSON file, or - for stdin");
    sub->add_option("--gram", o.gram, "Gram matrix as JSON");
    sub->add_option("--field", o.field, "R or C (with --gram)")->check(CLI::IsMember({"R", "C"}));
    sub->add_option("--metric-sign", o.metric_sign, "1 or -1 (with --gram)")->check(CLI::IsMember({1, -1}));
    sub->add_option("--preset", o.preset, "Model preset name");
    sub->add_option("--dim", o.dim, "Dimension for fubini-study-n");
  };
  auto output_opts = [&](CLI::App* sub) {
    sub->add_option("--tolerance", o.tolerance, "Relative tolerance for zero tests");
    sub->add_flag("--csv", o.csv, "Write key,value CSV instead of JSON");
    sub->add_option("--out", o.out, "Write the result to this file");
  };

  auto* sig = app.add_subcommand("signature", "Signature (n-, n0, n+) of the form");
  space_opts(sig);
  output_opts(sig);

  auto* gs = app.add_subcommand("gram-schmidt", "Orthonormalize a flag");
  space_opts(gs);
  output_opts(gs);
  gs->add_option("--vectors", o.vectors, "JSON list of vectors (default: ambient basis)");
  gs->add_flag("--pivot", o.pivot, "Reorder and combine vectors to find a nondegenerate flag");

  auto* cls = app.add_subcommand("classify", "Classify a point or geodesic (or everything in a scene)");
  space_opts(cls);
  output_opts(cls);
  cls->add_option("--p", o.p, "Point (JSON vector or scene name)");
  cls->add_option("--geodesic", o.geodesic, "Geodesic span [v, v] or scene name");

  auto* ta = app.add_subcommand("tance", "Tance of two points");
  space_opts(ta);
  output_opts(ta);
  ta->add_option("--p", o.p, "First point");
  ta->add_option("--q", o.q, "Second point");

  auto* dist = app.add_subcommand("distance", "Spherical or hyperbolic distance");
  space_opts(dist);
  output_opts(dist);
  dist->add_option("--p", o.p, "First point");
  dist->add_option("--q", o.q, "Second point");
  dist->add_option("--kind", o.kind, "spherical or hyperbolic (default from the point class)")
      ->check(CLI::IsMember({"spherical", "hyperbolic"}));

  auto* geo = app.add_subcommand("geodesic", "Geodesic through two points or along a tangent");
  space_opts(geo);
  output_opts(geo);
  geo->add_option("--p", o.p, "Start point");
  geo->add_option("--q", o.q, "Second point");
  geo->add_option("--dir", o.dir, "Tangent direction at --p");
  geo->add_option("--arc", o.arc, "Arclength at which to lift a point");

  auto* tri = app.add_subcommand("triangle", "Triangle invariants, angles, area and law residuals");
  space_opts(tri);
  output_opts(tri);
  tri->add_option("--vertices", o.vertices, "Three points as JSON, or a scene triangle name");

  auto* cfg = app.add_subcommand("config-equal", "Compare two configurations by their Gram matrices");
  space_opts(cfg);
  output_opts(cfg);
  cfg->add_option("--c1", o.c1, "First configuration (JSON list of vectors or scene name)");
  cfg->add_option("--c2", o.c2, "Second configuration");

  auto* st = app.add_subcommand("stereo", "Stereographic projection from a point of the unit sphere");
  output_opts(st);
  st->add_option("--p", o.p, "Centre of projection (unit vector)");
  st->add_option("--q", o.q, "Sphere point to project");
  st->add_option("--v", o.v, "Tangent-plane vector to map back");
  st->add_option("--f", o.f, "Covector of a subsphere f q = eps");
  st->add_option("--eps", o.eps, "0 or 1")->check(CLI::IsMember({0, 1}));

  auto* disc = app.add_subcommand("disc-map", "Map between the Poincare and Beltrami-Klein discs");
  output_opts(disc);
  disc->add_option("--z", o.z, "Disc point as [re, im]");
  disc->add_option("--to", o.to, "klein (default) or poincare")->check(CLI::IsMember({"klein", "poincare"}));

  auto* plot = app.add_subcommand("plot", "Render a scene to SVG");
  space_opts(plot);
  plot->add_option("--tolerance", o.tolerance, "Relative tolerance for zero tests");
  plot->add_option("--out", o.out, "SVG output file (default stdout)");
  plot->add_option("--chart", o.chart, "poincare, klein or stereo-sphere")
      ->check(CLI::IsMember({"poincare", "klein", "stereo-sphere"}));
  plot->add_option("--size", o.size, "Viewport size in pixels");
  plot->add_option("--samples", o.samples, "Samples per geodesic");
  plot->add_flag("--duals", o.duals, "Draw dual poles of geodesics (klein chart)");

  auto* pre = app.add_subcommand("presets", "List the model presets");
  output_opts(pre);

  if (args.size() > 1 && !args[1].empty() && args[1][0] != '-') {
    try {
      app.get_subcommand(args[1]);
    } catch (const CLI::OptionNotFound&) {
      err << "unknown subcommand: " << args[1] << "\n" << app.help();
      return 2;
    }
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return 2;
  }

  if (o.tolerance && !(*o.tolerance > 0.0)) {
    err << dump({{"error", "input"}, {"message", "--tolerance must be positive"}}) << "\n";
    return 2;
  }

  try {
    Context ctx(o, in);
    if (plot->parsed()) {
      emit(cmd_plot(ctx, o), o, out);
      return 0;
    }
    json result;
    if (sig->parsed()) result = cmd_signature(ctx);
    else if (gs->parsed()) result = cmd_gram_schmidt(ctx, o);
    else if (cls->parsed()) result = cmd_classify(ctx, o);
    else if (ta->parsed()) result = cmd_tance(ctx, o);
    else if (dist->parsed()) result = cmd_distance(ctx, o);
    else if (geo->parsed()) result = cmd_geodesic(ctx, o);
    else if (tri->parsed()) result = cmd_triangle(ctx, o);
    else if (cfg->parsed()) result = cmd_config_equal(ctx, o);
    else if (st->parsed()) result = cmd_stereo(o);
    else if (disc->parsed()) result = cmd_disc_map(o);
    else if (pre->parsed()) result = cmd_presets();
    emit(o.csv ? to_csv(result) : dump(result) + "\n", o, out);
    return 0;
  } catch (const GeometryError& e) {
    report_error(e, err);
    return e.is_input_error() ? 2 : 1;
  } catch (const json::exception& e) {
    err << dump({{"error", "input"}, {"message", e.what()}}) << "\n";
    return 2;
  }
}

}  // namespace hermgeo::io
