#include "hermgeo/io/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "hermgeo/stereographic.hpp"

namespace hermgeo::io {

namespace {

[[noreturn]] void out_of_chart(const std::string& what) { fail(ErrorKind::RenderDomain, what); }

bool is_signature(const Signature& s, int minus, int plus) {
  return s.zero == 0 && s.minus == minus && s.plus == plus;
}

std::string sig_text(const Signature& s) {
  return "(" + std::to_string(s.minus) + "," + std::to_string(s.zero) + "," + std::to_string(s.plus) + ")";
}

// Half-width of the sampled parameter range of a hyperbolic geodesic; the
// vertices are appended as exact endpoints beyond it.
constexpr double kHyperbolicReach = 8.0;

}  // namespace

ChartMap::ChartMap(const HermitianSpace& space, Chart chart) : chart_(chart), space_(space) {
  const Signature sig = signature(space);
  const bool c_line = space.field() == Field::Complex && is_signature(sig, 1, 1);
  const bool r_plane = space.field() == Field::Real && is_signature(sig, 1, 2);
  const bool c_sphere = space.field() == Field::Complex && space.dim() == 2 &&
                        (is_signature(sig, 0, 2) || is_signature(sig, 2, 0));
  switch (chart) {
    case Chart::Poincare:
    case Chart::Klein:
      if (!c_line && !r_plane) {
        out_of_chart(std::string(to_string(chart)) + " chart needs C with signature -+ or R with -++, got " +
                     to_string(space.field()) + " " + sig_text(sig));
      }
      break;
    case Chart::StereoSphere:
      if (!c_sphere) {
        out_of_chart("stereo-sphere chart needs a definite complex line, got " +
                     std::string(to_string(space.field())) + " " + sig_text(sig));
      }
      break;
  }
  complex_line_ = c_line || c_sphere;

  std::vector<Vec> unit;
  for (int i = 0; i < space.dim(); ++i) unit.push_back(Vec::Unit(space.dim(), i));
  frame_ = gram_schmidt_pivoted(space, unit).basis;
  std::stable_partition(frame_.begin(), frame_.end(), [&](const Vec& e) { return space.norm_sq(e) < 0.0; });
}

std::vector<Scalar> ChartMap::coords(const Vec& v) const {
  std::vector<Scalar> c;
  for (const auto& e : frame_) c.push_back(space_.form(v, e) / space_.norm_sq(e));
  return c;
}

std::optional<Eigen::Vector2d> ChartMap::affine(const Vec& v) const {
  const auto c = coords(v);
  double cnorm = 0.0;
  for (auto x : c) cnorm += std::norm(x);
  if (std::abs(c[0]) <= 1e-12 * std::sqrt(cnorm)) return std::nullopt;
  if (complex_line_) {
    const Scalar z = c[1] / c[0];
    return Eigen::Vector2d(z.real(), z.imag());
  }
  return Eigen::Vector2d((c[1] / c[0]).real(), (c[2] / c[0]).real());
}

Eigen::Vector2d ChartMap::to_disc(const Vec& v) const {
  const auto c = coords(v);
  double cnorm = 0.0;
  for (auto x : c) cnorm += std::norm(x);
  cnorm = std::sqrt(cnorm);

  if (chart_ == Chart::StereoSphere) {
    if (std::abs(c[0]) <= 1e-12 * cnorm) return {0.0, 0.0};  // the pole -p
    const Scalar z = c[1] / c[0];
    const SpherePoint north(Eigen::Vector3d(0.0, 0.0, 1.0));
    const SpherePoint q = stereo_inverse(north, Eigen::Vector3d(z.real(), z.imag(), 0.0));
    return {q.coords()(0), q.coords()(1)};
  }

  const auto aff = affine(v);
  if (!aff) out_of_chart("point at infinity of the affine chart");
  const Eigen::Vector2d w = *aff;
  const double r2 = w.squaredNorm();
  if (r2 > 1.0 + 1e-9) out_of_chart("point outside the disc");
  const bool native = complex_line_ == (chart_ == Chart::Poincare);
  if (native) return w;
  if (r2 >= 1.0) return w / std::sqrt(r2);  // boundary points are fixed by both maps
  const Scalar z(w(0), w(1));
  const Scalar m = chart_ == Chart::Klein ? poincare_klein_map(z) : klein_poincare_map(z);
  return {m.real(), m.imag()};
}

Chart default_chart(const HermitianSpace& space) {
  const Signature sig = signature(space);
  if (space.field() == Field::Complex && is_signature(sig, 1, 1)) return Chart::Poincare;
  if (space.field() == Field::Real && is_signature(sig, 1, 2)) return Chart::Klein;
  if (space.field() == Field::Complex && space.dim() == 2 && (sig.minus == 2 || sig.plus == 2)) {
    return Chart::StereoSphere;
  }
  out_of_chart("no disc chart for " + std::string(to_string(space.field())) + " " + sig_text(sig));
}

namespace {

// Representative of W with negative (want_negative) or positive square.
Vec plane_axis(const Geodesic& g, bool want_negative) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(g.real_gram());
  const Eigen::Vector2d ab = eig.eigenvectors().col(want_negative ? 0 : 1);
  return ab(0) * g.w1() + ab(1) * g.w2();
}

std::vector<Eigen::Vector2d> sample_geodesic(const Geodesic& g, const ChartMap& map, int samples,
                                             const std::string& name) {
  const GeodesicClass cls = classify(g);
  std::vector<Eigen::Vector2d> pts;
  if (map.chart() == Chart::StereoSphere) {
    if (cls != GeodesicClass::Spherical) out_of_chart("geodesic '" + name + "' is not spherical");
    const ProjectivePoint base(g.space_ptr(), g.w1());
    // Projective great circles close up after arclength pi.
    for (int i = 0; i <= samples; ++i) {
      const double t = std::numbers::pi * i / samples;
      pts.push_back(map.to_disc(geodesic_lift(g, base, t).rep()));
    }
    return pts;
  }
  if (cls != GeodesicClass::Hyperbolic) {
    out_of_chart("geodesic '" + name + "' has no points in the disc (" + to_string(cls) + ")");
  }
  const ProjectivePoint base(g.space_ptr(), plane_axis(g, true));
  const GeodesicFrame frame = geodesic_frame(g, base);
  for (int i = 0; i < samples; ++i) {
    const double t = -kHyperbolicReach + 2.0 * kHyperbolicReach * i / (samples - 1);
    pts.push_back(map.to_disc(frame.at(t)));
  }
  auto [v1, v2] = vertices(g);
  Eigen::Vector2d a = map.to_disc(v1.rep());
  Eigen::Vector2d b = map.to_disc(v2.rep());
  if ((a - pts.front()).norm() > (b - pts.front()).norm()) std::swap(a, b);
  pts.insert(pts.begin(), a);
  pts.push_back(b);
  return pts;
}

void add_duals(RenderModel& model, const Scene& scene, const ChartMap& map) {
  if (model.chart != Chart::Klein || scene.space->field() != Field::Real) return;
  for (const auto& [name, g] : scene.geodesics) {
    if (classify(g) != GeodesicClass::Hyperbolic) continue;
    const auto pole = map.affine(dual_of_geodesic(g).rep());
    auto [v1, v2] = vertices(g);
    const Eigen::Vector2d a = map.to_disc(v1.rep());
    const Eigen::Vector2d b = map.to_disc(v2.rep());
    if (!pole) {
      // Diameter: the tangents at its ends are parallel.
      const Eigen::Vector2d u = Eigen::Vector2d(a(1) - b(1), b(0) - a(0)).normalized() * 2.0;
      model.lines.push_back({name + ":dual", "dual-tangent", {a - u, a + u}});
      model.lines.push_back({name + ":dual", "dual-tangent", {b - u, b + u}});
      continue;
    }
    model.lines.push_back({name + ":dual", "dual-tangent", {a, *pole}});
    model.lines.push_back({name + ":dual", "dual-tangent", {b, *pole}});
    model.dots.push_back({name + ":pole", *pole, PointClass::Positive});
  }
}

}  // namespace

RenderModel build_render_model(const Scene& scene) {
  RenderModel model;
  model.chart = scene.render.chart ? *scene.render.chart : default_chart(*scene.space);
  model.size = scene.render.size;
  const ChartMap map(*scene.space, model.chart);

  for (const auto& [name, g] : scene.geodesics) {
    model.lines.push_back({name, "geodesic", sample_geodesic(g, map, scene.render.samples, name)});
  }
  if (scene.render.duals) add_duals(model, scene, map);
  for (const auto& [name, p] : scene.points) {
    const PointClass cls = classify_point(p);
    if (model.chart != Chart::StereoSphere && cls == PointClass::Positive) {
      out_of_chart("point '" + name + "' is positive and lies outside the disc");
    }
    try {
      model.dots.push_back({name, map.to_disc(p.rep()), cls});
    } catch (const GeometryError& e) {
      out_of_chart("point '" + name + "': " + e.what());
    }
  }
  return model;
}

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* dot_fill(PointClass c) {
  switch (c) {
    case PointClass::Negative: return "#1f4e9c";
    case PointClass::Positive: return "#c0392b";
    case PointClass::Isotropic: return "#ffffff";
  }
  return "#000000";
}

}  // namespace

std::string to_svg(const RenderModel& model) {
  const double size = model.size;
  const double half = size / 2.0;
  const double radius = half * 0.9;  // 5% margin on every side
  auto px = [&](const Eigen::Vector2d& p) { return num(half + radius * p(0)) + "," + num(half - radius * p(1)); };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(model.size) + "\" height=\"" +
         std::to_string(model.size) + "\" viewBox=\"0 0 " + std::to_string(model.size) + " " +
         std::to_string(model.size) + "\">\n";
  svg += "<title>" + std::string(to_string(model.chart)) + " chart</title>\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<circle class=\"absolute\" cx=\"" + num(half) + "\" cy=\"" + num(half) + "\" r=\"" + num(radius) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  for (const auto& line : model.lines) {
    const bool dual = line.kind == "dual-tangent";
    svg += "<polyline class=\"" + line.kind + "\" data-name=\"" + xml_escape(line.name) + "\" points=\"";
    for (std::size_t i = 0; i < line.points.size(); ++i) {
      if (i) svg += ' ';
      svg += px(line.points[i]);
    }
    svg += std::string("\" fill=\"none\" stroke=\"") + (dual ? "#888888" : "#2a7f62") + "\" stroke-width=\"" +
           (dual ? "1" : "1.5") + "\"" + (dual ? " stroke-dasharray=\"4 3\"" : "") + "/>\n";
  }
  for (const auto& d : model.dots) {
    const std::string x = num(half + radius * d.at(0));
    const std::string y = num(half - radius * d.at(1));
    svg += "<circle class=\"point " + std::string(to_string(d.cls)) + "\" data-name=\"" + xml_escape(d.name) +
           "\" cx=\"" + x + "\" cy=\"" + y + "\" r=\"3.5\" fill=\"" + dot_fill(d.cls) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + num(half + radius * d.at(0) + 6.0) + "\" y=\"" + num(half - radius * d.at(1) - 6.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + xml_escape(d.name) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace hermgeo::io
