#include "hermgeo/trigonometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hermgeo {

const char* to_string(Regime r) { return r == Regime::Spherical ? "spherical" : "hyperbolic"; }

const char* to_string(Law law) {
  switch (law) {
    case Law::Cos1Spherical: return "cos1_spherical";
    case Law::SinesSpherical: return "sines_spherical";
    case Law::Cos1Hyperbolic: return "cos1_hyperbolic";
    case Law::Cos2Hyperbolic: return "cos2_hyperbolic";
    case Law::SinesHyperbolic: return "sines_hyperbolic";
  }
  return "unknown";
}

std::optional<Law> law_from_string(const std::string& name) {
  for (Law law : {Law::Cos1Spherical, Law::SinesSpherical, Law::Cos1Hyperbolic,
                  Law::Cos2Hyperbolic, Law::SinesHyperbolic}) {
    if (name == to_string(law)) return law;
  }
  return std::nullopt;
}

namespace {

int wrap(int i) { return ((i % 3) + 3) % 3; }

Regime law_regime(Law law) {
  return law == Law::Cos1Spherical || law == Law::SinesSpherical ? Regime::Spherical
                                                                 : Regime::Hyperbolic;
}

}  // namespace

TriangleInvariants triangle_invariants(const ProjectivePoint& p1, const ProjectivePoint& p2,
                                       const ProjectivePoint& p3) {
  const HermitianSpace& space = p1.space();
  const std::array<const ProjectivePoint*, 3> pts{&p1, &p2, &p3};
  for (const auto* p : pts) {
    if (!(p->space() == space)) fail(ErrorKind::Input, "triangle vertices in different spaces");
  }
  const PointClass cls = classify_point(p1);
  if (cls == PointClass::Isotropic) fail(ErrorKind::Regime, "isotropic triangle vertex");
  for (const auto* p : pts) {
    if (classify_point(*p) != cls) fail(ErrorKind::Regime, "triangle vertices of mixed classes");
  }
  for (int i = 0; i < 3; ++i) {
    const Vec& a = pts[i]->rep();
    const Vec& b = pts[wrap(i + 1)]->rep();
    if (space.is_null(space.form(a, b), a, b)) {
      fail(ErrorKind::DegenerateTriangle, "orthogonal pair of triangle vertices");
    }
  }

  const double s = cls == PointClass::Negative ? -1.0 : 1.0;
  auto unit = [&](const ProjectivePoint& p) { return Vec(p.rep() / std::sqrt(std::abs(p.norm_sq()))); };
  // Rephase `next` so that s * <prev, next> is a nonnegative real.
  auto align = [&](const Vec& prev, Vec next) {
    const Scalar c = s * space.form(prev, next);
    return Vec(next * (c / std::abs(c)));
  };
  const Vec a = unit(p1);
  const Vec b = align(a, unit(p2));
  const Vec c = align(b, unit(p3));

  TriangleInvariants t;
  t.vertex_sign = static_cast<int>(s);
  t.field = space.field();
  t.r[0] = std::abs(space.form(a, b));
  t.r[1] = std::abs(space.form(b, c));
  const Scalar closing = s * space.form(c, a);
  t.r[2] = std::abs(closing);
  t.eps = closing / t.r[2];

  const double slack = space.tolerance().rel;
  const bool below = std::any_of(t.r.begin(), t.r.end(), [&](double r) { return r < 1.0 - slack; });
  const bool above = std::any_of(t.r.begin(), t.r.end(), [&](double r) { return r > 1.0 + slack; });
  if (below && above) fail(ErrorKind::Regime, "triangle sides mix spherical and hyperbolic tances");
  if (below) {
    t.regime = Regime::Spherical;
  } else if (above) {
    t.regime = Regime::Hyperbolic;
  } else {
    const Signature sig = signature(space);
    t.regime = sig.minus == 0 || sig.plus == 0 ? Regime::Spherical : Regime::Hyperbolic;
  }
  return t;
}

double fundamental_identity_residual(const TriangleInvariants& t) {
  const auto& r = t.r;
  return 1.0 + 2.0 * r[0] * r[1] * r[2] * t.eps.real() - r[0] * r[0] - r[1] * r[1] - r[2] * r[2];
}

double interior_angle(const ProjectivePoint& p1, const ProjectivePoint& p2,
                      const ProjectivePoint& p3, int at) {
  if (at < 0 || at > 2) fail(ErrorKind::Input, "vertex index must be 0, 1 or 2");
  const std::array<const ProjectivePoint*, 3> pts{&p1, &p2, &p3};
  const ProjectivePoint& vertex = *pts[at];
  const TangentVector back = tangent_toward(vertex, *pts[wrap(at - 1)]);
  const TangentVector ahead = tangent_toward(vertex, *pts[wrap(at + 1)]);
  return angle(back, ahead);
}

double interior_angle_closed_form(const TriangleInvariants& t, int at) {
  if (at < 0 || at > 2) fail(ErrorKind::Input, "vertex index must be 0, 1 or 2");
  const double m = t.regime == Regime::Spherical ? 1.0 : -1.0;
  const double ra = t.r[wrap(at - 1)];
  const double rb = t.r[at];
  const double ropp = t.r[wrap(at + 1)];
  const double da = m * (1.0 - ra * ra);
  const double db = m * (1.0 - rb * rb);
  if (!(da > 0.0) || !(db > 0.0)) {
    fail(ErrorKind::IndefiniteDirection, "adjacent side of zero length");
  }
  const double c = m * (ropp * t.eps.real() - ra * rb) / (std::sqrt(da) * std::sqrt(db));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

std::array<double, 3> side_lengths(const TriangleInvariants& t) {
  std::array<double, 3> l{};
  for (int i = 0; i < 3; ++i) {
    const double r = t.r[i];
    l[i] = t.regime == Regime::Spherical ? std::acos(std::clamp(r, 0.0, 1.0))
                                         : std::acosh(std::max(r, 1.0));
  }
  return l;
}

double law_check(const TriangleInvariants& t, const std::array<double, 3>& angles, Law law) {
  if (law_regime(law) != t.regime) {
    fail(ErrorKind::Input, std::string("law ") + to_string(law) + " does not apply to a " +
                               to_string(t.regime) + " triangle");
  }
  for (double a : angles) {
    if (!(a > 0.0 && a < std::numbers::pi)) {
      fail(ErrorKind::Input, "laws need interior angles strictly between 0 and pi");
    }
  }
  const auto l = side_lengths(t);
  for (double li : l) {
    if (!(li > 0.0) || (t.regime == Regime::Spherical && !(li < std::numbers::pi / 2))) {
      fail(ErrorKind::Input, "laws need side lengths in (0, pi/2) (spherical) or > 0 (hyperbolic)");
    }
  }

  double worst = 0.0;
  switch (law) {
    case Law::Cos1Spherical:
      for (int k = 0; k < 3; ++k) {
        const double a = 2.0 * l[wrap(k - 1)], b = 2.0 * l[k], c = 2.0 * l[wrap(k + 1)];
        const double res = std::cos(c) - (std::cos(a) * std::cos(b) +
                                          std::cos(angles[k]) * std::sin(a) * std::sin(b));
        worst = std::max(worst, std::abs(res));
      }
      return worst;
    case Law::Cos1Hyperbolic:
      for (int k = 0; k < 3; ++k) {
        const double a = 2.0 * l[wrap(k - 1)], b = 2.0 * l[k], c = 2.0 * l[wrap(k + 1)];
        const double res = std::cosh(c) - (std::cosh(a) * std::cosh(b) -
                                           std::cos(angles[k]) * std::sinh(a) * std::sinh(b));
        worst = std::max(worst, std::abs(res));
      }
      return worst;
    case Law::Cos2Hyperbolic:
      // cos A + cos B cos C = cosh(side opposite A) sin B sin C
      for (int k = 0; k < 3; ++k) {
        const double pa = angles[wrap(k - 1)], pb = angles[wrap(k + 1)];
        const double res = std::cos(angles[k]) + std::cos(pa) * std::cos(pb) -
                           std::cosh(2.0 * l[wrap(k + 1)]) * std::sin(pa) * std::sin(pb);
        worst = std::max(worst, std::abs(res));
      }
      return worst;
    case Law::SinesSpherical:
    case Law::SinesHyperbolic: {
      std::array<double, 3> ratio{};
      for (int i = 0; i < 3; ++i) {
        const double side = law == Law::SinesSpherical ? std::sin(2.0 * l[i]) : std::sinh(2.0 * l[i]);
        ratio[i] = side / std::sin(angles[wrap(i + 2)]);
      }
      // Relative to the common ratio, which grows without bound as an angle
      // shrinks.
      const double scale = std::max({std::abs(ratio[0]), std::abs(ratio[1]), std::abs(ratio[2])});
      for (int i = 0; i < 3; ++i) {
        worst = std::max(worst, std::abs(ratio[i] - ratio[wrap(i + 1)]) / scale);
      }
      return worst;
    }
  }
  return worst;
}

double triangle_area_spherical(const TriangleInvariants& t) {
  if (t.regime != Regime::Spherical) {
    fail(ErrorKind::NotApplicable, "area from eps is defined for spherical triangles");
  }
  if (t.field != Field::Complex) {
    fail(ErrorKind::NotApplicable, "area from eps needs the complex field");
  }
  return std::arg(t.eps) / 2.0;
}

TriangleReport triangle_report(const ProjectivePoint& p1, const ProjectivePoint& p2,
                               const ProjectivePoint& p3) {
  TriangleReport rep;
  rep.invariants = triangle_invariants(p1, p2, p3);
  rep.lengths = side_lengths(rep.invariants);
  rep.identity_residual = fundamental_identity_residual(rep.invariants);
  for (int k = 0; k < 3; ++k) {
    rep.angles[k] = interior_angle(p1, p2, p3, k);
    try {
      rep.closed_form_angles[k] = interior_angle_closed_form(rep.invariants, k);
    } catch (const GeometryError&) {
      rep.closed_form_angles[k] = std::nan("");
    }
  }
  Mat reps(p1.rep().size(), 3);
  reps << p1.rep() / p1.rep().norm(), p2.rep() / p2.rep().norm(), p3.rep() / p3.rep().norm();
  rep.on_projective_line = numerical_rank(reps, p1.space().tolerance()) <= 2;
  // Area and the laws are statements about triangles inside one projective line.
  if (!rep.on_projective_line) return rep;
  if (rep.invariants.regime == Regime::Spherical && rep.invariants.field == Field::Complex) {
    rep.area = triangle_area_spherical(rep.invariants);
  }
  const std::array<Law, 5> all{Law::Cos1Spherical, Law::SinesSpherical, Law::Cos1Hyperbolic,
                               Law::Cos2Hyperbolic, Law::SinesHyperbolic};
  for (Law law : all) {
    if (law_regime(law) != rep.invariants.regime) continue;
    try {
      rep.law_residuals[to_string(law)] = law_check(rep.invariants, rep.angles, law);
    } catch (const GeometryError&) {
      rep.law_residuals[to_string(law)] = std::nullopt;
    }
  }
  return rep;
}

}  // namespace hermgeo
