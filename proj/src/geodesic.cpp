#include "hermgeo/geodesic.hpp"

#include <algorithm>
#include <cmath>

namespace hermgeo {

const char* to_string(GeodesicClass c) {
  switch (c) {
    case GeodesicClass::Spherical: return "spherical";
    case GeodesicClass::Hyperbolic: return "hyperbolic";
    case GeodesicClass::Degenerate: return "degenerate";
  }
  return "unknown";
}

const char* to_string(TriangleTance t) {
  switch (t) {
    case TriangleTance::Strict: return "strict";
    case TriangleTance::Equality: return "equality";
    case TriangleTance::Violated: return "violated";
  }
  return "unknown";
}

namespace {

RealMat realify(const Vec& a, const Vec& b) {
  const Eigen::Index n = a.size();
  RealMat m(2 * n, 2);
  m.col(0) << a.real(), a.imag();
  m.col(1) << b.real(), b.imag();
  return m;
}

double plane_magnitude(const Geodesic& g) {
  const HermitianSpace& s = g.space();
  return s.form_magnitude(g.w1(), g.w1()) + s.form_magnitude(g.w2(), g.w2());
}

/// Orthogonal eigenbasis of the real Gram of W, mapped back into V and
/// normalized to unit |square|. Entries are (vector, square sign or 0).
struct PlaneBasis {
  Vec e[2];
  int sign[2];
};

PlaneBasis plane_basis(const Geodesic& g) {
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(g.real_gram());
  const double mag = plane_magnitude(g);
  const Tolerance& tol = g.space().tolerance();
  PlaneBasis out;
  for (int i = 0; i < 2; ++i) {
    const double lambda = solver.eigenvalues()(i);
    const Eigen::Vector2d u = solver.eigenvectors().col(i);
    Vec e = u(0) * g.w1() + u(1) * g.w2();
    if (tol.negligible(lambda, mag)) {
      out.sign[i] = 0;
      out.e[i] = e / e.norm();
    } else {
      out.sign[i] = lambda < 0.0 ? -1 : 1;
      out.e[i] = e / std::sqrt(std::abs(g.space().norm_sq(e)));
    }
  }
  return out;
}

void require_nonisotropic(const ProjectivePoint& p, const char* what) {
  if (classify_point(p) == PointClass::Isotropic) {
    fail(ErrorKind::SingularPoint, std::string(what) + " is isotropic");
  }
}

void require_same_space(const ProjectivePoint& p, const HermitianSpace& space) {
  if (!(p.space() == space)) fail(ErrorKind::Input, "point belongs to a different space");
}

/// Real coefficients (a, b) with v / phase = a w1 + b w2.
std::optional<std::pair<double, double>> real_coords(const Geodesic& g, const Vec& v, Scalar phase) {
  Mat m(v.size(), 2);
  m.col(0) = g.w1();
  m.col(1) = g.w2();
  const Vec target = v / phase;
  const Vec c = m.colPivHouseholderQr().solve(target);
  const Tolerance& tol = g.space().tolerance();
  const double scale = std::max(target.norm(), 1e-300);
  if (!tol.negligible((m * c - target).norm(), scale)) return std::nullopt;
  const double cmag = std::max(std::abs(c(0)), std::abs(c(1)));
  if (!tol.negligible(std::abs(c(0).imag()), cmag) || !tol.negligible(std::abs(c(1).imag()), cmag)) {
    return std::nullopt;
  }
  return std::make_pair(c(0).real(), c(1).real());
}

std::optional<Scalar> phase_into(const Geodesic& g, const Vec& v) {
  Mat m(v.size(), 2);
  m.col(0) = g.w1();
  m.col(1) = g.w2();
  const Vec c = m.colPivHouseholderQr().solve(v);
  const Scalar lead = std::abs(c(0)) >= std::abs(c(1)) ? c(0) : c(1);
  if (std::abs(lead) == 0.0) return std::nullopt;
  return lead / std::abs(lead);
}

void orient_by_first_coordinate(Vec& q, const Tolerance& tol) {
  const double mag = q.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    const Scalar c = q(i);
    if (tol.negligible(std::abs(c), mag)) continue;
    const bool negative = tol.negligible(std::abs(c.real()), mag) ? c.imag() < 0.0 : c.real() < 0.0;
    if (negative) q = -q;
    return;
  }
}

}  // namespace

Geodesic::Geodesic(SpacePtr space, Vec w1, Vec w2)
    : space_(std::move(space)), w1_(std::move(w1)), w2_(std::move(w2)) {
  if (!space_) fail(ErrorKind::Input, "geodesic without a space");
  space_->check_vector(w1_);
  space_->check_vector(w2_);
  const RealMat m = realify(w1_, w2_);
  if (numerical_rank(m.cast<Scalar>(), space_->tolerance()) != 2) {
    fail(ErrorKind::Input, "geodesic spanning vectors are R-linearly dependent");
  }
  const Scalar cross = space_->form(w1_, w2_);
  if (!space_->tolerance().negligible(std::abs(cross.imag()), space_->form_magnitude(w1_, w2_))) {
    fail(ErrorKind::NotAGeodesic, "the form is not real on the spanned plane");
  }
  if (real_gram().cwiseAbs().maxCoeff() <= space_->tolerance().rel * plane_magnitude(*this)) {
    fail(ErrorKind::NotAGeodesic, "the form vanishes on the spanned plane");
  }
}

Eigen::Matrix2d Geodesic::real_gram() const {
  Eigen::Matrix2d g;
  g(0, 0) = space_->norm_sq(w1_);
  g(1, 1) = space_->norm_sq(w2_);
  g(0, 1) = g(1, 0) = space_->form(w1_, w2_).real();
  return g;
}

Geodesic geodesic_through(const ProjectivePoint& p1, const ProjectivePoint& p2) {
  require_same_space(p2, p1.space());
  if (p1.same_point(p2)) fail(ErrorKind::Coincident, "geodesic through coincident points");
  const HermitianSpace& space = p1.space();
  const Scalar cross = space.form(p1.rep(), p2.rep());
  if (space.is_null(cross, p1.rep(), p2.rep())) {
    fail(ErrorKind::NoUniqueGeodesic, "orthogonal points do not determine a unique geodesic");
  }
  return Geodesic(p1.space_ptr(), p1.rep(), cross * p2.rep());
}

Geodesic geodesic_from_tangent(const ProjectivePoint& p, const TangentVector& t) {
  require_nonisotropic(p, "base point");
  if (p.rep() != t.at().rep() || !(p.space() == t.at().space())) {
    fail(ErrorKind::Input, "tangent vector is not based at the given point");
  }
  if (p.space().tolerance().negligible(t.dir().norm(), p.rep().norm())) {
    fail(ErrorKind::Input, "null tangent vector");
  }
  return Geodesic(p.space_ptr(), p.rep(), t.dir());
}

TangentVector tangent_toward(const ProjectivePoint& p1, const ProjectivePoint& p2) {
  require_same_space(p2, p1.space());
  require_nonisotropic(p1, "start point");
  if (p1.same_point(p2)) fail(ErrorKind::Coincident, "tangent toward a coincident point");
  const HermitianSpace& space = p1.space();
  const Scalar back = space.form(p2.rep(), p1.rep());
  if (space.is_null(back, p2.rep(), p1.rep())) {
    fail(ErrorKind::NoUniqueGeodesic, "orthogonal points do not determine a unique geodesic");
  }
  return TangentVector(p1, project_along(p1, p2.rep()).orthogonal / back);
}

GeodesicClass classify(const Geodesic& g) {
  const Eigen::Matrix2d gram = g.real_gram();
  const double mag = plane_magnitude(g);
  const Tolerance& tol = g.space().tolerance();
  if (gram.cwiseAbs().maxCoeff() <= tol.rel * mag) {
    fail(ErrorKind::NotAGeodesic, "the form vanishes on the spanned plane");
  }
  const Eigen::Vector2d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(gram).eigenvalues();
  if (tol.negligible(ev(0), mag) || tol.negligible(ev(1), mag)) return GeodesicClass::Degenerate;
  // A definite plane of either sign carries a spherical geodesic.
  return (ev(0) < 0.0) == (ev(1) < 0.0) ? GeodesicClass::Spherical : GeodesicClass::Hyperbolic;
}

std::optional<PlaneCoords> locate(const Geodesic& g, const Vec& v) {
  g.space().check_vector(v);
  const auto phase = phase_into(g, v);
  if (!phase) return std::nullopt;
  const auto ab = real_coords(g, v, *phase);
  if (!ab) return std::nullopt;
  return PlaneCoords{ab->first * g.w1() + ab->second * g.w2(), ab->first, ab->second};
}

bool contains(const Geodesic& g, const ProjectivePoint& p) {
  if (!(p.space() == g.space())) return false;
  return locate(g, p.rep()).has_value();
}

bool same_geodesic(const Geodesic& g1, const Geodesic& g2) {
  if (!(g1.space() == g2.space())) return false;
  const auto phase = phase_into(g2, g1.w1());
  if (!phase) return false;
  return real_coords(g2, g1.w1(), *phase).has_value() && real_coords(g2, g1.w2(), *phase).has_value();
}

std::pair<ProjectivePoint, ProjectivePoint> vertices(const Geodesic& g) {
  if (classify(g) != GeodesicClass::Hyperbolic) {
    fail(ErrorKind::WrongClass, "only hyperbolic geodesics have vertices");
  }
  const PlaneBasis b = plane_basis(g);
  const int neg = b.sign[0] < 0 ? 0 : 1;
  const Vec& p = b.e[neg];
  const Vec& q = b.e[1 - neg];
  return {ProjectivePoint(g.space_ptr(), p + q), ProjectivePoint(g.space_ptr(), p - q)};
}

double tance(const ProjectivePoint& p1, const ProjectivePoint& p2) {
  require_same_space(p2, p1.space());
  require_nonisotropic(p1, "first point");
  require_nonisotropic(p2, "second point");
  const Scalar cross = p1.space().form(p1.rep(), p2.rep());
  return std::norm(cross) / (p1.norm_sq() * p2.norm_sq());
}

double distance(const ProjectivePoint& p1, const ProjectivePoint& p2, DistanceKind kind) {
  const double ta = tance(p1, p2);
  const double slack = p1.space().tolerance().rel;
  // 1 - ta evaluated through the projection of p2 onto p1-perp, which keeps
  // full relative precision for nearby points.
  const Vec perp = project_along(p1, p2.rep()).orthogonal;
  const double one_minus = p1.space().norm_sq(perp) / p2.norm_sq();
  if (kind == DistanceKind::Spherical) {
    if (ta < -slack || ta > 1.0 + slack) {
      fail(ErrorKind::Regime, "tance " + std::to_string(ta) + " outside [0, 1] for a spherical distance");
    }
    return std::atan2(std::sqrt(std::max(0.0, one_minus)), std::sqrt(std::clamp(ta, 0.0, 1.0)));
  }
  if (ta < 1.0 - slack) {
    fail(ErrorKind::Regime, "tance " + std::to_string(ta) + " below 1 for a hyperbolic distance");
  }
  return std::asinh(std::sqrt(std::max(0.0, -one_minus)));
}

Vec GeodesicFrame::at(double t) const {
  if (hyperbolic) return std::cosh(t) * base + std::sinh(t) * direction;
  return std::cos(t) * base + std::sin(t) * direction;
}

Vec GeodesicFrame::velocity(double t) const {
  if (hyperbolic) return std::sinh(t) * base + std::cosh(t) * direction;
  return -std::sin(t) * base + std::cos(t) * direction;
}

GeodesicFrame geodesic_frame(const Geodesic& g, const ProjectivePoint& p1,
                             const std::optional<ProjectivePoint>& toward) {
  require_same_space(p1, g.space());
  const GeodesicClass cls = classify(g);
  if (cls == GeodesicClass::Degenerate) {
    fail(ErrorKind::WrongClass, "degenerate geodesics carry no arclength parameter");
  }
  require_nonisotropic(p1, "start point");
  const auto loc = locate(g, p1.rep());
  if (!loc) fail(ErrorKind::Membership, "start point is not on the geodesic");

  const HermitianSpace& space = g.space();
  const Tolerance& tol = space.tolerance();
  const Vec base = loc->rep / std::sqrt(std::abs(space.norm_sq(loc->rep)));
  const double base_sq = space.norm_sq(base);

  auto residual = [&](const Vec& w) { return Vec(w - (space.form(w, base) / base_sq) * base); };
  Vec r1 = residual(g.w1());
  Vec r2 = residual(g.w2());
  Vec q = r1.norm() / g.w1().norm() >= r2.norm() / g.w2().norm() ? r1 : r2;
  q /= std::sqrt(std::abs(space.norm_sq(q)));

  bool oriented = false;
  if (toward) {
    require_same_space(*toward, g.space());
    const auto target = locate(g, toward->rep());
    if (!target) fail(ErrorKind::Membership, "target point is not on the geodesic");
    Vec r = target->rep;
    const double along = space.form(r, base).real() * base_sq;
    const double q_sq = space.norm_sq(q);
    const double progress = space.form(r, q).real() / q_sq;
    const double mag = std::sqrt(space.form_magnitude(r, r));
    if (!tol.negligible(along, mag) && !tol.negligible(progress, mag)) {
      // Put the target on the same sheet as the base, then require a
      // nonnegative coefficient on the direction.
      const double sheet = along > 0.0 ? 1.0 : -1.0;
      if (sheet * progress < 0.0) q = -q;
      oriented = true;
    }
  }
  if (!oriented) orient_by_first_coordinate(q, tol);
  return GeodesicFrame{base, q, cls == GeodesicClass::Hyperbolic};
}

ProjectivePoint geodesic_lift(const Geodesic& g, const ProjectivePoint& p1, double arc,
                              const std::optional<ProjectivePoint>& toward) {
  return ProjectivePoint(g.space_ptr(), geodesic_frame(g, p1, toward).at(arc));
}

TriangleTance triangle_tance_inequality(const ProjectivePoint& p1, const ProjectivePoint& p2,
                                        const ProjectivePoint& p3) {
  const HermitianSpace& space = p1.space();
  require_same_space(p2, space);
  require_same_space(p3, space);
  if (space.field() != Field::Real || space.metric_sign() != -1 || signature(space).minus != 1) {
    fail(ErrorKind::Regime, "tance triangle inequality needs a real hyperbolic space");
  }
  for (const auto* p : {&p1, &p2, &p3}) {
    if (classify_point(*p) != PointClass::Negative) {
      fail(ErrorKind::Regime, "triangle vertices must be negative points");
    }
  }
  auto unit = [&](const ProjectivePoint& p) { return Vec(p.rep() / std::sqrt(-p.norm_sq())); };
  const Vec a = unit(p1);
  Vec b = unit(p2);
  Vec c = unit(p3);
  if (space.form(a, b).real() > 0.0) b = -b;
  if (space.form(b, c).real() > 0.0) c = -c;
  const double r1 = -space.form(a, b).real();
  const double r2 = -space.form(b, c).real();
  const double r3 = -space.form(c, a).real();
  const double slack = 2.0 * r1 * r2 * r3 + 1.0 - (r1 * r1 + r2 * r2 + r3 * r3);
  const double mag = 1.0 + 2.0 * std::abs(r1 * r2 * r3) + r1 * r1 + r2 * r2 + r3 * r3;
  if (space.tolerance().negligible(slack, mag)) return TriangleTance::Equality;
  return slack > 0.0 ? TriangleTance::Strict : TriangleTance::Violated;
}

namespace {

void require_projective_plane(const HermitianSpace& space) {
  if (space.field() != Field::Real || space.dim() != 3) {
    fail(ErrorKind::Regime, "duality is defined on a real projective plane");
  }
  const Signature sig = signature(space);
  if (!sig.nondegenerate() || sig.minus == 0 || sig.plus == 0) {
    fail(ErrorKind::Regime, "duality needs a nondegenerate indefinite form");
  }
}

}  // namespace

Geodesic dual(const ProjectivePoint& p) {
  require_projective_plane(p.space());
  const Subspace perp = orthogonal_complement(p.space(), Subspace(p.space(), {p.rep()}));
  return Geodesic(p.space_ptr(), perp.basis()[0], perp.basis()[1]);
}

ProjectivePoint dual_of_geodesic(const Geodesic& g) {
  require_projective_plane(g.space());
  const Subspace perp =
      orthogonal_complement(g.space(), Subspace(g.space(), {g.w1(), g.w2()}));
  return ProjectivePoint(g.space_ptr(), perp.basis()[0]);
}

Scalar poincare_klein_map(Scalar z) {
  const double r2 = std::norm(z);
  if (!(r2 < 1.0)) fail(ErrorKind::Domain, "point outside the open unit disc");
  return 2.0 * z / (1.0 + r2);
}

Scalar klein_poincare_map(Scalar w) {
  const double r2 = std::norm(w);
  if (!(r2 < 1.0)) fail(ErrorKind::Domain, "point outside the open unit disc");
  return w / (1.0 + std::sqrt(1.0 - r2));
}

SpacePtr poincare_space() {
  return make_space(HermitianSpace::diagonal(Field::Complex, {-1.0, 1.0}, -1));
}

SpacePtr klein_space() {
  return make_space(HermitianSpace::diagonal(Field::Real, {-1.0, 1.0, 1.0}, -1));
}

ProjectivePoint poincare_point(Scalar z) {
  Vec v(2);
  v << 1.0, z;
  return ProjectivePoint(poincare_space(), v);
}

ProjectivePoint klein_point(Scalar w) {
  Vec v(3);
  v << 1.0, w.real(), w.imag();
  return ProjectivePoint(klein_space(), v);
}

namespace {

void require_in_disc(Scalar z) {
  if (!(std::norm(z) < 1.0)) fail(ErrorKind::Domain, "point outside the open unit disc");
}

}  // namespace

double poincare_distance(Scalar z1, Scalar z2) {
  require_in_disc(z1);
  require_in_disc(z2);
  const SpacePtr s = poincare_space();
  Vec a(2), b(2);
  a << 1.0, z1;
  b << 1.0, z2;
  return distance(ProjectivePoint(s, a), ProjectivePoint(s, b), DistanceKind::Hyperbolic);
}

double klein_distance(Scalar w1, Scalar w2) {
  require_in_disc(w1);
  require_in_disc(w2);
  const SpacePtr s = klein_space();
  Vec a(3), b(3);
  a << 1.0, w1.real(), w1.imag();
  b << 1.0, w2.real(), w2.imag();
  return distance(ProjectivePoint(s, a), ProjectivePoint(s, b), DistanceKind::Hyperbolic);
}

}  // namespace hermgeo
