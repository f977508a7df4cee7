#include "hermgeo/projective.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hermgeo {

const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::Negative: return "negative";
    case PointClass::Positive: return "positive";
    case PointClass::Isotropic: return "isotropic";
  }
  return "unknown";
}

ProjectivePoint::ProjectivePoint(SpacePtr space, Vec rep) : space_(std::move(space)), rep_(std::move(rep)) {
  if (!space_) fail(ErrorKind::Input, "point without a space");
  space_->check_vector(rep_);
  if (!(rep_.norm() > 0.0) || !std::isfinite(rep_.norm())) {
    fail(ErrorKind::Input, "projective point with a zero representative");
  }
}

ProjectivePoint ProjectivePoint::rescaled(Scalar k) const {
  return ProjectivePoint(space_, k * rep_);
}

bool ProjectivePoint::same_point(const ProjectivePoint& other) const {
  const Vec& a = rep_;
  const Vec& b = other.rep_;
  if (a.size() != b.size()) return false;
  const Scalar c = a.dot(b) / a.squaredNorm();  // Eigen's dot conjugates the left side
  return space_->tolerance().negligible((b - c * a).norm(), b.norm());
}

TangentVector::TangentVector(ProjectivePoint at, Vec dir) : at_(std::move(at)), dir_(std::move(dir)) {
  const HermitianSpace& space = at_.space();
  space.check_vector(dir_);
  if (classify_point(at_) == PointClass::Isotropic) {
    fail(ErrorKind::SingularPoint, "tangent vectors are only represented at nonisotropic points");
  }
  const Scalar cross = space.form(dir_, at_.rep());
  if (!space.is_null(cross, dir_, at_.rep())) {
    fail(ErrorKind::Input, "tangent direction is not orthogonal to its base point");
  }
}

TangentVector TangentVector::with_rep_scaled(Scalar k) const {
  if (k == Scalar(0.0)) fail(ErrorKind::Input, "zero rescaling factor");
  return TangentVector(at_.rescaled(std::conj(k)), dir_ / k);
}

PointClass classify_point(const ProjectivePoint& p) {
  const HermitianSpace& space = p.space();
  const double value = p.norm_sq();
  if (space.tolerance().negligible(value, space.form_magnitude(p.rep(), p.rep()))) {
    return PointClass::Isotropic;
  }
  return value < 0.0 ? PointClass::Negative : PointClass::Positive;
}

Decomposition project_along(const ProjectivePoint& p, const Vec& v) {
  const HermitianSpace& space = p.space();
  space.check_vector(v);
  if (classify_point(p) == PointClass::Isotropic) {
    fail(ErrorKind::SingularPoint, "orthogonal projection along an isotropic point");
  }
  const Vec along = (space.form(v, p.rep()) / p.norm_sq()) * p.rep();
  return {along, v - along};
}

namespace {

void require_same_base(const TangentVector& t1, const TangentVector& t2) {
  if (t1.at().space_ptr() != t2.at().space_ptr() && !(t1.at().space() == t2.at().space())) {
    fail(ErrorKind::Input, "tangent vectors live in different spaces");
  }
  if (t1.at().rep() != t2.at().rep()) {
    fail(ErrorKind::Input, "tangent vectors must share the same stored base representative");
  }
}

double metric_magnitude(const TangentVector& t) {
  const HermitianSpace& space = t.at().space();
  return space.form_magnitude(t.at().rep(), t.at().rep()) * space.form_magnitude(t.dir(), t.dir());
}

double positive_square(const TangentVector& t) {
  const double sq = metric(t, t).real();
  const HermitianSpace& space = t.at().space();
  if (space.tolerance().negligible(sq, metric_magnitude(t)) || sq < 0.0) {
    fail(ErrorKind::IndefiniteDirection, "tangent vector is null or has a negative square");
  }
  return sq;
}

}  // namespace

Scalar metric(const TangentVector& t1, const TangentVector& t2) {
  require_same_base(t1, t2);
  const HermitianSpace& space = t1.at().space();
  return static_cast<double>(space.metric_sign()) * t1.at().norm_sq() *
         space.form(t1.dir(), t2.dir());
}

double angle(const TangentVector& t1, const TangentVector& t2) {
  require_same_base(t1, t2);
  const double s1 = positive_square(t1);
  const double s2 = positive_square(t2);
  const double c = metric(t1, t2).real() / (std::sqrt(s1) * std::sqrt(s2));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

double oriented_angle(const TangentVector& t1, const TangentVector& t2) {
  require_same_base(t1, t2);
  const HermitianSpace& space = t1.at().space();
  if (space.field() != Field::Complex) {
    fail(ErrorKind::NotApplicable, "oriented angle needs the complex field");
  }
  positive_square(t1);
  positive_square(t2);
  const Vec& a = t1.dir();
  const Vec& b = t2.dir();
  const Scalar c = a.dot(b) / a.squaredNorm();
  if (!space.tolerance().negligible((b - c * a).norm(), b.norm())) {
    fail(ErrorKind::NotApplicable, "tangent vectors do not span a complex line");
  }
  double arg = std::arg(metric(t2, t1));
  if (arg < 0.0) arg += 2.0 * std::numbers::pi;
  if (arg >= 2.0 * std::numbers::pi) arg = 0.0;
  return arg;
}

Eigen::Vector3d to_plane_point(const ProjectivePoint& p) {
  if (p.space().field() != Field::Real || p.space().dim() != 3) {
    fail(ErrorKind::NotApplicable, "incidence is defined on the real projective plane");
  }
  return p.rep().real();
}

bool proportional(const Eigen::Vector3d& a, const Eigen::Vector3d& b, double tol) {
  return a.cross(b).norm() <= tol * a.norm() * b.norm();
}

PlaneLine join(const Eigen::Vector3d& p, const Eigen::Vector3d& q) {
  if (p.norm() == 0.0 || q.norm() == 0.0) fail(ErrorKind::Input, "zero homogeneous coordinates");
  if (proportional(p, q)) fail(ErrorKind::Coincident, "join of coincident points");
  return {p.cross(q)};
}

Eigen::Vector3d meet(const PlaneLine& l1, const PlaneLine& l2) {
  if (l1.coeffs.norm() == 0.0 || l2.coeffs.norm() == 0.0) {
    fail(ErrorKind::Input, "zero line coefficients");
  }
  if (proportional(l1.coeffs, l2.coeffs)) fail(ErrorKind::Coincident, "meet of coincident lines");
  return l1.coeffs.cross(l2.coeffs);
}

PlaneLine join(const ProjectivePoint& p, const ProjectivePoint& q) {
  return join(to_plane_point(p), to_plane_point(q));
}

bool incident(const Eigen::Vector3d& p, const PlaneLine& l, double tol) {
  return std::abs(p.dot(l.coeffs)) <= tol * p.norm() * l.coeffs.norm();
}

}  // namespace hermgeo
