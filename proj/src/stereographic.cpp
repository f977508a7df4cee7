#include "hermgeo/stereographic.hpp"

#include <cmath>

namespace hermgeo {

namespace {

constexpr double kUnitTol = 1e-12;
constexpr double kPoleTol = 1e-12;

double dot(const RealVec& a, const RealVec& b) {
  const HermitianSpace e = HermitianSpace::euclidean(static_cast<int>(a.size()));
  return e.form(a.cast<Scalar>(), b.cast<Scalar>()).real();
}

void same_dim(const SpherePoint& p, const RealVec& v) {
  if (v.size() != p.coords().size()) fail(ErrorKind::Input, "vector has the wrong dimension");
}

double pole_denominator(const SpherePoint& p, const SpherePoint& q) {
  same_dim(p, q.coords());
  const double d = 1.0 + dot(q.coords(), p.coords());
  if (d <= kPoleTol) fail(ErrorKind::Pole, "stereographic projection of the antipode -p");
  return d;
}

}  // namespace

SpherePoint::SpherePoint(RealVec coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) fail(ErrorKind::Input, "sphere points need at least 2 coordinates");
  if (!coords_.allFinite()) fail(ErrorKind::Input, "non-finite sphere coordinates");
  if (std::abs(dot(coords_, coords_) - 1.0) > kUnitTol) {
    fail(ErrorKind::Input, "sphere point is not a unit vector");
  }
}

SpherePoint SpherePoint::normalized(const RealVec& v) {
  const double n = v.norm();
  if (!(n > 0.0)) fail(ErrorKind::Input, "cannot normalize the zero vector");
  return SpherePoint(v / n);
}

RealVec stereo(const SpherePoint& p, const SpherePoint& q) {
  const double d = pole_denominator(p, q);
  return (q.coords() + p.coords()) / d - p.coords();
}

SpherePoint stereo_inverse(const SpherePoint& p, const RealVec& v) {
  same_dim(p, v);
  if (std::abs(dot(v, p.coords())) > 1e-9 * (1.0 + v.norm())) {
    fail(ErrorKind::Input, "vector is not in the tangent hyperplane p-perp");
  }
  RealVec q = 2.0 * (v + p.coords()) / (1.0 + dot(v, v)) - p.coords();
  // Rounding can leave |q| a few ulps away from 1.
  return SpherePoint(q / q.norm());
}

double conformal_factor(const SpherePoint& p, const SpherePoint& q) {
  const double d = pole_denominator(p, q);
  return 1.0 / (d * d);
}

RealVec stereo_differential(const SpherePoint& p, const SpherePoint& q, const RealVec& v) {
  const double d = pole_denominator(p, q);
  same_dim(p, v);
  return (d * v - dot(v, p.coords()) * (q.coords() + p.coords())) / (d * d);
}

const char* to_string(SubsphereKind k) {
  return k == SubsphereKind::Sphere ? "sphere" : "affine-subspace";
}

SubsphereImage subsphere_image(const SpherePoint& p, const RealVec& f, int eps) {
  same_dim(p, f);
  if (eps != 0 && eps != 1) fail(ErrorKind::Input, "eps must be 0 or 1");
  const double fn = f.norm();
  if (!(fn > 0.0)) fail(ErrorKind::Input, "subsphere covector is zero");
  // {q : |q| = 1, f q = eps} is empty exactly when |eps| > |f|.
  if (eps == 1 && fn < 1.0 - 1e-12) fail(ErrorKind::EmptySet, "subsphere is empty (|f| < 1)");

  const RealVec& pc = p.coords();
  const double fp = dot(f, pc);
  const RealVec f_perp = f - fp * pc;
  // Quadratic coefficient eps - f(-p) of the image equation.
  const double a = eps + fp;

  SubsphereImage out;
  if (std::abs(a) <= 1e-12 * (1.0 + fn)) {
    if (f_perp.norm() <= 1e-12 * (1.0 + fn)) {
      fail(ErrorKind::EmptySet, "subsphere is the single point -p");
    }
    out.kind = SubsphereKind::AffineSubspace;
    // a = 0 leaves -2 f_perp v + eps + f(-p) = 0, that is f_perp v = eps.
    out.normal = f_perp;
    out.offset = static_cast<double>(eps);
    return out;
  }
  out.kind = SubsphereKind::Sphere;
  out.center = f_perp / a;
  const double r2 = dot(out.center, out.center) - (eps - fp) / a;
  out.radius = std::sqrt(std::max(r2, 0.0));
  return out;
}

}  // namespace hermgeo
