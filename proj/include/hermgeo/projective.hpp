#pragma once

#include <memory>
#include <utility>

#include "hermgeo/hermitian.hpp"

namespace hermgeo {

using SpacePtr = std::shared_ptr<const HermitianSpace>;

inline SpacePtr make_space(HermitianSpace space) {
  return std::make_shared<const HermitianSpace>(std::move(space));
}

/// A point of the projectivization, held through one nonzero representative.
/// Representatives are kept exactly as given.
class ProjectivePoint {
 public:
  ProjectivePoint(SpacePtr space, Vec rep);

  const HermitianSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  const Vec& rep() const { return rep_; }

  /// <p, p> for the stored representative.
  double norm_sq() const { return space_->norm_sq(rep_); }

  /// Same point with representative k * rep.
  ProjectivePoint rescaled(Scalar k) const;

  /// True when the representatives are K-proportional.
  bool same_point(const ProjectivePoint& other) const;

 private:
  SpacePtr space_;
  Vec rep_;
};

enum class PointClass { Negative, Positive, Isotropic };

const char* to_string(PointClass c);

/// The tangent vector t_{p,v} = <-, p> v at a nonisotropic point, stored as
/// the matched pair (representative of p, v) with v orthogonal to p.
class TangentVector {
 public:
  TangentVector(ProjectivePoint at, Vec dir);

  const ProjectivePoint& at() const { return at_; }
  const Vec& dir() const { return dir_; }

  /// The same tangent vector expressed through the representative conj(k) p:
  /// the direction becomes v / k.
  TangentVector with_rep_scaled(Scalar k) const;

 private:
  ProjectivePoint at_;
  Vec dir_;
};

PointClass classify_point(const ProjectivePoint& p);

struct Decomposition {
  Vec along;       // component in K p
  Vec orthogonal;  // component in p-perp
};

/// Orthogonal split v = pi'[p] v + pi[p] v for a nonisotropic p.
Decomposition project_along(const ProjectivePoint& p, const Vec& v);

/// Hermitian metric: metric_sign * <p, p> * <v1, v2>.
Scalar metric(const TangentVector& t1, const TangentVector& t2);

/// Nonoriented angle in [0, pi] between tangent vectors with positive squares.
double angle(const TangentVector& t1, const TangentVector& t2);

/// Oriented angle Arg <t2, t1> in [0, 2 pi) for C-proportional tangent vectors
/// over the complex field.
double oriented_angle(const TangentVector& t1, const TangentVector& t2);

// Incidence in the real projective plane. Lines are dual coefficient vectors.

struct PlaneLine {
  Eigen::Vector3d coeffs;
};

Eigen::Vector3d to_plane_point(const ProjectivePoint& p);

PlaneLine join(const Eigen::Vector3d& p, const Eigen::Vector3d& q);
Eigen::Vector3d meet(const PlaneLine& l1, const PlaneLine& l2);
PlaneLine join(const ProjectivePoint& p, const ProjectivePoint& q);

bool incident(const Eigen::Vector3d& p, const PlaneLine& l, double tol = 1e-9);
bool proportional(const Eigen::Vector3d& a, const Eigen::Vector3d& b, double tol = 1e-9);

}  // namespace hermgeo
