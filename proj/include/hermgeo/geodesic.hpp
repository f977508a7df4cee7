#pragma once

#include <optional>
#include <utility>

#include "hermgeo/projective.hpp"

namespace hermgeo {

/// Projectivization of a real 2-dimensional subspace W = R w1 + R w2 on which
/// the form is real and nonnull.
class Geodesic {
 public:
  Geodesic(SpacePtr space, Vec w1, Vec w2);

  const HermitianSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  const Vec& w1() const { return w1_; }
  const Vec& w2() const { return w2_; }

  /// 2x2 real Gram matrix of (w1, w2) under Re <-, ->.
  Eigen::Matrix2d real_gram() const;

 private:
  SpacePtr space_;
  Vec w1_;
  Vec w2_;
};

enum class GeodesicClass { Spherical, Hyperbolic, Degenerate };

const char* to_string(GeodesicClass c);

Geodesic geodesic_through(const ProjectivePoint& p1, const ProjectivePoint& p2);
Geodesic geodesic_from_tangent(const ProjectivePoint& p, const TangentVector& t);
TangentVector tangent_toward(const ProjectivePoint& p1, const ProjectivePoint& p2);

GeodesicClass classify(const Geodesic& g);

/// Representative of `p` inside W with its real coordinates in (w1, w2), or
/// nothing when the point is not on the geodesic.
struct PlaneCoords {
  Vec rep;
  double a = 0.0;
  double b = 0.0;
};
std::optional<PlaneCoords> locate(const Geodesic& g, const Vec& v);
bool contains(const Geodesic& g, const ProjectivePoint& p);

/// Whether W1 = k W2 for some nonzero scalar k.
bool same_geodesic(const Geodesic& g1, const Geodesic& g2);

std::pair<ProjectivePoint, ProjectivePoint> vertices(const Geodesic& g);

double tance(const ProjectivePoint& p1, const ProjectivePoint& p2);

enum class DistanceKind { Spherical, Hyperbolic };

double distance(const ProjectivePoint& p1, const ProjectivePoint& p2, DistanceKind kind);

/// Arclength parameterization of a spherical or hyperbolic geodesic through a
/// nonisotropic base point: c0(t) = base cos t + dir sin t, or with cosh/sinh.
struct GeodesicFrame {
  Vec base;       // normalized representative of the start point, inside W
  Vec direction;  // unit vector of W orthogonal to base
  bool hyperbolic = false;

  Vec at(double t) const;
  /// d/dt c0(t).
  Vec velocity(double t) const;
};

/// Frame at p1. The direction is oriented so that `toward` (when given and
/// not orthogonal to p1) is reached at a nonnegative parameter; otherwise the
/// first non-negligible coordinate of the direction has positive real part.
GeodesicFrame geodesic_frame(const Geodesic& g, const ProjectivePoint& p1,
                             const std::optional<ProjectivePoint>& toward = std::nullopt);

ProjectivePoint geodesic_lift(const Geodesic& g, const ProjectivePoint& p1, double arc,
                              const std::optional<ProjectivePoint>& toward = std::nullopt);

enum class TriangleTance { Strict, Equality, Violated };

const char* to_string(TriangleTance t);

/// Triangle inequality in tance form for three negative points of a real
/// hyperbolic space: r1^2 + r2^2 + r3^2 <= 2 r1 r2 r3 + 1.
TriangleTance triangle_tance_inequality(const ProjectivePoint& p1, const ProjectivePoint& p2,
                                        const ProjectivePoint& p3);

/// Point-geodesic duality p <-> P(p-perp) of a real projective plane carrying
/// an indefinite nondegenerate form.
Geodesic dual(const ProjectivePoint& p);
ProjectivePoint dual_of_geodesic(const Geodesic& g);

// Disc models: a Poincare disc point z is the point (1, z) of C with
// diag(-1, 1); a Beltrami-Klein point (x, y) is (1, x, y) of R with
// diag(-1, 1, 1).

/// z -> 2z / (1 + |z|^2), from the Poincare disc to the Beltrami-Klein disc.
Scalar poincare_klein_map(Scalar z);
/// Inverse of poincare_klein_map.
Scalar klein_poincare_map(Scalar w);

SpacePtr poincare_space();
SpacePtr klein_space();
ProjectivePoint poincare_point(Scalar z);
ProjectivePoint klein_point(Scalar w);
double poincare_distance(Scalar z1, Scalar z2);
double klein_distance(Scalar w1, Scalar w2);

}  // namespace hermgeo
