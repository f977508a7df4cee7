#pragma once

#include "hermgeo/hermitian.hpp"

namespace hermgeo {

/// Unit vector of Euclidean (n+1)-space, a point of S^n.
class SpherePoint {
 public:
  explicit SpherePoint(RealVec coords);

  /// Normalizes a nonzero vector onto the sphere.
  static SpherePoint normalized(const RealVec& v);

  const RealVec& coords() const { return coords_; }
  int ambient_dim() const { return static_cast<int>(coords_.size()); }

 private:
  RealVec coords_;
};

/// Projection from -p onto the tangent hyperplane p-perp:
///   (q + p) / (1 + <q, p>) - p.
RealVec stereo(const SpherePoint& p, const SpherePoint& q);

/// 2 (v + p) / (1 + <v, v>) - p for v in p-perp.
SpherePoint stereo_inverse(const SpherePoint& p, const RealVec& v);

/// 1 / (1 + <q, p>)^2: the differential of stereo at q multiplies inner
/// products of tangent vectors by this factor.
double conformal_factor(const SpherePoint& p, const SpherePoint& q);

/// Differential of stereo at q applied to a tangent vector v in q-perp.
RealVec stereo_differential(const SpherePoint& p, const SpherePoint& q, const RealVec& v);

enum class SubsphereKind { Sphere, AffineSubspace };

const char* to_string(SubsphereKind k);

/// Image of the subsphere {q in S^n : f q = eps} in p-perp. For a sphere the
/// image is |v - center|^2 = radius^2; for an affine subspace it is
/// normal . v = offset.
struct SubsphereImage {
  SubsphereKind kind = SubsphereKind::Sphere;
  RealVec center;
  double radius = 0.0;
  RealVec normal;
  double offset = 0.0;
};

/// `eps` must be 0 or 1 and `f` nonzero.
SubsphereImage subsphere_image(const SpherePoint& p, const RealVec& f, int eps);

}  // namespace hermgeo
