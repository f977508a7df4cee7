#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "hermgeo/geodesic.hpp"

namespace hermgeo {

enum class Regime { Spherical, Hyperbolic };

const char* to_string(Regime r);

/// Side tance roots r_i = sqrt(ta(p_i, p_{i+1})) (indices mod 3) and the unit
/// phase eps of the normalized Gram matrix
///   s * [[1, r1, r3 conj(eps)], [r1, 1, r2], [r3 eps, r2, 1]],
/// where s = +-1 is the common sign of the vertices.
struct TriangleInvariants {
  std::array<double, 3> r{};
  Scalar eps{1.0, 0.0};
  Regime regime = Regime::Spherical;
  int vertex_sign = 1;
  Field field = Field::Complex;
};

/// Normalizes the representatives (unit norms, then phases making <p1,p2> and
/// <p2,p3> equal to s times a nonnegative real) and reads off the invariants.
TriangleInvariants triangle_invariants(const ProjectivePoint& p1, const ProjectivePoint& p2,
                                       const ProjectivePoint& p3);

/// 1 + 2 r1 r2 r3 Re(eps) - r1^2 - r2^2 - r3^2.
double fundamental_identity_residual(const TriangleInvariants& t);

/// Interior angle at vertex `at` (0, 1 or 2) measured between the tangent
/// vectors toward the two other vertices.
double interior_angle(const ProjectivePoint& p1, const ProjectivePoint& p2,
                      const ProjectivePoint& p3, int at);

/// The same angle from the invariants alone:
///   cos a = m (r_opp Re eps - r_a r_b) / (sqrt(m (1 - r_a^2)) sqrt(m (1 - r_b^2)))
/// with m = +1 in the spherical and -1 in the hyperbolic regime.
double interior_angle_closed_form(const TriangleInvariants& t, int at);

/// Side lengths l_i: arccos r_i (spherical) or arccosh r_i (hyperbolic).
std::array<double, 3> side_lengths(const TriangleInvariants& t);

enum class Law { Cos1Spherical, SinesSpherical, Cos1Hyperbolic, Cos2Hyperbolic, SinesHyperbolic };

const char* to_string(Law law);
std::optional<Law> law_from_string(const std::string& name);

/// Largest |lhs - rhs| of the law over the three vertex rotations. For the
/// laws of sines: the largest pairwise difference of the three ratios
/// divided by the largest ratio.
/// `angles[i]` is the interior angle at vertex i.
double law_check(const TriangleInvariants& t, const std::array<double, 3>& angles, Law law);

/// Oriented area arg(eps) / 2 of a triangle on the round sphere of radius 1/2.
double triangle_area_spherical(const TriangleInvariants& t);

struct TriangleReport {
  TriangleInvariants invariants;
  std::array<double, 3> lengths{};
  std::array<double, 3> angles{};
  std::array<double, 3> closed_form_angles{};
  double identity_residual = 0.0;
  /// Whether the vertices span a single projective line; area and law
  /// residuals are only reported then.
  bool on_projective_line = false;
  std::optional<double> area;
  std::map<std::string, std::optional<double>> law_residuals;
};

TriangleReport triangle_report(const ProjectivePoint& p1, const ProjectivePoint& p2,
                               const ProjectivePoint& p3);

}  // namespace hermgeo
