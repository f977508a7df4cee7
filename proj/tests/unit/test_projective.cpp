#include <gtest/gtest.h>

#include <numbers>

#include "hermgeo/geodesic.hpp"
#include "hermgeo/projective.hpp"
#include "support/random.hpp"

using namespace hermgeo;
using hermgeo::testing::Rng;

namespace {

Vec vec(std::initializer_list<Scalar> xs) {
  Vec v(xs.size());
  int i = 0;
  for (auto x : xs) v(i++) = x;
  return v;
}

SpacePtr diag(Field f, std::vector<double> d, int sign = 1) {
  return make_space(HermitianSpace::diagonal(f, d, sign));
}

}  // namespace

TEST(ProjectivePoint, RejectsZeroRepresentative) {
  EXPECT_THROW(ProjectivePoint(diag(Field::Real, {1, 1}), Vec::Zero(2)), GeometryError);
}

TEST(ProjectivePoint, SamePointUpToScalar) {
  const auto s = diag(Field::Complex, {1, 1});
  const ProjectivePoint p(s, vec({1, Scalar(0, 2)}));
  EXPECT_TRUE(p.same_point(p.rescaled(Scalar(3, -1))));
  EXPECT_FALSE(p.same_point(ProjectivePoint(s, vec({1, 2}))));
}

TEST(ClassifyPoint, Examples) {
  const auto s = diag(Field::Real, {-1, 1});
  EXPECT_EQ(classify_point(ProjectivePoint(s, vec({1, 0}))), PointClass::Negative);
  EXPECT_EQ(classify_point(ProjectivePoint(s, vec({1, 1}))), PointClass::Isotropic);
  EXPECT_EQ(classify_point(ProjectivePoint(diag(Field::Real, {-1, 1, 1}), vec({1, 2, 0}))), PointClass::Positive);
}

TEST(ClassifyPoint, IsotropyIsScaleInvariant) {
  const auto s = diag(Field::Real, {-1, 1});
  for (double k : {1e-8, 1e-3, 1.0, 1e4, 1e9}) {
    EXPECT_EQ(classify_point(ProjectivePoint(s, k * vec({1, 1}))), PointClass::Isotropic) << k;
    EXPECT_EQ(classify_point(ProjectivePoint(s, k * vec({1, 0.5}))), PointClass::Negative) << k;
  }
}

TEST(ProjectAlong, Examples) {
  const auto s = diag(Field::Real, {-1, 1});
  const auto d = project_along(ProjectivePoint(s, vec({1, 0})), vec({3, 4}));
  EXPECT_LT((d.along - vec({3, 0})).norm(), 1e-12);
  EXPECT_LT((d.orthogonal - vec({0, 4})).norm(), 1e-12);

  const auto d2 = project_along(ProjectivePoint(s, vec({1, 0.5})), vec({2, 1}));
  EXPECT_LT((d2.along - vec({2, 1})).norm(), 1e-12);
  EXPECT_LT(d2.orthogonal.norm(), 1e-12);

  const auto e = diag(Field::Real, {1, 1});
  const auto d3 = project_along(ProjectivePoint(e, vec({1, 1})), vec({1, 0}));
  EXPECT_LT((d3.along - vec({0.5, 0.5})).norm(), 1e-12);
  EXPECT_LT((d3.orthogonal - vec({0.5, -0.5})).norm(), 1e-12);

  EXPECT_THROW(project_along(ProjectivePoint(s, vec({1, 1})), vec({1, 0})), GeometryError);
}

TEST(ProjectAlong, RandomDecomposition) {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const Field f = rng.coin() ? Field::Real : Field::Complex;
    const int n = rng.integer(2, 5);
    const auto s = make_space(HermitianSpace(f, rng.hermitian(n, f)));
    const ProjectivePoint p(s, rng.vec(n, f));
    if (classify_point(p) == PointClass::Isotropic) continue;
    const Vec v = rng.vec(n, f);
    const auto d = project_along(p, v);
    EXPECT_LT((d.along + d.orthogonal - v).norm(), 1e-12 * (1 + v.norm()));
    EXPECT_LT(std::abs(s->form(d.orthogonal, p.rep())), 1e-9 * s->form_magnitude(v, p.rep()));
    // Independent of the representative.
    const auto d2 = project_along(p.rescaled(rng.rescaling(f)), v);
    EXPECT_LT((d2.along - d.along).norm(), 1e-9 * (1 + v.norm()));
  }
}

TEST(Metric, Examples) {
  const auto poincare = diag(Field::Complex, {-1, 1}, -1);
  const ProjectivePoint p(poincare, vec({1, 0}));
  const TangentVector t(p, vec({0, 1}));
  EXPECT_NEAR(metric(t, t).real(), 1.0, 1e-15);
  EXPECT_EQ(metric(t, TangentVector(p, vec({0, 0}))), Scalar(0));

  const auto ds = diag(Field::Real, {-1, 1, 1}, -1);
  const ProjectivePoint q(ds, vec({0, 1, 0}));
  EXPECT_NEAR(metric(TangentVector(q, vec({1, 0, 0})), TangentVector(q, vec({1, 0, 0}))).real(), 1.0, 1e-15);
  EXPECT_NEAR(metric(TangentVector(q, vec({0, 0, 1})), TangentVector(q, vec({0, 0, 1}))).real(), -1.0, 1e-15);
}

TEST(Metric, RequiresSameStoredRepresentative) {
  const auto s = diag(Field::Complex, {-1, 1}, -1);
  const ProjectivePoint p(s, vec({1, 0}));
  const TangentVector t1(p, vec({0, 1}));
  const TangentVector t2(p.rescaled(2.0), vec({0, 1}));
  EXPECT_THROW(metric(t1, t2), GeometryError);
}

TEST(TangentVector, RejectsNonOrthogonalDirectionAndIsotropicBase) {
  const auto s = diag(Field::Real, {-1, 1});
  EXPECT_THROW(TangentVector(ProjectivePoint(s, vec({1, 0})), vec({1, 1})), GeometryError);
  EXPECT_THROW(TangentVector(ProjectivePoint(s, vec({1, 1})), vec({1, 1})), GeometryError);
}

TEST(Metric, ConjugateSymmetricAndSesquilinear) {
  Rng rng(12);
  const auto s = diag(Field::Complex, {-1, 1, 1}, -1);
  for (int t = 0; t < 100; ++t) {
    const ProjectivePoint p(s, vec({1, 0.3 * rng.scalar(Field::Complex), 0.3 * rng.scalar(Field::Complex)}));
    if (classify_point(p) != PointClass::Negative) continue;
    auto tangent = [&](const Vec& v) { return TangentVector(p, project_along(p, v).orthogonal); };
    const TangentVector a = tangent(rng.vec(3, Field::Complex)), b = tangent(rng.vec(3, Field::Complex));
    const Scalar k = rng.scalar(Field::Complex);
    EXPECT_LT(std::abs(metric(a, b) - std::conj(metric(b, a))), 1e-10);
    const TangentVector ka(p, k * a.dir());
    EXPECT_LT(std::abs(metric(ka, b) - k * metric(a, b)), 1e-9);
    EXPECT_GT(metric(a, a).real(), 0.0);  // definite on the negative region with sign -1
  }
}

TEST(Angle, Examples) {
  const auto s = diag(Field::Complex, {1, 1, 1});
  const ProjectivePoint p(s, vec({1, 0, 0}));
  const TangentVector a(p, vec({0, 1, 0}));
  const TangentVector b(p, vec({0, 0, 2}));
  EXPECT_NEAR(angle(a, a), 0.0, 1e-7);
  EXPECT_NEAR(angle(a, b), std::numbers::pi / 2, 1e-12);
  EXPECT_THROW(angle(a, TangentVector(p, vec({0, 0, 0}))), GeometryError);
  const auto ds = diag(Field::Real, {-1, 1, 1}, -1);
  const ProjectivePoint q(ds, vec({0, 1, 0}));
  EXPECT_THROW(angle(TangentVector(q, vec({0, 0, 1})), TangentVector(q, vec({0, 0, 1}))), GeometryError);
}

TEST(OrientedAngle, Examples) {
  const auto s = diag(Field::Complex, {1, 1});
  const ProjectivePoint p(s, vec({1, 0}));
  const TangentVector t(p, vec({0, 1}));
  EXPECT_NEAR(oriented_angle(t, t), 0.0, 1e-12);
  EXPECT_NEAR(oriented_angle(t, TangentVector(p, vec({0, Scalar(0, 1)}))), std::numbers::pi / 2, 1e-12);
  EXPECT_NEAR(oriented_angle(t, TangentVector(p, vec({0, -1}))), std::numbers::pi, 1e-12);
  const auto r = diag(Field::Real, {1, 1, 1});
  const ProjectivePoint q(r, vec({1, 0, 0}));
  EXPECT_THROW(oriented_angle(TangentVector(q, vec({0, 1, 0})), TangentVector(q, vec({0, 1, 0}))), GeometryError);
  const auto c3 = diag(Field::Complex, {1, 1, 1});
  const ProjectivePoint u(c3, vec({1, 0, 0}));
  EXPECT_THROW(oriented_angle(TangentVector(u, vec({0, 1, 0})), TangentVector(u, vec({0, 0, 1}))), GeometryError);
}

TEST(RepresentativeInvariance, ClassMetricAngleTance) {
  Rng rng(13);
  for (int t = 0; t < 300; ++t) {
    const Field f = rng.coin() ? Field::Real : Field::Complex;
    const int n = rng.integer(2, 4);
    std::vector<double> d{-1};
    for (int i = 1; i < n; ++i) d.push_back(1);
    const auto s = diag(f, d, -1);
    Vec rep = rng.vec(n, f) * 0.4;
    rep(0) = 1.0;
    const ProjectivePoint p(s, rep);
    if (classify_point(p) != PointClass::Negative) continue;
    const TangentVector a(p, project_along(p, rng.vec(n, f)).orthogonal);
    const TangentVector b(p, project_along(p, rng.vec(n, f)).orthogonal);
    const Scalar k = rng.rescaling(f);
    const TangentVector ak = a.with_rep_scaled(k), bk = b.with_rep_scaled(k);
    EXPECT_EQ(classify_point(ak.at()), classify_point(p));
    EXPECT_LT(std::abs(metric(ak, bk) - metric(a, b)), 1e-9 * (1 + std::abs(metric(a, b))));
    EXPECT_NEAR(angle(ak, bk), angle(a, b), 1e-7);
    Vec other = rng.vec(n, f) * 0.4;
    other(0) = 1.0;
    const ProjectivePoint q(s, other);
    if (classify_point(q) != PointClass::Negative) continue;
    const double ta = tance(p, q);
    EXPECT_NEAR(tance(p.rescaled(k), q.rescaled(rng.rescaling(f))), ta, 1e-9 * ta);
  }
}

TEST(Incidence, Examples) {
  EXPECT_TRUE(proportional(join(Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0)).coeffs, Eigen::Vector3d(0, 0, 1)));
  EXPECT_TRUE(proportional(meet({Eigen::Vector3d(0, 0, 1)}, {Eigen::Vector3d(0, 1, 0)}), Eigen::Vector3d(1, 0, 0)));
  const PlaneLine l = join(Eigen::Vector3d(1, 1, 1), Eigen::Vector3d(1, 2, 3));
  EXPECT_TRUE(proportional(l.coeffs, Eigen::Vector3d(1, -2, 1)));
  EXPECT_TRUE(incident(Eigen::Vector3d(1, 1, 1), l));
  EXPECT_TRUE(incident(Eigen::Vector3d(1, 2, 3), l));
  EXPECT_THROW(join(Eigen::Vector3d(1, 2, 3), Eigen::Vector3d(2, 4, 6)), GeometryError);
  EXPECT_THROW(meet(l, PlaneLine{-3.0 * l.coeffs}), GeometryError);
}

TEST(Incidence, JoinOfProjectivePoints) {
  const auto s = diag(Field::Real, {-1, 1, 1});
  const PlaneLine l = join(ProjectivePoint(s, vec({1, 0, 0})), ProjectivePoint(s, vec({0, 1, 0})));
  EXPECT_TRUE(proportional(l.coeffs, Eigen::Vector3d(0, 0, 1)));
  const auto c = diag(Field::Complex, {1, 1, 1});
  EXPECT_THROW(join(ProjectivePoint(c, vec({1, 0, 0})), ProjectivePoint(c, vec({0, 1, 0}))), GeometryError);
}

TEST(Incidence, MeetOfJoinsRecoversCommonPoint) {
  Rng rng(14);
  for (int t = 0; t < 500; ++t) {
    const Eigen::Vector3d p(rng.normal(), rng.normal(), rng.normal());
    const Eigen::Vector3d q(rng.normal(), rng.normal(), rng.normal());
    const Eigen::Vector3d r(rng.normal(), rng.normal(), rng.normal());
    if (std::abs(p.dot(q.cross(r))) < 1e-3) continue;
    EXPECT_TRUE(proportional(meet(join(p, q), join(p, r)), p, 1e-9));
  }
}

// Ruler-only parallel through p to two parallel lines R1, R2 of the affine
// chart x0 = 1: the constructed line meets R1 on the infinity line x0 = 0.
TEST(Incidence, RulerParallelConstruction) {
  Rng rng(15);
  int done = 0;
  for (int t = 0; t < 300; ++t) {
    const double slope = rng.uniform(-2, 2);
    const double c1 = rng.uniform(-2, 2);
    const double c2 = c1 + (rng.coin() ? 1 : -1) * rng.uniform(0.5, 2);
    // y = slope x + c  <=>  c x0 + slope x1 - x2 = 0
    const PlaneLine r1{Eigen::Vector3d(c1, slope, -1)};
    const PlaneLine r2{Eigen::Vector3d(c2, slope, -1)};
    const Eigen::Vector3d p(1, rng.uniform(-3, 3), rng.uniform(-3, 3));
    if (incident(p, r1, 1e-3) || incident(p, r2, 1e-3)) continue;
    auto through_p = [&]() {
      const Eigen::Vector3d dir(0, std::cos(rng.uniform(0, M_PI)), std::sin(rng.uniform(0, M_PI)));
      return join(p, p + dir);
    };
    const PlaneLine l1 = through_p(), l2 = through_p();
    const Eigen::Vector3d inf1 = meet(r1, r2);
    if (incident(inf1, l1, 1e-2) || incident(inf1, l2, 1e-2) || proportional(l1.coeffs, l2.coeffs, 1e-2)) continue;
    const Eigen::Vector3d q11 = meet(r1, l1), q12 = meet(r1, l2), q21 = meet(r2, l1), q22 = meet(r2, l2);
    const Eigen::Vector3d d = meet(join(q11, q22), join(q12, q21));
    const PlaneLine l = join(p, d);
    const Eigen::Vector3d q1 = meet(r1, l), q2 = meet(r2, l);
    const Eigen::Vector3d q = meet(join(q1, q22), join(q11, q2));
    const PlaneLine answer = join(p, q);
    const Eigen::Vector3d at_infinity = meet(answer, r1);
    EXPECT_LT(std::abs(at_infinity(0)) / at_infinity.norm(), 1e-6);
    EXPECT_TRUE(incident(p, answer, 1e-9));
    ++done;
  }
  EXPECT_GT(done, 100);
}
