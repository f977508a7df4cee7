#include "hermgeo/configuration.hpp"

#include <algorithm>

namespace hermgeo {

Configuration::Configuration(SpacePtr space, std::vector<Vec> points)
    : space_(std::move(space)), points_(std::move(points)) {
  if (!space_) fail(ErrorKind::Input, "configuration without a space");
  for (const auto& w : points_) {
    space_->check_vector(w);
    if (!(w.norm() > 0.0)) fail(ErrorKind::Input, "configuration contains a zero vector");
  }
}

Configuration Configuration::transformed(const Mat& g) const {
  if (g.rows() != space_->dim() || g.cols() != space_->dim()) {
    fail(ErrorKind::Input, "linear map has the wrong size");
  }
  std::vector<Vec> image;
  image.reserve(points_.size());
  for (const auto& w : points_) image.push_back(g * w);
  return Configuration(space_, std::move(image));
}

Mat config_gram(const Configuration& c) { return c.space().gram_of(c.points()); }

std::vector<std::size_t> independent_subset(const std::vector<Vec>& vectors, const Tolerance& tol) {
  std::vector<std::size_t> picked;
  if (vectors.empty()) return picked;
  Mat cols(vectors.front().size(), 0);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    Mat trial(cols.rows(), cols.cols() + 1);
    trial << cols, vectors[i] / vectors[i].norm();
    if (numerical_rank(trial, tol) == trial.cols()) {
      cols = std::move(trial);
      picked.push_back(i);
    }
  }
  return picked;
}

namespace {

std::vector<Vec> pick(const std::vector<Vec>& vs, const std::vector<std::size_t>& idx) {
  std::vector<Vec> out;
  for (auto i : idx) out.push_back(vs[i]);
  return out;
}

double max_abs(const Mat& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

void require_comparable(const Configuration& c1, const Configuration& c2) {
  if (!(c1.space() == c2.space())) fail(ErrorKind::Input, "configurations live in different spaces");
  if (c1.size() != c2.size()) fail(ErrorKind::Input, "configurations have different lengths");
}

// Orthonormal basis of a nondegenerate subspace, negative vectors first.
std::vector<Vec> sorted_orthonormal(const HermitianSpace& space, const std::vector<Vec>& spanning) {
  if (spanning.empty()) return {};
  std::vector<Vec> basis = gram_schmidt_pivoted(space, spanning).basis;
  std::stable_partition(basis.begin(), basis.end(),
                        [&](const Vec& e) { return space.norm_sq(e) < 0.0; });
  return basis;
}

// Complement of the kernel inside W-perp, as an orthonormal basis.
std::vector<Vec> complement_frame(const HermitianSpace& space, const std::vector<Vec>& w,
                                  const std::vector<Vec>& kernel_basis) {
  const Subspace perp = orthogonal_complement(space, Subspace(space, w));
  std::vector<Vec> all = kernel_basis;
  all.insert(all.end(), perp.basis().begin(), perp.basis().end());
  const auto idx = independent_subset(all, space.tolerance());
  std::vector<Vec> rest;
  for (auto i : idx) {
    if (i >= kernel_basis.size()) rest.push_back(all[i]);
  }
  return sorted_orthonormal(space, rest);
}

}  // namespace

bool nondegenerate_span(const Configuration& c) {
  const auto idx = independent_subset(c.points(), c.space().tolerance());
  if (idx.empty()) return true;
  const Subspace w(c.space(), pick(c.points(), idx));
  return subspace_signature(c.space(), w).nondegenerate();
}

bool geometrically_equal(const Configuration& c1, const Configuration& c2) {
  require_comparable(c1, c2);
  if (!nondegenerate_span(c1) || !nondegenerate_span(c2)) {
    fail(ErrorKind::Unsupported, "configuration spans a degenerate subspace");
  }
  const Mat g1 = config_gram(c1);
  const Mat g2 = config_gram(c2);
  const double scale = std::max(max_abs(g1), max_abs(g2));
  return max_abs(g1 - g2) <= 1e-8 * scale;
}

Mat witness_unitary(const Configuration& c1, const Configuration& c2) {
  if (!geometrically_equal(c1, c2)) {
    fail(ErrorKind::Precondition, "configurations have different Gram matrices");
  }
  const HermitianSpace& space = c1.space();
  const auto idx = independent_subset(c1.points(), space.tolerance());
  const std::vector<Vec> w1 = pick(c1.points(), idx);
  const std::vector<Vec> w2 = pick(c2.points(), idx);

  const std::vector<Vec> ker = kernel(space).basis();
  const std::vector<Vec> n1 = complement_frame(space, w1, ker);
  const std::vector<Vec> n2 = complement_frame(space, w2, ker);
  if (n1.size() != n2.size()) {
    fail(ErrorKind::Precondition, "orthogonal complements have different dimensions");
  }
  for (std::size_t i = 0; i < n1.size(); ++i) {
    if ((space.norm_sq(n1[i]) < 0.0) != (space.norm_sq(n2[i]) < 0.0)) {
      fail(ErrorKind::Precondition, "orthogonal complements have different signatures");
    }
  }

  const Eigen::Index n = space.dim();
  Mat b1(n, n), b2(n, n);
  Eigen::Index col = 0;
  auto put = [&](const Vec& a, const Vec& b) {
    if (col >= n) fail(ErrorKind::Precondition, "bases overflow the ambient dimension");
    b1.col(col) = a;
    b2.col(col) = b;
    ++col;
  };
  for (std::size_t i = 0; i < w1.size(); ++i) put(w1[i], w2[i]);
  for (std::size_t i = 0; i < n1.size(); ++i) put(n1[i], n2[i]);
  for (const auto& k : ker) put(k, k);
  if (col != n) fail(ErrorKind::Precondition, "bases do not span the ambient space");

  Mat g = b2 * b1.fullPivLu().inverse();
  if (space.field() == Field::Real) g = g.real().cast<Scalar>();
  return g;
}

double form_preservation_residual(const HermitianSpace& space, const Mat& g) {
  const Mat& G = space.gram();
  return max_abs(g.transpose() * G * g.conjugate() - G);
}

}  // namespace hermgeo
