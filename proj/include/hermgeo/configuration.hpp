#pragma once

#include <vector>

#include "hermgeo/projective.hpp"

namespace hermgeo {

/// Ordered tuple of nonzero vectors w_1..w_k of a hermitian space.
class Configuration {
 public:
  Configuration(SpacePtr space, std::vector<Vec> points);

  const HermitianSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  const std::vector<Vec>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  /// Image of every point under the linear map g.
  Configuration transformed(const Mat& g) const;

 private:
  SpacePtr space_;
  std::vector<Vec> points_;
};

Mat config_gram(const Configuration& c);

/// Indices of a maximal linearly independent subset, chosen greedily.
std::vector<std::size_t> independent_subset(const std::vector<Vec>& vectors, const Tolerance& tol = {});

/// Whether the span of the configuration is a nondegenerate subspace.
bool nondegenerate_span(const Configuration& c);

/// Gram-matrix equality within 1e-8 of the largest entry. Both spans must be
/// nondegenerate (Unsupported otherwise).
bool geometrically_equal(const Configuration& c1, const Configuration& c2);

/// A form-preserving g with g w_i = w'_i, as a matrix acting on column
/// vectors. Form preservation reads g^T G conj(g) = G in the convention
/// <v, w> = v^T G conj(w).
Mat witness_unitary(const Configuration& c1, const Configuration& c2);

/// Largest entry of |g^T G conj(g) - G|.
double form_preservation_residual(const HermitianSpace& space, const Mat& g);

}  // namespace hermgeo
