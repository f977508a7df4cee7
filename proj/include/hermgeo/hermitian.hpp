#pragma once

#include <optional>
#include <vector>

#include "hermgeo/errors.hpp"
#include "hermgeo/types.hpp"

namespace hermgeo {

/// Counts of negative, null and positive squares in an orthonormal basis.
struct Signature {
  int minus = 0;
  int zero = 0;
  int plus = 0;

  int dim() const { return minus + zero + plus; }
  bool nondegenerate() const { return zero == 0; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// A finite-dimensional K-linear space given by the Gram matrix of its
/// ambient basis. The form is linear in the first argument:
///   <v, w> = v^T G conj(w).
/// `metric_sign` is the sign used for the induced metric on tangent spaces of
/// the projectivization.
class HermitianSpace {
 public:
  HermitianSpace(Field field, Mat gram, int metric_sign = 1, Tolerance tol = {});

  static HermitianSpace diagonal(Field field, const std::vector<double>& entries,
                                 int metric_sign = 1, Tolerance tol = {});
  static HermitianSpace euclidean(int dim);

  Field field() const { return field_; }
  int dim() const { return static_cast<int>(gram_.rows()); }
  const Mat& gram() const { return gram_; }
  int metric_sign() const { return metric_sign_; }
  const Tolerance& tolerance() const { return tol_; }
  /// Largest absolute Gram entry.
  double scale() const { return scale_; }

  HermitianSpace with_tolerance(Tolerance tol) const;

  /// Throws an input error unless `v` has the right length (and is real when
  /// the field is R).
  void check_vector(const Vec& v) const;

  Scalar form(const Vec& v, const Vec& w) const;
  double norm_sq(const Vec& v) const { return form(v, v).real(); }

  /// Gram matrix g_ij = <v_i, v_j>.
  Mat gram_of(const std::vector<Vec>& vs) const;

  /// Natural magnitude of <v, w>, used to decide whether it vanishes.
  double form_magnitude(const Vec& v, const Vec& w) const {
    return scale_ * v.norm() * w.norm();
  }
  bool is_null(Scalar value, const Vec& v, const Vec& w) const {
    return tol_.negligible(std::abs(value), form_magnitude(v, w));
  }

  friend bool operator==(const HermitianSpace& a, const HermitianSpace& b) {
    return a.field_ == b.field_ && a.metric_sign_ == b.metric_sign_ && a.gram_ == b.gram_;
  }

 private:
  Field field_;
  Mat gram_;
  int metric_sign_;
  Tolerance tol_;
  double scale_;
};

/// A subspace stored as an explicit list of linearly independent vectors.
class Subspace {
 public:
  Subspace(const HermitianSpace& space, std::vector<Vec> basis);

  static Subspace zero() { return Subspace(); }

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  /// Basis vectors as columns; n x 0 for the zero subspace is not available,
  /// so callers check dim() first.
  Mat matrix() const;

  /// True when `v` lies in the K-span of the basis.
  bool contains(const Vec& v, const Tolerance& tol = {}) const;

 private:
  Subspace() = default;
  std::vector<Vec> basis_;
};

/// Conjugate-symmetric part (A + A^H) / 2.
Mat hermitian_part(const Mat& a);

/// Numerical rank of a matrix, singular values above rel * (1 + max |entry|).
int numerical_rank(const Mat& a, const Tolerance& tol = {});

/// Basis of {x : a x = 0}.
std::vector<Vec> nullspace(const Mat& a, const Tolerance& tol = {});

Scalar form(const HermitianSpace& space, const Vec& v, const Vec& w);

Subspace orthogonal_complement(const HermitianSpace& space, const Subspace& w);
Subspace kernel(const HermitianSpace& space);

/// Orthonormalizes an explicit flag c_1..c_m. Every leading span must be
/// nondegenerate; otherwise throws DegenerateFlagError naming the first bad k.
std::vector<Vec> gram_schmidt(const HermitianSpace& space, const std::vector<Vec>& flag);

struct OrthonormalFlag {
  std::vector<Vec> flag;   // vectors of the chosen nondegenerate flag
  std::vector<Vec> basis;  // orthonormal basis with span(basis[0..k]) = span(flag[0..k])
};

/// Builds a nondegenerate flag from a spanning list by pivoting (later
/// vectors are swapped in, and pairwise combinations v_i + v_j, v_i + i v_j
/// are tried when every remaining residual is isotropic), then orthonormalizes.
OrthonormalFlag gram_schmidt_pivoted(const HermitianSpace& space, const std::vector<Vec>& vectors);

/// Signature from the signs of successive principal-minor ratios. Empty when
/// some leading principal minor vanishes.
std::optional<Signature> sylvester_signature(const Mat& gram, const Tolerance& tol = {});

/// Signature from eigenvalue signs of the hermitian matrix.
Signature eigen_signature(const Mat& gram, const Tolerance& tol = {});

/// Minor criterion with the eigenvalue count as fallback.
Signature signature_of(const Mat& gram, const Tolerance& tol = {});

Signature signature(const HermitianSpace& space);
Signature subspace_signature(const HermitianSpace& space, const Subspace& w);

/// Whether a space of signature `ambient` has a subspace of signature `sub`.
bool contains_signature(const Signature& ambient, const Signature& sub);

}  // namespace hermgeo
