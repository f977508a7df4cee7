#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace hermgeo {

using Scalar = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RealVec = Eigen::VectorXd;
using RealMat = Eigen::MatrixXd;

enum class Field { Real, Complex };

inline const char* to_string(Field f) { return f == Field::Real ? "R" : "C"; }

// Zero predicates shared by every degeneracy/isotropy test.
//
// `near_zero` is the matrix-level predicate |x| <= rel * (1 + scale) where
// scale is the largest absolute entry of the matrix being inspected.
// `negligible` is the homogeneous variant |x| <= rel * magnitude used for
// quantities that scale with a representative (form values, residuals), so
// that rescaling a representative never flips a decision.
struct Tolerance {
  double rel = 1e-9;

  bool near_zero(double x, double scale) const { return std::abs(x) <= rel * (1.0 + scale); }
  bool negligible(double x, double magnitude) const { return std::abs(x) <= rel * magnitude; }
};

inline Scalar conj(Scalar k) { return std::conj(k); }

}  // namespace hermgeo
