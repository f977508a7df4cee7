#include "hermgeo/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hermgeo {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input: return "input";
    case ErrorKind::DegenerateFlag: return "degenerate-flag";
    case ErrorKind::SingularPoint: return "singular-point";
    case ErrorKind::Coincident: return "coincident";
    case ErrorKind::NoUniqueGeodesic: return "no-unique-geodesic";
    case ErrorKind::NotAGeodesic: return "not-a-geodesic";
    case ErrorKind::WrongClass: return "wrong-class";
    case ErrorKind::Regime: return "regime";
    case ErrorKind::Membership: return "membership";
    case ErrorKind::IndefiniteDirection: return "indefinite-direction";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::DegenerateTriangle: return "degenerate-triangle";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::EmptySet: return "empty-set";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::RenderDomain: return "render-domain";
  }
  return "unknown";
}

namespace {

double max_abs(const Mat& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

bool is_real(const Mat& a) {
  return a.size() == 0 || a.imag().cwiseAbs().maxCoeff() == 0.0;
}

}  // namespace

HermitianSpace::HermitianSpace(Field field, Mat gram, int metric_sign, Tolerance tol)
    : field_(field), gram_(std::move(gram)), metric_sign_(metric_sign), tol_(tol) {
  if (gram_.rows() < 1 || gram_.rows() != gram_.cols()) {
    fail(ErrorKind::Input, "gram matrix must be square with dim >= 1");
  }
  if (metric_sign_ != 1 && metric_sign_ != -1) {
    fail(ErrorKind::Input, "metric_sign must be +1 or -1");
  }
  if (field_ == Field::Real && !is_real(gram_)) {
    fail(ErrorKind::Input, "real space with non-real gram entries");
  }
  if (gram_ != gram_.adjoint()) {
    fail(ErrorKind::Input, "gram matrix is not hermitian");
  }
  if (!(tol_.rel > 0.0)) {
    fail(ErrorKind::Input, "tolerance must be positive");
  }
  scale_ = max_abs(gram_);
}

HermitianSpace HermitianSpace::diagonal(Field field, const std::vector<double>& entries,
                                        int metric_sign, Tolerance tol) {
  Mat g = Mat::Zero(static_cast<Eigen::Index>(entries.size()),
                    static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = entries[i];
  }
  return HermitianSpace(field, std::move(g), metric_sign, tol);
}

HermitianSpace HermitianSpace::euclidean(int dim) {
  return HermitianSpace(Field::Real, Mat::Identity(dim, dim), 1);
}

HermitianSpace HermitianSpace::with_tolerance(Tolerance tol) const {
  return HermitianSpace(field_, gram_, metric_sign_, tol);
}

void HermitianSpace::check_vector(const Vec& v) const {
  if (v.size() != gram_.rows()) {
    fail(ErrorKind::Input, "vector of length " + std::to_string(v.size()) +
                               " in a space of dim " + std::to_string(gram_.rows()));
  }
  if (field_ == Field::Real && !is_real(v)) {
    fail(ErrorKind::Input, "complex coordinates in a real space");
  }
}

Scalar HermitianSpace::form(const Vec& v, const Vec& w) const {
  check_vector(v);
  check_vector(w);
  return (v.transpose() * gram_ * w.conjugate())(0, 0);
}

Mat HermitianSpace::gram_of(const std::vector<Vec>& vs) const {
  const auto k = static_cast<Eigen::Index>(vs.size());
  Mat g(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i; j < k; ++j) {
      g(i, j) = form(vs[i], vs[j]);
      g(j, i) = std::conj(g(i, j));
    }
    g(i, i) = g(i, i).real();
  }
  return g;
}

Scalar form(const HermitianSpace& space, const Vec& v, const Vec& w) {
  return space.form(v, w);
}

Mat hermitian_part(const Mat& a) { return (a + a.adjoint()) / 2.0; }

int numerical_rank(const Mat& a, const Tolerance& tol) {
  if (a.size() == 0) return 0;
  const double scale = max_abs(a);
  Eigen::VectorXd sv;
  if (is_real(a)) {
    sv = Eigen::JacobiSVD<RealMat>(a.real()).singularValues();
  } else {
    sv = Eigen::JacobiSVD<Mat>(a).singularValues();
  }
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (!tol.near_zero(sv(i), scale)) ++rank;
  }
  return rank;
}

std::vector<Vec> nullspace(const Mat& a, const Tolerance& tol) {
  const Eigen::Index n = a.cols();
  std::vector<Vec> out;
  if (a.rows() == 0) {
    for (Eigen::Index i = 0; i < n; ++i) out.push_back(Vec::Unit(n, i));
    return out;
  }
  const double scale = max_abs(a);
  Mat v;
  Eigen::VectorXd sv;
  if (is_real(a)) {
    Eigen::JacobiSVD<RealMat> svd(a.real(), Eigen::ComputeFullV);
    v = svd.matrixV().cast<Scalar>();
    sv = svd.singularValues();
  } else {
    Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
    v = svd.matrixV();
    sv = svd.singularValues();
  }
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (!tol.near_zero(sv(i), scale)) ++rank;
  }
  for (Eigen::Index j = rank; j < n; ++j) out.push_back(v.col(j));
  return out;
}

Subspace::Subspace(const HermitianSpace& space, std::vector<Vec> basis) : basis_(std::move(basis)) {
  for (const auto& v : basis_) space.check_vector(v);
  if (!basis_.empty() && numerical_rank(matrix(), space.tolerance()) != dim()) {
    fail(ErrorKind::Input, "subspace basis is linearly dependent");
  }
}

Mat Subspace::matrix() const {
  if (basis_.empty()) return Mat();
  Mat m(basis_.front().size(), dim());
  for (int j = 0; j < dim(); ++j) m.col(j) = basis_[static_cast<std::size_t>(j)];
  return m;
}

bool Subspace::contains(const Vec& v, const Tolerance& tol) const {
  if (basis_.empty()) return tol.near_zero(v.norm(), 0.0);
  const Mat b = matrix();
  const Vec coeffs = b.colPivHouseholderQr().solve(v);
  return tol.negligible((b * coeffs - v).norm(), std::max(v.norm(), b.cwiseAbs().maxCoeff()));
}

Subspace orthogonal_complement(const HermitianSpace& space, const Subspace& w) {
  if (w.dim() == 0) {
    std::vector<Vec> all;
    for (int i = 0; i < space.dim(); ++i) all.push_back(Vec::Unit(space.dim(), i));
    return Subspace(space, std::move(all));
  }
  for (const auto& b : w.basis()) space.check_vector(b);
  // <v, b_j> = v^T G conj(b_j), so the complement is the nullspace of B^H G^T.
  const Mat a = w.matrix().adjoint() * space.gram().transpose();
  return Subspace(space, nullspace(a, space.tolerance()));
}

Subspace kernel(const HermitianSpace& space) {
  return Subspace(space, nullspace(space.gram().transpose(), space.tolerance()));
}

namespace {

bool minor_vanishes(const Mat& gram_k, const Tolerance& tol) {
  const double s = max_abs(gram_k);
  const double det = std::abs(gram_k.determinant());
  return det <= tol.rel * std::pow(1.0 + s, static_cast<double>(gram_k.rows()));
}

Vec strip_components(const HermitianSpace& space, const Vec& c, const std::vector<Vec>& basis) {
  Vec r = c;
  for (const auto& b : basis) {
    r -= (space.form(c, b) / space.form(b, b)) * b;
  }
  return r;
}

Vec normalize(const HermitianSpace& space, const Vec& c) {
  return c / std::sqrt(std::abs(space.norm_sq(c)));
}

}  // namespace

std::vector<Vec> gram_schmidt(const HermitianSpace& space, const std::vector<Vec>& flag) {
  for (const auto& c : flag) space.check_vector(c);
  if (flag.empty()) return {};
  Mat cols(space.dim(), static_cast<Eigen::Index>(flag.size()));
  for (std::size_t j = 0; j < flag.size(); ++j) cols.col(static_cast<Eigen::Index>(j)) = flag[j];
  if (numerical_rank(cols, space.tolerance()) != static_cast<int>(flag.size())) {
    fail(ErrorKind::Input, "flag vectors are linearly dependent");
  }
  const Mat g = space.gram_of(flag);
  std::vector<Vec> basis;
  basis.reserve(flag.size());
  for (std::size_t k = 0; k < flag.size(); ++k) {
    const auto n = static_cast<Eigen::Index>(k + 1);
    if (minor_vanishes(g.topLeftCorner(n, n), space.tolerance())) {
      throw DegenerateFlagError(k + 1, "leading span V_" + std::to_string(k + 1) +
                                           " of the flag is degenerate");
    }
    basis.push_back(normalize(space, strip_components(space, flag[k], basis)));
  }
  return basis;
}

OrthonormalFlag gram_schmidt_pivoted(const HermitianSpace& space, const std::vector<Vec>& vectors) {
  for (const auto& c : vectors) space.check_vector(c);
  OrthonormalFlag out;
  std::vector<Vec> pending = vectors;
  const Tolerance& tol = space.tolerance();

  auto usable = [&](const Vec& r) {
    return !tol.negligible(space.norm_sq(r), space.form_magnitude(r, r));
  };

  while (!pending.empty()) {
    std::vector<Vec> residuals;
    std::vector<Vec> kept;
    for (const auto& c : pending) {
      Vec r = strip_components(space, c, out.basis);
      // Vectors already in the span drop out.
      if (tol.negligible(r.norm(), std::max(1.0, c.norm()))) continue;
      residuals.push_back(std::move(r));
      kept.push_back(c);
    }
    pending = kept;
    if (pending.empty()) break;

    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < residuals.size(); ++i) {
      if (usable(residuals[i])) {
        pick = i;
        break;
      }
    }
    if (pick) {
      out.flag.push_back(pending[*pick]);
      out.basis.push_back(normalize(space, residuals[*pick]));
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(*pick));
      continue;
    }

    // Every residual is isotropic: some v_i + v_j or v_i + i v_j is not,
    // unless the form vanishes on what is left.
    bool found = false;
    const Scalar unit_i(0.0, 1.0);
    for (std::size_t i = 0; i < residuals.size() && !found; ++i) {
      for (std::size_t j = i + 1; j < residuals.size() && !found; ++j) {
        for (Scalar k : {Scalar(1.0), unit_i}) {
          if (space.field() == Field::Real && k.imag() != 0.0) continue;
          Vec r = residuals[i] + k * residuals[j];
          if (usable(r)) {
            out.flag.push_back(pending[i] + k * pending[j]);
            out.basis.push_back(normalize(space, r));
            found = true;
            break;
          }
        }
      }
    }
    if (!found) {
      throw DegenerateFlagError(out.basis.size() + 1,
                                "span is degenerate: no nondegenerate flag extends stage " +
                                    std::to_string(out.basis.size()));
    }
  }
  return out;
}

std::optional<Signature> sylvester_signature(const Mat& gram, const Tolerance& tol) {
  const Eigen::Index n = gram.rows();
  const double s = max_abs(gram);
  Signature sig;
  double previous = 1.0;
  for (Eigen::Index k = 1; k <= n; ++k) {
    const double det = gram.topLeftCorner(k, k).determinant().real();
    if (std::abs(det) <= tol.rel * std::pow(1.0 + s, static_cast<double>(k))) {
      return std::nullopt;
    }
    if (det / previous < 0.0) {
      ++sig.minus;
    } else {
      ++sig.plus;
    }
    previous = det;
  }
  return sig;
}

Signature eigen_signature(const Mat& gram, const Tolerance& tol) {
  Signature sig;
  if (gram.rows() == 0) return sig;
  const double s = max_abs(gram);
  Eigen::SelfAdjointEigenSolver<Mat> solver(hermitian_part(gram), Eigen::EigenvaluesOnly);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (tol.near_zero(lambda, s)) {
      ++sig.zero;
    } else if (lambda < 0.0) {
      ++sig.minus;
    } else {
      ++sig.plus;
    }
  }
  return sig;
}

Signature signature_of(const Mat& gram, const Tolerance& tol) {
  if (auto sig = sylvester_signature(gram, tol)) return *sig;
  return eigen_signature(gram, tol);
}

Signature signature(const HermitianSpace& space) {
  return signature_of(space.gram(), space.tolerance());
}

Signature subspace_signature(const HermitianSpace& space, const Subspace& w) {
  if (w.dim() == 0) return {};
  return signature_of(space.gram_of(w.basis()), space.tolerance());
}

bool contains_signature(const Signature& ambient, const Signature& sub) {
  if (ambient.minus < 0 || ambient.zero < 0 || ambient.plus < 0 || sub.minus < 0 ||
      sub.zero < 0 || sub.plus < 0) {
    return false;
  }
  return sub.minus <= ambient.minus && sub.plus <= ambient.plus &&
         sub.minus + sub.zero <= ambient.minus + ambient.zero &&
         sub.zero + sub.plus <= ambient.zero + ambient.plus;
}

}  // namespace hermgeo
