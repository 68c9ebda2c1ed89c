#pragma once

#include <Eigen/Dense>

#include <utility>
#include <vector>

#include "cvqkd/symplectic.hpp"

namespace cvqkd {

/// Covariance matrix of a zero-mean Gaussian state in shot-noise units,
/// together with the per-mode symmetry tags. Symmetry is enforced on
/// construction; physicality (all symplectic eigenvalues >= 1 - 1e-8) holds
/// for everything produced by the constructors and operations below and is
/// checked on demand via is_physical / symplectic_eigenvalues.
class CovarianceMatrix {
 public:
  CovarianceMatrix(Eigen::MatrixXd matrix, std::vector<ModeTag> mode_tags);

  const Eigen::MatrixXd& matrix() const { return matrix_; }
  int num_modes() const { return num_modes_; }
  const std::vector<ModeTag>& mode_tags() const { return mode_tags_; }

  Eigen::Matrix2d mode_block(int i, int j) const {
    return matrix_.block<2, 2>(2 * i, 2 * j);
  }

  std::vector<double> symplectic_eigenvalues() const {
    return cvqkd::symplectic_eigenvalues(matrix_);
  }
  bool is_physical(double tol = 1e-8) const;

 private:
  Eigen::MatrixXd matrix_;
  std::vector<ModeTag> mode_tags_;
  int num_modes_;
};

/// m x m complex matrix with spectral norm strictly below 1, the parameter
/// of a generalized two-party coherent state.
class LambdaMatrix {
 public:
  explicit LambdaMatrix(Eigen::MatrixXcd matrix);
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  int size() const { return static_cast<int>(matrix_.rows()); }

 private:
  Eigen::MatrixXcd matrix_;
};

CovarianceMatrix vacuum(int num_modes);
CovarianceMatrix vacuum(const std::vector<ModeTag>& mode_tags);

/// Two-mode squeezed vacuum with variance V >= 1:
/// [[V I2, sqrt(V^2-1) sigma_z], [sqrt(V^2-1) sigma_z, V I2]].
CovarianceMatrix tmss(double variance, std::pair<ModeTag, ModeTag> tags);

/// Gaussian update Gamma -> S Gamma S^T; tags unchanged.
CovarianceMatrix apply(const SymplecticTransform& s, const CovarianceMatrix& gamma);

/// State of the unmeasured modes after heterodyning the given modes.
/// For one measured mode this is B - C^T (A + I2)^{-1} C with A the measured
/// block; several modes are conditioned one at a time (equal to the joint
/// Schur complement by the quotient property). Outcome-independent.
CovarianceMatrix heterodyne_condition(const CovarianceMatrix& gamma,
                                      const std::vector<int>& measured_modes);

/// Classical covariance of the heterodyne outcomes, (Gamma + I)/2.
Eigen::MatrixXd outcome_covariance(const CovarianceMatrix& gamma);

/// Pure 2m-mode state det(1 - L L^dag)^{1/2} exp(sum L_ij a_i^dag b_j^dag)|0>.
///
/// Built from the singular value decomposition L = W diag(l_k) V^dag: a
/// product of TMSS pairs with variance (1 + l_k^2)/(1 - l_k^2) on mode pairs
/// (k, m+k), rotated by the conjugate realification of W on the a modes and
/// the realification of V on the b modes. That orientation (and not its
/// conjugate) reproduces the Fock-series second moments for complex L; the
/// m = 1 real case reduces to tmss exactly.
CovarianceMatrix su_mm_coherent_state(const LambdaMatrix& lambda,
                                      const std::vector<ModeTag>& tags_a,
                                      const std::vector<ModeTag>& tags_b);

/// Reorder modes so that new mode i is old mode order[i]; tags follow.
CovarianceMatrix reorder_modes(const CovarianceMatrix& gamma,
                               const std::vector<int>& order);

}  // namespace cvqkd
