#include "cvqkd/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace cvqkd {

CovarianceMatrix::CovarianceMatrix(Eigen::MatrixXd matrix,
                                   std::vector<ModeTag> mode_tags)
    : matrix_(std::move(matrix)), mode_tags_(std::move(mode_tags)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() % 2 != 0 ||
      matrix_.rows() == 0) {
    throw std::invalid_argument(
        "CovarianceMatrix: matrix must be square with even dimension");
  }
  num_modes_ = static_cast<int>(matrix_.rows()) / 2;
  if (mode_tags_.size() != static_cast<size_t>(num_modes_)) {
    throw std::invalid_argument("CovarianceMatrix: one tag per mode required");
  }
  if ((matrix_ - matrix_.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("CovarianceMatrix: matrix not symmetric");
  }
  matrix_ = 0.5 * (matrix_ + matrix_.transpose().eval());
}

bool CovarianceMatrix::is_physical(double tol) const {
  try {
    auto nus = symplectic_eigenvalues();
    return nus.front() >= 1.0 - tol;
  } catch (const UnphysicalStateError&) {
    return false;
  }
}

LambdaMatrix::LambdaMatrix(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw std::invalid_argument("LambdaMatrix: matrix must be square");
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix_);
  if (!(svd.singularValues()(0) <= 1.0 - 1e-12)) {
    throw std::invalid_argument(
        "LambdaMatrix: spectral norm must be strictly below 1");
  }
}

CovarianceMatrix vacuum(int num_modes) {
  if (num_modes < 1) {
    throw std::invalid_argument("vacuum: need at least one mode");
  }
  return vacuum(std::vector<ModeTag>(static_cast<size_t>(num_modes), ModeTag::U));
}

CovarianceMatrix vacuum(const std::vector<ModeTag>& mode_tags) {
  const int d = static_cast<int>(mode_tags.size());
  return CovarianceMatrix(Eigen::MatrixXd::Identity(2 * d, 2 * d), mode_tags);
}

CovarianceMatrix tmss(double variance, std::pair<ModeTag, ModeTag> tags) {
  if (!(variance >= 1.0)) {
    throw std::invalid_argument("tmss: variance must be >= 1");
  }
  const double z = std::sqrt(variance * variance - 1.0);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(4, 4);
  m.block<2, 2>(0, 0) = variance * Eigen::Matrix2d::Identity();
  m.block<2, 2>(2, 2) = variance * Eigen::Matrix2d::Identity();
  m.block<2, 2>(0, 2) = z * sigma_z();
  m.block<2, 2>(2, 0) = z * sigma_z();
  return CovarianceMatrix(std::move(m), {tags.first, tags.second});
}

CovarianceMatrix apply(const SymplecticTransform& s, const CovarianceMatrix& gamma) {
  if (s.num_modes() != gamma.num_modes()) {
    throw std::invalid_argument("apply: mode count mismatch");
  }
  Eigen::MatrixXd m = s.matrix() * gamma.matrix() * s.matrix().transpose();
  m = 0.5 * (m + m.transpose().eval());
  return CovarianceMatrix(std::move(m), gamma.mode_tags());
}

namespace {

// Condition on heterodyning a single mode: B - C^T (A + I2)^{-1} C.
CovarianceMatrix heterodyne_one(const CovarianceMatrix& gamma, int mode) {
  const int d = gamma.num_modes();
  std::vector<int> keep;
  keep.reserve(static_cast<size_t>(2 * (d - 1)));
  for (int i = 0; i < d; ++i) {
    if (i != mode) {
      keep.push_back(2 * i);
      keep.push_back(2 * i + 1);
    }
  }
  const Eigen::MatrixXd& g = gamma.matrix();
  Eigen::Matrix2d a = g.block<2, 2>(2 * mode, 2 * mode);
  Eigen::MatrixXd c(2, 2 * (d - 1));
  Eigen::MatrixXd b(2 * (d - 1), 2 * (d - 1));
  for (size_t r = 0; r < keep.size(); ++r) {
    c(0, static_cast<int>(r)) = g(2 * mode, keep[r]);
    c(1, static_cast<int>(r)) = g(2 * mode + 1, keep[r]);
    for (size_t q = 0; q < keep.size(); ++q) {
      b(static_cast<int>(r), static_cast<int>(q)) = g(keep[r], keep[q]);
    }
  }
  const Eigen::Matrix2d inv = (a + Eigen::Matrix2d::Identity()).inverse();
  Eigen::MatrixXd out = b - c.transpose() * inv * c;
  out = 0.5 * (out + out.transpose().eval());
  std::vector<ModeTag> tags;
  tags.reserve(static_cast<size_t>(d - 1));
  for (int i = 0; i < d; ++i) {
    if (i != mode) tags.push_back(gamma.mode_tags()[static_cast<size_t>(i)]);
  }
  return CovarianceMatrix(std::move(out), std::move(tags));
}

}  // namespace

CovarianceMatrix heterodyne_condition(const CovarianceMatrix& gamma,
                                      const std::vector<int>& measured_modes) {
  const int d = gamma.num_modes();
  if (measured_modes.empty()) {
    throw std::invalid_argument("heterodyne_condition: no modes to measure");
  }
  std::set<int> modes(measured_modes.begin(), measured_modes.end());
  if (modes.size() != measured_modes.size()) {
    throw std::invalid_argument("heterodyne_condition: duplicate mode index");
  }
  if (*modes.begin() < 0 || *modes.rbegin() >= d) {
    throw std::invalid_argument("heterodyne_condition: mode index out of range");
  }
  if (static_cast<int>(modes.size()) == d) {
    throw std::invalid_argument(
        "heterodyne_condition: measured set must be a proper subset");
  }
  // Descending order keeps the remaining indices stable.
  CovarianceMatrix state = gamma;
  for (auto it = modes.rbegin(); it != modes.rend(); ++it) {
    state = heterodyne_one(state, *it);
  }
  return state;
}

Eigen::MatrixXd outcome_covariance(const CovarianceMatrix& gamma) {
  const int n = static_cast<int>(gamma.matrix().rows());
  return 0.5 * (gamma.matrix() + Eigen::MatrixXd::Identity(n, n));
}

CovarianceMatrix su_mm_coherent_state(const LambdaMatrix& lambda,
                                      const std::vector<ModeTag>& tags_a,
                                      const std::vector<ModeTag>& tags_b) {
  const int m = lambda.size();
  if (tags_a.size() != static_cast<size_t>(m) ||
      tags_b.size() != static_cast<size_t>(m)) {
    throw std::invalid_argument("su_mm_coherent_state: need m tags per party");
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      lambda.matrix(), Eigen::ComputeFullU | Eigen::ComputeFullV);

  Eigen::MatrixXd base = Eigen::MatrixXd::Identity(4 * m, 4 * m);
  for (int k = 0; k < m; ++k) {
    const double l = svd.singularValues()(k);
    const double v = (1.0 + l * l) / (1.0 - l * l);
    const double z = std::sqrt(v * v - 1.0);
    const int i = k, j = m + k;
    base.block<2, 2>(2 * i, 2 * i) = v * Eigen::Matrix2d::Identity();
    base.block<2, 2>(2 * j, 2 * j) = v * Eigen::Matrix2d::Identity();
    base.block<2, 2>(2 * i, 2 * j) = z * sigma_z();
    base.block<2, 2>(2 * j, 2 * i) = z * sigma_z();
  }

  const SymplecticTransform ra = realify_unitary(svd.matrixU(), ModeTag::Ubar);
  const SymplecticTransform rb = realify_unitary(svd.matrixV(), ModeTag::U);
  Eigen::MatrixXd rot = Eigen::MatrixXd::Zero(4 * m, 4 * m);
  rot.topLeftCorner(2 * m, 2 * m) = ra.matrix();
  rot.bottomRightCorner(2 * m, 2 * m) = rb.matrix();

  Eigen::MatrixXd out = rot * base * rot.transpose();
  out = 0.5 * (out + out.transpose().eval());
  std::vector<ModeTag> tags = tags_a;
  tags.insert(tags.end(), tags_b.begin(), tags_b.end());
  return CovarianceMatrix(std::move(out), std::move(tags));
}

CovarianceMatrix reorder_modes(const CovarianceMatrix& gamma,
                               const std::vector<int>& order) {
  const int d = gamma.num_modes();
  if (static_cast<int>(order.size()) != d) {
    throw std::invalid_argument("reorder_modes: permutation size mismatch");
  }
  std::set<int> seen(order.begin(), order.end());
  if (static_cast<int>(seen.size()) != d || *seen.begin() != 0 ||
      *seen.rbegin() != d - 1) {
    throw std::invalid_argument("reorder_modes: not a permutation");
  }
  Eigen::MatrixXd out(2 * d, 2 * d);
  std::vector<ModeTag> tags(static_cast<size_t>(d), ModeTag::U);
  for (int i = 0; i < d; ++i) {
    tags[static_cast<size_t>(i)] = gamma.mode_tags()[static_cast<size_t>(order[i])];
    for (int j = 0; j < d; ++j) {
      out.block<2, 2>(2 * i, 2 * j) =
          gamma.matrix().block<2, 2>(2 * order[i], 2 * order[j]);
    }
  }
  return CovarianceMatrix(std::move(out), std::move(tags));
}

}  // namespace cvqkd
