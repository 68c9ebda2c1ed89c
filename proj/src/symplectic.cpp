#include "cvqkd/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cvqkd {

Eigen::Matrix2d sigma_z() {
  Eigen::Matrix2d s;
  s << 1.0, 0.0, 0.0, -1.0;
  return s;
}

Eigen::MatrixXd symplectic_form(int num_modes) {
  if (num_modes < 1) {
    throw std::invalid_argument("symplectic_form: need at least one mode");
  }
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * num_modes, 2 * num_modes);
  for (int k = 0; k < num_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

bool is_symplectic(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) {
    return false;
  }
  const int d = static_cast<int>(m.rows()) / 2;
  const Eigen::MatrixXd omega = symplectic_form(d);
  return (m * omega * m.transpose() - omega).norm() < tol;
}

SymplecticTransform::SymplecticTransform(Eigen::MatrixXd matrix)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() % 2 != 0 ||
      matrix_.rows() == 0) {
    throw std::invalid_argument(
        "SymplecticTransform: matrix must be square with even dimension");
  }
  num_modes_ = static_cast<int>(matrix_.rows()) / 2;
  if (!is_symplectic(matrix_)) {
    throw std::invalid_argument(
        "SymplecticTransform: matrix does not preserve the symplectic form");
  }
}

SymplecticTransform SymplecticTransform::identity(int num_modes) {
  return SymplecticTransform(Eigen::MatrixXd::Identity(2 * num_modes, 2 * num_modes));
}

SymplecticTransform operator*(const SymplecticTransform& a,
                              const SymplecticTransform& b) {
  if (a.num_modes() != b.num_modes()) {
    throw std::invalid_argument("SymplecticTransform: mode count mismatch");
  }
  return SymplecticTransform(a.matrix_ * b.matrix_);
}

namespace {

void check_mode_pair(int mode_a, int mode_b, int num_modes, const char* who) {
  if (num_modes < 2 || mode_a < 0 || mode_b < 0 || mode_a >= num_modes ||
      mode_b >= num_modes || mode_a == mode_b) {
    throw std::invalid_argument(std::string(who) + ": invalid mode indices");
  }
}

Eigen::MatrixXd embed_pair(int num_modes, int mode_a, int mode_b,
                           const Eigen::Matrix2d& aa, const Eigen::Matrix2d& ab,
                           const Eigen::Matrix2d& ba, const Eigen::Matrix2d& bb) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2 * num_modes, 2 * num_modes);
  m.block<2, 2>(2 * mode_a, 2 * mode_a) = aa;
  m.block<2, 2>(2 * mode_a, 2 * mode_b) = ab;
  m.block<2, 2>(2 * mode_b, 2 * mode_a) = ba;
  m.block<2, 2>(2 * mode_b, 2 * mode_b) = bb;
  return m;
}

}  // namespace

SymplecticTransform beamsplitter(double transmittance, int mode_a, int mode_b,
                                 int num_modes) {
  if (!(transmittance >= 0.0 && transmittance <= 1.0)) {
    throw std::invalid_argument("beamsplitter: transmittance must be in [0,1]");
  }
  check_mode_pair(mode_a, mode_b, num_modes, "beamsplitter");
  const double c = std::sqrt(transmittance);
  const double s = std::sqrt(1.0 - transmittance);
  const Eigen::Matrix2d i2 = Eigen::Matrix2d::Identity();
  return SymplecticTransform(
      embed_pair(num_modes, mode_a, mode_b, c * i2, -s * i2, s * i2, c * i2));
}

SymplecticTransform two_mode_squeezer(double gain, int mode_a, int mode_b,
                                      int num_modes) {
  if (!(gain >= 1.0)) {
    throw std::invalid_argument("two_mode_squeezer: gain must be >= 1");
  }
  check_mode_pair(mode_a, mode_b, num_modes, "two_mode_squeezer");
  const double c = std::sqrt(gain);
  const double s = std::sqrt(gain - 1.0);
  const Eigen::Matrix2d i2 = Eigen::Matrix2d::Identity();
  const Eigen::Matrix2d sz = sigma_z();
  return SymplecticTransform(
      embed_pair(num_modes, mode_a, mode_b, c * i2, s * sz, s * sz, c * i2));
}

SymplecticTransform phase_rotation(double theta, int mode, int num_modes) {
  if (mode < 0 || mode >= num_modes) {
    throw std::invalid_argument("phase_rotation: invalid mode index");
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2 * num_modes, 2 * num_modes);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  m(2 * mode, 2 * mode) = c;
  m(2 * mode, 2 * mode + 1) = s;
  m(2 * mode + 1, 2 * mode) = -s;
  m(2 * mode + 1, 2 * mode + 1) = c;
  return SymplecticTransform(m);
}

SymplecticTransform realify_unitary(const Eigen::MatrixXcd& u, ModeTag tag) {
  const int n = static_cast<int>(u.rows());
  if (n == 0 || u.cols() != n) {
    throw std::invalid_argument("realify_unitary: matrix must be square");
  }
  if ((u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).norm() > 1e-10) {
    throw std::invalid_argument("realify_unitary: input is not unitary");
  }
  Eigen::MatrixXd r(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::complex<double> e =
          tag == ModeTag::U ? u(i, j) : std::conj(u(i, j));
      r(2 * i, 2 * j) = e.real();
      r(2 * i, 2 * j + 1) = e.imag();
      r(2 * i + 1, 2 * j) = -e.imag();
      r(2 * i + 1, 2 * j + 1) = e.real();
    }
  }
  return SymplecticTransform(std::move(r));
}

std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& gamma) {
  if (gamma.rows() != gamma.cols() || gamma.rows() % 2 != 0 ||
      gamma.rows() == 0) {
    throw std::invalid_argument(
        "symplectic_eigenvalues: matrix must be square with even dimension");
  }
  if ((gamma - gamma.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("symplectic_eigenvalues: matrix not symmetric");
  }
  const int d = static_cast<int>(gamma.rows()) / 2;
  const Eigen::MatrixXd m = symplectic_form(d) * gamma;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  std::vector<double> moduli(2 * d);
  for (int k = 0; k < 2 * d; ++k) {
    moduli[static_cast<size_t>(k)] = std::abs(solver.eigenvalues()(k));
  }
  std::sort(moduli.begin(), moduli.end());
  // Eigenvalues come in +-i nu pairs; average each pair.
  std::vector<double> nus(d);
  for (int k = 0; k < d; ++k) {
    double nu = 0.5 * (moduli[static_cast<size_t>(2 * k)] +
                       moduli[static_cast<size_t>(2 * k + 1)]);
    if (nu < 1.0 - 1e-8) {
      throw UnphysicalStateError(
          "symplectic_eigenvalues: eigenvalue " + std::to_string(nu) +
          " below 1; state is unphysical");
    }
    nus[static_cast<size_t>(k)] = std::max(nu, 1.0);
  }
  return nus;
}

}  // namespace cvqkd
