#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace cvqkd {

/// Quadrature convention: x = a + a^dag, p = -i(a - a^dag), so the vacuum
/// covariance is the identity (shot-noise unit 1). Modes are interleaved,
/// (x1, p1, x2, p2, ...), which makes the symplectic form block-diagonal.

inline constexpr double kSymplecticTol = 1e-10;

/// Tag recording how the collective unitary symmetry acts on a mode:
/// U-tagged modes transform under U, Ubar-tagged modes under its complex
/// conjugate.
enum class ModeTag { U, Ubar };

/// Thrown when a covariance matrix fails the physicality bound
/// (some symplectic eigenvalue below 1 - 1e-8).
struct UnphysicalStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Eigen::Matrix2d sigma_z();

/// Block-diagonal symplectic form, d copies of [[0,1],[-1,0]].
Eigen::MatrixXd symplectic_form(int num_modes);

bool is_symplectic(const Eigen::MatrixXd& m, double tol = kSymplecticTol);

/// A real 2d x 2d matrix S with S Omega S^T = Omega, acting on covariance
/// matrices by congruence. Validated on construction.
class SymplecticTransform {
 public:
  explicit SymplecticTransform(Eigen::MatrixXd matrix);

  const Eigen::MatrixXd& matrix() const { return matrix_; }
  int num_modes() const { return num_modes_; }

  static SymplecticTransform identity(int num_modes);

  /// Composition: (a * b) acts as "b first, then a".
  friend SymplecticTransform operator*(const SymplecticTransform& a,
                                       const SymplecticTransform& b);

 private:
  Eigen::MatrixXd matrix_;
  int num_modes_;
};

/// Beamsplitter of transmittance t on modes (a, b) of a d-mode system:
/// [[sqrt(t) I2, -sqrt(1-t) I2], [sqrt(1-t) I2, sqrt(t) I2]] on the
/// (a, b) quadrature blocks, identity elsewhere.
SymplecticTransform beamsplitter(double transmittance, int mode_a, int mode_b,
                                 int num_modes);

/// Two-mode squeezer with gain g >= 1 on modes (a, b):
/// [[sqrt(g) I2, sqrt(g-1) sigma_z], [sqrt(g-1) sigma_z, sqrt(g) I2]].
/// Applied to two-mode vacuum it prepares a TMSS with variance V = 2g - 1.
SymplecticTransform two_mode_squeezer(double gain, int mode_a, int mode_b,
                                      int num_modes);

/// Quadrature rotation [[cos t, sin t], [-sin t, cos t]] on one mode.
/// This is the fixed realification of the U(1) action e^{i t}; a
/// Ubar-tagged mode uses phase_rotation(-t).
SymplecticTransform phase_rotation(double theta, int mode, int num_modes);

/// Realification of an n x n unitary acting jointly on n modes, as U for
/// tag U and as conj(U) for tag Ubar. The result is symplectic and
/// orthogonal; at n = 1 and tag U it reduces to phase_rotation(arg u).
SymplecticTransform realify_unitary(const Eigen::MatrixXcd& u, ModeTag tag);

/// Symplectic eigenvalues of a covariance matrix: the d moduli of the
/// eigenvalues of i Omega Gamma (each occurs twice as +-i nu), sorted
/// ascending. Values within 1e-8 below 1 are clamped to 1; anything lower
/// throws UnphysicalStateError.
std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& gamma);

}  // namespace cvqkd
