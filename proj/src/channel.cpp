#include "cvqkd/channel.hpp"

#include <cmath>

namespace cvqkd {

ChannelParams::ChannelParams(double tau_, double xi_) : tau(tau_), xi(xi_) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw std::invalid_argument("ChannelParams: tau must be in [0,1]");
  }
  if (!(xi >= 0.0)) {
    throw std::invalid_argument("ChannelParams: xi must be >= 0");
  }
}

CovarianceMatrix apply_channel(const CovarianceMatrix& gamma, int mode,
                               const ChannelParams& ch) {
  const int d = gamma.num_modes();
  if (mode < 0 || mode >= d) {
    throw std::invalid_argument("apply_channel: invalid mode index");
  }
  // Gamma -> X Gamma X^T + Y with X = sqrt(tau) I2 on the mode and
  // Y = (1 - tau + tau xi) I2 on the mode, identity/zero elsewhere.
  const double root = std::sqrt(ch.tau);
  Eigen::MatrixXd m = gamma.matrix();
  m.middleRows<2>(2 * mode) *= root;
  m.middleCols<2>(2 * mode) *= root;
  m(2 * mode, 2 * mode) += 1.0 - ch.tau + ch.tau * ch.xi;
  m(2 * mode + 1, 2 * mode + 1) += 1.0 - ch.tau + ch.tau * ch.xi;
  return CovarianceMatrix(std::move(m), gamma.mode_tags());
}

}  // namespace cvqkd
