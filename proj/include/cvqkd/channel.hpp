#pragma once

#include "cvqkd/gaussian.hpp"

namespace cvqkd {

/// Thermal bosonic channel: transmittance tau in [0,1] and excess noise
/// xi >= 0, referred to the channel input. A diagonal variance v becomes
/// tau v + (1 - tau) + tau xi; cross blocks scale by sqrt(tau).
struct ChannelParams {
  double tau;
  double xi;

  ChannelParams(double tau_, double xi_);
  static ChannelParams identity() { return ChannelParams(1.0, 0.0); }
};

CovarianceMatrix apply_channel(const CovarianceMatrix& gamma, int mode,
                               const ChannelParams& ch);

}  // namespace cvqkd
