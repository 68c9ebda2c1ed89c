#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cvqkd/channel.hpp"
#include "cvqkd/gaussian.hpp"

namespace cvqkd {

/// Tunable parameters of the two-way circuit: the two TMSS variances,
/// Bob's beamsplitter transmittance, Alice's recombining squeezer gain,
/// and the reconciliation efficiency.
struct TwoWayParams {
  double va;    // Alice's TMSS variance, >= 1
  double vb;    // Bob's TMSS variance, >= 1
  double t;     // Bob's beamsplitter transmittance, in [0,1]
  double g;     // Alice's final two-mode squeezing gain, >= 1
  double beta;  // reconciliation efficiency, in (0,1]

  TwoWayParams(double va_, double vb_, double t_, double g_, double beta_);
};

/// Floodlight circuit parameters. The paper fixes the topology but gives no
/// numeric values; defaults used by the CLI are illustrative only.
struct FloodlightParams {
  double va;   // Alice's TMSS variance, >= 1
  double ta;   // Alice's attenuator transmittance, in [0,1]
  double vb;   // Bob's TMSS variance, >= 1
  double tb;   // Bob's displacement beamsplitter transmittance, in [0,1]
  double gb;   // Bob's amplifier gain, >= 1

  FloodlightParams(double va_, double ta_, double vb_, double tb_, double gb_);
};

enum class ProtocolKind { TwoWay, OneWay, Floodlight };

/// Pre-measurement covariance matrix of a protocol round, with named and
/// tagged modes. All three circuits occupy both channel passes per round
/// (the one-way specialization sends vacuum forward), so channel_uses = 2.
struct ProtocolState {
  CovarianceMatrix gamma;
  std::vector<std::string> mode_names;
  std::string raw_key_mode;
  ProtocolKind kind;
  int channel_uses;
  std::optional<TwoWayParams> params;       // two-way / one-way
  std::optional<FloodlightParams> fl_params;
  ChannelParams forward_channel;
  ChannelParams backward_channel;

  int raw_key_index() const;
};

/// Assemble Gamma_{A1 A2 B2 B1} for the two-way protocol: Alice and Bob each
/// prepare a TMSS; Alice's signal crosses the forward channel; Bob mixes it
/// with his second mode on a beamsplitter of transmittance T and returns one
/// output through the backward channel; Alice recombines with a two-mode
/// squeezer of gain g. The raw key is X2, the heterodyne outcome of A2.
/// Mode tags are (U, Ubar, Ubar, U).
ProtocolState build_two_way(const TwoWayParams& params,
                            const ChannelParams& forward,
                            const ChannelParams& backward);

/// One-way no-switching specialization: va = 1 (vacuum sent forward), T = 0
/// (Bob reflects his TMSS half into the backward channel), g = 1 (no final
/// squeezer). Equivalent to Bob sending half a TMSS(vb) to Alice, who
/// heterodynes it. This is also the analysis route for the MDI protocol:
/// after Charlie's public Bell measurement and the conditional displacements,
/// Alice and Bob hold a two-mode state of exactly this one-way form, so no
/// separate MDI circuit exists.
ProtocolState build_one_way(double vb, const ChannelParams& ch, double beta);

/// Six-mode floodlight circuit: Alice attenuates her TMSS signal (keeping
/// the tap as A2) and sends it forward; Bob displaces via a beamsplitter
/// against his TMSS half (keeping B2), amplifies the other output with a
/// two-mode squeezer (keeping the idler B3) and returns it; Alice receives
/// A3. Mode order (A1, A2, A3, B1, B2, B3), tags (U, Ubar, Ubar, U, Ubar, U).
/// No key-rate model is attached to this circuit.
ProtocolState build_floodlight(const FloodlightParams& params,
                               const ChannelParams& forward,
                               const ChannelParams& backward);

}  // namespace cvqkd
