#pragma once

#include <string_view>
#include <vector>

#include "rotcav/phys_core.hpp"

namespace rotcav {

enum class ChannelLabel {
  ZResonant,        // axial dipole, emission at omega0
  TransversePlus,   // transverse dipole, emission at omega0 + Omega
  TransverseMinus,  // transverse dipole, emission at omega0 - Omega (Omega < omega0)
  CounterRotating,  // transverse dipole, excitation at Omega - omega0 (Omega > omega0)
  SecondHarmonic,   // transverse dipole, excitation at 2 Omega - omega0, order (R Omega / c)^2
};

inline constexpr ChannelLabel kAllChannelLabels[] = {
    ChannelLabel::ZResonant, ChannelLabel::TransversePlus, ChannelLabel::TransverseMinus,
    ChannelLabel::CounterRotating, ChannelLabel::SecondHarmonic};

enum class Direction { Emission, Excitation };

std::string_view to_string(ChannelLabel label);
std::string_view to_string(Direction direction);

/// One spectral pathway: a rate contribution amplitude * response(env, frequency).
struct Channel {
  ChannelLabel label;
  Direction direction;
  double frequency;  // rad/s, > 0
  double amplitude;  // m^3 s^-2, >= 0
  int velocity_order;  // 0, or 2 for the (R Omega / c)^2 channel
};

/// Validity flags attached to a rate evaluation. None of them is an error.
enum class Diagnostic {
  NonRelativisticStrained,  // R Omega / c > 0.1
  LowQ,                     // Q < 100
  BelowLeadingOrder,        // 0 < Omega <= omega0/2: true excitation is O((R Omega/c)^4), reported as 0
  PeakOverlap,              // an emission and an excitation channel within 3 linewidths
  ApproximationStrained,    // a closed-form separation assumption is only marginally met
};

std::string_view to_string(Diagnostic diagnostic);

struct ChannelRate {
  Channel channel;
  double rate;  // s^-1
};

struct RateResult {
  double gamma_down = 0.0;  // s^-1
  double gamma_up = 0.0;    // s^-1
  std::vector<ChannelRate> channels;
  std::vector<Diagnostic> diagnostics;
  // Kinematic diagnostics; the channel frequencies use omega0, not these.
  double lorentz_gamma = 1.0;
  double lab_frequency = 0.0;

  bool has(Diagnostic d) const;
  /// Contribution of one channel, 0 when the channel is inactive.
  double contribution(ChannelLabel label) const;
  /// Sum over the lowest velocity order present in `direction`. This is what
  /// the piecewise leading-order formulas describe: for Omega > omega0 the
  /// excitation sum drops the second-harmonic channel.
  double leading_order(Direction direction) const;
};

/// Active spectral channels for an atom on the given orbit. A channel is
/// emitted only when its frequency is strictly positive.
std::vector<Channel> build_channels(const AtomSpec& atom, const MotionSpec& motion,
                                    const Constants& k = kCodata2018);

/// Emission and excitation rates as channel sums weighted by the environment
/// response.
RateResult transition_rates(const AtomSpec& atom, const MotionSpec& motion,
                            const Environment& env, const Constants& k = kCodata2018);

}  // namespace rotcav
