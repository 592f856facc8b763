#include "rotcav/spectral_engine.hpp"

#include <algorithm>
#include <cmath>

namespace rotcav {

std::string_view to_string(ChannelLabel label) {
  switch (label) {
    case ChannelLabel::ZResonant: return "z_resonant";
    case ChannelLabel::TransversePlus: return "transverse_plus";
    case ChannelLabel::TransverseMinus: return "transverse_minus";
    case ChannelLabel::CounterRotating: return "counter_rotating";
    case ChannelLabel::SecondHarmonic: return "second_harmonic";
  }
  return "unknown";
}

std::string_view to_string(Direction direction) {
  return direction == Direction::Emission ? "emission" : "excitation";
}

std::string_view to_string(Diagnostic diagnostic) {
  switch (diagnostic) {
    case Diagnostic::NonRelativisticStrained: return "NonRelativisticStrained";
    case Diagnostic::LowQ: return "LowQ";
    case Diagnostic::BelowLeadingOrder: return "BelowLeadingOrder";
    case Diagnostic::PeakOverlap: return "PeakOverlap";
    case Diagnostic::ApproximationStrained: return "ApproximationStrained";
  }
  return "unknown";
}

bool RateResult::has(Diagnostic d) const {
  return std::find(diagnostics.begin(), diagnostics.end(), d) != diagnostics.end();
}

double RateResult::contribution(ChannelLabel label) const {
  for (const auto& cr : channels) {
    if (cr.channel.label == label) return cr.rate;
  }
  return 0.0;
}

double RateResult::leading_order(Direction direction) const {
  int lowest = -1;
  for (const auto& cr : channels) {
    if (cr.channel.direction != direction) continue;
    if (lowest < 0 || cr.channel.velocity_order < lowest) lowest = cr.channel.velocity_order;
  }
  double sum = 0.0;
  for (const auto& cr : channels) {
    if (cr.channel.direction == direction && cr.channel.velocity_order == lowest) sum += cr.rate;
  }
  return sum;
}

std::vector<Channel> build_channels(const AtomSpec& atom, const MotionSpec& motion,
                                    const Constants& k) {
  require_subluminal(motion, k);

  const double w0 = atom.omega0();
  const double rot = motion.omega_rot();
  const double perp = atom.transverse_sq();
  const double eh = k.eps0 * k.hbar;

  std::vector<Channel> out;
  out.reserve(4);
  auto add = [&](ChannelLabel label, Direction dir, double freq, double amplitude, int order) {
    if (freq > 0.0) out.push_back({label, dir, freq, amplitude, order});
  };

  add(ChannelLabel::ZResonant, Direction::Emission, w0, w0 * atom.axial_sq() / (3.0 * eh), 0);
  add(ChannelLabel::TransversePlus, Direction::Emission, w0 + rot, (w0 + rot) * perp / (6.0 * eh),
      0);
  if (rot < w0) {
    add(ChannelLabel::TransverseMinus, Direction::Emission, w0 - rot,
        (w0 - rot) * perp / (6.0 * eh), 0);
  }
  if (rot > w0) {
    add(ChannelLabel::CounterRotating, Direction::Excitation, rot - w0,
        (rot - w0) * perp / (6.0 * eh), 0);
  }
  if (2.0 * rot > w0) {
    const double sh = 2.0 * rot - w0;
    const double r = motion.radius();
    add(ChannelLabel::SecondHarmonic, Direction::Excitation, sh,
        r * r * sh * sh * sh * perp / (40.0 * k.c * k.c * eh), 2);
  }
  return out;
}

namespace {

constexpr double kRelativisticStrain = 0.1;
constexpr double kOverlapLinewidths = 3.0;

bool has_peak_overlap(const std::vector<Channel>& channels, const CavitySpec& cavity) {
  const double window = kOverlapLinewidths * cavity.linewidth();
  for (const auto& a : channels) {
    if (a.direction != Direction::Emission) continue;
    for (const auto& b : channels) {
      if (b.direction != Direction::Excitation) continue;
      if (std::abs(a.frequency - b.frequency) <= window) return true;
    }
  }
  return false;
}

}  // namespace

RateResult transition_rates(const AtomSpec& atom, const MotionSpec& motion,
                            const Environment& env, const Constants& k) {
  RateResult result;
  result.lorentz_gamma = lorentz_gamma(motion, k);
  result.lab_frequency = lab_frame_frequency(atom, motion, k);

  const auto channels = build_channels(atom, motion, k);
  result.channels.reserve(channels.size());
  for (const auto& ch : channels) {
    const double rate = ch.amplitude * response(env, ch.frequency, k);
    result.channels.push_back({ch, rate});
    (ch.direction == Direction::Emission ? result.gamma_down : result.gamma_up) += rate;
  }

  if (motion.speed() / k.c > kRelativisticStrain) {
    result.diagnostics.push_back(Diagnostic::NonRelativisticStrained);
  }
  if (const auto* cavity = std::get_if<CavitySpec>(&env)) {
    if (cavity->q_factor() < CavitySpec::kLowQThreshold) {
      result.diagnostics.push_back(Diagnostic::LowQ);
    }
    if (has_peak_overlap(channels, *cavity)) result.diagnostics.push_back(Diagnostic::PeakOverlap);
  }
  if (!motion.is_inertial() && motion.omega_rot() <= 0.5 * atom.omega0()) {
    result.diagnostics.push_back(Diagnostic::BelowLeadingOrder);
  }
  return result;
}

}  // namespace rotcav
