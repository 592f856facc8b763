#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "rotcav/closed_forms.hpp"
#include "rotcav/spectral_engine.hpp"
#include "test_support.hpp"

using namespace rotcav;
using rotcav::testing::ParameterGenerator;
using rotcav::testing::rel_diff;
namespace cf = rotcav::closed_forms;

namespace {

const AtomSpec kScenario1Atom = AtomSpec::isotropic(1e7, 1e-29);
const MotionSpec kOrbit(5e-8, 5e9);

const Channel* find(const std::vector<Channel>& chans, ChannelLabel label) {
  for (const auto& c : chans) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

TEST(BuildChannels, InertialAtomHasOnlyEmission) {
  const auto chans = build_channels(kScenario1Atom, MotionSpec(5e-8, 0.0));
  ASSERT_EQ(chans.size(), 3u);
  for (const auto& c : chans) {
    EXPECT_EQ(c.direction, Direction::Emission);
    EXPECT_EQ(c.frequency, 1e7);
  }
}

TEST(BuildChannels, HighRotationActivity) {
  const auto chans = build_channels(kScenario1Atom, kOrbit);
  ASSERT_EQ(chans.size(), 4u);
  EXPECT_EQ(find(chans, ChannelLabel::TransverseMinus), nullptr);
  EXPECT_EQ(find(chans, ChannelLabel::ZResonant)->frequency, 1e7);
  EXPECT_EQ(find(chans, ChannelLabel::TransversePlus)->frequency, 5.01e9);
  EXPECT_EQ(find(chans, ChannelLabel::CounterRotating)->frequency, 4.99e9);
  EXPECT_EQ(find(chans, ChannelLabel::SecondHarmonic)->frequency, 9.99e9);
  EXPECT_EQ(find(chans, ChannelLabel::CounterRotating)->direction, Direction::Excitation);
}

TEST(BuildChannels, CounterRotatingMeetsAxialAtTwiceOmega0) {
  const auto chans = build_channels(AtomSpec::isotropic(2.5e9, 1e-29), kOrbit);
  EXPECT_EQ(find(chans, ChannelLabel::CounterRotating)->frequency, 2.5e9);
  EXPECT_EQ(find(chans, ChannelLabel::ZResonant)->frequency, 2.5e9);
}

TEST(BuildChannels, BoundaryOmegaEqualsOmega0) {
  // Both the lower transverse and the counter-rotating frequencies are zero.
  const auto chans = build_channels(AtomSpec::isotropic(1e9, 1e-29), MotionSpec(1e-3, 1e9));
  EXPECT_EQ(find(chans, ChannelLabel::TransverseMinus), nullptr);
  EXPECT_EQ(find(chans, ChannelLabel::CounterRotating), nullptr);
  EXPECT_NE(find(chans, ChannelLabel::SecondHarmonic), nullptr);
}

TEST(BuildChannels, TypeInvariants) {
  ParameterGenerator gen(21);
  for (int i = 0; i < 3000; ++i) {
    const auto p = gen.next();
    for (const auto& c : build_channels(p.atom(), p.motion())) {
      EXPECT_GT(c.frequency, 0.0);
      EXPECT_GE(c.amplitude, 0.0);
      EXPECT_EQ(c.velocity_order == 2, c.label == ChannelLabel::SecondHarmonic);
    }
  }
}

TEST(TransitionRates, Scenario1CavityExcitation) {
  const auto r = transition_rates(kScenario1Atom, kOrbit, CavitySpec(4.99e9, 1e7, 1e-14));
  EXPECT_LT(rel_diff(r.gamma_up, 35698819.469242435), 1e-13);
  EXPECT_GT(r.contribution(ChannelLabel::CounterRotating), 0.999999 * r.gamma_up);
  EXPECT_LT(rel_diff(r.gamma_down, 0.022311673625621987), 1e-12);
}

TEST(TransitionRates, Scenario1FreeSpaceExcitation) {
  const auto r = transition_rates(kScenario1Atom, kOrbit, FreeSpace{});
  EXPECT_LT(rel_diff(r.gamma_up, 5.2401474791990056e-11), 1e-13);
  EXPECT_LT(rel_diff(r.leading_order(Direction::Excitation), 5.2401474791814967e-11), 1e-13);
}

TEST(TransitionRates, InertialFreeSpaceEmission) {
  ParameterGenerator gen(8);
  const auto& k = kCodata2018;
  for (int i = 0; i < 200; ++i) {
    const auto p = gen.next();
    const auto r = transition_rates(p.atom(), MotionSpec::inertial(), FreeSpace{});
    const double w0 = p.omega0;
    const double expected =
        w0 * w0 * w0 * p.atom().total_sq() / (3.0 * std::numbers::pi * k.eps0 * k.hbar * k.c * k.c * k.c);
    EXPECT_EQ(r.gamma_up, 0.0);
    EXPECT_LT(rel_diff(r.gamma_down, expected), 1e-14);
    EXPECT_FALSE(r.has(Diagnostic::BelowLeadingOrder));
  }
  const auto r = transition_rates(kScenario1Atom, MotionSpec::inertial(), FreeSpace{});
  EXPECT_LT(rel_diff(r.gamma_down, 1.2652114915365721e-18), 1e-14);
}

TEST(TransitionRates, Scenario2BothRatesAtPeak) {
  const auto r = transition_rates(AtomSpec::isotropic(2.5e9, 1e-29), kOrbit,
                                  CavitySpec(2.5e9, 1e7, 1e-14));
  EXPECT_LT(rel_diff(r.gamma_down, 35698819.469242703), 1e-13);
  EXPECT_LT(rel_diff(r.gamma_up, 35698819.469242435), 1e-13);
  EXPECT_TRUE(r.has(Diagnostic::PeakOverlap));
}

TEST(TransitionRates, SumsMatchChannelContributions) {
  ParameterGenerator gen(99);
  for (int i = 0; i < 2000; ++i) {
    const auto p = gen.next();
    const auto r = transition_rates(p.atom(), p.motion(), p.environment());
    double down = 0.0, up = 0.0;
    for (const auto& cr : r.channels) {
      EXPECT_GE(cr.rate, 0.0);
      (cr.channel.direction == Direction::Emission ? down : up) += cr.rate;
    }
    EXPECT_EQ(r.gamma_down, down);
    EXPECT_EQ(r.gamma_up, up);
  }
}

// The engine and the closed-form transcriptions are written independently;
// agreement to 1e-12 across all regimes checks both.
TEST(TransitionRates, CavityAgreesWithClosedForms) {
  ParameterGenerator gen(2024);
  for (int i = 0; i < 3000; ++i) {
    const auto p = gen.next();
    const CavitySpec cav(p.omega_c, p.q, p.volume);
    const auto r = transition_rates(p.atom(), p.motion(), cav);
    EXPECT_LT(rel_diff(r.gamma_down, cf::cavity_emission_rate(p.atom(), p.motion(), cav)), 1e-12);
    const double rot = p.omega_rot;
    if (rot > p.omega0) {
      EXPECT_LT(rel_diff(r.leading_order(Direction::Excitation),
                         cf::cavity_excitation_rate_high(p.atom(), p.motion(), cav)),
                1e-12);
    } else if (rot > 0.5 * p.omega0) {
      EXPECT_LT(rel_diff(r.gamma_up, cf::cavity_excitation_rate_low(p.atom(), p.motion(), cav)),
                1e-12);
    } else {
      EXPECT_EQ(r.gamma_up, 0.0);
    }
  }
}

TEST(TransitionRates, FreeSpaceAgreesWithClosedForms) {
  ParameterGenerator gen(4048);
  for (int i = 0; i < 3000; ++i) {
    const auto p = gen.next();
    const auto r = transition_rates(p.atom(), p.motion(), FreeSpace{});
    const auto c = cf::free_space_rates(p.atom(), p.motion());
    EXPECT_LT(rel_diff(r.gamma_down, c.gamma_down), 1e-12);
    EXPECT_LT(rel_diff(r.leading_order(Direction::Excitation), c.gamma_up), 1e-12);
    EXPECT_EQ(r.has(Diagnostic::BelowLeadingOrder),
              !p.motion().is_inertial() && p.omega_rot <= 0.5 * p.omega0);
  }
}

TEST(TransitionRates, ExcitationContinuousAcrossOmega0) {
  const AtomSpec atom = AtomSpec::isotropic(1e9, 1e-29);
  for (const Environment& env : {Environment{FreeSpace{}}, Environment{CavitySpec(4e8, 1e4, 1e-14)}}) {
    auto up = [&](double rot) { return transition_rates(atom, MotionSpec(1e-2, rot), env).gamma_up; };
    const double at = up(1e9);
    // A jump would leave a residual that does not shrink with the step.
    for (double side : {-1.0, 1.0}) {
      double prev = std::abs(up(1e9 * (1 + side * 1e-5)) - at);
      for (double eps : {1e-7, 1e-9}) {
        const double gap = std::abs(up(1e9 * (1 + side * eps)) - at);
        EXPECT_LT(gap, prev / 50) << "side " << side << " eps " << eps;
        prev = gap;
      }
    }
  }
}

TEST(TransitionRates, ScalingLaws) {
  ParameterGenerator gen(77);
  for (int i = 0; i < 500; ++i) {
    const auto p = gen.next();
    const auto atom = p.atom();
    const auto motion = p.motion();
    // Linear in Q at exact channel resonance.
    for (const auto& ch : build_channels(atom, motion)) {
      if (ch.amplitude == 0.0) continue;
      const auto r1 = transition_rates(atom, motion, CavitySpec(ch.frequency, p.q, p.volume));
      const auto r2 = transition_rates(atom, motion, CavitySpec(ch.frequency, 2 * p.q, p.volume));
      EXPECT_LT(rel_diff(r2.contribution(ch.label), 2 * r1.contribution(ch.label)), 1e-13);
    }
    // Inverse in V everywhere.
    const auto a = transition_rates(atom, motion, CavitySpec(p.omega_c, p.q, p.volume));
    const auto b = transition_rates(atom, motion, CavitySpec(p.omega_c, p.q, 4 * p.volume));
    EXPECT_LT(rel_diff(a.gamma_down, 4 * b.gamma_down), 1e-13);
    EXPECT_LT(rel_diff(a.gamma_up, 4 * b.gamma_up), 1e-13);
    // Quadratic in each dipole component.
    const AtomSpec scaled(p.omega0, 3 * p.d_rho, p.d_phi, p.d_z);
    const AtomSpec unit(p.omega0, 1e-30, 0, 0);
    const auto s = transition_rates(scaled, motion, p.environment());
    const auto base = transition_rates(atom, motion, p.environment());
    const auto rho_only = transition_rates(unit, motion, p.environment());
    const double rho_w = p.d_rho * p.d_rho / 1e-60;
    EXPECT_LT(rel_diff(s.gamma_up - base.gamma_up, 8 * rho_w * rho_only.gamma_up), 1e-9);
  }
}

TEST(TransitionRates, Diagnostics) {
  const AtomSpec atom = AtomSpec::isotropic(1e9, 1e-29);
  EXPECT_TRUE(transition_rates(atom, MotionSpec(0.2 * kCodata2018.c / 2e9, 2e9), FreeSpace{})
                  .has(Diagnostic::NonRelativisticStrained));
  EXPECT_FALSE(transition_rates(atom, MotionSpec(0.05 * kCodata2018.c / 2e9, 2e9), FreeSpace{})
                   .has(Diagnostic::NonRelativisticStrained));
  EXPECT_TRUE(transition_rates(atom, MotionSpec(0, 0), CavitySpec(1e9, 50, 1e-14)).has(Diagnostic::LowQ));
  EXPECT_FALSE(transition_rates(atom, MotionSpec(0, 0), CavitySpec(1e9, 500, 1e-14)).has(Diagnostic::LowQ));

  const auto slow = transition_rates(atom, MotionSpec(1e-3, 0.3e9), FreeSpace{});
  EXPECT_TRUE(slow.has(Diagnostic::BelowLeadingOrder));
  EXPECT_EQ(slow.gamma_up, 0.0);
  EXPECT_TRUE(transition_rates(atom, MotionSpec(1e-3, 0.5e9), FreeSpace{}).has(Diagnostic::BelowLeadingOrder));
  EXPECT_FALSE(transition_rates(atom, MotionSpec(1e-3, 0.51e9), FreeSpace{}).has(Diagnostic::BelowLeadingOrder));

  // Counter-rotating at omega_rot - omega0 = 1e9 meets the axial emission at 1e9.
  EXPECT_TRUE(transition_rates(atom, MotionSpec(1e-3, 2e9), CavitySpec(1e9, 1e7, 1e-14))
                  .has(Diagnostic::PeakOverlap));
  EXPECT_FALSE(transition_rates(atom, MotionSpec(1e-3, 2.1e9), CavitySpec(1e9, 1e7, 1e-14))
                   .has(Diagnostic::PeakOverlap));
  // Inertial emission channels coincide with each other; that is not an overlap.
  EXPECT_FALSE(transition_rates(atom, MotionSpec::inertial(), CavitySpec(1e9, 1e7, 1e-14))
                   .has(Diagnostic::PeakOverlap));
}

TEST(TransitionRates, KinematicDiagnosticsExposed) {
  const auto r = transition_rates(kScenario1Atom, kOrbit, FreeSpace{});
  EXPECT_NEAR(r.lorentz_gamma - 1.0, 3.4770314251693711e-13, 1e-16);
  EXPECT_LT(r.lab_frequency, 1e7);
}

TEST(TransitionRates, SuperluminalRejected) {
  try {
    transition_rates(kScenario1Atom, MotionSpec(1.0, 3e8), FreeSpace{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SuperluminalOrbit);
  }
}

}  // namespace
