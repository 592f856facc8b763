#pragma once

#include <variant>

#include "rotcav/error.hpp"

namespace rotcav {

/// SI constants. All rates in the library are evaluated against one of these
/// tables; `kCodata2018` is the default everywhere.
struct Constants {
  double c;     // speed of light, m/s
  double hbar;  // reduced Planck constant, J s
  double eps0;  // vacuum permittivity, C^2 N^-1 m^-2
};

inline constexpr Constants kCodata2018{
    .c = 2.99792458e8,
    .hbar = 1.054571817e-34,
    .eps0 = 8.8541878128e-12,
};

/// Two-level atom: proper transition angular frequency and the real dipole
/// matrix elements in cylindrical components about the rotation axis.
class AtomSpec {
 public:
  AtomSpec(double omega0, double d_rho, double d_phi, double d_z);

  /// Same magnitude `d` on all three components.
  static AtomSpec isotropic(double omega0, double d) { return {omega0, d, d, d}; }

  double omega0() const { return omega0_; }
  double d_rho() const { return d_rho_; }
  double d_phi() const { return d_phi_; }
  double d_z() const { return d_z_; }

  // Only squares of the dipole elements enter any rate.
  double transverse_sq() const { return d_rho_ * d_rho_ + d_phi_ * d_phi_; }
  double axial_sq() const { return d_z_ * d_z_; }
  double total_sq() const { return transverse_sq() + axial_sq(); }

 private:
  double omega0_;
  double d_rho_;
  double d_phi_;
  double d_z_;
};

/// Uniform circular orbit of radius R at angular velocity Omega. The
/// subluminal condition R*Omega < c is checked by the operations that need it,
/// not here.
class MotionSpec {
 public:
  MotionSpec(double radius, double omega_rot);

  static MotionSpec inertial() { return {0.0, 0.0}; }

  double radius() const { return radius_; }
  double omega_rot() const { return omega_rot_; }
  double speed() const { return radius_ * omega_rot_; }
  bool is_inertial() const { return speed() == 0.0; }

 private:
  double radius_;
  double omega_rot_;
};

/// Single-mode cavity with a Lorentzian density of states.
class CavitySpec {
 public:
  CavitySpec(double omega_c, double q_factor, double volume);

  double omega_c() const { return omega_c_; }
  double q_factor() const { return q_factor_; }
  double volume() const { return volume_; }
  /// Half width at half maximum, omega_c / Q.
  double linewidth() const { return omega_c_ / q_factor_; }

  // Below this Q the high-Q approximations are flagged, not rejected.
  static constexpr double kLowQThreshold = 100.0;

 private:
  double omega_c_;
  double q_factor_;
  double volume_;
};

struct FreeSpace {};

using Environment = std::variant<FreeSpace, CavitySpec>;

inline bool is_cavity(const Environment& env) {
  return std::holds_alternative<CavitySpec>(env);
}

/// Throws SuperluminalOrbit unless R*Omega < c.
void require_subluminal(const MotionSpec& motion, const Constants& k = kCodata2018);

double lorentz_gamma(const MotionSpec& motion, const Constants& k = kCodata2018);

/// Lab-frame transition frequency omega0 * sqrt(1 - (R Omega / c)^2).
double lab_frame_frequency(const AtomSpec& atom, const MotionSpec& motion,
                           const Constants& k = kCodata2018);

/// Normalized Lorentzian mode density rho(omega_k), units of s.
double dos_lorentzian(const CavitySpec& cavity, double omega_k);

/// Environment response density (s m^-3): pi*rho(omega)/V in a cavity and
/// omega^2/(pi c^3) in free space. A channel of amplitude A (m^3 s^-2) at
/// frequency omega contributes A * response(env, omega) to its rate.
double response(const Environment& env, double omega, const Constants& k = kCodata2018);

}  // namespace rotcav
