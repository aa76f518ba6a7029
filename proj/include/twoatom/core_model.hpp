#pragma once

#include <optional>

namespace twoatom {

inline constexpr double kFineStructure = 7.2973525693e-3;

/// Dimensionless model constants.
///
/// Everything downstream is written in terms of x = r/(ct), z = Omega r/c,
/// the dipole strength D = Omega|d|/(e c) and alpha. No SI quantity appears.
struct ModelParams {
  double dipole_strength = 5e-3;
  double alpha = kFineStructure;
  /// UV cutoff omega_max / Omega for every mode integral.
  double nu_max = 50.0;
  /// z_max = factor * z in the self-energy amplitude; unset means nu_max.
  std::optional<double> z_max_factor;
  /// Multiplies the common prefactor of all mode bilinears. Concurrences are
  /// ratios and must not depend on it.
  double bilinear_scale = 1.0;

  double z_max_ratio() const { return z_max_factor.value_or(nu_max); }

  /// Throws ValidationError unless D > 0, alpha > 0, nu_max > 1 and the
  /// remaining knobs are finite and positive.
  void validate() const;
};

/// A point (x, z) of the light-cone plane. x < 1 is inside the cone.
class Kinematics {
 public:
  /// Throws ValidationError unless x > 0 and z > 0 (both finite).
  Kinematics(double x, double z);

  /// The point with Omega t and z given; x = z / Omega t.
  static Kinematics from_omega_t(double omega_t, double z);

  double x() const { return x_; }
  double z() const { return z_; }
  double omega_t() const { return omega_t_; }

  /// The single predicate every branch selection goes through.
  bool inside_lightcone() const { return x_ < 1.0; }
  bool on_cone() const { return x_ == 1.0; }

  /// z (1 - 1/x) = z - Omega t, evaluated as z (x - 1) / x so that it stays
  /// accurate when x is within a few ulps of 1.
  double cone_offset() const { return z_ * (x_ - 1.0) / x_; }

 private:
  double x_;
  double z_;
  double omega_t_;
};

double omega_t(const Kinematics& k);

/// K = alpha |d|^2 / (e^2 r^2) written as alpha D^2 / z^2.
double coupling_k(const ModelParams& p, const Kinematics& k);

}  // namespace twoatom
