#pragma once

#include <complex>

#include "twoatom/core_model.hpp"

namespace twoatom {

/// The two terms I+ and I- of the exchange integral I = I+ + I-.
enum class Branch { plus, minus };

/// Zero-photon channel at one point.
struct VacuumAmplitudes {
  std::complex<double> a;  // intra-atomic radiative correction
  std::complex<double> b;  // exchange amplitude; infinite on the cone
  std::complex<double> i_plus;
  std::complex<double> i_minus;
  Kinematics at{1.0, 1.0};
  /// x == 1 exactly: I is its (continuous) limit and b is singular.
  bool on_cone = false;
  double concurrence = 0.0;
};

/// I+ or I- in closed form through Ei on the imaginary axis. For x < 1, I-
/// carries the extra resonant term 2 pi i e^{-i(z - Omega t)} inside the
/// bracket, which makes I continuous across x = 1. At x == 1 exactly the
/// common limit is returned.
std::complex<double> eval_i_pm(Branch branch, const Kinematics& k);

/// I = I+ + I-.
std::complex<double> eval_i(const Kinematics& k);

/// d/dz and d^2/dz^2 of I at fixed Omega t.
struct IDerivatives {
  std::complex<double> value;
  std::complex<double> dz;
  std::complex<double> dzz;
};

/// Throws SingularConfiguration at x == 1, where both derivatives diverge.
IDerivatives eval_i_derivatives(const Kinematics& k);

/// b = -(alpha D^2 / pi) (I'' + I'/z) for dipoles along z and separation along
/// y, derivatives at fixed Omega t. Throws SingularConfiguration at x == 1.
std::complex<double> eval_b(const ModelParams& p, const Kinematics& k);

/// a = (4 i K z^3 / 3x) (ln|1 - z_max/z| + 2 pi i) with z_max = factor * z.
/// Throws SingularConfiguration when the factor equals 1.
std::complex<double> eval_a(const ModelParams& p, const Kinematics& k);

/// Concurrence of (1 + a)|EE> + b|GG>. At x == 1 returns the limit 0.
double concurrence_vacuum(const ModelParams& p, const Kinematics& k);

/// Everything above in one call.
VacuumAmplitudes evaluate_vacuum(const ModelParams& p, const Kinematics& k);

}  // namespace twoatom
