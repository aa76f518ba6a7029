#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace twoatom {

using Matrix4c = Eigen::Matrix<std::complex<double>, 4, 4>;

/// Two-qubit state in the basis {|EE>, |EG>, |GE>, |GG>}.
///
/// Either a pure state (normalized on construction) or a density matrix
/// validated to be Hermitian, unit-trace and PSD up to -1e-12.
class TwoQubitState {
 public:
  using Amplitudes = std::array<std::complex<double>, 4>;

  /// Throws ValidationError if all coefficients vanish or any is non-finite.
  static TwoQubitState pure(const Amplitudes& c);
  static TwoQubitState pure(std::complex<double> c_ee, std::complex<double> c_eg,
                            std::complex<double> c_ge, std::complex<double> c_gg) {
    return pure(Amplitudes{c_ee, c_eg, c_ge, c_gg});
  }
  /// Throws ValidationError on a non-Hermitian, non-normalizable or
  /// non-PSD matrix. The trace is normalized to 1.
  static TwoQubitState mixed(const Matrix4c& rho);

  bool is_pure() const { return pure_; }
  const Amplitudes& amplitudes() const { return amps_; }
  const Matrix4c& density() const { return rho_; }

 private:
  TwoQubitState() = default;

  bool pure_ = false;
  Amplitudes amps_{};
  Matrix4c rho_ = Matrix4c::Zero();
};

/// Wootters concurrence max{0, s1 - s2 - s3 - s4}, where s_i are the square
/// roots of the eigenvalues of rho (sy x sy) rho* (sy x sy), in descending
/// order. Clamped to [0, 1].
double wootters_concurrence(const TwoQubitState& s);

/// The square roots s_i, descending.
std::array<double, 4> wootters_spectrum(const TwoQubitState& s);

/// 2|amp1||amp2| / (|amp1|^2 + |amp2|^2): the concurrence of the normalized
/// state amp1|EE> + amp2|GG> (or amp1|EG> + amp2|GE>). Callers pass raw
/// amplitudes; normalization happens here. Throws UndefinedState if both
/// vanish.
double concurrence_two_component(std::complex<double> amp1, std::complex<double> amp2);

}  // namespace twoatom
