#include "twoatom/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "twoatom/errors.hpp"

namespace twoatom {

namespace {

constexpr double kPsdTolerance = 1e-12;
constexpr double kNoiseFloor = 1e-14;

// sy x sy in the {EE, EG, GE, GG} basis: anti-diagonal (-1, 1, 1, -1).
Matrix4c spin_flip() {
  Matrix4c y = Matrix4c::Zero();
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

}  // namespace

TwoQubitState TwoQubitState::pure(const Amplitudes& c) {
  double norm2 = 0.0;
  for (const auto& v : c) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw ValidationError("pure state has a non-finite coefficient");
    }
    norm2 += std::norm(v);
  }
  if (!(norm2 > 0.0)) throw ValidationError("pure state has zero norm");
  TwoQubitState s;
  s.pure_ = true;
  const double inv = 1.0 / std::sqrt(norm2);
  Eigen::Vector4cd psi;
  for (int i = 0; i < 4; ++i) {
    s.amps_[i] = c[i] * inv;
    psi(i) = s.amps_[i];
  }
  s.rho_ = psi * psi.adjoint();
  return s;
}

TwoQubitState TwoQubitState::mixed(const Matrix4c& rho) {
  if (!rho.allFinite()) throw ValidationError("density matrix has non-finite entries");
  const double scale = rho.cwiseAbs().maxCoeff();
  if (!(scale > 0.0)) throw ValidationError("density matrix is zero");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw ValidationError("density matrix is not Hermitian");
  }
  const double tr = rho.trace().real();
  if (!(tr > 0.0)) throw ValidationError("density matrix trace is not positive");
  TwoQubitState s;
  s.rho_ = 0.5 * (rho + rho.adjoint()) / tr;
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(s.rho_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPsdTolerance) {
    throw ValidationError("density matrix is not positive semidefinite");
  }
  return s;
}

std::array<double, 4> wootters_spectrum(const TwoQubitState& s) {
  // With rho = W W^H, the square roots of the eigenvalues of rho rho~ are the
  // singular values of the complex-symmetric matrix W^T Y W.
  // Eigenvalues below the solver's noise floor are zeroed; otherwise a pure
  // state's three ~1e-17 eigenvalues would leak sqrt(1e-17) into s_2..s_4.
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(s.density());
  const double pmax = es.eigenvalues().maxCoeff();
  Matrix4c w;
  for (int k = 0; k < 4; ++k) {
    double p = es.eigenvalues()(k);
    if (p < kNoiseFloor * pmax) p = 0.0;
    w.col(k) = std::sqrt(p) * es.eigenvectors().col(k);
  }
  const Matrix4c tau = w.transpose() * spin_flip() * w;
  Eigen::JacobiSVD<Matrix4c> svd(tau);
  std::array<double, 4> out{0.0, 0.0, 0.0, 0.0};
  const auto& sv = svd.singularValues();
  for (Eigen::Index i = 0; i < 4; ++i) out[i] = sv(i);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double wootters_concurrence(const TwoQubitState& s) {
  const auto sv = wootters_spectrum(s);
  const double c = sv[0] - sv[1] - sv[2] - sv[3];
  return std::clamp(c, 0.0, 1.0);
}

double concurrence_two_component(std::complex<double> amp1, std::complex<double> amp2) {
  const double m1 = std::abs(amp1);
  const double m2 = std::abs(amp2);
  if (std::isnan(m1) || std::isnan(m2)) throw ValidationError("amplitude is NaN");
  const double hi = std::max(m1, m2);
  const double lo = std::min(m1, m2);
  if (hi == 0.0) throw UndefinedState("both amplitudes vanish");
  if (std::isinf(hi)) return std::isinf(lo) ? 1.0 : 0.0;
  const double r = lo / hi;
  return std::clamp(2.0 * r / (1.0 + r * r), 0.0, 1.0);
}

}  // namespace twoatom
