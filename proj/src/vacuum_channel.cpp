#include "twoatom/vacuum_channel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "twoatom/concurrence.hpp"
#include "twoatom/errors.hpp"
#include "twoatom/specfun.hpp"

namespace twoatom {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

// I_s = P / z * B_s(z) with P = -i e^{-iT} / 2 and
//   B_s = 2 s cos T g_s(z) + h(z + s T) [+ E(z) for s = -1 inside the cone]
//   g_s(z) = e^{isz} Ei(-isz)
//   h(y)   = e^{-iy} Ei(iy) - e^{iy} Ei(-iy)
//   E(z)   = 2 pi i e^{-i(z - T)}
// Derivatives below are in z at fixed T.

cplx prefactor(double omega_t) { return -0.5 * kI * std::polar(1.0, -omega_t); }

struct Jet {
  cplx v, d1, d2;
};

Jet g_jet(int s, double z) {
  const cplx g = std::polar(1.0, s * z) * specfun::ei_imag(-s * z);
  const double inv = 1.0 / z;
  const cplx is = kI * static_cast<double>(s);
  return {g, is * g + inv, -g + is * inv - inv * inv};
}

Jet h_jet(double y) {
  const cplx e = specfun::ei_imag(y);
  const cplx em = std::conj(e);
  const cplx ph = std::polar(1.0, -y);
  const cplx p = ph * e;             // e^{-iy} Ei(iy)
  const cplx q = std::conj(ph) * em;  // e^{iy} Ei(-iy)
  const cplx h = p - q;
  return {h, -kI * (p + q), -h - 2.0 * kI / y};
}

Jet e_jet(double y) {
  const cplx e = 2.0 * kPi * kI * std::polar(1.0, -y);
  return {e, -kI * e, -e};
}

Jet bracket(Branch branch, const Kinematics& k, bool need_derivatives) {
  const int s = branch == Branch::plus ? 1 : -1;
  const double z = k.z();
  const double t = k.omega_t();
  const double c = 2.0 * s * std::cos(t);
  const Jet g = g_jet(s, z);
  Jet out{c * g.v, c * g.d1, c * g.d2};
  // z + sT; for s = -1 this is the signed distance to the cone.
  const double y = s > 0 ? z + t : k.cone_offset();
  if (y == 0.0) {
    if (need_derivatives) {
      throw SingularConfiguration("derivatives of I diverge on the light cone x = 1");
    }
    // h jumps by -2 pi i across y = 0 and E(z) = 2 pi i there, so both sides
    // meet at i pi.
    out.v += kI * kPi;
    return out;
  }
  const Jet h = h_jet(y);
  out.v += h.v;
  out.d1 += h.d1;
  out.d2 += h.d2;
  if (s < 0 && k.inside_lightcone()) {
    const Jet e = e_jet(y);
    out.v += e.v;
    out.d1 += e.d1;
    out.d2 += e.d2;
  }
  return out;
}

}  // namespace

cplx eval_i_pm(Branch branch, const Kinematics& k) {
  return prefactor(k.omega_t()) / k.z() * bracket(branch, k, false).v;
}

cplx eval_i(const Kinematics& k) {
  return eval_i_pm(Branch::plus, k) + eval_i_pm(Branch::minus, k);
}

IDerivatives eval_i_derivatives(const Kinematics& k) {
  const Jet bp = bracket(Branch::plus, k, true);
  const Jet bm = bracket(Branch::minus, k, true);
  const cplx b = bp.v + bm.v;
  const cplx b1 = bp.d1 + bm.d1;
  const cplx b2 = bp.d2 + bm.d2;
  const cplx p = prefactor(k.omega_t());
  const double z = k.z();
  const double z2 = z * z;
  const double z3 = z2 * z;
  return {p * b / z, p * (b1 / z - b / z2), p * (b2 / z - 2.0 * b1 / z2 + 2.0 * b / z3)};
}

cplx eval_b(const ModelParams& p, const Kinematics& k) {
  p.validate();
  const auto d = eval_i_derivatives(k);
  const double c = p.alpha * p.dipole_strength * p.dipole_strength / kPi;
  return -c * (d.dzz + d.dz / k.z());
}

cplx eval_a(const ModelParams& p, const Kinematics& k) {
  p.validate();
  const double ratio = p.z_max_ratio();
  if (ratio == 1.0) throw SingularConfiguration("z_max == z: ln|1 - z_max/z| diverges");
  const double kz3 = coupling_k(p, k) * k.z() * k.z() * k.z();
  return 4.0 * kI * kz3 / (3.0 * k.x()) * cplx(std::log(std::abs(1.0 - ratio)), 2.0 * kPi);
}

double concurrence_vacuum(const ModelParams& p, const Kinematics& k) {
  return evaluate_vacuum(p, k).concurrence;
}

VacuumAmplitudes evaluate_vacuum(const ModelParams& p, const Kinematics& k) {
  p.validate();
  VacuumAmplitudes r;
  r.at = k;
  r.on_cone = k.on_cone();
  r.a = eval_a(p, k);
  r.i_plus = eval_i_pm(Branch::plus, k);
  r.i_minus = eval_i_pm(Branch::minus, k);
  if (r.on_cone) {
    // |b| -> infinity from both sides, so the concurrence tends to 0.
    r.b = {std::numeric_limits<double>::infinity(), 0.0};
    r.concurrence = 0.0;
    return r;
  }
  r.b = eval_b(p, k);
  r.concurrence = concurrence_two_component(1.0 + r.a, r.b);
  return r;
}

}  // namespace twoatom
