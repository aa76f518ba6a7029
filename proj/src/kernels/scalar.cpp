#include <cmath>

#include "twoatom/kernels/kernels.hpp"

namespace twoatom::kernels::scalar {

SpectralSums spectral_sums(const SpectralNodes& n) {
  SpectralSums s;
  double lc_re = 0.0, lc_im = 0.0, uv_re = 0.0, uv_im = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double w = n.weight[i];
    const double a = n.ang[i];
    const double um = n.tm_re[i] * n.tm_re[i] + n.tm_im[i] * n.tm_im[i];
    const double vp = n.tp_re[i] * n.tp_re[i] + n.tp_im[i] * n.tp_im[i];
    // tau- conj(tau+)
    const double x_re = n.tm_re[i] * n.tp_re[i] + n.tm_im[i] * n.tp_im[i];
    const double x_im = n.tm_im[i] * n.tp_re[i] - n.tm_re[i] * n.tp_im[i];
    const double x_abs = std::sqrt(um * vp);
    s.u2 += w * um;
    s.v2 += w * vp;
    s.m_uu += w * um * a;
    s.m_vv += w * vp * a;
    lc_re += w * x_re * a;
    lc_im += w * x_im * a;
    uv_re += w * x_re;
    uv_im += w * x_im;
    s.abs_m_uu += w * um * std::abs(a);
    s.abs_m_vv += w * vp * std::abs(a);
    s.abs_l_cross += w * x_abs * std::abs(a);
    s.abs_uv_same += w * x_abs;
  }
  s.l_cross = {lc_re, lc_im};
  s.uv_same = {uv_re, uv_im};
  return s;
}

PairSums pair_sums(const SpectralNodes& n) {
  const std::size_t size = n.size();
  double f2 = 0.0;
  double fg_re = 0.0;
  double fg_im = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    double row_f2 = 0.0;
    double row_re = 0.0;
    double row_im = 0.0;
    const double nui = n.nu[i];
    const double wi = n.weight[i];
    const double ai = n.ang[i];
    const double phr = n.ph_re[i], phi = n.ph_im[i];
    const double pr = n.tp_re[i], pi = n.tp_im[i];
    const double ri = n.inv_detune[i];
    const double tr = n.tm_re[i], ti = n.tm_im[i];
    // j == i counted once, j > i twice (the summand is symmetric).
    for (std::size_t j = i; j < size; ++j) {
      const double inv_s = 1.0 / (nui + n.nu[j]);
      // E = (ph_i ph_j - 1) / (i s)
      const double qr = phr * n.ph_re[j] - phi * n.ph_im[j];
      const double qi = phr * n.ph_im[j] + phi * n.ph_re[j];
      const double e_re = qi * inv_s;
      const double e_im = -(qr - 1.0) * inv_s;
      // W1 = (E - P_i)(-i r_j), W2 = (E - P_j)(-i r_i)
      const double rj = n.inv_detune[j];
      const double w1_re = rj * (e_im - pi);
      const double w1_im = -rj * (e_re - pr);
      const double w2_re = ri * (e_im - n.tp_im[j]);
      const double w2_im = -ri * (e_re - n.tp_re[j]);
      const double s_re = w1_re + w2_re;
      const double s_im = w1_im + w2_im;
      const double mult = (j == i ? 1.0 : 2.0) * wi * n.weight[j];
      const double aj = n.ang[j];
      row_f2 += mult * (s_re * s_re + s_im * s_im) * (1.0 + ai * aj);
      // conj(tau_i tau_j)
      const double t_re = tr * n.tm_re[j] - ti * n.tm_im[j];
      const double t_im = -(tr * n.tm_im[j] + ti * n.tm_re[j]);
      const double g = mult * (ai + aj);
      row_re += g * (s_re * t_re - s_im * t_im);
      row_im += g * (s_re * t_im + s_im * t_re);
    }
    f2 += row_f2;
    fg_re += row_re;
    fg_im += row_im;
  }
  return {2.0 * f2, {2.0 * fg_re, 2.0 * fg_im}};
}

}  // namespace twoatom::kernels::scalar
