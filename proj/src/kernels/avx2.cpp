// AVX2 + FMA variants. This translation unit is compiled with -mavx2 -mfma
// and must only be entered after isa_supported(Isa::avx2) returned true.

#include <immintrin.h>

#include <cmath>

#include "twoatom/kernels/kernels.hpp"

namespace twoatom::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline __m256d vabs(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

}  // namespace

SpectralSums spectral_sums(const SpectralNodes& n) {
  const std::size_t size = n.size();
  __m256d u2 = _mm256_setzero_pd(), v2 = _mm256_setzero_pd();
  __m256d muu = _mm256_setzero_pd(), mvv = _mm256_setzero_pd();
  __m256d lcr = _mm256_setzero_pd(), lci = _mm256_setzero_pd();
  __m256d uvr = _mm256_setzero_pd(), uvi = _mm256_setzero_pd();
  __m256d amuu = _mm256_setzero_pd(), amvv = _mm256_setzero_pd();
  __m256d alc = _mm256_setzero_pd(), auv = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= size; i += 4) {
    const __m256d w = _mm256_loadu_pd(&n.weight[i]);
    const __m256d a = _mm256_loadu_pd(&n.ang[i]);
    const __m256d aa = vabs(a);
    const __m256d tmr = _mm256_loadu_pd(&n.tm_re[i]);
    const __m256d tmi = _mm256_loadu_pd(&n.tm_im[i]);
    const __m256d tpr = _mm256_loadu_pd(&n.tp_re[i]);
    const __m256d tpi = _mm256_loadu_pd(&n.tp_im[i]);
    const __m256d um = _mm256_fmadd_pd(tmr, tmr, _mm256_mul_pd(tmi, tmi));
    const __m256d vp = _mm256_fmadd_pd(tpr, tpr, _mm256_mul_pd(tpi, tpi));
    const __m256d xr = _mm256_fmadd_pd(tmr, tpr, _mm256_mul_pd(tmi, tpi));
    const __m256d xi = _mm256_fmsub_pd(tmi, tpr, _mm256_mul_pd(tmr, tpi));
    const __m256d xabs = _mm256_sqrt_pd(_mm256_mul_pd(um, vp));
    const __m256d wum = _mm256_mul_pd(w, um);
    const __m256d wvp = _mm256_mul_pd(w, vp);
    const __m256d wxr = _mm256_mul_pd(w, xr);
    const __m256d wxi = _mm256_mul_pd(w, xi);
    u2 = _mm256_add_pd(u2, wum);
    v2 = _mm256_add_pd(v2, wvp);
    muu = _mm256_fmadd_pd(wum, a, muu);
    mvv = _mm256_fmadd_pd(wvp, a, mvv);
    lcr = _mm256_fmadd_pd(wxr, a, lcr);
    lci = _mm256_fmadd_pd(wxi, a, lci);
    uvr = _mm256_add_pd(uvr, wxr);
    uvi = _mm256_add_pd(uvi, wxi);
    amuu = _mm256_fmadd_pd(wum, aa, amuu);
    amvv = _mm256_fmadd_pd(wvp, aa, amvv);
    const __m256d wxa = _mm256_mul_pd(w, xabs);
    alc = _mm256_fmadd_pd(wxa, aa, alc);
    auv = _mm256_add_pd(auv, wxa);
  }
  SpectralSums s;
  s.u2 = hsum(u2);
  s.v2 = hsum(v2);
  s.m_uu = hsum(muu);
  s.m_vv = hsum(mvv);
  double lc_re = hsum(lcr), lc_im = hsum(lci), uv_re = hsum(uvr), uv_im = hsum(uvi);
  s.abs_m_uu = hsum(amuu);
  s.abs_m_vv = hsum(amvv);
  s.abs_l_cross = hsum(alc);
  s.abs_uv_same = hsum(auv);
  for (; i < size; ++i) {
    const double w = n.weight[i];
    const double a = n.ang[i];
    const double um = n.tm_re[i] * n.tm_re[i] + n.tm_im[i] * n.tm_im[i];
    const double vp = n.tp_re[i] * n.tp_re[i] + n.tp_im[i] * n.tp_im[i];
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

namespace {

struct RowAcc {
  double f2 = 0.0;
  double re = 0.0;
  double im = 0.0;
};

// One (i, j) term, same algebra as the scalar reference.
inline void pair_term(const SpectralNodes& n, std::size_t i, std::size_t j, double mult,
                      RowAcc& acc) {
  const double inv_s = 1.0 / (n.nu[i] + n.nu[j]);
  const double qr = n.ph_re[i] * n.ph_re[j] - n.ph_im[i] * n.ph_im[j];
  const double qi = n.ph_re[i] * n.ph_im[j] + n.ph_im[i] * n.ph_re[j];
  const double e_re = qi * inv_s;
  const double e_im = -(qr - 1.0) * inv_s;
  const double rj = n.inv_detune[j];
  const double ri = n.inv_detune[i];
  const double s_re = rj * (e_im - n.tp_im[i]) + ri * (e_im - n.tp_im[j]);
  const double s_im = -rj * (e_re - n.tp_re[i]) - ri * (e_re - n.tp_re[j]);
  const double m = mult * n.weight[i] * n.weight[j];
  acc.f2 += m * (s_re * s_re + s_im * s_im) * (1.0 + n.ang[i] * n.ang[j]);
  const double t_re = n.tm_re[i] * n.tm_re[j] - n.tm_im[i] * n.tm_im[j];
  const double t_im = -(n.tm_re[i] * n.tm_im[j] + n.tm_im[i] * n.tm_re[j]);
  const double g = m * (n.ang[i] + n.ang[j]);
  acc.re += g * (s_re * t_re - s_im * t_im);
  acc.im += g * (s_re * t_im + s_im * t_re);
}

}  // namespace

PairSums pair_sums(const SpectralNodes& n) {
  const std::size_t size = n.size();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  double f2 = 0.0, fg_re = 0.0, fg_im = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    RowAcc tail;
    pair_term(n, i, i, 1.0, tail);

    const __m256d nui = _mm256_set1_pd(n.nu[i]);
    const __m256d wi2 = _mm256_mul_pd(two, _mm256_set1_pd(n.weight[i]));
    const __m256d ai = _mm256_set1_pd(n.ang[i]);
    const __m256d phr = _mm256_set1_pd(n.ph_re[i]);
    const __m256d phi = _mm256_set1_pd(n.ph_im[i]);
    const __m256d pr = _mm256_set1_pd(n.tp_re[i]);
    const __m256d pi = _mm256_set1_pd(n.tp_im[i]);
    const __m256d ri = _mm256_set1_pd(n.inv_detune[i]);
    const __m256d tr = _mm256_set1_pd(n.tm_re[i]);
    const __m256d ti = _mm256_set1_pd(n.tm_im[i]);

    __m256d acc_f2 = _mm256_setzero_pd();
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t j = i + 1;
    for (; j + 4 <= size; j += 4) {
      const __m256d nuj = _mm256_loadu_pd(&n.nu[j]);
      const __m256d inv_s = _mm256_div_pd(one, _mm256_add_pd(nui, nuj));
      const __m256d pjr = _mm256_loadu_pd(&n.ph_re[j]);
      const __m256d pji = _mm256_loadu_pd(&n.ph_im[j]);
      const __m256d qr = _mm256_fmsub_pd(phr, pjr, _mm256_mul_pd(phi, pji));
      const __m256d qi = _mm256_fmadd_pd(phr, pji, _mm256_mul_pd(phi, pjr));
      const __m256d e_re = _mm256_mul_pd(qi, inv_s);
      const __m256d e_im = _mm256_mul_pd(_mm256_sub_pd(one, qr), inv_s);
      const __m256d rj = _mm256_loadu_pd(&n.inv_detune[j]);
      const __m256d tpjr = _mm256_loadu_pd(&n.tp_re[j]);
      const __m256d tpji = _mm256_loadu_pd(&n.tp_im[j]);
      // S = (E - P_i)(-i r_j) + (E - P_j)(-i r_i)
      const __m256d s_re = _mm256_fmadd_pd(rj, _mm256_sub_pd(e_im, pi),
                                           _mm256_mul_pd(ri, _mm256_sub_pd(e_im, tpji)));
      const __m256d s_im = _mm256_fnmsub_pd(rj, _mm256_sub_pd(e_re, pr),
                                            _mm256_mul_pd(ri, _mm256_sub_pd(e_re, tpjr)));
      const __m256d m = _mm256_mul_pd(wi2, _mm256_loadu_pd(&n.weight[j]));
      const __m256d aj = _mm256_loadu_pd(&n.ang[j]);
      const __m256d s2 = _mm256_fmadd_pd(s_re, s_re, _mm256_mul_pd(s_im, s_im));
      acc_f2 = _mm256_fmadd_pd(_mm256_mul_pd(m, s2), _mm256_fmadd_pd(ai, aj, one), acc_f2);
      const __m256d tjr = _mm256_loadu_pd(&n.tm_re[j]);
      const __m256d tji = _mm256_loadu_pd(&n.tm_im[j]);
      const __m256d t_re = _mm256_fmsub_pd(tr, tjr, _mm256_mul_pd(ti, tji));
      const __m256d t_im = _mm256_fnmsub_pd(tr, tji, _mm256_mul_pd(ti, tjr));
      const __m256d g = _mm256_mul_pd(m, _mm256_add_pd(ai, aj));
      acc_re = _mm256_fmadd_pd(g, _mm256_fmsub_pd(s_re, t_re, _mm256_mul_pd(s_im, t_im)), acc_re);
      acc_im = _mm256_fmadd_pd(g, _mm256_fmadd_pd(s_re, t_im, _mm256_mul_pd(s_im, t_re)), acc_im);
    }
    for (; j < size; ++j) pair_term(n, i, j, 2.0, tail);
    f2 += hsum(acc_f2) + tail.f2;
    fg_re += hsum(acc_re) + tail.re;
    fg_im += hsum(acc_im) + tail.im;
  }
  return {2.0 * f2, {2.0 * fg_re, 2.0 * fg_im}};
}

}  // namespace twoatom::kernels::avx2
