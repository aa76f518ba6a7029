#include <cstdlib>
#include <string>

#include "twoatom/errors.hpp"
#include "twoatom/kernels/kernels.hpp"
#include "twoatom/mode_kernels.hpp"

namespace twoatom::kernels {

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) {
  if (isa == Isa::scalar) return true;
#if defined(TWOATOM_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa active_isa() {
  static const Isa chosen = [] {
    if (const char* env = std::getenv("TWOATOM_ISA")) {
      if (std::string(env) == "scalar") return Isa::scalar;
    }
    return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  }();
  return chosen;
}

SpectralNodes build_nodes(const quadrature::NodeSet& ns, double omega_t, double z) {
  const std::size_t n = ns.x.size();
  SpectralNodes out;
  out.omega_t = omega_t;
  out.z = z;
  for (auto* v : {&out.nu, &out.weight, &out.tm_re, &out.tm_im, &out.tp_re, &out.tp_im,
                  &out.ph_re, &out.ph_im, &out.inv_detune, &out.ang}) {
    v->resize(n);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double nu = ns.x[i];
    if (nu == 1.0) throw ValidationError("spectral node on the resonance nu = 1");
    out.nu[i] = nu;
    out.weight[i] = ns.w[i] * nu * nu * nu;
    const auto tm = tau(-1, nu, omega_t);
    const auto tp = tau(+1, nu, omega_t);
    out.tm_re[i] = tm.real();
    out.tm_im[i] = tm.imag();
    out.tp_re[i] = tp.real();
    out.tp_im[i] = tp.imag();
    out.ph_re[i] = std::cos(nu * omega_t);
    out.ph_im[i] = std::sin(nu * omega_t);
    out.inv_detune[i] = 1.0 / (nu - 1.0);
    out.ang[i] = angular_kernel(nu * z);
  }
  return out;
}

SpectralSums spectral_sums(const SpectralNodes& n, Isa isa) {
#if defined(TWOATOM_HAVE_AVX2_TU)
  if (isa == Isa::avx2 && isa_supported(Isa::avx2)) return avx2::spectral_sums(n);
#endif
  (void)isa;
  return scalar::spectral_sums(n);
}

PairSums pair_sums(const SpectralNodes& n, Isa isa) {
#if defined(TWOATOM_HAVE_AVX2_TU)
  if (isa == Isa::avx2 && isa_supported(Isa::avx2)) return avx2::pair_sums(n);
#endif
  (void)isa;
  return scalar::pair_sums(n);
}

}  // namespace twoatom::kernels
