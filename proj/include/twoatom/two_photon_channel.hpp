#pragma once

#include <array>
#include <complex>

#include "twoatom/core_model.hpp"
#include "twoatom/mode_kernels.hpp"

namespace twoatom {

/// Panel policy of the (nu, nu') double quadrature.
struct PairGrid {
  /// Panels no wider than min(pi/Omega t, pi/z, 1) / panels_per_half_period.
  int panels_per_half_period = 1;
  int order = 8;
  int check_order = 6;
  double tolerance = 1e-4;
  int max_refinements = 3;
};

struct CutoffMeta {
  double nu_max = 0.0;
  bool evaluated = false;   // false when the 2 nu_max rerun was skipped
  double concurrence_at_double = 0.0;
  /// |C(2 nu_max) - C(nu_max)|.
  double sensitivity = 0.0;
  /// F2 and G2 contain same-atom pieces that grow with the cutoff.
  bool f2_cutoff_dependent = true;
  bool g2_cutoff_dependent = true;
};

/// Mode-summed quadratic quantities of the two-photon channel.
struct TwoPhotonBilinears {
  double f2 = 0.0;
  double g2 = 0.0;
  std::complex<double> fg;
  Kinematics at{1.0, 1.0};
  /// F2 error relative to F2, FG error relative to sqrt(F2 G2).
  double rel_error = 0.0;
  CutoffMeta cutoff_meta;
};

struct GBilinears {
  double g2 = 0.0;
  double u2 = 0.0;
  std::complex<double> m_uu;
};

/// G2 = sum |u_B u'_A + u_A u'_B|^2 = 2 u2^2 + 2 |m_uu|^2.
GBilinears g_bilinears(const ModelParams& p, const Kinematics& k, const SpectralGrid& grid = {});

struct FBilinears {
  double f2 = 0.0;
  std::complex<double> fg;
  double rel_error = 0.0;
};

/// F2 = sum |f|^2 and FG = sum f g* by a (nu, nu') quadrature. Throws
/// NumericalFailure if the tolerance is not met.
FBilinears f_bilinears(const ModelParams& p, const Kinematics& k, const PairGrid& grid = {});

/// F2, G2 and FG on one shared node set. With with_cutoff the concurrence is
/// recomputed at 2 nu_max and the shift stored in cutoff_meta.
TwoPhotonBilinears two_photon_bilinears(const ModelParams& p, const Kinematics& k,
                                        bool with_cutoff = false, const PairGrid& grid = {});

/// 2|FG| / (F2 + G2). Throws UndefinedState when F2 + G2 == 0.
double concurrence_from(const TwoPhotonBilinears& b);

double concurrence_two_photon(const ModelParams& p, const Kinematics& k);

/// One photon: frequency nu (units of Omega), unit direction and unit
/// polarization orthogonal to it.
struct PhotonMode {
  double nu = 1.0;
  std::array<double, 3> direction{0.0, 0.0, 1.0};
  std::array<double, 3> polarization{1.0, 0.0, 0.0};
};

/// Atom positions in units of c/Omega; the dipoles point along z.
struct AtomPair {
  std::array<double, 3> a{0.0, 0.0, 0.0};
  std::array<double, 3> b{0.0, 1.0, 0.0};
};

struct ModeAmplitudes {
  std::complex<double> f;
  std::complex<double> g;
};

/// f(k, k') and g(k, k') for an explicit photon pair, up to a common
/// constant that cancels in the concurrence.
ModeAmplitudes two_photon_mode_amplitudes(const PhotonMode& k1, const PhotonMode& k2,
                                          const AtomPair& atoms, double omega_t);

/// 2|f g*| / (|f|^2 + |g|^2) for one photon pair.
double concurrence_two_photon_mode(const PhotonMode& k1, const PhotonMode& k2,
                                   const AtomPair& atoms, double omega_t);

}  // namespace twoatom
