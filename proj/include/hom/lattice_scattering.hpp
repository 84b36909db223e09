#ifndef HOM_LATTICE_SCATTERING_HPP
#define HOM_LATTICE_SCATTERING_HPP

#include <cmath>
#include <complex>
#include <string>

#include "hom/errors.hpp"

namespace hom {

/// Scattering formulas are singular where the group velocity vanishes.
inline constexpr double kDefaultSinCutoff = 1e-6;

/// Couplings of the lattice: tunnelling J, barrier height mu on site 0,
/// contact interaction U and the (odd) number of sites L.
template <typename Real = double>
struct ModelParams {
  Real J = Real(1);
  Real mu = Real(0);
  Real U = Real(0);
  int L = 61;

  /// Largest site index; sites run over [-half_width(), half_width()].
  int half_width() const { return (L - 1) / 2; }

  void validate() const {
    if (!(J > Real(0))) {
      throw InvalidParameters("tunnel coupling J must be positive");
    }
    if (L < 3 || L % 2 == 0) {
      throw InvalidParameters("site count L must be odd and >= 3, got " +
                              std::to_string(L));
    }
  }
};

template <typename Real = double>
struct ScatteringAmplitudes {
  std::complex<Real> t;
  std::complex<Real> r;

  Real transmission() const { return std::norm(t); }
  Real reflection() const { return std::norm(r); }
};

template <typename Real = double>
struct BoundState {
  Real kappa;
  Real energy;
  int attached_sign;
};

namespace detail {

template <typename Real>
Real checked_sin(Real k, Real cutoff) {
  const Real s = std::sin(k);
  if (!(std::abs(s) >= cutoff)) {
    throw DegenerateQuasimomentum(
        "quasimomentum too close to the band edge (|sin k| < cutoff)");
  }
  return s;
}

template <typename Real>
int sign_of(Real x) {
  return x > Real(0) ? 1 : -1;
}

// Point scatterer of strength v in a chain with hopping w.
template <typename Real>
ScatteringAmplitudes<Real> point_scatterer(Real w, Real v, Real k,
                                           Real cutoff) {
  const Real s = checked_sin(k, cutoff);
  const std::complex<Real> drive(Real(0), Real(2) * w * s);
  const std::complex<Real> denom = drive - v;
  return {drive / denom, std::complex<Real>(v) / denom};
}

template <typename Real>
BoundState<Real> point_bound_state(Real w, Real v) {
  if (v == Real(0)) {
    throw ZeroStrength("no bound state for a scatterer of zero strength");
  }
  const int sign = sign_of(v);
  return {std::asinh(std::abs(v) / (Real(2) * w)),
          Real(sign) * std::sqrt(Real(4) * w * w + v * v), sign};
}

}  // namespace detail

template <typename Real>
Real dispersion_energy(Real J, Real k) {
  return -Real(2) * J * std::cos(k);
}

template <typename Real>
Real group_velocity(Real J, Real k) {
  return Real(2) * J * std::sin(k);
}

/// Transmission and reflection of a plane wave with quasimomentum k on the
/// barrier of height mu.
template <typename Real>
ScatteringAmplitudes<Real> barrier_amplitudes(
    Real J, Real mu, Real k, Real cutoff = Real(kDefaultSinCutoff)) {
  return detail::point_scatterer(J, mu, k, cutoff);
}

/// Barrier height that splits the incident wave 50-50 (positive root).
template <typename Real>
Real fifty_fifty_barrier(Real J, Real k,
                         Real cutoff = Real(kDefaultSinCutoff)) {
  return Real(2) * J * std::abs(detail::checked_sin(k, cutoff));
}

/// Scattering of the relative coordinate on the interaction line l = m.
/// The relative motion is a chain with hopping 2J and on-site potential U.
template <typename Real>
ScatteringAmplitudes<Real> relative_amplitudes(
    Real J, Real U, Real k, Real cutoff = Real(kDefaultSinCutoff)) {
  return detail::point_scatterer(Real(2) * J, U, k, cutoff);
}

/// Single particle bound to the barrier: sinh(kappa) = |mu| / 2J and
/// E = sign(mu) sqrt(4J^2 + mu^2).
template <typename Real>
BoundState<Real> barrier_bound_state(Real J, Real mu) {
  return detail::point_bound_state(J, mu);
}

/// Bound pair at zero centre-of-mass quasimomentum.
template <typename Real>
BoundState<Real> pair_bound_state(Real J, Real U) {
  return detail::point_bound_state(Real(2) * J, U);
}

}  // namespace hom

#endif  // HOM_LATTICE_SCATTERING_HPP
