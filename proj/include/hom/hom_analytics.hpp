#ifndef HOM_HOM_ANALYTICS_HPP
#define HOM_HOM_ANALYTICS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "hom/errors.hpp"
#include "hom/lattice_scattering.hpp"

namespace hom {

enum class Parity : int { odd = -1, even = +1 };

inline int value(Parity p) { return static_cast<int>(p); }

inline Parity parity_from_int(int v) {
  if (v == 1) return Parity::even;
  if (v == -1) return Parity::odd;
  throw InvalidParameters("parity must be +1 or -1, got " + std::to_string(v));
}

/// Joint eigenspace of particle exchange (epsilon) and of the antidiagonal
/// reflection D (delta).
struct SymmetrySector {
  Parity epsilon = Parity::even;
  Parity delta = Parity::even;

  friend bool operator==(const SymmetrySector&,
                         const SymmetrySector&) = default;
};

inline constexpr std::array<SymmetrySector, 4> kAllSectors = {{
    {Parity::even, Parity::even},
    {Parity::odd, Parity::even},
    {Parity::even, Parity::odd},
    {Parity::odd, Parity::odd},
}};

/// Position of a sector in kAllSectors.
inline std::size_t sector_index(const SymmetrySector& s) {
  return (s.epsilon == Parity::odd ? 1u : 0u) +
         (s.delta == Parity::odd ? 2u : 0u);
}

/// Per-sector values, indexed as kAllSectors.
template <typename Real = double>
using SectorMap = std::array<Real, 4>;

template <typename Real = double>
struct MirrorPhases {
  std::complex<Real> e_phase;
  std::complex<Real> d_phase;
};

namespace detail {

template <typename Real>
Real clamp_probability(Real p) {
  return std::clamp(p, Real(0), Real(1));
}

}  // namespace detail

/// Reflection phase on the exchange mirror, r' + epsilon t'.
template <typename Real>
std::complex<Real> e_mirror_phase(Real J, Real U, Real k, Parity epsilon,
                                  Real cutoff = Real(kDefaultSinCutoff)) {
  const auto rel = relative_amplitudes(J, U, k, cutoff);
  if (epsilon == Parity::odd) {
    // r' - t' = -1 identically; avoid the round-off of the subtraction.
    return std::complex<Real>(-1);
  }
  return rel.r + rel.t;
}

/// Reflection phase on the D mirror; independent of the interaction.
template <typename Real = double>
std::complex<Real> d_mirror_phase(Parity delta) {
  return std::complex<Real>(Real(value(delta)));
}

template <typename Real>
Real bunching_probability(const ScatteringAmplitudes<Real>& amps,
                          const MirrorPhases<Real>& phases) {
  return detail::clamp_probability(std::norm(phases.e_phase + phases.d_phase) *
                                   std::norm(amps.r * amps.t));
}

template <typename Real>
Real coincidence_probability(const ScatteringAmplitudes<Real>& amps,
                             const MirrorPhases<Real>& phases) {
  return detail::clamp_probability(std::norm(
      phases.e_phase * amps.t * amps.t + phases.d_phase * amps.r * amps.r));
}

/// Closed-form bunching probability without interaction,
/// |eps + delta|^2 4 J^2 mu^2 sin^2 k / (4 J^2 sin^2 k + mu^2)^2.
template <typename Real>
Real bunching_noninteracting(Real J, Real mu, Real k,
                             const SymmetrySector& sector,
                             Real cutoff = Real(kDefaultSinCutoff)) {
  const Real s = detail::checked_sin(k, cutoff);
  if (sector.epsilon != sector.delta) return Real(0);
  const Real s2 = s * s;
  const Real denom = Real(4) * J * J * s2 + mu * mu;
  return detail::clamp_probability(Real(4) * Real(4) * J * J * mu * mu * s2 /
                                   (denom * denom));
}

/// Boson bunching in the D-even sector with contact interaction U.
template <typename Real>
Real bunching_interacting(Real J, Real mu, Real U, Real k,
                          Real cutoff = Real(kDefaultSinCutoff)) {
  const Real s = detail::checked_sin(k, cutoff);
  const Real drive = Real(16) * J * J * s * s;
  const Real suppression = drive / (drive + U * U);
  return detail::clamp_probability(
      suppression *
      bunching_noninteracting(J, mu, k, SymmetrySector{}, cutoff));
}

/// Bunching of a state with indefinite symmetry: sum over sectors of
/// weight times sector probability.
template <typename Real>
Real mixed_state_bunching(const SectorMap<Real>& weights,
                          const SectorMap<Real>& sector_probs,
                          Real tolerance = Real(1e-9)) {
  Real total = 0;
  Real sum = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < Real(0)) {
      throw WeightNormalization("sector weights must be non-negative");
    }
    total += weights[i];
    sum += weights[i] * sector_probs[i];
  }
  if (std::abs(total - Real(1)) > tolerance) {
    throw WeightNormalization("sector weights do not sum to one");
  }
  return sum;
}

}  // namespace hom

#endif  // HOM_HOM_ANALYTICS_HPP
