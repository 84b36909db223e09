#ifndef HOM_OBSERVABLES_HPP
#define HOM_OBSERVABLES_HPP

#include <cstdlib>

#include "hom/state_prep.hpp"

namespace hom {

/// Both particles on the same side (l m > 0), one on each side (l m < 0),
/// or at least one on the barrier (l m = 0).
template <typename Real = double>
struct ProbabilityPartition {
  Real bunching = 0;
  Real coincidence = 0;
  Real barrier = 0;

  Real total() const { return bunching + coincidence + barrier; }
};

template <typename Real>
RealGrid<Real> joint_distribution(const TwoParticleState<Real>& state) {
  return state.amplitudes().cwiseAbs2();
}

template <typename Real>
ProbabilityPartition<Real> partition(const TwoParticleState<Real>& state) {
  const RealGrid<Real> density = joint_distribution(state);
  const Eigen::Index L = density.rows();
  const Eigen::Index h = (L - 1) / 2;
  ProbabilityPartition<Real> p;
  // Quadrants in grid coordinates: [0, h) is negative, (h, L) positive.
  p.bunching = density.topLeftCorner(h, h).sum() +
               density.bottomRightCorner(h, h).sum();
  p.coincidence = density.topRightCorner(h, h).sum() +
                  density.bottomLeftCorner(h, h).sum();
  p.barrier = density.row(h).sum() + density.col(h).sum() - density(h, h);
  return p;
}

template <typename Real>
Real bunching(const TwoParticleState<Real>& state) {
  return partition(state).bunching;
}

template <typename Real>
Real coincidence(const TwoParticleState<Real>& state) {
  return partition(state).coincidence;
}

template <typename Real>
Real barrier_occupancy(const TwoParticleState<Real>& state) {
  return partition(state).barrier;
}

// Wider bands are dominated by free bunched pairs, which also sit near the
// diagonal; only l = m separates bound pairs from them.
inline constexpr int kDefaultPairBand = 0;

/// Weight within |l - m| <= w of the diagonal, barrier axes excluded.
/// Proxy for bound-pair content.
template <typename Real>
Real diagonal_pair_probability(const TwoParticleState<Real>& state,
                               int w = kDefaultPairBand) {
  const int h = state.half_width();
  Real sum = 0;
  for (int l = -h; l <= h; ++l) {
    for (int m = std::max(-h, l - w); m <= std::min(h, l + w); ++m) {
      if (l != 0 && m != 0) sum += std::norm(state(l, m));
    }
  }
  return sum;
}

}  // namespace hom

#endif  // HOM_OBSERVABLES_HPP
