#ifndef HOM_STATE_PREP_HPP
#define HOM_STATE_PREP_HPP

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hom/errors.hpp"
#include "hom/hom_analytics.hpp"

namespace hom {

template <typename Real = double>
using AmplitudeGrid = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic,
                                    Eigen::Dynamic, Eigen::RowMajor>;

template <typename Real = double>
using RealGrid =
    Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Two-particle wavefunction Psi(l, m) on an L x L grid. Rows index the
/// first particle, columns the second; site l sits at row l + (L-1)/2.
template <typename Real = double>
class TwoParticleState {
 public:
  using Complex = std::complex<Real>;
  using Grid = AmplitudeGrid<Real>;

  TwoParticleState() = default;

  explicit TwoParticleState(int L) {
    check_size(L);
    amplitudes_ = Grid::Zero(L, L);
  }

  explicit TwoParticleState(Grid amplitudes)
      : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.rows() != amplitudes_.cols()) {
      throw DimensionMismatch("amplitude grid must be square");
    }
    check_size(static_cast<int>(amplitudes_.rows()));
  }

  int sites() const { return static_cast<int>(amplitudes_.rows()); }
  int half_width() const { return (sites() - 1) / 2; }

  Complex& operator()(int l, int m) {
    return amplitudes_(l + half_width(), m + half_width());
  }
  const Complex& operator()(int l, int m) const {
    return amplitudes_(l + half_width(), m + half_width());
  }

  const Grid& amplitudes() const { return amplitudes_; }
  Grid& amplitudes() { return amplitudes_; }

  Real squared_norm() const { return amplitudes_.squaredNorm(); }

  void normalize() {
    const Real n = amplitudes_.norm();
    if (!(n > Real(0))) {
      throw AnnihilatedState("cannot normalize a zero state");
    }
    amplitudes_ /= n;
  }

  TwoParticleState normalized() const {
    TwoParticleState out = *this;
    out.normalize();
    return out;
  }

  /// <this|other>
  Complex inner(const TwoParticleState& other) const {
    return amplitudes_.conjugate().cwiseProduct(other.amplitudes_).sum();
  }

 private:
  static void check_size(int L) {
    if (L < 3 || L % 2 == 0) {
      throw InvalidParameters("site count L must be odd and >= 3, got " +
                              std::to_string(L));
    }
  }

  Grid amplitudes_;
};

/// Gaussian packet centred at site c with width sigma and mean
/// quasimomentum k.
template <typename Real = double>
struct WavepacketSpec {
  Real k;
  Real c;
  Real sigma;

  /// Partner packet: opposite position and quasimomentum.
  WavepacketSpec mirrored() const { return {-k, -c, sigma}; }
};

/// Unnormalized exp(-(l - c)^2 / 4 sigma^2 + i k l).
template <typename Real>
std::complex<Real> gaussian_amplitude(const WavepacketSpec<Real>& spec,
                                      Real l) {
  const Real d = l - spec.c;
  return std::exp(std::complex<Real>(-d * d / (Real(4) * spec.sigma * spec.sigma),
                                     spec.k * l));
}

/// Packets are kept 3 sigma away from the lattice edge, from the barrier
/// and from each other.
inline constexpr double kPlacementSigmas = 3.0;
inline constexpr double kMinimumSigma = 2.0;

template <typename Real>
void check_placement(const WavepacketSpec<Real>& spec, int L) {
  if (!(spec.sigma > Real(0))) {
    throw PlacementError("wavepacket width must be positive");
  }
  const Real reach = std::abs(spec.c) + Real(kPlacementSigmas) * spec.sigma;
  if (reach > Real((L - 1) / 2)) {
    throw PlacementError("wavepacket at c=" + std::to_string(double(spec.c)) +
                         " with sigma=" + std::to_string(double(spec.sigma)) +
                         " is truncated by the lattice edge");
  }
}

/// Non-fatal geometry problems of a symmetric launch.
template <typename Real>
std::vector<std::string> geometry_warnings(const WavepacketSpec<Real>& spec) {
  std::vector<std::string> out;
  if (std::abs(spec.c) < Real(kPlacementSigmas) * spec.sigma) {
    out.emplace_back(
        "packets start within 3 sigma of the barrier and of each other");
  }
  if (spec.sigma < Real(kMinimumSigma)) {
    out.emplace_back("packet width below 2 sites; quasimomentum is broad");
  }
  return out;
}

namespace detail {

template <typename Real>
void check_launch(const WavepacketSpec<Real>& spec, int L) {
  const Real pi = std::acos(Real(-1));
  if (!(spec.k > Real(0) && spec.k < pi)) {
    throw InvalidParameters("launch quasimomentum must lie in (0, pi)");
  }
  if (!(spec.c < Real(0))) {
    throw InvalidParameters("left packet must start at c < 0");
  }
  check_placement(spec, L);
}

template <typename Real>
Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1> packet_column(
    const WavepacketSpec<Real>& spec, int L) {
  const int h = (L - 1) / 2;
  Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1> g(L);
  for (int i = 0; i < L; ++i) g(i) = gaussian_amplitude(spec, Real(i - h));
  return g;
}

}  // namespace detail

/// Psi(l, m) = G_first(l) G_second(m), unnormalized. Each packet must fit
/// on the lattice.
template <typename Real>
TwoParticleState<Real> product_state(const WavepacketSpec<Real>& first,
                                     const WavepacketSpec<Real>& second,
                                     int L) {
  TwoParticleState<Real> state(L);
  check_placement(first, L);
  check_placement(second, L);
  state.amplitudes() = detail::packet_column(first, L) *
                       detail::packet_column(second, L).transpose();
  return state;
}

/// Symmetric launch toward the barrier: the second packet mirrors the
/// first. The result is D-even.
template <typename Real>
TwoParticleState<Real> product_state(const WavepacketSpec<Real>& spec, int L) {
  detail::check_launch(spec, L);
  return product_state(spec, spec.mirrored(), L);
}

/// (l + m) G(l) G'(m): entangled positions, D-odd.
template <typename Real>
TwoParticleState<Real> entangled_state(const WavepacketSpec<Real>& spec,
                                       int L) {
  TwoParticleState<Real> state = product_state(spec, L);
  const int h = state.half_width();
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) {
      state.amplitudes()(i, j) *= Real((i - h) + (j - h));
    }
  }
  return state;
}

/// Psi(l, m) -> Psi(m, l)
template <typename Real>
TwoParticleState<Real> apply_exchange(const TwoParticleState<Real>& state) {
  return TwoParticleState<Real>(state.amplitudes().transpose());
}

/// Psi(l, m) -> Psi(-l, -m)
template <typename Real>
TwoParticleState<Real> apply_parity(const TwoParticleState<Real>& state) {
  return TwoParticleState<Real>(state.amplitudes().reverse());
}

/// Psi(l, m) -> Psi(-m, -l), reflection across the antidiagonal.
template <typename Real>
TwoParticleState<Real> apply_D(const TwoParticleState<Real>& state) {
  return TwoParticleState<Real>(state.amplitudes().transpose().reverse());
}

/// Normalized (I + epsilon E) Psi.
template <typename Real>
TwoParticleState<Real> symmetrize(const TwoParticleState<Real>& state,
                                  Parity epsilon) {
  const Real sign = Real(value(epsilon));
  TwoParticleState<Real> out(
      AmplitudeGrid<Real>(state.amplitudes() +
                          sign * state.amplitudes().transpose()));
  const Real in_norm = state.amplitudes().norm();
  const Real out_norm = out.amplitudes().norm();
  if (!(out_norm >= Real(1e-12) * in_norm) || !(out_norm > Real(0))) {
    throw AnnihilatedState("symmetrization annihilates the state");
  }
  out.amplitudes() /= out_norm;
  return out;
}

/// (1 + eps E)(1 + delta D) Psi / 4.
template <typename Real>
TwoParticleState<Real> project_sector(const TwoParticleState<Real>& state,
                                      const SymmetrySector& sector) {
  const Real e = Real(value(sector.epsilon));
  const Real d = Real(value(sector.delta));
  const auto& a = state.amplitudes();
  AmplitudeGrid<Real> out = a + e * a.transpose() +
                            d * a.transpose().reverse() + e * d * a.reverse();
  out *= Real(0.25);
  return TwoParticleState<Real>(std::move(out));
}

/// Probability carried by each (epsilon, delta) sector, ordered as
/// kAllSectors.
template <typename Real>
SectorMap<Real> sector_weights(const TwoParticleState<Real>& state) {
  SectorMap<Real> w{};
  for (const auto& s : kAllSectors) {
    w[sector_index(s)] = project_sector(state, s).squared_norm();
  }
  return w;
}

}  // namespace hom

#endif  // HOM_STATE_PREP_HPP
