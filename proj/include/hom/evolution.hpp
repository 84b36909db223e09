#ifndef HOM_EVOLUTION_HPP
#define HOM_EVOLUTION_HPP

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hom/errors.hpp"
#include "hom/lattice_scattering.hpp"
#include "hom/state_prep.hpp"

namespace hom {

namespace detail {

template <typename Real>
void check_dimensions(const ModelParams<Real>& params,
                      const TwoParticleState<Real>& state) {
  if (state.sites() != params.L) {
    throw DimensionMismatch("state has " + std::to_string(state.sites()) +
                            " sites, parameters expect " +
                            std::to_string(params.L));
  }
}

// out = H in, hard walls at the lattice edges. out must not alias in.
template <typename Real>
void apply_h2_into(const ModelParams<Real>& params,
                   const AmplitudeGrid<Real>& in, AmplitudeGrid<Real>& out) {
  const Eigen::Index L = in.rows();
  const Eigen::Index h = (L - 1) / 2;
  out.resize(L, L);
  out.topRows(L - 1) = in.bottomRows(L - 1);
  out.row(L - 1).setZero();
  out.bottomRows(L - 1) += in.topRows(L - 1);
  out.leftCols(L - 1) += in.rightCols(L - 1);
  out.rightCols(L - 1) += in.leftCols(L - 1);
  out *= -params.J;
  out.row(h) += params.mu * in.row(h);
  out.col(h) += params.mu * in.col(h);
  out.diagonal() += params.U * in.diagonal();
}

}  // namespace detail

/// (H Psi)(l, m) = -J [Psi(l-1,m) + Psi(l+1,m) + Psi(l,m-1) + Psi(l,m+1)]
///                 + (mu [l=0] + mu [m=0] + U [l=m]) Psi(l, m)
template <typename Real>
TwoParticleState<Real> apply_h2(const ModelParams<Real>& params,
                                const TwoParticleState<Real>& state) {
  detail::check_dimensions(params, state);
  AmplitudeGrid<Real> out;
  detail::apply_h2_into(params, state.amplitudes(), out);
  return TwoParticleState<Real>(std::move(out));
}

/// <Psi|H|Psi> / <Psi|Psi>
template <typename Real>
Real energy_expectation(const ModelParams<Real>& params,
                        const TwoParticleState<Real>& state) {
  const auto h_state = apply_h2(params, state);
  return state.inner(h_state).real() / state.squared_norm();
}

/// Lower bound on any admissible spectral bound: kinetic range [-4J, 4J]
/// plus the largest on-site energy.
template <typename Real>
Real spectral_envelope(const ModelParams<Real>& params) {
  return Real(4) * params.J + Real(2) * std::abs(params.mu) +
         std::abs(params.U);
}

template <typename Real = double>
struct PropagationPlan {
  Real spectral_bound;
  Real target_accuracy = Real(1e-13);
  /// Largest spectral_bound * dt per expansion step.
  Real max_step_phase = Real(20);
  int max_order = 2000;
};

/// Envelope plus a 0.5 J margin.
template <typename Real>
PropagationPlan<Real> default_plan(const ModelParams<Real>& params) {
  PropagationPlan<Real> plan;
  plan.spectral_bound = spectral_envelope(params) + Real(0.5) * params.J;
  return plan;
}

namespace detail {

// Expansion coefficients of exp(-i x y) in Chebyshev polynomials T_n(y):
// c_0 = J_0(x), c_n = 2 (-i)^n J_n(x). Truncated once the Bessel tail is
// below the tolerance.
template <typename Real>
std::vector<std::complex<Real>> chebyshev_coefficients(Real x, Real tolerance,
                                                       int max_order) {
  std::vector<std::complex<Real>> coeffs;
  const std::complex<Real> minus_i(Real(0), Real(-1));
  std::complex<Real> phase(1);
  int below = 0;
  for (int n = 0;; ++n) {
    if (n > max_order) {
      throw NonConvergence("Chebyshev expansion needs more than " +
                           std::to_string(max_order) + " terms");
    }
    const Real bessel = std::cyl_bessel_j(Real(n), x);
    coeffs.push_back((n == 0 ? Real(1) : Real(2)) * bessel * phase);
    phase *= minus_i;
    // J_n(x) decays faster than geometrically once n > x.
    if (Real(n) > x && std::abs(bessel) < tolerance) {
      if (++below == 2) break;
    } else {
      below = 0;
    }
  }
  return coeffs;
}

}  // namespace detail

/// exp(-i H t) applied by a Chebyshev expansion of the rescaled
/// Hamiltonian, in steps of at most max_step_phase / spectral_bound.
template <typename Real>
TwoParticleState<Real> evolve(const TwoParticleState<Real>& state,
                              const ModelParams<Real>& params, Real t,
                              const PropagationPlan<Real>& plan) {
  params.validate();
  detail::check_dimensions(params, state);
  if (t < Real(0)) throw InvalidParameters("evolution time must be >= 0");
  if (!(plan.spectral_bound >= spectral_envelope(params))) {
    throw InvalidParameters("spectral bound below the Hamiltonian envelope");
  }
  if (!(plan.target_accuracy > Real(0)) || !(plan.max_step_phase > Real(0))) {
    throw InvalidParameters("propagation plan needs positive accuracy/step");
  }
  if (t == Real(0)) return state;

  const Real bound = plan.spectral_bound;
  const long steps = std::max<long>(
      1, static_cast<long>(std::ceil(bound * t / plan.max_step_phase)));
  const Real dt = t / Real(steps);
  const auto coeffs = detail::chebyshev_coefficients(
      bound * dt, plan.target_accuracy / Real(steps), plan.max_order);

  ModelParams<Real> scaled = params;
  scaled.J /= bound;
  scaled.mu /= bound;
  scaled.U /= bound;

  using Grid = AmplitudeGrid<Real>;
  Grid psi = state.amplitudes();
  Grid prev, curr, next, acc;
  for (long s = 0; s < steps; ++s) {
    prev = psi;
    detail::apply_h2_into(scaled, prev, curr);
    acc = coeffs[0] * prev + coeffs[1] * curr;
    for (std::size_t n = 2; n < coeffs.size(); ++n) {
      detail::apply_h2_into(scaled, curr, next);
      next = Real(2) * next - prev;
      acc += coeffs[n] * next;
      std::swap(prev, curr);
      std::swap(curr, next);
    }
    psi.swap(acc);
  }
  return TwoParticleState<Real>(std::move(psi));
}

template <typename Real>
TwoParticleState<Real> evolve(const TwoParticleState<Real>& state,
                              const ModelParams<Real>& params, Real t) {
  return evolve(state, params, t, default_plan(params));
}

inline constexpr int kDenseSiteLimit = 31;

/// Explicit L^2 x L^2 Hamiltonian in the row-major grid basis.
template <typename Real>
Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> assemble_dense_h2(
    const ModelParams<Real>& params) {
  const int L = params.L;
  const int h = params.half_width();
  const Eigen::Index n = Eigen::Index(L) * L;
  Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> H =
      Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  auto index = [L](int i, int j) { return Eigen::Index(i) * L + j; };
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) {
      const auto a = index(i, j);
      if (i + 1 < L) H(a, index(i + 1, j)) = H(index(i + 1, j), a) = -params.J;
      if (j + 1 < L) H(a, index(i, j + 1)) = H(index(i, j + 1), a) = -params.J;
      H(a, a) = (i == h ? params.mu : Real(0)) + (j == h ? params.mu : Real(0)) +
                (i == j ? params.U : Real(0));
    }
  }
  return H;
}

/// Reference propagator: full spectral decomposition of the dense
/// Hamiltonian. Only for small lattices.
template <typename Real>
TwoParticleState<Real> brute_force_propagate(
    const TwoParticleState<Real>& state, const ModelParams<Real>& params,
    Real t, int site_limit = kDenseSiteLimit) {
  params.validate();
  detail::check_dimensions(params, state);
  if (params.L > site_limit) {
    throw SizeLimitExceeded("dense propagation limited to L <= " +
                            std::to_string(site_limit));
  }
  using Complex = std::complex<Real>;
  using CVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
  const Eigen::SelfAdjointEigenSolver<
      Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>>
      solver(assemble_dense_h2(params));
  const auto& V = solver.eigenvectors();
  const Eigen::Index n = V.rows();

  const Eigen::Map<const CVector> psi(state.amplitudes().data(), n);
  CVector coeffs = V.transpose().template cast<Complex>() * psi;
  for (Eigen::Index i = 0; i < n; ++i) {
    coeffs(i) *= std::exp(Complex(Real(0), -solver.eigenvalues()(i) * t));
  }
  AmplitudeGrid<Real> out(params.L, params.L);
  Eigen::Map<CVector>(out.data(), n) = V.template cast<Complex>() * coeffs;
  return TwoParticleState<Real>(std::move(out));
}

/// Time for the packets to reach the lattice borders, (|c| + L/2) / v_g.
template <typename Real>
Real evolution_time(Real c, int L, Real J, Real k,
                    Real cutoff = Real(kDefaultSinCutoff)) {
  const Real s = detail::checked_sin(k, cutoff);
  return (std::abs(c) + Real(L) / Real(2)) / (Real(2) * J * std::abs(s));
}

/// Time for the packets to travel 2|c|, i.e. |c| past the barrier.
template <typename Real>
Real snapshot_time(Real c, Real J, Real k,
                   Real cutoff = Real(kDefaultSinCutoff)) {
  const Real s = detail::checked_sin(k, cutoff);
  return Real(2) * std::abs(c) / (Real(2) * J * std::abs(s));
}

}  // namespace hom

#endif  // HOM_EVOLUTION_HPP
