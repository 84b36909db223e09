#include "hom/experiment/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "hom/evolution.hpp"
#include "hom/experiment/tolerances.hpp"
#include "hom/hom_analytics.hpp"
#include "hom/lattice_scattering.hpp"

namespace hom {

namespace {

constexpr double kPi = std::numbers::pi;

std::string describe(const char* what, double value, double limit) {
  std::ostringstream os;
  os.precision(3);
  os << what << " = " << std::scientific << value << " (limit " << limit
     << ")";
  return os.str();
}

// 100 quasimomenta strictly inside (0, pi).
std::vector<double> k_samples() {
  std::vector<double> k;
  for (int i = 1; i <= 100; ++i) k.push_back(kPi * i / 101.0);
  return k;
}

}  // namespace

TwoParticleState<double> random_state(int L, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  TwoParticleState<double> state(L);
  for (Eigen::Index i = 0; i < L; ++i) {
    for (Eigen::Index j = 0; j < L; ++j) {
      state.amplitudes()(i, j) = {gauss(rng), gauss(rng)};
    }
  }
  state.normalize();
  return state;
}

double chain_bound_energy(double hopping, double potential, int sites) {
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(sites, sites);
  for (int i = 0; i + 1 < sites; ++i) H(i, i + 1) = H(i + 1, i) = -hopping;
  H(sites / 2, sites / 2) = potential;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      H, Eigen::EigenvaluesOnly);
  return potential > 0 ? solver.eigenvalues().maxCoeff()
                       : solver.eigenvalues().minCoeff();
}

CheckResult check_scattering_unitarity() {
  double worst = 0;
  for (double k : k_samples()) {
    for (int m = 1; m <= 50; ++m) {
      const auto a = barrier_amplitudes(1.0, 0.1 * m, k);
      worst = std::max({worst, std::abs(std::norm(a.t) + std::norm(a.r) - 1.0),
                        std::abs((a.t * std::conj(a.r)).real())});
    }
  }
  return {"scattering_unitarity", worst <= tolerance::kExact,
          describe("max unitarity defect", worst, tolerance::kExact)};
}

CheckResult check_fifty_fifty() {
  double worst = 0;
  for (double k : k_samples()) {
    const auto a = barrier_amplitudes(1.0, fifty_fifty_barrier(1.0, k), k);
    worst = std::max(worst, std::abs(a.transmission() - 0.5));
  }
  return {"fifty_fifty", worst <= tolerance::kExact,
          describe("max | |t|^2 - 1/2 |", worst, tolerance::kExact)};
}

CheckResult check_hom_identities() {
  const SymmetrySector bosons{Parity::even, Parity::even};
  const SymmetrySector fermions{Parity::odd, Parity::even};
  double worst =
      std::abs(bunching_noninteracting(1.0, 2.0, kPi / 2, bosons) - 1.0);
  for (double k : k_samples()) {
    for (int m = 0; m <= 30; ++m) {
      const double mu = 0.1 * m;
      worst = std::max(worst, bunching_noninteracting(1.0, mu, k, fermions));
      const auto a = barrier_amplitudes(1.0, mu, k);
      SectorMap<double> weights{0.5, 0.5, 0.0, 0.0};
      SectorMap<double> probs{bunching_noninteracting(1.0, mu, k, bosons),
                              bunching_noninteracting(1.0, mu, k, fermions),
                              0.0, 0.0};
      worst = std::max(worst, std::abs(mixed_state_bunching(weights, probs) -
                                       2.0 * std::norm(a.r * a.t)));
    }
  }
  return {"hom_identities", worst <= tolerance::kExact,
          describe("max identity defect", worst, tolerance::kExact)};
}

CheckResult check_bound_states() {
  double worst = 0;
  for (double mu : {-3.0, -2.0, -1.0, 1.0, 2.0, 3.0}) {
    worst = std::max(worst, std::abs(barrier_bound_state(1.0, mu).energy -
                                     chain_bound_energy(1.0, mu, 61)));
  }
  // Relative motion: hopping 2J, potential U. Weak binding needs a long chain.
  for (double U : {-4.0, -2.0, -1.0, 1.0, 2.0, 4.0}) {
    worst = std::max(worst, std::abs(pair_bound_state(1.0, U).energy -
                                     chain_bound_energy(2.0, U, 401)));
  }
  return {"bound_states", worst <= tolerance::kBoundStateOracle,
          describe("max energy error", worst, tolerance::kBoundStateOracle)};
}

CheckResult check_hamiltonian_symmetries() {
  std::mt19937_64 rng(7);
  const ModelParams<double> params{1.0, 1.3, -2.1, 11};
  double worst = 0;
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = random_state(11, rng);
    const auto b = random_state(11, rng);
    const auto hb = apply_h2(params, b);
    const auto ha = apply_h2(params, a);
    worst = std::max(worst, std::abs(a.inner(hb) - std::conj(b.inner(ha))));
    const auto he = apply_h2(params, apply_exchange(a));
    const auto eh = apply_exchange(ha);
    worst = std::max(worst, (he.amplitudes() - eh.amplitudes()).norm());
    const auto hd = apply_h2(params, apply_D(a));
    const auto dh = apply_D(ha);
    worst = std::max(worst, (hd.amplitudes() - dh.amplitudes()).norm());
  }
  return {"hamiltonian_symmetries", worst <= tolerance::kExact,
          describe("max hermiticity/commutator defect", worst,
                   tolerance::kExact)};
}

CheckResult check_propagator_oracle(int cases, int L, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coupling(-4.0, 4.0);
  std::uniform_real_distribution<double> hop(0.5, 2.0);
  std::uniform_real_distribution<double> time(0.0, 25.0);
  double max_err = 0, max_drift = 0, max_energy = 0;
  for (int i = 0; i < cases; ++i) {
    const ModelParams<double> params{hop(rng), coupling(rng), coupling(rng), L};
    const double t = time(rng);
    const auto psi = random_state(L, rng);
    const auto fast = evolve(psi, params, t);
    const auto exact = brute_force_propagate(psi, params, t);
    max_err = std::max(
        max_err, (fast.amplitudes() - exact.amplitudes()).cwiseAbs().maxCoeff());
    max_drift = std::max(max_drift, std::abs(fast.squared_norm() - 1.0));
    const double e0 = energy_expectation(params, psi);
    const double e1 = energy_expectation(params, fast);
    max_energy = std::max(max_energy,
                          std::abs(e1 - e0) / std::max(1.0, std::abs(e0)));
  }
  const bool ok = max_err <= tolerance::kPropagatorOracle &&
                  max_drift <= tolerance::kNormDrift &&
                  max_energy <= tolerance::kEnergyDrift;
  return {"propagator_oracle", ok,
          describe("max-norm error", max_err, tolerance::kPropagatorOracle) +
              ", " + describe("norm drift", max_drift, tolerance::kNormDrift) +
              ", " +
              describe("energy drift", max_energy, tolerance::kEnergyDrift)};
}

CheckResult check_symmetry_conservation() {
  std::mt19937_64 rng(11);
  const ModelParams<double> params{1.0, 2.0, 2.0, 21};
  double worst_leak = 0;
  for (const auto& sector : kAllSectors) {
    auto psi = project_sector(random_state(21, rng), sector);
    psi.normalize();
    for (double t : {1.0, 5.0, 12.5, 25.0}) {
      const auto out = evolve(psi, params, t);
      const auto w = sector_weights(out);
      worst_leak = std::max(worst_leak, 1.0 - w[sector_index(sector)]);
    }
  }
  return {"symmetry_conservation", worst_leak <= tolerance::kSectorLeak,
          describe("max sector leak", worst_leak, tolerance::kSectorLeak)};
}

std::vector<CheckResult> run_verification() {
  return {check_scattering_unitarity(),   check_fifty_fifty(),
          check_hom_identities(),         check_bound_states(),
          check_hamiltonian_symmetries(), check_propagator_oracle(),
          check_symmetry_conservation()};
}

}  // namespace hom
