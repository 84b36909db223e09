#include "hom/experiment/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <thread>
#include <tuple>

#include "hom/evolution.hpp"
#include "hom/lattice_scattering.hpp"
#include "hom/observables.hpp"

namespace hom {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Sector weights below this are treated as absent.
constexpr double kNegligibleWeight = 1e-12;

int exchange_parity(Statistics s) {
  switch (s) {
    case Statistics::boson:
      return 1;
    case Statistics::fermion:
      return -1;
    case Statistics::distinguishable:
      return 0;
  }
  return 0;
}

int d_parity(InitialState s) {
  return s == InitialState::product ? 1 : -1;
}

double analytic_for_state(const SweepConfig& config,
                          const TwoParticleState<double>& initial, double k,
                          double mu, double U) {
  const SymmetrySector pure{
      config.statistics == Statistics::fermion ? Parity::odd : Parity::even,
      parity_from_int(d_parity(config.initial_state))};
  if (config.statistics != Statistics::distinguishable) {
    return analytic_sector_bunching(config.J, mu, U, k, pure).value_or(kNaN);
  }
  const auto weights = sector_weights(initial);
  SectorMap<double> probs{};
  for (const auto& s : kAllSectors) {
    const auto i = sector_index(s);
    const auto p = analytic_sector_bunching(config.J, mu, U, k, s);
    if (p) {
      probs[i] = *p;
    } else if (weights[i] > kNegligibleWeight) {
      return kNaN;
    }
  }
  return mixed_state_bunching(weights, probs);
}

}  // namespace

std::optional<double> analytic_sector_bunching(double J, double mu, double U,
                                               double k,
                                               const SymmetrySector& sector) {
  if (U == 0.0) return bunching_noninteracting(J, mu, k, sector);
  if (sector.epsilon == Parity::even) {
    if (sector.delta == Parity::odd) return std::nullopt;
    return bunching_interacting(J, mu, U, k);
  }
  // Antisymmetric states never meet on the interaction line.
  const MirrorPhases<double> phases{e_mirror_phase(J, U, k, Parity::odd),
                                    d_mirror_phase<double>(sector.delta)};
  return bunching_probability(barrier_amplitudes(J, mu, k), phases);
}

TwoParticleState<double> prepare_state(const SweepConfig& config, double k) {
  const WavepacketSpec<double> spec{k, config.c, config.sigma};
  TwoParticleState<double> state =
      config.initial_state == InitialState::product
          ? product_state(spec, config.L)
          : entangled_state(spec, config.L);
  switch (config.statistics) {
    case Statistics::boson:
      return symmetrize(state, Parity::even);
    case Statistics::fermion:
      return symmetrize(state, Parity::odd);
    case Statistics::distinguishable:
      break;
  }
  state.normalize();
  return state;
}

double evaluation_time(const SweepConfig& config, double k) {
  return config.time_rule == TimeRule::border
             ? evolution_time(config.c, config.L, config.J, k)
             : snapshot_time(config.c, config.J, k);
}

RunResult run_point(const SweepConfig& config, double k, double mu, double U,
                    TwoParticleState<double>* final_state) {
  RunResult row;
  row.k = k;
  row.mu = mu;
  row.U = U;
  row.statistics = config.statistics;
  row.epsilon = exchange_parity(config.statistics);
  row.delta = d_parity(config.initial_state);
  try {
    const ModelParams<double> params{config.J, mu, U, config.L};
    const auto initial = prepare_state(config, k);
    row.time = evaluation_time(config, k);
    row.p_analytic = analytic_for_state(config, initial, k, mu, U);
    auto evolved = evolve(initial, params, row.time);
    const auto parts = partition(evolved);
    row.p_bunch = parts.bunching;
    row.p_coinc = parts.coincidence;
    row.p_barrier = parts.barrier;
    row.p_pair_diag = diagonal_pair_probability(evolved, config.pair_band);
    row.norm_drift = evolved.squared_norm() - 1.0;
    row.deviation = row.p_bunch - row.p_analytic;
    if (!(std::abs(row.norm_drift) <= tolerance::kNormDrift)) {
      row.failed = true;
      row.error = "norm drift above tolerance";
    }
    if (final_state) *final_state = std::move(evolved);
  } catch (const std::exception& e) {
    row.failed = true;
    row.error = e.what();
    row.p_analytic = row.p_bunch = row.p_coinc = row.p_barrier =
        row.p_pair_diag = row.norm_drift = row.deviation = kNaN;
  }
  return row;
}

std::vector<RunResult> run_sweep(const SweepConfig& config) {
  config.validate();
  struct Point {
    double k, mu, U;
  };
  std::vector<Point> points;
  points.reserve(config.point_count());
  for (double k : config.k_grid) {
    for (double mu : config.mu_grid) {
      for (double U : config.U_grid) points.push_back({k, mu, U});
    }
  }

  std::vector<RunResult> results(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      results[i] = run_point(config, points[i].k, points[i].mu, points[i].U);
    }
  };
  std::size_t n_workers =
      config.workers > 0 ? std::size_t(config.workers)
                         : std::max(1u, std::thread::hardware_concurrency());
  n_workers = std::min(n_workers, points.size());
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < n_workers; ++w) pool.emplace_back(worker);
  worker();
  pool.clear();

  flag_resonances(results, config.flag_threshold);
  return results;
}

std::size_t flag_resonances(std::vector<RunResult>& results,
                            double threshold) {
  std::size_t count = 0;
  for (auto& row : results) {
    row.flagged = !row.failed && std::abs(row.deviation) > threshold;
    count += row.flagged;
  }
  return count;
}

Snapshot run_snapshot(const SweepConfig& config) {
  config.validate();
  TwoParticleState<double> final_state;
  Snapshot snap;
  snap.summary = run_point(config, config.k_grid.front(),
                           config.mu_grid.front(), config.U_grid.front(),
                           &final_state);
  if (snap.summary.failed) {
    throw NonConvergence("snapshot run failed: " + snap.summary.error);
  }
  snap.density = joint_distribution(final_state);
  return snap;
}

std::vector<SignSymmetryRow> sign_symmetry_audit(
    const std::vector<RunResult>& results) {
  std::map<std::tuple<double, double, double>, const RunResult*> index;
  for (const auto& row : results) {
    if (!row.failed) index[{row.k, row.mu, row.U}] = &row;
  }
  std::vector<SignSymmetryRow> out;
  auto add = [&](const char* kind, const RunResult& row, double mu, double U) {
    const auto it = index.find({row.k, mu, U});
    if (it == index.end()) return;
    out.push_back({kind, row.k, row.mu, row.U,
                   std::abs(row.p_bunch - it->second->p_bunch),
                   std::abs(row.p_analytic - it->second->p_analytic)});
  };
  for (const auto& row : results) {
    if (row.failed) continue;
    if (row.mu > 0.0) add("mu", row, -row.mu, row.U);
    if (row.U > 0.0) add("U", row, row.mu, -row.U);
  }
  return out;
}

}  // namespace hom
