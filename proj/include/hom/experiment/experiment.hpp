#ifndef HOM_EXPERIMENT_EXPERIMENT_HPP
#define HOM_EXPERIMENT_EXPERIMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "hom/experiment/config.hpp"
#include "hom/hom_analytics.hpp"
#include "hom/state_prep.hpp"

namespace hom {

/// One grid point of a sweep.
struct RunResult {
  double k = 0;
  double mu = 0;
  double U = 0;
  /// Exchange parity of the prepared state; 0 for distinguishable particles.
  int epsilon = 0;
  int delta = 0;
  Statistics statistics = Statistics::boson;
  double time = 0;
  /// NaN when no closed form is available for the prepared sectors.
  double p_analytic = 0;
  double p_bunch = 0;
  double p_coinc = 0;
  double p_barrier = 0;
  double p_pair_diag = 0;
  double norm_drift = 0;
  double deviation = 0;
  bool flagged = false;
  bool failed = false;
  std::string error;
};

/// Closed-form bunching of a pure (epsilon, delta) sector. Empty for the
/// interacting boson D-odd sector, which has no stated closed form.
std::optional<double> analytic_sector_bunching(double J, double mu, double U,
                                               double k,
                                               const SymmetrySector& sector);

/// Initial state of one grid point, symmetrized (or just normalized for
/// distinguishable particles).
TwoParticleState<double> prepare_state(const SweepConfig& config, double k);

double evaluation_time(const SweepConfig& config, double k);

/// Evolves one point and measures it. Errors are recorded in the result.
RunResult run_point(const SweepConfig& config, double k, double mu, double U,
                    TwoParticleState<double>* final_state = nullptr);

/// All grid points in grid order, evaluated on a bounded worker pool.
std::vector<RunResult> run_sweep(const SweepConfig& config);

/// Marks rows whose |deviation| exceeds the threshold. Returns the number of
/// flagged rows.
std::size_t flag_resonances(std::vector<RunResult>& results, double threshold);

struct Snapshot {
  RunResult summary;
  RealGrid<double> density;
};

/// Single-point run keeping the full joint distribution. Uses the first
/// value of each grid.
Snapshot run_snapshot(const SweepConfig& config);

/// |P(+x) - P(-x)| for points whose mirror (mu -> -mu or U -> -U) is also in
/// the sweep.
struct SignSymmetryRow {
  std::string kind;  // "mu" or "U"
  double k;
  double mu;
  double U;
  double numeric_gap;
  double analytic_gap;
};

std::vector<SignSymmetryRow> sign_symmetry_audit(
    const std::vector<RunResult>& results);

}  // namespace hom

#endif  // HOM_EXPERIMENT_EXPERIMENT_HPP
