#ifndef HOM_EXPERIMENT_CSV_HPP
#define HOM_EXPERIMENT_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hom/experiment/experiment.hpp"

namespace hom {

inline constexpr const char* kSweepHeader =
    "k,mu,U,epsilon,delta,statistics,P_analytic,P_bunch,P_coinc,P_barrier,"
    "P_pair_diag,norm_drift,deviation,flagged";

/// Shortest round-trip representation; "nan" for NaN.
std::string format_real(double x);

void write_sweep_csv(std::ostream& out, const std::vector<RunResult>& rows);

/// One '#' metadata line, then L rows of L densities (row = first particle).
void write_snapshot_csv(std::ostream& out, const SweepConfig& config,
                        const Snapshot& snapshot);

void write_audit_csv(std::ostream& out,
                     const std::vector<SignSymmetryRow>& rows);

/// Parses a snapshot file back into its density grid.
RealGrid<double> read_snapshot_grid(std::istream& in);

}  // namespace hom

#endif  // HOM_EXPERIMENT_CSV_HPP
