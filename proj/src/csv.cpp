#include "hom/experiment/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "hom/errors.hpp"

namespace hom {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_sweep_csv(std::ostream& out, const std::vector<RunResult>& rows) {
  out << kSweepHeader << '\n';
  for (const auto& r : rows) {
    out << format_real(r.k) << ',' << format_real(r.mu) << ','
        << format_real(r.U) << ',' << r.epsilon << ',' << r.delta << ','
        << to_string(r.statistics) << ',' << format_real(r.p_analytic) << ','
        << format_real(r.p_bunch) << ',' << format_real(r.p_coinc) << ','
        << format_real(r.p_barrier) << ',' << format_real(r.p_pair_diag)
        << ',' << format_real(r.norm_drift) << ','
        << format_real(r.deviation) << ',' << (r.flagged ? 1 : 0) << '\n';
  }
}

void write_snapshot_csv(std::ostream& out, const SweepConfig& config,
                        const Snapshot& snapshot) {
  const auto& s = snapshot.summary;
  out << "# k=" << format_real(s.k) << " mu=" << format_real(s.mu)
      << " U=" << format_real(s.U) << " J=" << format_real(config.J)
      << " L=" << config.L << " c=" << format_real(config.c)
      << " sigma=" << format_real(config.sigma)
      << " statistics=" << to_string(config.statistics)
      << " initial_state=" << to_string(config.initial_state)
      << " t=" << format_real(s.time) << " P_bunch=" << format_real(s.p_bunch)
      << " P_coinc=" << format_real(s.p_coinc)
      << " P_barrier=" << format_real(s.p_barrier)
      << " P_pair_diag=" << format_real(s.p_pair_diag)
      << " norm_drift=" << format_real(s.norm_drift) << '\n';
  const auto& d = snapshot.density;
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      if (j) out << ',';
      out << format_real(d(i, j));
    }
    out << '\n';
  }
}

void write_audit_csv(std::ostream& out,
                     const std::vector<SignSymmetryRow>& rows) {
  out << "kind,k,mu,U,numeric_gap,analytic_gap\n";
  for (const auto& r : rows) {
    out << r.kind << ',' << format_real(r.k) << ',' << format_real(r.mu)
        << ',' << format_real(r.U) << ',' << format_real(r.numeric_gap) << ','
        << format_real(r.analytic_gap) << '\n';
  }
}

RealGrid<double> read_snapshot_grid(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  RealGrid<double> grid(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != n) {
      throw DimensionMismatch("snapshot grid is not square");
    }
    for (Eigen::Index j = 0; j < n; ++j) grid(i, j) = rows[i][j];
  }
  return grid;
}

}  // namespace hom
