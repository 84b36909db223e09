// Command-line driver: parameter sweeps, joint-distribution snapshots,
// closed-form values and the built-in verification suite.
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hom/evolution.hpp"
#include "hom/experiment/config.hpp"
#include "hom/experiment/csv.hpp"
#include "hom/experiment/experiment.hpp"
#include "hom/experiment/verification.hpp"
#include "hom/hom_analytics.hpp"
#include "hom/lattice_scattering.hpp"

namespace {

struct RunOptions {
  std::string config_path;
  std::string preset;
  std::string output;
  int workers = -1;
};

hom::SweepConfig resolve_config(const RunOptions& opts) {
  hom::SweepConfig config = opts.config_path.empty()
                                ? hom::preset(opts.preset)
                                : hom::load_config(opts.config_path);
  if (!opts.output.empty()) config.output = opts.output;
  if (opts.workers >= 0) config.workers = opts.workers;
  config.validate();
  for (const auto& w : config.warnings()) {
    std::cerr << "warning: " << w << '\n';
  }
  return config;
}

// Writes to the configured path, or stdout when none is set.
template <typename Writer>
void emit(const std::string& path, Writer&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write(out);
}

int run_sweep_command(const RunOptions& opts) {
  const auto config = resolve_config(opts);
  const auto results = hom::run_sweep(config);
  emit(config.output,
       [&](std::ostream& os) { hom::write_sweep_csv(os, results); });

  int failures = 0;
  for (const auto& r : results) {
    if (r.failed) {
      ++failures;
      std::cerr << "FAILED k=" << r.k << " mu=" << r.mu << " U=" << r.U
                << ": " << r.error << '\n';
    }
  }
  std::size_t flagged = 0;
  double max_dev = 0;
  for (const auto& r : results) {
    flagged += r.flagged;
    if (!r.failed && !std::isnan(r.deviation)) {
      max_dev = std::max(max_dev, std::abs(r.deviation));
    }
  }
  std::cerr << results.size() << " points, " << flagged
            << " flagged (threshold " << config.flag_threshold
            << "), max |deviation| " << max_dev << '\n';

  const auto audit = hom::sign_symmetry_audit(results);
  if (!audit.empty()) {
    double numeric = 0, analytic = 0;
    for (const auto& a : audit) {
      numeric = std::max(numeric, a.numeric_gap);
      analytic = std::max(analytic, a.analytic_gap);
    }
    std::cerr << "sign symmetry: " << audit.size()
              << " pairs, max numeric gap " << numeric
              << ", max analytic gap " << analytic << '\n';
    if (!config.output.empty()) {
      emit(config.output + ".audit.csv",
           [&](std::ostream& os) { hom::write_audit_csv(os, audit); });
    }
  }
  return failures == 0 ? 0 : 1;
}

int run_snapshot_command(const RunOptions& opts) {
  const auto config = resolve_config(opts);
  const auto snap = hom::run_snapshot(config);
  emit(config.output, [&](std::ostream& os) {
    hom::write_snapshot_csv(os, config, snap);
  });
  return 0;
}

struct AnalyticOptions {
  double J = 1.0;
  double mu = 2.0;
  double U = 0.0;
  std::optional<double> k;
  std::optional<double> k_over_pi;
  int epsilon = 1;
  int delta = 1;
};

void print_value(const char* key, double v) {
  std::cout << key << '=' << hom::format_real(v) << '\n';
}

void print_value(const char* key, std::complex<double> v) {
  std::cout << key << '=' << hom::format_real(v.real()) << ','
            << hom::format_real(v.imag()) << '\n';
}

int run_analytic_command(const AnalyticOptions& o) {
  const double k = o.k ? *o.k
                       : o.k_over_pi.value_or(0.5) * std::numbers::pi;
  const hom::SymmetrySector sector{hom::parity_from_int(o.epsilon),
                                   hom::parity_from_int(o.delta)};
  const auto amps = hom::barrier_amplitudes(o.J, o.mu, k);
  const auto rel = hom::relative_amplitudes(o.J, o.U, k);
  const hom::MirrorPhases<double> phases{
      hom::e_mirror_phase(o.J, o.U, k, sector.epsilon),
      hom::d_mirror_phase<double>(sector.delta)};

  print_value("k", k);
  print_value("energy", hom::dispersion_energy(o.J, k));
  print_value("group_velocity", hom::group_velocity(o.J, k));
  print_value("t", amps.t);
  print_value("r", amps.r);
  print_value("transmission", amps.transmission());
  print_value("reflection", amps.reflection());
  print_value("mu_50_50", hom::fifty_fifty_barrier(o.J, k));
  print_value("t_rel", rel.t);
  print_value("r_rel", rel.r);
  print_value("e_phase", phases.e_phase);
  print_value("d_phase", phases.d_phase);
  print_value("P_bunch", hom::bunching_probability(amps, phases));
  print_value("P_coinc", hom::coincidence_probability(amps, phases));
  print_value("P_bunch_noninteracting",
              hom::bunching_noninteracting(o.J, o.mu, k, sector));
  if (sector.epsilon == hom::Parity::even &&
      sector.delta == hom::Parity::even) {
    print_value("P_bunch_interacting",
                hom::bunching_interacting(o.J, o.mu, o.U, k));
  }
  if (o.mu != 0.0) {
    const auto b = hom::barrier_bound_state(o.J, o.mu);
    print_value("barrier_bound_kappa", b.kappa);
    print_value("barrier_bound_energy", b.energy);
  }
  if (o.U != 0.0) {
    const auto b = hom::pair_bound_state(o.J, o.U);
    print_value("pair_bound_kappa", b.kappa);
    print_value("pair_bound_energy", b.energy);
  }
  return 0;
}

int run_verify_command() {
  int failures = 0;
  for (const auto& check : hom::run_verification()) {
    std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << ": "
              << check.detail << '\n';
    failures += !check.passed;
  }
  if (failures) std::cout << failures << " check(s) failed\n";
  return failures == 0 ? 0 : 1;
}

void add_run_options(CLI::App* cmd, RunOptions& opts) {
  auto* config = cmd->add_option("--config", opts.config_path,
                                 "JSON config file")
                     ->check(CLI::ExistingFile);
  auto* preset =
      cmd->add_option("--preset", opts.preset, "Built-in scenario")
          ->check(CLI::IsMember(hom::preset_names()));
  config->excludes(preset);
  cmd->add_option("-o,--output", opts.output,
                  "Output CSV path (overrides the config; default stdout)");
  cmd->add_option("--workers", opts.workers,
                  "Worker threads (0 = hardware concurrency)")
      ->check(CLI::NonNegativeNumber);
  cmd->callback([&opts] {
    if (opts.config_path.empty() && opts.preset.empty()) {
      throw CLI::RequiredError("--config or --preset");
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hong-Ou-Mandel interference on a tight-binding lattice"};
  app.require_subcommand(1);

  RunOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep to CSV");
  add_run_options(sweep, sweep_opts);

  RunOptions snapshot_opts;
  auto* snapshot = app.add_subcommand(
      "snapshot", "Write the joint distribution of a single run");
  add_run_options(snapshot, snapshot_opts);

  AnalyticOptions analytic_opts;
  auto* analytic =
      app.add_subcommand("analytic", "Print closed-form predictions");
  analytic->add_option("--J", analytic_opts.J, "Tunnel coupling")
      ->check(CLI::PositiveNumber);
  analytic->add_option("--mu", analytic_opts.mu, "Barrier height");
  analytic->add_option("--U", analytic_opts.U, "Contact interaction");
  auto* k_opt = analytic->add_option("--k", analytic_opts.k, "Quasimomentum");
  analytic->add_option("--k-over-pi", analytic_opts.k_over_pi,
                       "Quasimomentum in units of pi")
      ->excludes(k_opt);
  analytic->add_option("--epsilon", analytic_opts.epsilon, "Exchange parity")
      ->check(CLI::IsMember({-1, 1}));
  analytic->add_option("--delta", analytic_opts.delta, "D parity")
      ->check(CLI::IsMember({-1, 1}));

  auto* verify = app.add_subcommand(
      "verify", "Run the oracle-equivalence and invariant checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) return run_sweep_command(sweep_opts);
    if (snapshot->parsed()) return run_snapshot_command(snapshot_opts);
    if (analytic->parsed()) return run_analytic_command(analytic_opts);
    if (verify->parsed()) return run_verify_command();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
