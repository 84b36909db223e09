#ifndef HOM_EXPERIMENT_CONFIG_HPP
#define HOM_EXPERIMENT_CONFIG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hom/experiment/tolerances.hpp"

namespace hom {

enum class Statistics { boson, fermion, distinguishable };
enum class InitialState { product, entangled };
enum class TimeRule { border, snapshot };

std::string to_string(Statistics s);
std::string to_string(InitialState s);
std::string to_string(TimeRule r);

/// One sweep over the k x mu x U grid. Points run in grid order
/// k (outermost), mu, U.
struct SweepConfig {
  double J = 1.0;
  int L = 61;
  std::vector<double> k_grid;
  std::vector<double> mu_grid;
  std::vector<double> U_grid;
  Statistics statistics = Statistics::boson;
  InitialState initial_state = InitialState::product;
  double c = -15.0;
  double sigma = 5.0;
  TimeRule time_rule = TimeRule::border;
  std::string output;
  double flag_threshold = tolerance::kInteracting;
  int pair_band = 0;
  /// 0 picks the hardware concurrency.
  int workers = 0;

  std::size_t point_count() const {
    return k_grid.size() * mu_grid.size() * U_grid.size();
  }

  /// Throws InvalidParameters / PlacementError on a malformed config.
  void validate() const;
  /// Non-fatal geometry concerns (packet overlap, narrow packets).
  std::vector<std::string> warnings() const;
};

/// n evenly spaced points in [pi/6, 5 pi/6].
std::vector<double> default_k_grid(int n = 25);

/// fig4, fig4_fermion, fig5a, fig5b, fig6 and hardcore.
SweepConfig preset(std::string_view name);
std::vector<std::string> preset_names();

/// JSON document; an optional "preset" key selects the base config and the
/// remaining keys override it.
SweepConfig parse_config(std::string_view text);
SweepConfig load_config(const std::string& path);

}  // namespace hom

#endif  // HOM_EXPERIMENT_CONFIG_HPP
