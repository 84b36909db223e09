#ifndef HOM_EXPERIMENT_VERIFICATION_HPP
#define HOM_EXPERIMENT_VERIFICATION_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hom/state_prep.hpp"

namespace hom {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Normalized state with i.i.d. complex Gaussian amplitudes.
TwoParticleState<double> random_state(int L, std::mt19937_64& rng);

/// Extremal eigenvalue (largest if potential > 0, else smallest) of an open
/// chain with the given hopping and a single on-site potential at its centre.
double chain_bound_energy(double hopping, double potential, int sites);

// Each check is deterministic (fixed seeds).
CheckResult check_scattering_unitarity();
CheckResult check_fifty_fifty();
CheckResult check_hom_identities();
CheckResult check_bound_states();
CheckResult check_hamiltonian_symmetries();
CheckResult check_propagator_oracle(int cases = 20, int L = 11,
                                    std::uint64_t seed = 2024);
CheckResult check_symmetry_conservation();

/// Runs every check above in order.
std::vector<CheckResult> run_verification();

}  // namespace hom

#endif  // HOM_EXPERIMENT_VERIFICATION_HPP
