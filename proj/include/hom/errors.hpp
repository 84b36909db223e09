#ifndef HOM_ERRORS_HPP
#define HOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hom {

/// Quasimomentum too close to the band edge (|sin k| below the cutoff).
class DegenerateQuasimomentum : public std::domain_error {
 public:
  explicit DegenerateQuasimomentum(const std::string& what)
      : std::domain_error(what) {}
};

/// Bound-state query for a scatterer of zero strength.
class ZeroStrength : public std::domain_error {
 public:
  explicit ZeroStrength(const std::string& what) : std::domain_error(what) {}
};

class InvalidParameters : public std::invalid_argument {
 public:
  explicit InvalidParameters(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Wavepacket does not fit on the lattice.
class PlacementError : public std::invalid_argument {
 public:
  explicit PlacementError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Symmetrization produced a (numerically) zero state.
class AnnihilatedState : public std::domain_error {
 public:
  explicit AnnihilatedState(const std::string& what)
      : std::domain_error(what) {}
};

class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

class NonConvergence : public std::runtime_error {
 public:
  explicit NonConvergence(const std::string& what)
      : std::runtime_error(what) {}
};

/// Dense work requested beyond the configured size budget.
class SizeLimitExceeded : public std::length_error {
 public:
  explicit SizeLimitExceeded(const std::string& what)
      : std::length_error(what) {}
};

class WeightNormalization : public std::invalid_argument {
 public:
  explicit WeightNormalization(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace hom

#endif  // HOM_ERRORS_HPP
