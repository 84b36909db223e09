#ifndef HOM_EXPERIMENT_TOLERANCES_HPP
#define HOM_EXPERIMENT_TOLERANCES_HPP

// Acceptance thresholds for numeric-vs-closed-form comparisons. The
// published comparisons are graphical only, so these are fixed choices.
namespace hom::tolerance {

/// Max |numeric - closed form| for non-interacting sweeps.
inline constexpr double kNonInteracting = 0.02;
/// Max |numeric - closed form| for interacting sweeps outside flagged rows;
/// also the default resonance flag threshold.
inline constexpr double kInteracting = 0.05;
/// Max numeric bunching for fermions in a D-even state.
inline constexpr double kFermionSuppression = 0.01;
/// Max pointwise gap between fermion-entangled and boson-product numerics.
inline constexpr double kStatisticsSwap = 0.02;
/// Max numeric bunching for U = 100 J at the 50-50 point.
inline constexpr double kHardCore = 0.02;
/// Minimal |P(+x) - P(-x)| counted as a broken sign symmetry.
inline constexpr double kSignSymmetryBreak = 0.01;
/// Half-width of the window around k = 3 pi / 4 expected to be flagged.
inline constexpr double kResonanceWindow = 0.15;

inline constexpr double kNormDrift = 1e-10;
inline constexpr double kPropagatorOracle = 1e-8;
inline constexpr double kEnergyDrift = 1e-8;
inline constexpr double kBoundStateOracle = 1e-6;
inline constexpr double kSectorLeak = 1e-9;
inline constexpr double kExact = 1e-12;

}  // namespace hom::tolerance

#endif  // HOM_EXPERIMENT_TOLERANCES_HPP
