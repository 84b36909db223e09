#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "hom/hom_analytics.hpp"

using Catch::Approx;
using hom::Parity;
using hom::SymmetrySector;
using std::numbers::pi;

namespace {

constexpr SymmetrySector kBosons{Parity::even, Parity::even};
constexpr SymmetrySector kFermions{Parity::odd, Parity::even};

hom::ScatteringAmplitudes<double> fifty_fifty() {
  return hom::barrier_amplitudes(1.0, 2.0, pi / 2);
}

}  // namespace

TEST_CASE("parity conversions", "[analytics]") {
  CHECK(hom::value(Parity::even) == 1);
  CHECK(hom::value(Parity::odd) == -1);
  CHECK(hom::parity_from_int(-1) == Parity::odd);
  CHECK_THROWS_AS(hom::parity_from_int(0), hom::InvalidParameters);
  for (const auto& s : hom::kAllSectors) {
    CHECK(hom::kAllSectors[hom::sector_index(s)] == s);
  }
}

TEST_CASE("mirror phases", "[analytics]") {
  CHECK(hom::e_mirror_phase(1.0, 7.0, pi / 3, Parity::odd) ==
        std::complex<double>(-1.0));
  CHECK(std::abs(hom::e_mirror_phase(1.0, 0.0, pi / 2, Parity::even) - 1.0) <
        1e-15);
  const auto phase = hom::e_mirror_phase(1.0, 4.0, pi / 2, Parity::even);
  CHECK(std::abs(phase - std::complex<double>(0.0, -1.0)) < 1e-15);
  CHECK(std::abs(std::abs(phase) - 1.0) < 1e-12);

  CHECK(hom::d_mirror_phase(Parity::even) == std::complex<double>(1.0));
  CHECK(hom::d_mirror_phase(Parity::odd) == std::complex<double>(-1.0));

  // Boson phase against the closed form (4iJ s + U) / (4iJ s - U).
  for (double k : {0.3, 1.1, 2.0, 2.9}) {
    for (double U : {-5.0, -0.7, 0.0, 1.0, 8.0}) {
      const std::complex<double> drive(0.0, 4.0 * std::sin(k));
      const auto expected = (drive + U) / (drive - U);
      const auto got = hom::e_mirror_phase(1.0, U, k, Parity::even);
      CHECK(std::abs(got - expected) < 1e-14);
      CHECK(std::abs(std::abs(got) - 1.0) < 1e-12);
    }
  }
  CHECK_THROWS_AS(hom::e_mirror_phase(1.0, 1.0, 0.0, Parity::even),
                  hom::DegenerateQuasimomentum);
}

TEST_CASE("bunching and coincidence from amplitudes", "[analytics]") {
  const auto half = fifty_fifty();
  const hom::MirrorPhases<double> plus{1.0, 1.0};
  const hom::MirrorPhases<double> minus{-1.0, 1.0};
  const hom::MirrorPhases<double> quarter{{0.0, -1.0}, 1.0};

  CHECK(hom::bunching_probability(half, plus) == Approx(1.0).epsilon(1e-14));
  CHECK(hom::coincidence_probability(half, plus) ==
        Approx(0.0).margin(1e-14));
  CHECK(hom::bunching_probability(half, minus) == 0.0);
  CHECK(hom::bunching_probability(hom::barrier_amplitudes(1.0, 0.7, 1.2),
                                  minus) == 0.0);
  CHECK(hom::bunching_probability(half, quarter) ==
        Approx(0.5).epsilon(1e-14));

  const hom::ScatteringAmplitudes<double> open{1.0, 0.0};
  CHECK(hom::coincidence_probability(open, plus) == 1.0);
  CHECK(hom::coincidence_probability(open, quarter) == 1.0);

  const auto partial = hom::barrier_amplitudes(1.0, 1.0, pi / 2);
  CHECK(hom::coincidence_probability(partial, plus) ==
        Approx(1.0 - 0.64).epsilon(1e-14));
}

TEST_CASE("complementarity on random unitary amplitudes",
          "[analytics][property]") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> angle(-pi, pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0;
  for (int i = 0; i < 2000; ++i) {
    // t = cos(a) e^{i b}, r = i sin(a) e^{i b} satisfies both unitarity
    // conditions.
    const double a = angle(rng) / 2, b = angle(rng);
    const hom::ScatteringAmplitudes<double> amps{
        std::polar(std::cos(a), b),
        std::complex<double>(0, 1) * std::polar(std::sin(a), b)};
    const hom::MirrorPhases<double> phases{std::polar(1.0, angle(rng)),
                                           std::polar(1.0, angle(rng))};
    worst = std::max(worst, std::abs(hom::bunching_probability(amps, phases) +
                                     hom::coincidence_probability(amps, phases) -
                                     1.0));
    // Barrier-derived amplitudes as well.
    const auto barrier =
        hom::barrier_amplitudes(0.5 + unit(rng), 6.0 * (unit(rng) - 0.5),
                                0.05 + 3.0 * unit(rng));
    worst = std::max(worst,
                     std::abs(hom::bunching_probability(barrier, phases) +
                              hom::coincidence_probability(barrier, phases) -
                              1.0));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("non-interacting bunching", "[analytics]") {
  CHECK(hom::bunching_noninteracting(1.0, 2.0, pi / 2, kBosons) ==
        Approx(1.0).epsilon(1e-15));
  CHECK(hom::bunching_noninteracting(1.0, 2.0, pi / 2, kFermions) == 0.0);
  CHECK(hom::bunching_noninteracting(1.0, 1.0, pi / 2, kBosons) ==
        Approx(0.64).epsilon(1e-15));
  CHECK_THROWS_AS(hom::bunching_noninteracting(1.0, 1.0, 0.0, kBosons),
                  hom::DegenerateQuasimomentum);

  for (double k = 0.05; k < pi; k += 0.05) {
    for (double mu = -3.0; mu <= 3.0; mu += 0.25) {
      for (const auto& s : hom::kAllSectors) {
        const double p = hom::bunching_noninteracting(1.0, mu, k, s);
        if (s.epsilon != s.delta) {
          CHECK(p == 0.0);
        } else {
          CHECK(p == hom::bunching_noninteracting(
                         1.0, mu, k, SymmetrySector{Parity::even, Parity::even}));
          const auto a = hom::barrier_amplitudes(1.0, mu, k);
          CHECK(std::abs(p - 4.0 * std::norm(a.t * a.r)) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("interacting bunching", "[analytics]") {
  CHECK(hom::bunching_interacting(1.0, 2.0, 0.0, pi / 2) ==
        Approx(1.0).epsilon(1e-15));
  CHECK(hom::bunching_interacting(1.0, 2.0, 4.0, pi / 2) ==
        Approx(0.5).epsilon(1e-15));
  CHECK(hom::bunching_interacting(1.0, 2.0, 100.0, pi / 2) ==
        Approx(16.0 / 10016.0).epsilon(1e-14));
  CHECK_THROWS_AS(hom::bunching_interacting(1.0, 2.0, 1.0, pi),
                  hom::DegenerateQuasimomentum);
}

TEST_CASE("interacting bunching properties", "[analytics][property]") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> kd(0.05, pi - 0.05);
  std::uniform_real_distribution<double> coupling(-6.0, 6.0);
  for (int i = 0; i < 1000; ++i) {
    const double k = kd(rng), mu = coupling(rng), U = coupling(rng);
    const double p = hom::bunching_interacting(1.0, mu, U, k);
    const double p0 = hom::bunching_noninteracting(1.0, mu, k, kBosons);

    CHECK(p >= 0.0);
    CHECK(p < p0);  // |U| > 0 and |mu| > 0 almost surely
    CHECK(std::abs(hom::bunching_interacting(1.0, mu, U, pi - k) - p) < 1e-14);
    CHECK(std::abs(hom::bunching_interacting(1.0, mu, -U, k) - p) < 1e-15);
    CHECK(std::abs(hom::bunching_interacting(1.0, -mu, U, k) - p) < 1e-15);

    const hom::MirrorPhases<double> phases{
        hom::e_mirror_phase(1.0, U, k, Parity::even),
        hom::d_mirror_phase(Parity::even)};
    CHECK(std::abs(hom::bunching_probability(
                       hom::barrier_amplitudes(1.0, mu, k), phases) -
                   p) <= 1e-12);

    // Monotone decrease in |U|.
    CHECK(hom::bunching_interacting(1.0, mu, 1.5 * U, k) <= p);
  }
}

TEST_CASE("mixed-state bunching", "[analytics]") {
  const hom::SectorMap<double> pure{1.0, 0.0, 0.0, 0.0};
  CHECK(hom::mixed_state_bunching(pure, {1.0, 0.0, 0.0, 0.0}) == 1.0);

  const auto amps = fifty_fifty();
  const hom::SectorMap<double> half_eps{0.5, 0.5, 0.0, 0.0};
  const hom::SectorMap<double> probs{1.0, 0.0, 0.0, 0.0};
  CHECK(hom::mixed_state_bunching(half_eps, probs) ==
        Approx(2.0 * std::norm(amps.r * amps.t)).epsilon(1e-14));

  const double P = hom::bunching_noninteracting(1.0, 1.0, 1.0, kBosons);
  const hom::SectorMap<double> half_delta{0.5, 0.0, 0.5, 0.0};
  CHECK(hom::mixed_state_bunching(half_delta, {P, 0.0, 0.0, 0.0}) ==
        Approx(P / 2));

  CHECK_THROWS_AS(hom::mixed_state_bunching<double>({0.5, 0.4, 0.0, 0.0},
                                                    probs),
                  hom::WeightNormalization);
  CHECK_THROWS_AS(hom::mixed_state_bunching<double>({1.2, -0.2, 0.0, 0.0},
                                                    probs),
                  hom::WeightNormalization);
  CHECK_NOTHROW(hom::mixed_state_bunching<double>({0.5, 0.5 + 5e-10, 0, 0},
                                                  probs));
}
