#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "hom/lattice_scattering.hpp"
#include "support/oracles.hpp"

using Catch::Approx;
using std::numbers::pi;

namespace {

std::vector<double> k_grid(int n) {
  std::vector<double> k;
  for (int i = 1; i <= n; ++i) k.push_back(pi * i / (n + 1));
  return k;
}

}  // namespace

TEST_CASE("dispersion and group velocity", "[scattering]") {
  CHECK(hom::dispersion_energy(1.0, pi / 2) == Approx(0.0).margin(1e-15));
  CHECK(hom::dispersion_energy(1.0, 0.0) == -2.0);
  CHECK(hom::dispersion_energy(1.0, pi / 3) == Approx(-1.0));
  CHECK(hom::group_velocity(1.0, pi / 2) == 2.0);
  CHECK(hom::group_velocity(1.0, pi / 6) == Approx(1.0));
  CHECK(hom::group_velocity(2.0, pi / 2) == 4.0);
}

TEST_CASE("barrier amplitudes", "[scattering]") {
  SECTION("no barrier transmits everything") {
    const auto a = hom::barrier_amplitudes(1.0, 0.0, pi / 3);
    CHECK(std::abs(a.t - 1.0) < 1e-15);
    CHECK(std::abs(a.r) == 0.0);
  }
  SECTION("mu = 2J sin k splits 50-50") {
    const auto a = hom::barrier_amplitudes(1.0, 2.0, pi / 2);
    CHECK(a.transmission() == Approx(0.5).epsilon(1e-14));
    CHECK(a.reflection() == Approx(0.5).epsilon(1e-14));
  }
  SECTION("mu = J at k = pi/2") {
    const auto a = hom::barrier_amplitudes(1.0, 1.0, pi / 2);
    CHECK(std::abs(a.t - std::complex<double>(0.8, -0.4)) < 1e-15);
    CHECK(std::abs(a.r - std::complex<double>(-0.2, -0.4)) < 1e-15);
    CHECK(a.transmission() + a.reflection() == Approx(1.0).epsilon(1e-15));
  }
  SECTION("band edge is rejected") {
    CHECK_THROWS_AS(hom::barrier_amplitudes(1.0, 1.0, 0.0),
                    hom::DegenerateQuasimomentum);
    CHECK_THROWS_AS(hom::barrier_amplitudes(1.0, 1.0, pi),
                    hom::DegenerateQuasimomentum);
    CHECK_THROWS_AS(hom::barrier_amplitudes(1.0, 1.0, 5e-7),
                    hom::DegenerateQuasimomentum);
    CHECK_NOTHROW(hom::barrier_amplitudes(1.0, 1.0, 2e-6));
    CHECK_NOTHROW(hom::barrier_amplitudes(1.0, 1.0, 0.01, 1e-3));
    CHECK_THROWS_AS(hom::barrier_amplitudes(1.0, 1.0, 0.01, 0.1),
                    hom::DegenerateQuasimomentum);
  }
}

TEST_CASE("unitarity on a 100 x 100 grid", "[scattering][property]") {
  double worst_norm = 0, worst_cross = 0, worst_oracle = 0;
  for (double k : k_grid(100)) {
    for (int i = 0; i < 100; ++i) {
      const double mu = -5.0 + 10.0 * i / 99.0;
      for (double J : {0.5, 1.0}) {
        const auto a = hom::barrier_amplitudes(J, mu, k);
        worst_norm = std::max(worst_norm, std::abs(a.transmission() +
                                                   a.reflection() - 1.0));
        worst_cross = std::max(worst_cross, std::abs((a.t * std::conj(a.r) +
                                                      std::conj(a.t) * a.r)));
        worst_oracle = std::max(
            worst_oracle, std::abs(a.transmission() -
                                   oracle::transmission_probability(J, mu, k)));
      }
    }
  }
  CHECK(worst_norm <= 1e-12);
  CHECK(worst_cross <= 1e-12);
  CHECK(worst_oracle <= 1e-12);
}

TEST_CASE("fifty-fifty barrier", "[scattering]") {
  CHECK(hom::fifty_fifty_barrier(1.0, pi / 2) == 2.0);
  CHECK(hom::fifty_fifty_barrier(1.0, pi / 6) == Approx(1.0));
  CHECK(hom::fifty_fifty_barrier(1.0, pi / 3) ==
        Approx(1.7320508075688772).epsilon(1e-15));
  CHECK_THROWS_AS(hom::fifty_fifty_barrier(1.0, 0.0),
                  hom::DegenerateQuasimomentum);
  for (double k : k_grid(100)) {
    const auto a =
        hom::barrier_amplitudes(1.0, hom::fifty_fifty_barrier(1.0, k), k);
    CHECK(std::abs(a.transmission() - 0.5) <= 1e-12);
  }
}

TEST_CASE("relative-coordinate amplitudes", "[scattering]") {
  const auto free = hom::relative_amplitudes(1.0, 0.0, pi / 3);
  CHECK(std::abs(free.t - 1.0) < 1e-15);
  CHECK(free.r == std::complex<double>(0.0));

  const auto a = hom::relative_amplitudes(1.0, 4.0, pi / 2);
  CHECK(std::abs(a.t - std::complex<double>(0.5, -0.5)) < 1e-15);
  CHECK(std::abs(a.r - std::complex<double>(-0.5, -0.5)) < 1e-15);
  CHECK(a.transmission() + a.reflection() == Approx(1.0).epsilon(1e-15));

  for (double k : k_grid(37)) {
    for (double U : {-7.0, -1.0, 0.3, 2.0, 9.0}) {
      const auto rel = hom::relative_amplitudes(1.3, U, k);
      const auto mapped = hom::barrier_amplitudes(2.6, U, k);
      CHECK(rel.t == mapped.t);
      CHECK(rel.r == mapped.r);
    }
  }
}

TEST_CASE("barrier bound state", "[scattering][bound]") {
  const auto b = hom::barrier_bound_state(1.0, 2.0);
  CHECK(b.kappa == Approx(0.881373587019543).epsilon(1e-14));
  CHECK(b.energy == Approx(2.8284271247461903).epsilon(1e-14));
  CHECK(b.attached_sign == 1);
  CHECK(std::sinh(b.kappa) == Approx(1.0).epsilon(1e-14));

  const auto neg = hom::barrier_bound_state(1.0, -2.0);
  CHECK(neg.energy == Approx(-2.8284271247461903).epsilon(1e-14));
  CHECK(neg.attached_sign == -1);

  const auto weak = hom::barrier_bound_state(1.0, 1e-8);
  CHECK(weak.energy == Approx(2.0).epsilon(1e-12));
  CHECK(weak.kappa > 0);

  CHECK_THROWS_AS(hom::barrier_bound_state(1.0, 0.0), hom::ZeroStrength);

  for (double mu : {-3.0, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0}) {
    const auto s = hom::barrier_bound_state(1.0, mu);
    CHECK(std::abs(s.energy - oracle::out_of_band_eigenvalue(1.0, mu, 61)) <=
          1e-6);
    CHECK(std::abs(s.energy) > 2.0);
    CHECK(s.kappa > 0);
  }
}

TEST_CASE("pair bound state", "[scattering][bound]") {
  CHECK(hom::pair_bound_state(1.0, 4.0).energy ==
        Approx(5.656854249492381).epsilon(1e-14));
  CHECK(hom::pair_bound_state(1.0, -4.0).energy ==
        Approx(-5.656854249492381).epsilon(1e-14));
  const double weak = hom::pair_bound_state(1.0, 0.1).energy;
  CHECK(weak > 4.0);
  CHECK(weak < 4.01);
  CHECK_THROWS_AS(hom::pair_bound_state(1.0, 0.0), hom::ZeroStrength);

  // Relative coordinate: hopping 2J, on-site U.
  for (double U : {-4.0, -2.0, 1.0, 2.0, 4.0}) {
    CHECK(std::abs(hom::pair_bound_state(1.0, U).energy -
                   oracle::out_of_band_eigenvalue(2.0, U, 401)) <= 1e-6);
  }
  CHECK(std::abs(hom::pair_bound_state(1.0, 4.0).energy -
                 oracle::out_of_band_eigenvalue(2.0, 4.0, 61)) <= 1e-6);
}

TEST_CASE("model parameter validation", "[scattering]") {
  CHECK_NOTHROW(hom::ModelParams<double>{1.0, 0.0, 0.0, 3}.validate());
  CHECK_THROWS_AS((hom::ModelParams<double>{1.0, 0.0, 0.0, 4}.validate()),
                  hom::InvalidParameters);
  CHECK_THROWS_AS((hom::ModelParams<double>{1.0, 0.0, 0.0, 1}.validate()),
                  hom::InvalidParameters);
  CHECK_THROWS_AS((hom::ModelParams<double>{0.0, 0.0, 0.0, 11}.validate()),
                  hom::InvalidParameters);
  CHECK(hom::ModelParams<double>{1.0, 0.0, 0.0, 61}.half_width() == 30);
}

TEST_CASE("other scalar types", "[scattering]") {
  const auto af = hom::barrier_amplitudes(1.0f, 2.0f, float(pi / 2));
  CHECK(af.transmission() == Approx(0.5f).epsilon(1e-6));
  const auto al = hom::barrier_amplitudes(1.0L, 1.0L, std::numbers::pi_v<long double> / 2);
  CHECK(std::abs(al.t - std::complex<long double>(0.8L, -0.4L)) < 1e-18L);
}
