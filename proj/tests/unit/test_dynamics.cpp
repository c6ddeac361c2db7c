#include <doctest.h>

#include <cmath>
#include <random>

#include "semiq/dynamics.hpp"
#include "semiq/errors.hpp"

using namespace semiq;

namespace {

const SystemParams kUnitParams{1.0, 1.0, 1.0, 0.0};

DynState random_admissible_state(std::mt19937& rng) {
  std::uniform_real_distribution<double> pos(0.05, 2.0);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  std::uniform_real_distribution<double> sym(-2.0, 2.0);
  DynState s;
  s.x2 = pos(rng);
  s.p2 = pos(rng);
  // |l| <= 2 sqrt(x2 p2) keeps the invariant nonnegative.
  s.l = (2.0 * frac(rng) - 1.0) * 2.0 * std::sqrt(s.x2 * s.p2) * frac(rng);
  s.a = sym(rng);
  s.pa = sym(rng);
  return s;
}

}  // namespace

TEST_CASE("vector_field matches direct substitution") {
  SUBCASE("symmetric rest point") {
    const DynState d = vector_field({1.0, 1.0, 0.0, 0.0, 0.0}, kUnitParams);
    CHECK(d.x2 == 0.0);
    CHECK(d.p2 == 0.0);
    CHECK(d.l == 0.0);
    CHECK(d.a == 0.0);
    CHECK(d.pa == 0.0);
  }
  SUBCASE("coupled reservoir displaced") {
    const DynState d = vector_field({1.0, 0.0, 0.0, 1.0, 0.0}, kUnitParams);
    CHECK(d.x2 == 0.0);
    CHECK(d.p2 == 0.0);
    CHECK(d.l == doctest::Approx(-4.0));
    CHECK(d.a == 0.0);
    CHECK(d.pa == doctest::Approx(-2.0));
  }
  SUBCASE("damping acts on pa only") {
    const SystemParams damped{1.0, 1.0, 1.0, 0.05};
    const DynState d = vector_field({1.0, 1.0, 0.0, 0.0, 1.0}, damped);
    CHECK(d.x2 == 0.0);
    CHECK(d.p2 == 0.0);
    CHECK(d.l == 0.0);
    CHECK(d.a == doctest::Approx(1.0));
    CHECK(d.pa == doctest::Approx(-0.05));
  }
}

TEST_CASE("field divergence equals -damping (finite differences)") {
  for (const double eta : {0.0, 0.05}) {
    const SystemParams params{1.0, 1.0, 1.0, eta};
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 100; ++trial) {
      const DynState s = random_admissible_state(rng);
      const double h = 1e-6;
      double trace = 0.0;
      for (int i = 0; i < 5; ++i) {
        DynState lo = s, hi = s;
        double* fields_lo[5] = {&lo.x2, &lo.p2, &lo.l, &lo.a, &lo.pa};
        double* fields_hi[5] = {&hi.x2, &hi.p2, &hi.l, &hi.a, &hi.pa};
        *fields_lo[i] -= h;
        *fields_hi[i] += h;
        const DynState dlo = vector_field(lo, params);
        const DynState dhi = vector_field(hi, params);
        const double comp_lo[5] = {dlo.x2, dlo.p2, dlo.l, dlo.a, dlo.pa};
        const double comp_hi[5] = {dhi.x2, dhi.p2, dhi.l, dhi.a, dhi.pa};
        trace += (comp_hi[i] - comp_lo[i]) / (2.0 * h);
      }
      CHECK(std::abs(trace - (-eta)) < 1e-6);
    }
  }
}

TEST_CASE("motion invariant") {
  CHECK(motion_invariant({1.0, 1.0, 0.0, 0.0, 0.0}) == doctest::Approx(1.0));
  CHECK(motion_invariant({2.0, 0.5, 2.0, 0.0, 0.0}) == doctest::Approx(0.0));

  const DynState s = initial_state(0.6, 0.09, +1, kUnitParams);
  CHECK(motion_invariant(s) == doctest::Approx(0.09).epsilon(1e-12));
}

TEST_CASE("total energy") {
  CHECK(total_energy({0, 0, 0, 0, 0}, kUnitParams) == 0.0);
  CHECK(total_energy({1.0, 1.0, 0.0, 0.0, 0.0}, kUnitParams) ==
        doctest::Approx(1.0));

  const DynState classical = initial_state(0.6, 0.0, +1, kUnitParams);
  CHECK(classical.x2 == doctest::Approx(0.012).epsilon(1e-12));
  CHECK(classical.p2 == 0.0);
  CHECK(total_energy(classical, kUnitParams) ==
        doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("relative energy") {
  CHECK(relative_energy(0.6, 0.36, 1.0) == doctest::Approx(1.0));
  const double i_boundary = (0.6 / 2.8) * (0.6 / 2.8);
  CHECK(relative_energy(0.6, i_boundary, 1.0) ==
        doctest::Approx(2.8).epsilon(1e-12));
  CHECK(relative_energy(0.6, 2.25e-10, 1.0) ==
        doctest::Approx(4e4).epsilon(1e-12));

  CHECK_THROWS_AS((void)relative_energy(0.6, 0.0, 1.0), ConfigError);
  CHECK_THROWS_AS((void)relative_energy(0.6, -1.0, 1.0), ConfigError);
  CHECK_THROWS_AS((void)relative_energy(0.6, 0.1, 0.0), ConfigError);
}

TEST_CASE("invariant_for_relative_energy inverts relative_energy") {
  const double i = invariant_for_relative_energy(0.6, 2.8, 1.0);
  CHECK(relative_energy(0.6, i, 1.0) == doctest::Approx(2.8).epsilon(1e-12));
  CHECK_THROWS_AS((void)invariant_for_relative_energy(0.6, 0.0, 1.0),
                  ConfigError);
}

TEST_CASE("initial state construction") {
  SUBCASE("classical limit I = 0") {
    const DynState s = initial_state(0.6, 0.0, +1, kUnitParams);
    CHECK(s.x2 == doctest::Approx(0.012).epsilon(1e-12));
    CHECK(s.p2 == 0.0);
    CHECK(s.l == 0.0);
    CHECK(s.a == 0.0);
    CHECK(s.pa == doctest::Approx(1.089954).epsilon(1e-6));
  }
  SUBCASE("uncertainty-bound edge I = (E/omega)^2") {
    const DynState s = initial_state(0.6, 0.36, +1, kUnitParams);
    CHECK(s.x2 == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(s.p2 == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(s.pa == doctest::Approx(0.0).scale(1.0).epsilon(1e-7));
    CHECK(total_energy(s, kUnitParams) == doctest::Approx(0.6).epsilon(1e-12));
  }
  SUBCASE("I beyond the bound is rejected") {
    CHECK_THROWS_WITH_AS(
        (void)initial_state(0.6, 0.4, +1, kUnitParams),
        doctest::Contains("uncertainty bound violated"), ConfigError);
  }
  SUBCASE("negative pa sign mirrors the reservoir momentum") {
    const DynState plus = initial_state(0.6, 0.09, +1, kUnitParams);
    const DynState minus = initial_state(0.6, 0.09, -1, kUnitParams);
    CHECK(plus.pa == doctest::Approx(-minus.pa).epsilon(1e-15));
    CHECK(plus.x2 == minus.x2);
  }
  SUBCASE("invalid arguments") {
    CHECK_THROWS_AS((void)initial_state(-0.6, 0.1, +1, kUnitParams),
                    ConfigError);
    CHECK_THROWS_AS((void)initial_state(0.6, -0.1, +1, kUnitParams),
                    ConfigError);
    CHECK_THROWS_AS((void)initial_state(0.6, 0.1, 2, kUnitParams), ConfigError);
  }
}

TEST_CASE("initial state round-trips energy and invariant") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> energy_dist(0.1, 5.0);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  std::uniform_real_distribution<double> freq(0.5, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    SystemParams params;
    params.omega_q = freq(rng);
    params.omega_cl = freq(rng);
    params.coupling = frac(rng) * 2.0;
    params.damping = trial % 2 == 0 ? 0.0 : 0.05;
    const double energy = energy_dist(rng);
    const double bound = (energy / params.omega_q) * (energy / params.omega_q);
    const double invariant = bound * frac(rng);
    const int sign = trial % 3 == 0 ? -1 : +1;

    const DynState s = initial_state(energy, invariant, sign, params);
    CHECK(total_energy(s, params) ==
          doctest::Approx(energy).epsilon(1e-12));
    CHECK(motion_invariant(s) ==
          doctest::Approx(invariant).epsilon(1e-12).scale(invariant == 0.0 ? 1.0 : 0.0));
  }
}

TEST_CASE("system params validation") {
  auto validate = [](double wq, double wcl, double e, double eta) {
    const SystemParams params{wq, wcl, e, eta};
    params.validate();
  };
  CHECK_THROWS_AS(validate(0.0, 1.0, 1.0, 0.0), ConfigError);
  CHECK_THROWS_AS(validate(1.0, -1.0, 1.0, 0.0), ConfigError);
  CHECK_THROWS_AS(validate(1.0, 1.0, -0.1, 0.0), ConfigError);
  CHECK_THROWS_AS(validate(1.0, 1.0, 1.0, -0.1), ConfigError);
  CHECK_NOTHROW(kUnitParams.validate());
}
