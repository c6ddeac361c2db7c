#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "semiq/errors.hpp"
#include "semiq/quantifiers.hpp"

using namespace semiq;

namespace {

// Brute-force reference formulas, written independently of the library path.
double ref_entropy(const std::vector<double>& p, double base_log) {
  double s = 0.0;
  for (double x : p) {
    if (x > 0.0) {
      s -= x * std::log(x) / base_log;
    }
  }
  return s;
}

double ref_jsd(const std::vector<double>& p, const std::vector<double>& q,
               double base_log) {
  std::vector<double> m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    m[i] = 0.5 * (p[i] + q[i]);
  }
  return ref_entropy(m, base_log) - 0.5 * ref_entropy(p, base_log) -
         0.5 * ref_entropy(q, base_log);
}

std::vector<double> uniform_vec(std::size_t n) {
  return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

std::vector<double> degenerate_vec(std::size_t n) {
  std::vector<double> v(n, 0.0);
  v[0] = 1.0;
  return v;
}

std::vector<double> random_distribution(std::mt19937& rng, std::size_t n,
                                        bool with_zeros) {
  std::exponential_distribution<double> exp_dist(1.0);
  std::vector<double> v(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = (with_zeros && rng() % 3 == 0) ? 0.0 : exp_dist(rng);
    sum += v[i];
  }
  if (sum == 0.0) {
    v[0] = 1.0;
    sum = 1.0;
  }
  for (double& x : v) {
    x /= sum;
  }
  return v;
}

const std::vector<double> kTwoThirds{2.0 / 3.0, 1.0 / 3.0};

}  // namespace

TEST_CASE("shannon entropy") {
  CHECK(shannon_entropy(degenerate_vec(6)) == 0.0);
  CHECK(shannon_entropy(uniform_vec(120)) ==
        doctest::Approx(std::log(120.0)).epsilon(1e-12));
  CHECK(shannon_entropy(kTwoThirds) ==
        doctest::Approx(0.6365141682948128).epsilon(1e-12));
  CHECK(shannon_entropy(kTwoThirds) == doctest::Approx(0.636514).epsilon(1e-6));
}

TEST_CASE("probability validation") {
  CHECK_THROWS_AS((void)shannon_entropy(std::vector<double>{0.5, 0.4}),
                  ConfigError);
  CHECK_THROWS_AS((void)shannon_entropy(std::vector<double>{1.2, -0.2}),
                  ConfigError);
  CHECK_THROWS_AS((void)shannon_entropy(std::vector<double>{}), ConfigError);
}

TEST_CASE("normalized entropy") {
  CHECK(normalized_entropy(degenerate_vec(120)) == 0.0);
  CHECK(normalized_entropy(uniform_vec(24)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(normalized_entropy(kTwoThirds) ==
        doctest::Approx(0.9182958340544894).epsilon(1e-12));
  CHECK(normalized_entropy(kTwoThirds) ==
        doctest::Approx(0.918296).epsilon(1e-6));
}

TEST_CASE("lmc disequilibrium") {
  CHECK(lmc_disequilibrium(uniform_vec(120)) == 0.0);
  CHECK(lmc_disequilibrium(degenerate_vec(2)) == doctest::Approx(0.5));
  for (const std::size_t n : {2u, 6u, 24u, 120u}) {
    CHECK(lmc_disequilibrium(degenerate_vec(n)) ==
          doctest::Approx((static_cast<double>(n) - 1.0) /
                          static_cast<double>(n))
              .epsilon(1e-12));
  }
  CHECK(lmc_disequilibrium(kTwoThirds) ==
        doctest::Approx(1.0 / 18.0).epsilon(1e-12));
}

TEST_CASE("lmc complexity") {
  CHECK(lmc_complexity(uniform_vec(120)) == 0.0);
  CHECK(lmc_complexity(degenerate_vec(120)) == 0.0);
  CHECK(lmc_complexity(kTwoThirds) ==
        doctest::Approx(0.05101643522524941).epsilon(1e-12));
  CHECK(lmc_complexity(kTwoThirds) == doctest::Approx(0.051017).epsilon(1e-6));
}

TEST_CASE("jensen-shannon divergence") {
  const auto u = uniform_vec(8);
  CHECK(js_divergence(u, u) == 0.0);

  CHECK(js_divergence(std::vector<double>{1.0, 0.0},
                      std::vector<double>{0.0, 1.0}) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));

  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 20;
    const auto p = random_distribution(rng, n, trial % 2 == 0);
    const auto q = random_distribution(rng, n, trial % 3 == 0);
    const double pq = js_divergence(p, q);
    CHECK(pq >= 0.0);
    CHECK(pq <= std::log(2.0) + 1e-12);
    CHECK(std::abs(pq - js_divergence(q, p)) < 1e-14);
    CHECK(std::abs(pq - ref_jsd(p, q, 1.0)) < 1e-12);
  }

  CHECK_THROWS_AS(
      (void)js_divergence(uniform_vec(3), uniform_vec(4)), ConfigError);
}

TEST_CASE("js_dmax equals the degenerate-to-uniform divergence") {
  CHECK(js_dmax(2) == doctest::Approx(0.21576155433883565).epsilon(1e-12));
  for (const std::size_t n : {2u, 6u, 24u, 120u, 720u}) {
    CHECK(std::abs(js_dmax(n) -
                   js_divergence(degenerate_vec(n), uniform_vec(n))) < 1e-12);
  }
  CHECK_THROWS_AS((void)js_dmax(1), ConfigError);
}

TEST_CASE("jensen-shannon complexity") {
  CHECK(js_complexity(uniform_vec(120)) == 0.0);
  CHECK(js_complexity(degenerate_vec(120)) == 0.0);

  // Chain the three stages by hand for P = (2/3, 1/3).
  const double h = ref_entropy(kTwoThirds, 1.0) / std::log(2.0);
  const double djs = ref_jsd(kTwoThirds, uniform_vec(2), 1.0);
  const double expected = h * djs / js_dmax(2);
  CHECK(js_complexity(kTwoThirds) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(js_complexity(kTwoThirds) ==
        doctest::Approx(0.061128165488045).epsilon(1e-9));
}

TEST_CASE("quantify on simple series") {
  const OrdinalConfig cfg{5, 1};

  SUBCASE("constant series") {
    const TimeSeries s{1.0, std::vector<double>(100, 3.25)};
    const QuantifierReport r = quantify(s, cfg);
    CHECK(r.s == 0.0);
    CHECK(r.h == 0.0);
    CHECK(r.c_lmc == 0.0);
    CHECK(r.c_js == 0.0);
  }
  SUBCASE("strictly increasing series") {
    std::vector<double> v(100);
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = 0.1 * static_cast<double>(i);
    }
    const QuantifierReport r = quantify(TimeSeries{1.0, v}, cfg);
    CHECK(r.h == 0.0);
  }
  SUBCASE("uniform noise is close to maximal entropy") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(20000);
    for (double& x : v) {
      x = u(rng);
    }
    const QuantifierReport r = quantify(TimeSeries{1.0, v}, cfg);
    CHECK(r.h > 0.99);
    CHECK(r.c_js < 0.05);
  }
}

TEST_CASE("report fields are mutually consistent") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(3000);
  for (double& x : v) {
    x = std::sin(0.37 * static_cast<double>(v.size()) * u(rng)) + 0.1 * u(rng);
  }
  const QuantifierReport r = quantify(TimeSeries{1.0, v}, OrdinalConfig{4, 1});
  CHECK(r.c_lmc == r.h * r.d_lmc);
  CHECK(r.c_js == r.h * r.d_js);
  CHECK(r.h >= 0.0);
  CHECK(r.h <= 1.0);
  CHECK(r.c_js >= 0.0);
  CHECK(r.c_js <= 1.0);
  CHECK(r.d_js >= 0.0);
  CHECK(r.d_js <= 1.0 + 1e-12);
}

TEST_CASE("quantifier bounds hold on random distributions") {
  std::mt19937 rng(123);
  for (const std::size_t n : {2u, 6u, 24u, 120u}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto p = random_distribution(rng, n, trial % 2 == 0);
      const double h = normalized_entropy(p);
      const double d_lmc = lmc_disequilibrium(p);
      const double c_js = js_complexity(p);
      CHECK(h >= 0.0);
      CHECK(h <= 1.0 + 1e-12);
      CHECK(c_js >= 0.0);
      CHECK(c_js <= 1.0 + 1e-12);
      CHECK(d_lmc >= 0.0);
      CHECK(d_lmc <=
            (static_cast<double>(n) - 1.0) / static_cast<double>(n) + 1e-12);
      const double djs = js_divergence(p, uniform_vec(n));
      CHECK(djs <= js_dmax(n) + 1e-12);
    }
  }
}

TEST_CASE("ratio quantifiers are invariant under the logarithm base") {
  std::mt19937 rng(31);
  const double ln2 = std::log(2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    const auto p = random_distribution(rng, n, trial % 2 == 0);

    const double h_base2 =
        ref_entropy(p, ln2) / (std::log(static_cast<double>(n)) / ln2);
    CHECK(std::abs(normalized_entropy(p) - h_base2) < 1e-12);

    const double dmax_base2 =
        ref_jsd(degenerate_vec(n), uniform_vec(n), ln2);
    const double djs_base2 = ref_jsd(p, uniform_vec(n), ln2) / dmax_base2;
    const double djs_nat = js_divergence(p, uniform_vec(n)) / js_dmax(n);
    CHECK(std::abs(djs_nat - djs_base2) < 1e-12);
  }
}

TEST_CASE("quantifiers are invariant under pattern relabeling") {
  std::mt19937 rng(55);
  const auto p = random_distribution(rng, 24, true);
  auto shuffled = p;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);

  CHECK(std::abs(shannon_entropy(p) - shannon_entropy(shuffled)) < 1e-12);
  CHECK(std::abs(lmc_disequilibrium(p) - lmc_disequilibrium(shuffled)) <
        1e-12);
  CHECK(std::abs(js_complexity(p) - js_complexity(shuffled)) < 1e-12);
}
