#include "semiq/quantifiers.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "semiq/errors.hpp"

namespace semiq {

namespace {

double entropy_unchecked(std::span<const double> probs) {
  double s = 0.0;
  for (double p : probs) {
    if (p > 0.0) {
      s -= p * std::log(p);
    }
  }
  return s;
}

}  // namespace

void validate_probabilities(std::span<const double> probs) {
  if (probs.empty()) {
    throw ConfigError("probability vector must be nonempty");
  }
  double sum = 0.0;
  for (double p : probs) {
    if (!std::isfinite(p) || p < -1e-12 || p > 1.0 + 1e-12) {
      throw ConfigError("probability entries must lie in [0, 1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "probabilities sum to " << sum << ", expected 1 within 1e-9";
    throw ConfigError(msg.str());
  }
}

double shannon_entropy(std::span<const double> probs) {
  validate_probabilities(probs);
  return entropy_unchecked(probs);
}

double normalized_entropy(std::span<const double> probs) {
  validate_probabilities(probs);
  if (probs.size() < 2) {
    throw ConfigError("normalized entropy requires at least 2 bins");
  }
  return entropy_unchecked(probs) / std::log(static_cast<double>(probs.size()));
}

double lmc_disequilibrium(std::span<const double> probs) {
  validate_probabilities(probs);
  const double u = 1.0 / static_cast<double>(probs.size());
  double d = 0.0;
  for (double p : probs) {
    const double diff = p - u;
    d += diff * diff;
  }
  return d;
}

double lmc_complexity(std::span<const double> probs) {
  return normalized_entropy(probs) * lmc_disequilibrium(probs);
}

double js_divergence(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw ConfigError("Jensen-Shannon divergence requires equal lengths");
  }
  validate_probabilities(p);
  validate_probabilities(q);
  double s_mix = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double m = 0.5 * (p[i] + q[i]);
    if (m > 0.0) {
      s_mix -= m * std::log(m);
    }
  }
  return s_mix - 0.5 * entropy_unchecked(p) - 0.5 * entropy_unchecked(q);
}

double js_dmax(std::size_t n_patterns) {
  if (n_patterns < 2) {
    throw ConfigError("js_dmax requires at least 2 patterns");
  }
  const double n = static_cast<double>(n_patterns);
  return -0.5 * ((n + 1.0) / n * std::log(n + 1.0) - 2.0 * std::log(2.0 * n) +
                 std::log(n));
}

double js_complexity(std::span<const double> probs) {
  const double h = normalized_entropy(probs);
  const std::vector<double> uniform(probs.size(),
                                    1.0 / static_cast<double>(probs.size()));
  return h * js_divergence(probs, uniform) / js_dmax(probs.size());
}

QuantifierReport quantify(const OrdinalDistribution& dist) {
  const std::vector<double> probs = dist.probabilities();
  validate_probabilities(probs);

  QuantifierReport r;
  r.s = entropy_unchecked(probs);
  r.h = r.s / std::log(static_cast<double>(probs.size()));
  r.d_lmc = lmc_disequilibrium(probs);
  r.c_lmc = r.h * r.d_lmc;
  const std::vector<double> uniform(probs.size(),
                                    1.0 / static_cast<double>(probs.size()));
  r.d_js = js_divergence(probs, uniform) / js_dmax(probs.size());
  r.c_js = r.h * r.d_js;
  return r;
}

QuantifierReport quantify(const TimeSeries& series, const OrdinalConfig& cfg) {
  return quantify(ordinal_distribution(series, cfg));
}

}  // namespace semiq
