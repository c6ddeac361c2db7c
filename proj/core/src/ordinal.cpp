#include "semiq/ordinal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "semiq/errors.hpp"

namespace semiq {

namespace {

constexpr int kMaxD = 10;

// Stable argsort of window values: ties keep appearance order.
template <typename ValueAt>
void ordinal_indices(int d, ValueAt value_at, int* idx) {
  for (int i = 0; i < d; ++i) {
    idx[i] = i;
  }
  // Insertion sort; windows are tiny and this keeps tallying allocation-free.
  for (int i = 1; i < d; ++i) {
    const int cur = idx[i];
    const double v = value_at(cur);
    int j = i - 1;
    while (j >= 0 && v < value_at(idx[j])) {
      idx[j + 1] = idx[j];
      --j;
    }
    idx[j + 1] = cur;
  }
}

std::uint64_t lehmer_rank(const int* perm, int d) {
  std::uint64_t rank = 0;
  for (int i = 0; i < d; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < d; ++j) {
      if (perm[j] < perm[i]) {
        ++smaller_after;
      }
    }
    rank += static_cast<std::uint64_t>(smaller_after) * factorial_u64(d - 1 - i);
  }
  return rank;
}

}  // namespace

std::size_t OrdinalConfig::min_length() const {
  return static_cast<std::size_t>(d - 1) * static_cast<std::size_t>(tau) + 1;
}

void OrdinalConfig::validate() const {
  if (d < 2 || d > kMaxD) {
    std::ostringstream msg;
    msg << "embedding dimension d must be in [2, " << kMaxD << "], got " << d;
    throw ConfigError(msg.str());
  }
  if (tau < 1) {
    throw ConfigError("embedding delay tau must be >= 1");
  }
}

std::uint64_t factorial_u64(int n) {
  if (n < 0 || n > 20) {
    throw ConfigError("factorial argument out of range [0, 20]");
  }
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) {
    f *= static_cast<std::uint64_t>(i);
  }
  return f;
}

std::uint64_t pattern_rank(std::span<const int> permutation) {
  const int d = static_cast<int>(permutation.size());
  if (d < 1 || d > kMaxD) {
    throw ConfigError("permutation size out of range");
  }
  return lehmer_rank(permutation.data(), d);
}

std::vector<int> pattern_permutation(std::uint64_t rank, int d) {
  if (d < 1 || d > kMaxD) {
    throw ConfigError("pattern dimension out of range");
  }
  if (rank >= factorial_u64(d)) {
    throw ConfigError("pattern rank out of range for the given dimension");
  }
  std::vector<int> pool(d);
  for (int i = 0; i < d; ++i) {
    pool[i] = i;
  }
  std::vector<int> perm;
  perm.reserve(d);
  for (int i = 0; i < d; ++i) {
    const std::uint64_t f = factorial_u64(d - 1 - i);
    const auto pick = static_cast<std::size_t>(rank / f);
    rank %= f;
    perm.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return perm;
}

Pattern pattern_of(std::span<const double> window) {
  const int d = static_cast<int>(window.size());
  if (d < 1 || d > kMaxD) {
    throw ConfigError("window size out of range");
  }
  for (double v : window) {
    if (!std::isfinite(v)) {
      throw ConfigError("non-finite value in ordinal window");
    }
  }
  int idx[kMaxD];
  ordinal_indices(d, [&](int i) { return window[static_cast<std::size_t>(i)]; }, idx);
  return Pattern{lehmer_rank(idx, d)};
}

std::vector<std::vector<double>> partitions(const TimeSeries& series,
                                            const OrdinalConfig& cfg) {
  cfg.validate();
  const std::size_t N = series.values.size();
  if (N < cfg.min_length()) {
    std::ostringstream msg;
    msg << "series of length " << N << " is too short for d = " << cfg.d
        << ", tau = " << cfg.tau << "; need at least " << cfg.min_length()
        << " values";
    throw ConfigError(msg.str());
  }
  const std::size_t n = N - (cfg.min_length() - 1);
  std::vector<std::vector<double>> windows;
  windows.reserve(n);
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<double> w(static_cast<std::size_t>(cfg.d));
    for (int j = 0; j < cfg.d; ++j) {
      w[static_cast<std::size_t>(j)] =
          series.values[p + static_cast<std::size_t>(j) *
                                static_cast<std::size_t>(cfg.tau)];
    }
    windows.push_back(std::move(w));
  }
  return windows;
}

std::vector<double> OrdinalDistribution::probabilities() const {
  std::vector<double> probs(counts.size(), 0.0);
  if (n == 0) {
    return probs;
  }
  for (std::size_t i = 0; i < counts.size(); ++i) {
    probs[i] = static_cast<double>(counts[i]) / static_cast<double>(n);
  }
  return probs;
}

OrdinalDistribution ordinal_distribution(const TimeSeries& series,
                                         const OrdinalConfig& cfg) {
  cfg.validate();
  const std::size_t N = series.values.size();
  if (N < cfg.min_length()) {
    std::ostringstream msg;
    msg << "series of length " << N << " is too short for d = " << cfg.d
        << ", tau = " << cfg.tau << "; need at least " << cfg.min_length()
        << " values";
    throw ConfigError(msg.str());
  }
  for (std::size_t i = 0; i < N; ++i) {
    if (!std::isfinite(series.values[i])) {
      std::ostringstream msg;
      msg << "non-finite series value at index " << i;
      throw ConfigError(msg.str());
    }
  }

  OrdinalDistribution dist;
  dist.d = cfg.d;
  dist.tau = cfg.tau;
  dist.n = static_cast<std::uint64_t>(N - (cfg.min_length() - 1));
  dist.counts.assign(factorial_u64(cfg.d), 0);

  const auto stride = static_cast<std::size_t>(cfg.tau);
  int idx[kMaxD];
  for (std::size_t p = 0; p < dist.n; ++p) {
    const double* base = series.values.data() + p;
    ordinal_indices(
        cfg.d,
        [&](int i) { return base[static_cast<std::size_t>(i) * stride]; }, idx);
    ++dist.counts[lehmer_rank(idx, cfg.d)];
  }
  return dist;
}

}  // namespace semiq
