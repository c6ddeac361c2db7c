#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "semiq/dynamics.hpp"

namespace semiq {

/// Ordinal symbolization parameters: window length d (embedding dimension)
/// and intra-window stride tau (embedding delay).
struct OrdinalConfig {
  int d = 5;
  int tau = 1;

  /// Minimum series length, (d-1)*tau + 1.
  std::size_t min_length() const;

  /// Throws ConfigError unless 2 <= d <= 10 and tau >= 1.  The upper bound
  /// on d keeps the dense d!-sized count array reasonable (10! = 3628800).
  void validate() const;
};

std::uint64_t factorial_u64(int n);

/// An ordinal pattern, stored as its Lehmer-code rank in [0, d!).
/// Rank 0 is the identity pattern (a strictly ascending window).
struct Pattern {
  std::uint64_t rank = 0;
};

/// Lehmer rank of a permutation of (0, ..., d-1).
std::uint64_t pattern_rank(std::span<const int> permutation);

/// Inverse of pattern_rank.
std::vector<int> pattern_permutation(std::uint64_t rank, int d);

/// Ordinal pattern of one window: the permutation (r_0, ..., r_{d-1}) that
/// lists window positions in ascending value order, ties broken by order of
/// appearance (if values are equal the smaller index comes first).
///
/// Throws ConfigError on an empty window or non-finite values.
Pattern pattern_of(std::span<const double> window);

/// The n = N - (d-1)*tau overlapping windows of a series; window p (0-based)
/// is (x_p, x_{p+tau}, ..., x_{p+(d-1)tau}).
///
/// Throws ConfigError when the series is shorter than cfg.min_length().
std::vector<std::vector<double>> partitions(const TimeSeries& series,
                                            const OrdinalConfig& cfg);

/// Pattern histogram over the d! possible ordinal patterns.
struct OrdinalDistribution {
  int d = 0;
  int tau = 0;
  std::uint64_t n = 0;  ///< number of windows; equals the sum of counts
  std::vector<std::uint64_t> counts;  ///< indexed by Pattern rank, size d!

  /// counts / n, in rank order.
  std::vector<double> probabilities() const;
};

/// Tallies the ordinal pattern of every window of the series.
OrdinalDistribution ordinal_distribution(const TimeSeries& series,
                                         const OrdinalConfig& cfg);

}  // namespace semiq
