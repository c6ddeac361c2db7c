#pragma once

#include <cstddef>
#include <span>

#include "semiq/dynamics.hpp"
#include "semiq/ordinal.hpp"

namespace semiq {

/// Throws ConfigError unless every entry lies in [0, 1] (within 1e-12) and
/// the entries sum to 1 within 1e-9.
void validate_probabilities(std::span<const double> probs);

/// Shannon entropy S = -sum p_i ln p_i in nats, with 0 ln 0 = 0.
double shannon_entropy(std::span<const double> probs);

/// S / ln(n) where n is the number of bins; in [0, 1].
double normalized_entropy(std::span<const double> probs);

/// Squared Euclidean distance to the uniform distribution,
/// sum (p_i - 1/n)^2.  Zero iff uniform; (n-1)/n for a degenerate
/// distribution.
double lmc_disequilibrium(std::span<const double> probs);

/// normalized_entropy * lmc_disequilibrium.  Vanishes at both the uniform
/// and the degenerate extremes.
double lmc_complexity(std::span<const double> probs);

/// Jensen-Shannon divergence S[(P+Q)/2] - S[P]/2 - S[Q]/2, in nats.
/// Symmetric, >= 0, zero iff P == Q, bounded by ln 2.
double js_divergence(std::span<const double> p, std::span<const double> q);

/// Maximum Jensen-Shannon divergence from the uniform distribution over
/// n_patterns bins, attained by a degenerate distribution:
///
///   -1/2 [ (n+1)/n ln(n+1) - 2 ln(2n) + ln n ]
///
/// Throws ConfigError when n_patterns < 2.
double js_dmax(std::size_t n_patterns);

/// normalized_entropy * js_divergence(P, uniform) / js_dmax(n).  In [0, 1];
/// vanishes at both extremes.
double js_complexity(std::span<const double> probs);

/// All quantifiers evaluated consistently from one distribution.
/// d_js is the Jensen-Shannon disequilibrium already divided by js_dmax,
/// so c_js == h * d_js and c_lmc == h * d_lmc.
struct QuantifierReport {
  double s = 0.0;      ///< raw Shannon entropy, nats
  double h = 0.0;      ///< normalized entropy
  double d_lmc = 0.0;  ///< Euclidean disequilibrium
  double c_lmc = 0.0;
  double d_js = 0.0;   ///< normalized Jensen-Shannon disequilibrium
  double c_js = 0.0;
};

QuantifierReport quantify(const OrdinalDistribution& dist);

/// Symbolizes the series with cfg and evaluates all quantifiers from the
/// resulting ordinal distribution.
QuantifierReport quantify(const TimeSeries& series, const OrdinalConfig& cfg);

}  // namespace semiq
