#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semiq/dynamics.hpp"
#include "semiq/integrator.hpp"
#include "semiq/ordinal.hpp"
#include "semiq/quantifiers.hpp"

namespace semiq {

enum class Regime { conservative, dissipative };

Regime regime_from_name(const std::string& name);
std::string regime_name(Regime regime);

enum class GridSpacing { log, linear };

GridSpacing spacing_from_name(const std::string& name);

/// Convergence-onset detection parameters.  With relative == false the
/// tolerance is an absolute deviation band around the reference value,
/// otherwise a relative one.
struct OnsetParams {
  double tol = 0.005;
  int run_length = 5;
  bool relative = false;
};

/// Presentation-only scale factor aligning the c_lmc curve with c_js in
/// comparison plots.  Never applied to stored values.
inline constexpr double kLmcComparisonScale = 1.196;

struct SweepConfig {
  double energy = 0.6;
  /// damping is applied to dissipative-regime runs only; conservative runs
  /// force damping = 0.
  SystemParams params{1.0, 1.0, 1.0, 0.05};
  std::vector<Regime> regimes = {Regime::conservative, Regime::dissipative};
  double er_min = 1.000001;
  double er_max = 4e4;
  int n_points = 150;
  GridSpacing spacing = GridSpacing::log;
  int pa_sign = +1;
  /// Sampling for the quantifier pipeline.  dt_sample = 0.01 with 20000
  /// samples (total time 200) reproduces the published classical-analog
  /// entropy and Jensen-Shannon complexity; see README for the sensitivity
  /// table over dt_sample.
  IntegratorConfig integrator{Method::rk4, 1e-3, 1e-10, 1e-10, 0.01, 20000};
  OrdinalConfig ordinal{5, 1};
  OnsetParams onset;
  std::string output = "sweep.csv";
  /// Worker threads for the sweep; 0 means hardware concurrency.
  int threads = 0;

  void validate() const;
};

/// One sweep point.  er is +infinity for classical-analog rows (I = 0).
/// status is "ok" on success, otherwise the per-point error message; failed
/// rows carry NaN quantifiers.
struct SweepRow {
  Regime regime = Regime::conservative;
  double er = 0.0;
  double invariant = 0.0;
  QuantifierReport q;
  std::string status = "ok";

  bool ok() const { return status == "ok"; }
};

/// n monotone grid values from er_min to er_max inclusive; log spacing is
/// uniform in ln(er).
std::vector<double> er_grid(double er_min, double er_max, int n,
                            GridSpacing spacing);

/// Runs one semiclassical point: I from inverting the relative energy at
/// cfg.energy (the dissipative regime keeps the initial energy in that
/// formula), then integrate, extract the x2 series and quantify.
/// Requires er > 1; errors are thrown, not recorded.
SweepRow run_point(double er, Regime regime, const SweepConfig& cfg);

/// Classical-analog run: same pipeline with I = 0; er reported as +infinity.
SweepRow run_classical(Regime regime, const SweepConfig& cfg);

/// One row per (regime x grid point) plus one classical row per regime,
/// ordered by regime (config order) then er with the classical row last.
/// Per-point failures are recorded in the row status without aborting the
/// sweep.  Output is deterministic for a fixed config regardless of thread
/// count.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

/// Smallest grid er from which every following value stays within the
/// tolerance band around classical_value through the end of the sweep, with
/// at least run_length points in that tail.  Values must be ordered by er.
/// Returns nullopt when no such suffix exists.
///
/// Throws ConfigError on empty input or mismatched lengths.
std::optional<double> convergence_onset(std::span<const double> er,
                                        std::span<const double> values,
                                        double classical_value,
                                        const OnsetParams& params);

/// CSV schema:
///   regime,er,invariant_i,entropy_s,entropy_h,d_lmc,c_lmc,d_js,c_js,status
/// Numbers carry 12 significant digits; classical rows print er as "inf".
/// With rescale_lmc a trailing c_lmc_rescaled column holds
/// kLmcComparisonScale * c_lmc.
void write_results_csv(std::span<const SweepRow> rows, const std::string& path,
                       bool rescale_lmc = false);

/// JSON mirror of the CSV fields (array of objects).
void write_results_json(std::span<const SweepRow> rows,
                        const std::string& path, bool rescale_lmc = false);

}  // namespace semiq
