#pragma once

#include <optional>
#include <string>

#include "semiq/integrator.hpp"
#include "semiq/ordinal.hpp"
#include "semiq/pipeline.hpp"
#include "semiq/poincare.hpp"

namespace semiq::cli {

/// Values read from the sectioned config file.  Integrator fields are kept
/// optional because the unset defaults differ per workflow: trajectory
/// commands (simulate, poincare) sample at 0.1 over 20000 points, while the
/// quantifier sweep samples at 0.01 (the interval that reproduces the
/// published classical-analog quantifiers).
struct FileConfig {
  SystemParams system{1.0, 1.0, 1.0, 0.05};

  std::optional<Method> method;
  std::optional<double> dt;
  std::optional<double> rel_tol;
  std::optional<double> abs_tol;
  std::optional<double> dt_sample;
  std::optional<std::size_t> n_samples;

  OrdinalConfig ordinal{5, 1};

  double energy = 0.6;
  std::vector<Regime> regimes{Regime::conservative, Regime::dissipative};
  double er_min = 1.000001;
  double er_max = 4e4;
  int n_points = 150;
  GridSpacing spacing = GridSpacing::log;
  int pa_sign = +1;
  std::string output = "sweep.csv";
  std::string format = "csv";
  OnsetParams onset{0.005, 5, false};
  int threads = 0;

  SectionSpec section{};
};

/// Parses the flat INI-style config: [section] headers, key = value lines,
/// '#'/';' comments.  Unknown sections or keys are rejected by name.
FileConfig load_config(const std::string& path);

/// Integrator settings for trajectory commands (dt_sample 0.1, 20000
/// samples unless overridden in the file).
IntegratorConfig trajectory_integrator(const FileConfig& fc);

/// Integrator settings for the quantifier pipeline (dt_sample 0.01, 20000
/// samples unless overridden in the file).
IntegratorConfig sweep_integrator(const FileConfig& fc);

/// Assembles the full sweep configuration from the file values.
SweepConfig sweep_config(const FileConfig& fc);

}  // namespace semiq::cli
