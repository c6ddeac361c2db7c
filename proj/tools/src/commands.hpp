#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace semiq::cli {

/// Shared option bag for commands that integrate a trajectory.
struct RunOptions {
  std::string config_path;       // empty: built-in defaults
  std::string regime = "conservative";
  std::optional<double> er;
  std::optional<double> invariant;
  std::optional<double> energy;
  std::optional<int> pa_sign;
  std::optional<double> damping;
  std::optional<std::string> method;
  std::optional<double> dt;
  std::optional<double> dt_sample;
  std::optional<std::size_t> n_samples;
};

struct SimulateArgs {
  RunOptions run;
  std::string out;
};

struct QuantifyArgs {
  std::string in;
  std::string column;
  int d = 5;
  int tau = 1;
};

struct SweepArgs {
  std::string config_path;
  std::optional<std::string> regime_filter;
  bool rescale_lmc = false;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<int> threads;
};

struct PoincareArgs {
  RunOptions run;
  std::optional<std::string> section_var;
  std::optional<double> section_value;
  std::optional<std::string> direction;
  std::optional<std::string> plot_x;
  std::optional<std::string> plot_y;
  std::string out;
};

int cmd_simulate(const SimulateArgs& args);
int cmd_quantify(const QuantifyArgs& args);
int cmd_sweep(const SweepArgs& args);
int cmd_poincare(const PoincareArgs& args);

}  // namespace semiq::cli
