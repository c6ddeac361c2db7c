#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "semiq/errors.hpp"

namespace {

void add_run_options(CLI::App* cmd, semiq::cli::RunOptions& run,
                     bool with_regime_flag = true) {
  cmd->add_option("--config", run.config_path,
                  "Config file (built-in defaults when omitted)");
  if (with_regime_flag) {
    cmd->add_option("--regime", run.regime,
                    "conservative | dissipative | classical")
        ->capture_default_str();
  }
  cmd->add_option("--er", run.er,
                  "Relative energy E_r >= 1 (sets I = (E/(E_r w_q))^2)");
  cmd->add_option("--invariant", run.invariant,
                  "Motion invariant I >= 0 (alternative to --er)");
  cmd->add_option("--energy", run.energy, "Initial energy E [default: 0.6]");
  cmd->add_option("--pa-sign", run.pa_sign,
                  "Sign of the initial reservoir momentum [default: +1]");
  cmd->add_option("--damping", run.damping,
                  "Damping for dissipative runs [default: 0.05]");
  cmd->add_option("--method", run.method, "rk4 | rk45 [default: rk4]");
  cmd->add_option("--dt", run.dt, "Integration step [default: 0.001]");
  cmd->add_option("--dt-sample", run.dt_sample,
                  "Output sampling interval [default: 0.1]");
  cmd->add_option("--n-samples", run.n_samples,
                  "Number of output samples [default: 20000]");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "semiq: coupled oscillator-reservoir simulator with ordinal "
      "(permutation) entropy and statistical-complexity analysis"};
  app.require_subcommand(1);

  semiq::cli::SimulateArgs simulate_args;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Integrate one trajectory and write it as CSV");
  add_run_options(simulate, simulate_args.run);
  simulate->add_option("--out", simulate_args.out, "Output CSV path")
      ->required();

  semiq::cli::QuantifyArgs quantify_args;
  CLI::App* quantify = app.add_subcommand(
      "quantify",
      "Compute entropy and complexity quantifiers for one CSV column");
  quantify->add_option("--in", quantify_args.in, "Input CSV path")->required();
  quantify->add_option("--column", quantify_args.column, "Column to analyze")
      ->required();
  quantify->add_option("--d", quantify_args.d, "Embedding dimension")
      ->capture_default_str();
  quantify->add_option("--tau", quantify_args.tau, "Embedding delay")
      ->capture_default_str();

  semiq::cli::SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand(
      "sweep",
      "Sweep the relative energy in both regimes and write quantifier rows");
  sweep->add_option("--config", sweep_args.config_path,
                    "Config file (built-in defaults when omitted)");
  sweep->add_option("--regime", sweep_args.regime_filter,
                    "Restrict to one regime (conservative | dissipative)");
  sweep->add_flag("--rescale-lmc", sweep_args.rescale_lmc,
                  "Append c_lmc_rescaled = 1.196 * c_lmc presentation column");
  sweep->add_option("--out", sweep_args.out, "Override the output path");
  sweep->add_option("--format", sweep_args.format, "csv | json");
  sweep->add_option("--threads", sweep_args.threads,
                    "Worker threads (0 = hardware) [default: 0]");

  semiq::cli::PoincareArgs poincare_args;
  CLI::App* poincare = app.add_subcommand(
      "poincare", "Extract section crossings from one trajectory");
  add_run_options(poincare, poincare_args.run);
  poincare->get_option("--regime")->default_str("classical");
  poincare_args.run.regime = "classical";
  poincare->add_option("--section-var", poincare_args.section_var,
                       "Section variable (x2|p2|l|a|pa) [default: a]");
  poincare->add_option("--section-value", poincare_args.section_value,
                       "Section value [default: 0]");
  poincare->add_option("--direction", poincare_args.direction,
                       "ascending | descending | both [default: ascending]");
  poincare->add_option("--plot-x", poincare_args.plot_x,
                       "First emitted coordinate [default: x2]");
  poincare->add_option("--plot-y", poincare_args.plot_y,
                       "Second emitted coordinate [default: p2]");
  poincare->add_option("--out", poincare_args.out, "Output CSV path")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (simulate->parsed()) {
      return semiq::cli::cmd_simulate(simulate_args);
    }
    if (quantify->parsed()) {
      return semiq::cli::cmd_quantify(quantify_args);
    }
    if (sweep->parsed()) {
      return semiq::cli::cmd_sweep(sweep_args);
    }
    if (poincare->parsed()) {
      return semiq::cli::cmd_poincare(poincare_args);
    }
  } catch (const semiq::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const semiq::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const semiq::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
