#include "commands.hpp"

#include <cmath>
#include <iostream>

#include <json.hpp>

#include "config_file.hpp"
#include "csv_io.hpp"
#include "semiq/errors.hpp"
#include "semiq/format.hpp"
#include "semiq/pipeline.hpp"
#include "semiq/quantifiers.hpp"

namespace semiq::cli {

namespace {

FileConfig load_or_default(const std::string& path) {
  if (path.empty()) {
    return FileConfig{};
  }
  return load_config(path);
}

struct PreparedRun {
  SystemParams params;
  double invariant = 0.0;
  DynState state0;
  IntegratorConfig integrator;
};

// Resolves regime, invariant and integrator settings for simulate/poincare.
PreparedRun prepare_run(const RunOptions& opt) {
  FileConfig fc = load_or_default(opt.config_path);
  if (opt.energy) {
    fc.energy = *opt.energy;
  }
  if (opt.damping) {
    fc.system.damping = *opt.damping;
  }
  if (opt.method) {
    if (*opt.method == "rk4") {
      fc.method = Method::rk4;
    } else if (*opt.method == "rk45") {
      fc.method = Method::rk45;
    } else {
      throw ConfigError("--method must be rk4 or rk45");
    }
  }
  if (opt.dt) {
    fc.dt = *opt.dt;
  }
  if (opt.dt_sample) {
    fc.dt_sample = *opt.dt_sample;
  }
  if (opt.n_samples) {
    fc.n_samples = *opt.n_samples;
  }
  const int pa_sign = opt.pa_sign.value_or(fc.pa_sign);

  PreparedRun run;
  run.params = fc.system;
  run.integrator = trajectory_integrator(fc);

  if (opt.er && opt.invariant) {
    throw ConfigError("--er and --invariant are mutually exclusive");
  }

  if (opt.regime == "classical") {
    if (opt.er || opt.invariant) {
      throw ConfigError(
          "--regime classical fixes I = 0; do not pass --er or --invariant "
          "(use --regime conservative/dissipative --invariant 0 for an "
          "explicit classical-manifold run)");
    }
    run.params.damping = 0.0;
    run.invariant = 0.0;
  } else if (opt.regime == "conservative" || opt.regime == "dissipative") {
    if (opt.regime == "conservative") {
      run.params.damping = 0.0;
    } else if (!(run.params.damping > 0.0)) {
      throw ConfigError("dissipative runs require damping > 0");
    }
    if (opt.er) {
      if (!(*opt.er >= 1.0)) {
        throw ConfigError(
            "--er must satisfy E_r >= 1 (the uncertainty-principle bound)");
      }
      run.invariant =
          invariant_for_relative_energy(fc.energy, *opt.er, run.params.omega_q);
    } else if (opt.invariant) {
      run.invariant = *opt.invariant;
    } else {
      throw ConfigError("pass --er or --invariant (or use --regime classical)");
    }
  } else {
    throw ConfigError("--regime must be conservative, dissipative or classical");
  }

  run.state0 = initial_state(fc.energy, run.invariant, pa_sign, run.params);
  return run;
}

void warn_short_series(std::size_t n, const OrdinalConfig& cfg) {
  const double patterns = static_cast<double>(factorial_u64(cfg.d));
  if (static_cast<double>(n) < 10.0 * patterns) {
    std::cerr << "warning: series length " << n
              << " is not large against d! = " << patterns
              << " patterns; quantifier estimates will be noisy\n";
  }
}

nlohmann::ordered_json report_json(const QuantifierReport& r) {
  nlohmann::ordered_json j;
  j["s"] = r.s;
  j["h"] = r.h;
  j["d_lmc"] = r.d_lmc;
  j["c_lmc"] = r.c_lmc;
  j["d_js"] = r.d_js;
  j["c_js"] = r.c_js;
  return j;
}

}  // namespace

int cmd_simulate(const SimulateArgs& args) {
  const PreparedRun run = prepare_run(args.run);
  const Trajectory traj = integrate(run.state0, run.params, run.integrator);
  write_trajectory_csv(traj, args.out);
  std::cout << "wrote " << args.out << " (" << traj.states.size()
            << " rows)\n";
  return 0;
}

int cmd_quantify(const QuantifyArgs& args) {
  const OrdinalConfig cfg{args.d, args.tau};
  cfg.validate();
  const std::vector<double> values = read_csv_column(args.in, args.column);
  warn_short_series(values.size(), cfg);
  const QuantifierReport report =
      quantify(TimeSeries{1.0, values}, cfg);
  std::cout << report_json(report).dump() << "\n";
  return 0;
}

int cmd_sweep(const SweepArgs& args) {
  const FileConfig fc = load_or_default(args.config_path);
  SweepConfig cfg = sweep_config(fc);
  if (args.regime_filter) {
    cfg.regimes = {regime_from_name(*args.regime_filter)};
  }
  if (args.out) {
    cfg.output = *args.out;
  }
  if (args.threads) {
    cfg.threads = *args.threads;
  }
  std::string format = fc.format;
  if (args.format) {
    if (*args.format != "csv" && *args.format != "json") {
      throw ConfigError("--format must be csv or json");
    }
    format = *args.format;
  }

  const std::vector<SweepRow> rows = run_sweep(cfg);

  std::size_t failed = 0;
  for (const SweepRow& row : rows) {
    if (!row.ok()) {
      ++failed;
    }
  }
  if (failed > 0) {
    std::cerr << "warning: " << failed << " of " << rows.size()
              << " sweep points failed; see the status column\n";
  }

  if (format == "json") {
    write_results_json(rows, cfg.output, args.rescale_lmc);
  } else {
    write_results_csv(rows, cfg.output, args.rescale_lmc);
  }
  std::cout << "wrote " << cfg.output << " (" << rows.size() << " rows)\n";

  // Convergence onset of each quantifier toward its classical-analog value.
  for (Regime regime : cfg.regimes) {
    const SweepRow* classical = nullptr;
    std::vector<double> ers;
    std::vector<double> h, c_js, c_lmc;
    for (const SweepRow& row : rows) {
      if (row.regime != regime) {
        continue;
      }
      if (std::isinf(row.er)) {
        classical = &row;
      } else {
        ers.push_back(row.er);
        h.push_back(row.q.h);
        c_js.push_back(row.q.c_js);
        c_lmc.push_back(row.q.c_lmc);
      }
    }
    if (classical == nullptr || !classical->ok()) {
      std::cout << "onset " << regime_name(regime)
                << ": classical reference run failed\n";
      continue;
    }
    const struct {
      const char* name;
      const std::vector<double>* values;
      double reference;
    } quantifier_rows[] = {
        {"h", &h, classical->q.h},
        {"c_js", &c_js, classical->q.c_js},
        {"c_lmc", &c_lmc, classical->q.c_lmc},
    };
    for (const auto& qrow : quantifier_rows) {
      const auto onset = convergence_onset(ers, *qrow.values, qrow.reference,
                                           cfg.onset);
      std::cout << "onset " << regime_name(regime) << " " << qrow.name << ": "
                << (onset ? format_number(*onset) : std::string("none"))
                << " (classical " << format_number(qrow.reference) << ", tol "
                << format_number(cfg.onset.tol)
                << (cfg.onset.relative ? " relative" : " absolute") << ", run "
                << cfg.onset.run_length << ")\n";
    }
  }
  return 0;
}

int cmd_poincare(const PoincareArgs& args) {
  FileConfig fc = load_or_default(args.run.config_path);
  SectionSpec spec = fc.section;
  if (args.section_var) {
    spec.section_variable = observable_from_name(*args.section_var);
  }
  if (args.section_value) {
    spec.section_value = *args.section_value;
  }
  if (args.direction) {
    spec.direction = direction_from_name(*args.direction);
  }
  if (args.plot_x) {
    spec.plot_x = observable_from_name(*args.plot_x);
  }
  if (args.plot_y) {
    spec.plot_y = observable_from_name(*args.plot_y);
  }
  spec.validate();

  const PreparedRun run = prepare_run(args.run);
  const Trajectory traj = integrate(run.state0, run.params, run.integrator);
  const SectionPoints points = detect_crossings(traj, spec);
  write_section_csv(points, args.out);
  std::cout << "wrote " << args.out << " (" << points.points.size()
            << " points)\n";
  return 0;
}

}  // namespace semiq::cli
