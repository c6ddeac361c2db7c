#include "semiq/pipeline.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "semiq/errors.hpp"
#include "semiq/format.hpp"

namespace semiq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string sanitize_status(const std::string& status) {
  std::string out = status;
  for (char& c : out) {
    if (c == ',' || c == '\n' || c == '\r') {
      c = ';';
    }
  }
  return out;
}

SweepRow failed_row(Regime regime, double er, double invariant,
                    const std::string& message) {
  SweepRow row;
  row.regime = regime;
  row.er = er;
  row.invariant = invariant;
  row.q = {kNan, kNan, kNan, kNan, kNan, kNan};
  row.status = message;
  return row;
}

SweepRow run_one(double er, Regime regime, const SweepConfig& cfg) {
  SystemParams params = cfg.params;
  params.damping = regime == Regime::dissipative ? cfg.params.damping : 0.0;

  const bool classical = std::isinf(er);
  const double invariant =
      classical ? 0.0
                : invariant_for_relative_energy(cfg.energy, er, params.omega_q);

  const DynState s0 = initial_state(cfg.energy, invariant, cfg.pa_sign, params);
  const Trajectory traj = integrate(s0, params, cfg.integrator);
  const TimeSeries x2 = observable_series(traj, Observable::x2);

  SweepRow row;
  row.regime = regime;
  row.er = er;
  row.invariant = invariant;
  row.q = quantify(x2, cfg.ordinal);
  row.status = "ok";
  return row;
}

std::string row_tag(double er, Regime regime) {
  std::ostringstream tag;
  tag << "er=" << format_number(er) << " regime=" << regime_name(regime) << ": ";
  return tag.str();
}

void write_or_throw(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << content;
  out.flush();
  if (!out) {
    throw IoError("write to '" + path + "' failed");
  }
}

}  // namespace

Regime regime_from_name(const std::string& name) {
  if (name == "conservative") return Regime::conservative;
  if (name == "dissipative") return Regime::dissipative;
  throw ConfigError("unknown regime '" + name +
                    "'; expected conservative or dissipative");
}

std::string regime_name(Regime regime) {
  return regime == Regime::conservative ? "conservative" : "dissipative";
}

GridSpacing spacing_from_name(const std::string& name) {
  if (name == "log") return GridSpacing::log;
  if (name == "linear") return GridSpacing::linear;
  throw ConfigError("unknown grid spacing '" + name +
                    "'; expected log or linear");
}

void SweepConfig::validate() const {
  params.validate();
  if (!(energy > 0.0) || !std::isfinite(energy)) {
    throw ConfigError("sweep energy must be finite and > 0");
  }
  if (regimes.empty()) {
    throw ConfigError("sweep requires at least one regime");
  }
  for (Regime r : regimes) {
    if (r == Regime::dissipative && !(params.damping > 0.0)) {
      throw ConfigError("dissipative regime requires damping > 0");
    }
  }
  if (!(er_min > 1.0)) {
    throw ConfigError("er_min must be > 1");
  }
  if (!(er_max > er_min)) {
    throw ConfigError("er_max must exceed er_min");
  }
  if (n_points < 2) {
    throw ConfigError("sweep needs n_points >= 2");
  }
  if (pa_sign != 1 && pa_sign != -1) {
    throw ConfigError("pa_sign must be +1 or -1");
  }
  integrator.validate();
  ordinal.validate();
  if (!(onset.tol > 0.0)) {
    throw ConfigError("onset tolerance must be > 0");
  }
  if (onset.run_length < 1) {
    throw ConfigError("onset run_length must be >= 1");
  }
  if (threads < 0) {
    throw ConfigError("threads must be >= 0");
  }
}

std::vector<double> er_grid(double er_min, double er_max, int n,
                            GridSpacing spacing) {
  if (n < 2) {
    throw ConfigError("grid needs at least 2 points");
  }
  if (!(er_min < er_max)) {
    throw ConfigError("grid requires er_min < er_max");
  }
  if (spacing == GridSpacing::log && !(er_min > 0.0)) {
    throw ConfigError("log grid requires er_min > 0");
  }
  std::vector<double> grid(static_cast<std::size_t>(n));
  if (spacing == GridSpacing::log) {
    const double lo = std::log(er_min);
    const double step = (std::log(er_max) - lo) / static_cast<double>(n - 1);
    for (int i = 0; i < n; ++i) {
      grid[static_cast<std::size_t>(i)] = std::exp(lo + step * i);
    }
  } else {
    const double step = (er_max - er_min) / static_cast<double>(n - 1);
    for (int i = 0; i < n; ++i) {
      grid[static_cast<std::size_t>(i)] = er_min + step * i;
    }
  }
  grid.front() = er_min;
  grid.back() = er_max;
  return grid;
}

SweepRow run_point(double er, Regime regime, const SweepConfig& cfg) {
  cfg.validate();
  if (!(er > 1.0)) {
    throw ConfigError(row_tag(er, regime) +
                      "sweep points require E_r > 1 (E_r >= 1 is the "
                      "uncertainty bound; the grid starts above it)");
  }
  try {
    return run_one(er, regime, cfg);
  } catch (const NumericError& e) {
    throw NumericError(row_tag(er, regime) + e.what());
  } catch (const ConfigError& e) {
    throw ConfigError(row_tag(er, regime) + e.what());
  }
}

SweepRow run_classical(Regime regime, const SweepConfig& cfg) {
  cfg.validate();
  try {
    return run_one(kInf, regime, cfg);
  } catch (const NumericError& e) {
    throw NumericError(row_tag(kInf, regime) + e.what());
  } catch (const ConfigError& e) {
    throw ConfigError(row_tag(kInf, regime) + e.what());
  }
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const std::vector<double> grid =
      er_grid(cfg.er_min, cfg.er_max, cfg.n_points, cfg.spacing);

  struct Task {
    Regime regime;
    double er;
  };
  std::vector<Task> tasks;
  tasks.reserve(cfg.regimes.size() * (grid.size() + 1));
  for (Regime regime : cfg.regimes) {
    for (double er : grid) {
      tasks.push_back({regime, er});
    }
    tasks.push_back({regime, kInf});  // classical analog, sorts last
  }

  std::vector<SweepRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      const Task& task = tasks[i];
      try {
        rows[i] = run_one(task.er, task.regime, cfg);
      } catch (const std::exception& e) {
        double invariant = kNan;
        if (std::isinf(task.er)) {
          invariant = 0.0;
        } else {
          try {
            invariant = invariant_for_relative_energy(cfg.energy, task.er,
                                                      cfg.params.omega_q);
          } catch (const std::exception&) {
          }
        }
        rows[i] = failed_row(task.regime, task.er, invariant, e.what());
      }
    }
  };

  std::size_t n_threads = cfg.threads > 0
                              ? static_cast<std::size_t>(cfg.threads)
                              : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min(n_threads, tasks.size());
  if (n_threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t i = 0; i < n_threads; ++i) {
      pool.emplace_back(work);
    }
    for (std::thread& t : pool) {
      t.join();
    }
  }
  return rows;
}

std::optional<double> convergence_onset(std::span<const double> er,
                                        std::span<const double> values,
                                        double classical_value,
                                        const OnsetParams& params) {
  if (er.empty() || er.size() != values.size()) {
    throw ConfigError("onset detection needs equally sized, nonempty inputs");
  }
  if (!(params.tol > 0.0) || params.run_length < 1) {
    throw ConfigError("onset detection needs tol > 0 and run_length >= 1");
  }
  const double band = params.relative
                          ? params.tol * std::abs(classical_value)
                          : params.tol;
  // Longest suffix staying inside the band; NaN never qualifies.
  std::size_t start = er.size();
  for (std::size_t i = er.size(); i-- > 0;) {
    const double dev = std::abs(values[i] - classical_value);
    if (!(dev <= band)) {
      break;
    }
    start = i;
  }
  if (start == er.size() ||
      er.size() - start < static_cast<std::size_t>(params.run_length)) {
    return std::nullopt;
  }
  return er[start];
}

void write_results_csv(std::span<const SweepRow> rows, const std::string& path,
                       bool rescale_lmc) {
  std::ostringstream out;
  out << "regime,er,invariant_i,entropy_s,entropy_h,d_lmc,c_lmc,d_js,c_js,status";
  if (rescale_lmc) {
    out << ",c_lmc_rescaled";
  }
  out << '\n';
  for (const SweepRow& row : rows) {
    out << regime_name(row.regime) << ',' << format_number(row.er) << ','
        << format_number(row.invariant) << ',' << format_number(row.q.s) << ','
        << format_number(row.q.h) << ',' << format_number(row.q.d_lmc) << ','
        << format_number(row.q.c_lmc) << ',' << format_number(row.q.d_js)
        << ',' << format_number(row.q.c_js) << ','
        << sanitize_status(row.status);
    if (rescale_lmc) {
      out << ',' << format_number(kLmcComparisonScale * row.q.c_lmc);
    }
    out << '\n';
  }
  write_or_throw(path, out.str());
}

void write_results_json(std::span<const SweepRow> rows,
                        const std::string& path, bool rescale_lmc) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SweepRow& row : rows) {
    nlohmann::json j;
    j["regime"] = regime_name(row.regime);
    if (std::isinf(row.er)) {
      j["er"] = "inf";
    } else {
      j["er"] = row.er;
    }
    j["invariant_i"] = row.invariant;
    j["entropy_s"] = row.q.s;
    j["entropy_h"] = row.q.h;
    j["d_lmc"] = row.q.d_lmc;
    j["c_lmc"] = row.q.c_lmc;
    j["d_js"] = row.q.d_js;
    j["c_js"] = row.q.c_js;
    j["status"] = row.status;
    if (rescale_lmc) {
      j["c_lmc_rescaled"] = kLmcComparisonScale * row.q.c_lmc;
    }
    arr.push_back(std::move(j));
  }
  write_or_throw(path, arr.dump(2) + "\n");
}

}  // namespace semiq
