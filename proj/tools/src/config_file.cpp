#include "config_file.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "semiq/errors.hpp"

namespace semiq::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(int line, const std::string& message) {
  std::ostringstream msg;
  msg << "config line " << line << ": " << message;
  throw ConfigError(msg.str());
}

double parse_double(const std::string& value, const std::string& key, int line) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0') {
    fail(line, "invalid number '" + value + "' for key " + key);
  }
  return v;
}

long long parse_int(const std::string& value, const std::string& key, int line) {
  char* end = nullptr;
  const long long v = std::strtoll(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0') {
    fail(line, "invalid integer '" + value + "' for key " + key);
  }
  return v;
}

std::vector<Regime> parse_regimes(const std::string& value, int line) {
  std::vector<Regime> regimes;
  std::stringstream ss(value);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token = trim(token);
    if (token.empty()) {
      continue;
    }
    try {
      regimes.push_back(regime_from_name(token));
    } catch (const ConfigError& e) {
      fail(line, e.what());
    }
  }
  if (regimes.empty()) {
    fail(line, "sweep.regimes must name at least one regime");
  }
  return regimes;
}

int parse_pa_sign(const std::string& value, int line) {
  if (value == "+1" || value == "1") {
    return +1;
  }
  if (value == "-1") {
    return -1;
  }
  fail(line, "sweep.pa_sign must be +1 or -1, got '" + value + "'");
}

}  // namespace

FileConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open config file '" + path + "'");
  }

  FileConfig fc;
  std::string section;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') {
        fail(line_no, "malformed section header '" + line + "'");
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section != "system" && section != "integrator" &&
          section != "ordinal" && section != "sweep" && section != "poincare") {
        fail(line_no, "unknown section '" + section + "'");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(line_no, "expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty()) {
      fail(line_no, "key '" + key + "' appears before any [section]");
    }
    const std::string qualified = section + "." + key;

    if (section == "system") {
      if (key == "omega_q") {
        fc.system.omega_q = parse_double(value, qualified, line_no);
      } else if (key == "omega_cl") {
        fc.system.omega_cl = parse_double(value, qualified, line_no);
      } else if (key == "coupling") {
        fc.system.coupling = parse_double(value, qualified, line_no);
      } else if (key == "damping") {
        fc.system.damping = parse_double(value, qualified, line_no);
      } else {
        fail(line_no, "unknown key '" + qualified + "'");
      }
    } else if (section == "integrator") {
      if (key == "method") {
        if (value == "rk4") {
          fc.method = Method::rk4;
        } else if (value == "rk45") {
          fc.method = Method::rk45;
        } else {
          fail(line_no, "integrator.method must be rk4 or rk45");
        }
      } else if (key == "dt") {
        fc.dt = parse_double(value, qualified, line_no);
      } else if (key == "rel_tol") {
        fc.rel_tol = parse_double(value, qualified, line_no);
      } else if (key == "abs_tol") {
        fc.abs_tol = parse_double(value, qualified, line_no);
      } else if (key == "dt_sample") {
        fc.dt_sample = parse_double(value, qualified, line_no);
      } else if (key == "n_samples") {
        const long long n = parse_int(value, qualified, line_no);
        if (n < 1) {
          fail(line_no, "integrator.n_samples must be >= 1");
        }
        fc.n_samples = static_cast<std::size_t>(n);
      } else {
        fail(line_no, "unknown key '" + qualified + "'");
      }
    } else if (section == "ordinal") {
      if (key == "d") {
        fc.ordinal.d = static_cast<int>(parse_int(value, qualified, line_no));
      } else if (key == "tau") {
        fc.ordinal.tau = static_cast<int>(parse_int(value, qualified, line_no));
      } else {
        fail(line_no, "unknown key '" + qualified + "'");
      }
    } else if (section == "sweep") {
      if (key == "energy") {
        fc.energy = parse_double(value, qualified, line_no);
      } else if (key == "regimes") {
        fc.regimes = parse_regimes(value, line_no);
      } else if (key == "er_min") {
        fc.er_min = parse_double(value, qualified, line_no);
      } else if (key == "er_max") {
        fc.er_max = parse_double(value, qualified, line_no);
      } else if (key == "n_points") {
        fc.n_points = static_cast<int>(parse_int(value, qualified, line_no));
      } else if (key == "spacing") {
        try {
          fc.spacing = spacing_from_name(value);
        } catch (const ConfigError& e) {
          fail(line_no, e.what());
        }
      } else if (key == "pa_sign") {
        fc.pa_sign = parse_pa_sign(value, line_no);
      } else if (key == "output") {
        fc.output = value;
      } else if (key == "format") {
        if (value != "csv" && value != "json") {
          fail(line_no, "sweep.format must be csv or json");
        }
        fc.format = value;
      } else if (key == "onset_tol") {
        fc.onset.tol = parse_double(value, qualified, line_no);
      } else if (key == "onset_run_length") {
        fc.onset.run_length =
            static_cast<int>(parse_int(value, qualified, line_no));
      } else if (key == "onset_mode") {
        if (value == "absolute") {
          fc.onset.relative = false;
        } else if (value == "relative") {
          fc.onset.relative = true;
        } else {
          fail(line_no, "sweep.onset_mode must be absolute or relative");
        }
      } else if (key == "threads") {
        fc.threads = static_cast<int>(parse_int(value, qualified, line_no));
      } else {
        fail(line_no, "unknown key '" + qualified + "'");
      }
    } else {  // poincare
      try {
        if (key == "section_var") {
          fc.section.section_variable = observable_from_name(value);
        } else if (key == "section_value") {
          fc.section.section_value = parse_double(value, qualified, line_no);
        } else if (key == "direction") {
          fc.section.direction = direction_from_name(value);
        } else if (key == "plot_x") {
          fc.section.plot_x = observable_from_name(value);
        } else if (key == "plot_y") {
          fc.section.plot_y = observable_from_name(value);
        } else {
          fail(line_no, "unknown key '" + qualified + "'");
        }
      } catch (const ConfigError& e) {
        const std::string what = e.what();
        if (what.rfind("config line", 0) == 0) {
          throw;
        }
        fail(line_no, what);
      }
    }
  }
  return fc;
}

namespace {

IntegratorConfig integrator_with_defaults(const FileConfig& fc,
                                          double default_dt_sample) {
  IntegratorConfig cfg;
  cfg.method = fc.method.value_or(Method::rk4);
  cfg.dt = fc.dt.value_or(1e-3);
  cfg.rel_tol = fc.rel_tol.value_or(1e-10);
  cfg.abs_tol = fc.abs_tol.value_or(1e-10);
  cfg.dt_sample = fc.dt_sample.value_or(default_dt_sample);
  cfg.n_samples = fc.n_samples.value_or(20000);
  return cfg;
}

}  // namespace

IntegratorConfig trajectory_integrator(const FileConfig& fc) {
  return integrator_with_defaults(fc, 0.1);
}

IntegratorConfig sweep_integrator(const FileConfig& fc) {
  return integrator_with_defaults(fc, 0.01);
}

SweepConfig sweep_config(const FileConfig& fc) {
  SweepConfig cfg;
  cfg.energy = fc.energy;
  cfg.params = fc.system;
  cfg.regimes = fc.regimes;
  cfg.er_min = fc.er_min;
  cfg.er_max = fc.er_max;
  cfg.n_points = fc.n_points;
  cfg.spacing = fc.spacing;
  cfg.pa_sign = fc.pa_sign;
  cfg.integrator = sweep_integrator(fc);
  cfg.ordinal = fc.ordinal;
  cfg.onset = fc.onset;
  cfg.output = fc.output;
  cfg.threads = fc.threads;
  return cfg;
}

}  // namespace semiq::cli
