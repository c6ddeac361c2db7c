#include "semiq/integrator.hpp"

#include <cmath>
#include <sstream>

#include "semiq/errors.hpp"

namespace semiq {

namespace {

inline void add_scaled(DynState& acc, double c, const DynState& k) {
  acc.x2 += c * k.x2;
  acc.p2 += c * k.p2;
  acc.l += c * k.l;
  acc.a += c * k.a;
  acc.pa += c * k.pa;
}

[[noreturn]] void throw_nonfinite(double t) {
  std::ostringstream msg;
  msg << "non-finite state at t = " << t << " (integration diverged)";
  throw NumericError(msg.str());
}

DynState rk4_advance(const DynState& y, const SystemParams& p, double dt) {
  const DynState k1 = vector_field(y, p);
  DynState y2 = y;
  add_scaled(y2, 0.5 * dt, k1);
  const DynState k2 = vector_field(y2, p);
  DynState y3 = y;
  add_scaled(y3, 0.5 * dt, k2);
  const DynState k3 = vector_field(y3, p);
  DynState y4 = y;
  add_scaled(y4, dt, k3);
  const DynState k4 = vector_field(y4, p);

  DynState out = y;
  const double w = dt / 6.0;
  add_scaled(out, w, k1);
  add_scaled(out, 2.0 * w, k2);
  add_scaled(out, 2.0 * w, k3);
  add_scaled(out, w, k4);
  return out;
}

// Dormand-Prince 5(4) tableau.
constexpr double kA21 = 1.0 / 5.0;
constexpr double kA31 = 3.0 / 40.0, kA32 = 9.0 / 40.0;
constexpr double kA41 = 44.0 / 45.0, kA42 = -56.0 / 15.0, kA43 = 32.0 / 9.0;
constexpr double kA51 = 19372.0 / 6561.0, kA52 = -25360.0 / 2187.0,
                 kA53 = 64448.0 / 6561.0, kA54 = -212.0 / 729.0;
constexpr double kA61 = 9017.0 / 3168.0, kA62 = -355.0 / 33.0,
                 kA63 = 46732.0 / 5247.0, kA64 = 49.0 / 176.0,
                 kA65 = -5103.0 / 18656.0;
constexpr double kB1 = 35.0 / 384.0, kB3 = 500.0 / 1113.0, kB4 = 125.0 / 192.0,
                 kB5 = -2187.0 / 6784.0, kB6 = 11.0 / 84.0;
// b - b_hat, for the embedded 4th-order error estimate.
constexpr double kE1 = 71.0 / 57600.0, kE3 = -71.0 / 16695.0,
                 kE4 = 71.0 / 1920.0, kE5 = -17253.0 / 339200.0,
                 kE6 = 22.0 / 525.0, kE7 = -1.0 / 40.0;

struct Dopri5Attempt {
  DynState y_new;
  double error = 0.0;  // scaled error norm; accept when <= 1
};

Dopri5Attempt dopri5_attempt(const DynState& y, const SystemParams& p,
                             double h, double rel_tol, double abs_tol) {
  const DynState k1 = vector_field(y, p);

  DynState ys = y;
  add_scaled(ys, h * kA21, k1);
  const DynState k2 = vector_field(ys, p);

  ys = y;
  add_scaled(ys, h * kA31, k1);
  add_scaled(ys, h * kA32, k2);
  const DynState k3 = vector_field(ys, p);

  ys = y;
  add_scaled(ys, h * kA41, k1);
  add_scaled(ys, h * kA42, k2);
  add_scaled(ys, h * kA43, k3);
  const DynState k4 = vector_field(ys, p);

  ys = y;
  add_scaled(ys, h * kA51, k1);
  add_scaled(ys, h * kA52, k2);
  add_scaled(ys, h * kA53, k3);
  add_scaled(ys, h * kA54, k4);
  const DynState k5 = vector_field(ys, p);

  ys = y;
  add_scaled(ys, h * kA61, k1);
  add_scaled(ys, h * kA62, k2);
  add_scaled(ys, h * kA63, k3);
  add_scaled(ys, h * kA64, k4);
  add_scaled(ys, h * kA65, k5);
  const DynState k6 = vector_field(ys, p);

  Dopri5Attempt att;
  att.y_new = y;
  add_scaled(att.y_new, h * kB1, k1);
  add_scaled(att.y_new, h * kB3, k3);
  add_scaled(att.y_new, h * kB4, k4);
  add_scaled(att.y_new, h * kB5, k5);
  add_scaled(att.y_new, h * kB6, k6);
  const DynState k7 = vector_field(att.y_new, p);

  DynState err{};
  add_scaled(err, h * kE1, k1);
  add_scaled(err, h * kE3, k3);
  add_scaled(err, h * kE4, k4);
  add_scaled(err, h * kE5, k5);
  add_scaled(err, h * kE6, k6);
  add_scaled(err, h * kE7, k7);

  const double ey[5] = {err.x2, err.p2, err.l, err.a, err.pa};
  const double y0[5] = {y.x2, y.p2, y.l, y.a, y.pa};
  const double y1[5] = {att.y_new.x2, att.y_new.p2, att.y_new.l, att.y_new.a,
                        att.y_new.pa};
  double sum = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double scale =
        abs_tol + rel_tol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    const double q = ey[i] / scale;
    sum += q * q;
  }
  att.error = std::sqrt(sum / 5.0);
  return att;
}

// Advances y from t to t_target with step-size control.
void dopri5_to(DynState& y, double& h, double t, double t_target,
               const SystemParams& p, const IntegratorConfig& cfg) {
  constexpr double kMinFactor = 0.2;
  constexpr double kMaxFactor = 5.0;
  constexpr double kSafety = 0.9;

  int rejects_in_a_row = 0;
  while (t < t_target) {
    const double remaining = t_target - t;
    if (remaining <= 1e-14 * std::max(1.0, std::abs(t_target))) {
      break;
    }
    const double h_try = std::min(h, remaining);
    const Dopri5Attempt att =
        dopri5_attempt(y, p, h_try, cfg.rel_tol, cfg.abs_tol);

    if (!att.y_new.finite() || !std::isfinite(att.error)) {
      throw_nonfinite(t);
    }

    if (att.error <= 1.0) {
      t += h_try;
      y = att.y_new;
      rejects_in_a_row = 0;
      const double factor =
          att.error == 0.0
              ? kMaxFactor
              : std::min(kMaxFactor,
                         std::max(kMinFactor,
                                  kSafety * std::pow(att.error, -0.2)));
      h = h_try * factor;
    } else {
      if (++rejects_in_a_row > 60) {
        std::ostringstream msg;
        msg << "step control failed near t = " << t
            << " (60 consecutive rejections)";
        throw NumericError(msg.str());
      }
      const double factor =
          std::max(kMinFactor, kSafety * std::pow(att.error, -0.2));
      h = h_try * factor;
    }
    if (h < 1e-14 * std::max(1.0, std::abs(t))) {
      std::ostringstream msg;
      msg << "step size underflow at t = " << t;
      throw NumericError(msg.str());
    }
  }
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ConfigError("integrator dt must be finite and > 0");
  }
  if (!(dt_sample > 0.0) || !std::isfinite(dt_sample)) {
    throw ConfigError("integrator dt_sample must be finite and > 0");
  }
  if (n_samples < 1) {
    throw ConfigError("integrator n_samples must be >= 1");
  }
  if (method == Method::rk4) {
    const double ratio = dt_sample / dt;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * rounded) {
      std::ostringstream msg;
      msg << "dt_sample (" << dt_sample << ") must be an integer multiple of dt ("
          << dt << ") for the rk4 method";
      throw ConfigError(msg.str());
    }
  } else {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
      throw ConfigError("rk45 tolerances must be > 0");
    }
  }
}

DynState rk4_step(const DynState& state, const SystemParams& params,
                  double dt) {
  if (!(dt >= 0.0) || !std::isfinite(dt)) {
    throw ConfigError("rk4_step requires finite dt >= 0");
  }
  if (dt == 0.0) {
    return state;
  }
  DynState out = rk4_advance(state, params, dt);
  if (!out.finite()) {
    throw NumericError("non-finite state after rk4 step");
  }
  return out;
}

Trajectory integrate(const DynState& state0, const SystemParams& params,
                     const IntegratorConfig& cfg) {
  params.validate();
  cfg.validate();
  if (!state0.finite()) {
    throw ConfigError("initial state must be finite");
  }
  if (motion_invariant(state0) < -1e-12) {
    throw ConfigError("initial state is inadmissible (invariant I < 0)");
  }

  Trajectory traj;
  traj.params = params;
  traj.t0 = 0.0;
  traj.dt_sample = cfg.dt_sample;
  traj.states.reserve(cfg.n_samples);
  traj.states.push_back(state0);

  if (cfg.method == Method::rk4) {
    const auto steps_per_sample =
        static_cast<long long>(std::llround(cfg.dt_sample / cfg.dt));
    DynState y = state0;
    for (std::size_t k = 1; k < cfg.n_samples; ++k) {
      for (long long j = 0; j < steps_per_sample; ++j) {
        y = rk4_advance(y, params, cfg.dt);
        if (!y.finite()) {
          throw_nonfinite(static_cast<double>(k - 1) * cfg.dt_sample +
                          static_cast<double>(j + 1) * cfg.dt);
        }
      }
      traj.states.push_back(y);
    }
  } else {
    DynState y = state0;
    double h = std::min(cfg.dt, cfg.dt_sample);
    for (std::size_t k = 1; k < cfg.n_samples; ++k) {
      const double t_prev = static_cast<double>(k - 1) * cfg.dt_sample;
      const double t_next = static_cast<double>(k) * cfg.dt_sample;
      dopri5_to(y, h, t_prev, t_next, params, cfg);
      traj.states.push_back(y);
    }
  }
  return traj;
}

Observable observable_from_name(const std::string& name) {
  if (name == "x2") return Observable::x2;
  if (name == "p2") return Observable::p2;
  if (name == "l") return Observable::l;
  if (name == "a") return Observable::a;
  if (name == "pa") return Observable::pa;
  if (name == "energy") return Observable::energy;
  if (name == "invariant_i" || name == "invariant") return Observable::invariant;
  throw ConfigError("unknown observable '" + name +
                    "'; expected one of x2, p2, l, a, pa, energy, invariant_i");
}

std::string observable_name(Observable obs) {
  switch (obs) {
    case Observable::x2: return "x2";
    case Observable::p2: return "p2";
    case Observable::l: return "l";
    case Observable::a: return "a";
    case Observable::pa: return "pa";
    case Observable::energy: return "energy";
    case Observable::invariant: return "invariant_i";
  }
  return "?";
}

double observable_value(const DynState& s, const SystemParams& params,
                        Observable obs) {
  switch (obs) {
    case Observable::x2: return s.x2;
    case Observable::p2: return s.p2;
    case Observable::l: return s.l;
    case Observable::a: return s.a;
    case Observable::pa: return s.pa;
    case Observable::energy: return total_energy(s, params);
    case Observable::invariant: return motion_invariant(s);
  }
  return 0.0;
}

TimeSeries observable_series(const Trajectory& traj, Observable obs) {
  if (traj.states.empty()) {
    throw ConfigError("observable_series requires a nonempty trajectory");
  }
  TimeSeries ts;
  ts.dt_sample = traj.dt_sample;
  ts.values.reserve(traj.states.size());
  for (const DynState& s : traj.states) {
    ts.values.push_back(observable_value(s, traj.params, obs));
  }
  return ts;
}

}  // namespace semiq
