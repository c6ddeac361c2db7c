#pragma once

#include <cstddef>
#include <string>

#include "semiq/dynamics.hpp"

namespace semiq {

enum class Method {
  rk4,   ///< fixed-step classical Runge-Kutta, fully deterministic
  rk45,  ///< adaptive embedded Dormand-Prince 5(4)
};

struct IntegratorConfig {
  Method method = Method::rk4;
  /// Internal step for rk4; initial step for rk45.
  double dt = 1e-3;
  /// Error control for rk45 only.
  double rel_tol = 1e-10;
  double abs_tol = 1e-10;
  /// Output sampling interval; must be an integer multiple of dt for rk4.
  double dt_sample = 0.1;
  std::size_t n_samples = 20000;

  void validate() const;
};

/// One fixed-step 4th-order Runge-Kutta advance (local error O(dt^5)).
/// dt == 0 returns the state unchanged.  Throws NumericError if the result
/// is non-finite.
DynState rk4_step(const DynState& state, const SystemParams& params, double dt);

/// Integrates from state0 at t = 0 and returns exactly cfg.n_samples states
/// spaced cfg.dt_sample apart, with states[0] == state0.
///
/// The invariant I and (when damping == 0) the energy are conserved along
/// the output within integration accuracy; this is verified by tests, not
/// enforced.  Non-finite values abort with NumericError naming the failure
/// time.  state0 must be admissible (I >= 0).
Trajectory integrate(const DynState& state0, const SystemParams& params,
                     const IntegratorConfig& cfg);

enum class Observable { x2, p2, l, a, pa, energy, invariant };

/// Parses one of: x2, p2, l, a, pa, energy, invariant_i (or invariant).
/// Throws ConfigError for anything else.
Observable observable_from_name(const std::string& name);
std::string observable_name(Observable obs);

double observable_value(const DynState& state, const SystemParams& params,
                        Observable obs);

/// Projects one observable out of a trajectory; energy and invariant are
/// evaluated from the sampled states.
TimeSeries observable_series(const Trajectory& traj, Observable obs);

}  // namespace semiq
