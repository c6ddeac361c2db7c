#pragma once

#include <cstddef>
#include <vector>

namespace semiq {

/// Model constants of the coupled oscillator-reservoir system.
///
/// The quantum oscillator (frequency omega_q) is coupled to a classical
/// reservoir mode (frequency omega_cl) through the quadratic interaction
/// coupling * A^2 * x2.  damping acts on the reservoir momentum only;
/// damping == 0 is the conservative regime, damping > 0 the dissipative one.
struct SystemParams {
  double omega_q = 1.0;
  double omega_cl = 1.0;
  double coupling = 1.0;
  double damping = 0.0;

  bool dissipative() const { return damping > 0.0; }

  /// Throws ConfigError unless omega_q > 0, omega_cl > 0, coupling >= 0,
  /// damping >= 0 and all values are finite.
  void validate() const;
};

/// The five dynamical variables shared by the semiclassical and classical
/// flows: the quantum second moments x2 = <x^2>, p2 = <p^2>, the symmetrized
/// cross moment l = <xp + px>, and the reservoir pair (a, pa).
///
/// A state on the classical manifold satisfies x2*p2 - l^2/4 == 0, with
/// l = 2*x*p; the same equations of motion then reproduce Hamilton's
/// equations for (x^2, p^2, 2xp, A, P_A).
struct DynState {
  double x2 = 0.0;
  double p2 = 0.0;
  double l = 0.0;
  double a = 0.0;
  double pa = 0.0;

  bool finite() const;
};

/// Uniformly sampled state history.  states[k] is the state at time
/// t0 + k * dt_sample.
struct Trajectory {
  SystemParams params;
  double t0 = 0.0;
  double dt_sample = 0.1;
  std::vector<DynState> states;

  double time_at(std::size_t k) const { return t0 + static_cast<double>(k) * dt_sample; }
};

/// A scalar observable sampled at a fixed interval.
struct TimeSeries {
  double dt_sample = 0.1;
  std::vector<double> values;
};

/// Right-hand side of the equations of motion, returned as a DynState whose
/// fields hold the time derivatives:
///
///   x2' = omega_q * l
///   p2' = -(omega_q + coupling * a^2) * l
///   l'  = 2 * (omega_q * p2 - (omega_q + coupling * a^2) * x2)
///   a'  = omega_cl * pa
///   pa' = -a * (omega_cl + coupling * x2) - damping * pa
///
/// The divergence of this field is identically -damping: only the pa
/// equation depends on its own variable.
DynState vector_field(const DynState& state, const SystemParams& params);

/// Motion invariant I = x2 * p2 - l^2 / 4.
///
/// Conserved exactly by the flow in both regimes.  I == 0 characterizes the
/// classical manifold; an admissible state has I >= 0, so a negative return
/// flags an inadmissible state to the caller.
double motion_invariant(const DynState& state);

/// Total energy (1/2) * (omega_q*(x2+p2) + omega_cl*(a^2+pa^2)
///                       + coupling*a^2*x2).
/// Conserved when damping == 0; decays as dE/dt = -damping*omega_cl*pa^2
/// otherwise.
double total_energy(const DynState& state, const SystemParams& params);

/// Relative energy E_r = |energy| / (sqrt(invariant) * omega_q).
///
/// E_r >= 1 for admissible pairs; E_r -> infinity is the classical limit and
/// is not an evaluable point.  In the dissipative regime callers must pass
/// the initial energy E(0), never the decaying E(t).
///
/// Throws ConfigError when invariant <= 0 or omega_q <= 0.
double relative_energy(double energy, double invariant, double omega_q);

/// Inverse of relative_energy: the invariant I = (energy / (er * omega_q))^2
/// that realizes a requested E_r at fixed energy.
///
/// Throws ConfigError when er <= 0 or omega_q <= 0.
double invariant_for_relative_energy(double energy, double er, double omega_q);

/// Initial state for a run at energy E with invariant I:
///
///   l = a = 0
///   x2 = E/omega_q - 0.98 * sqrt((E/omega_q)^2 - I)
///   p2 = I / x2          (exactly 0 when I == 0)
///   pa = pa_sign * sqrt(2E - omega_q*(x2 + p2)) / sqrt(omega_cl)
///
/// The result satisfies total_energy == E and motion_invariant == I to
/// machine precision.  pa_sign must be +1 or -1; with a = 0 the two signs
/// generate time-mirrored trajectories.
///
/// Throws ConfigError when E <= 0, I < 0, I > (E/omega_q)^2 (uncertainty
/// bound violated, E_r < 1) or when the pa radicand is negative (energy
/// insufficient for the reservoir momentum).
DynState initial_state(double energy, double invariant, int pa_sign,
                       const SystemParams& params);

}  // namespace semiq
