#include "semiq/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "semiq/errors.hpp"

namespace semiq {

void SystemParams::validate() const {
  const bool finite = std::isfinite(omega_q) && std::isfinite(omega_cl) &&
                      std::isfinite(coupling) && std::isfinite(damping);
  if (!finite) {
    throw ConfigError("system parameters must be finite");
  }
  if (omega_q <= 0.0 || omega_cl <= 0.0) {
    throw ConfigError("frequencies omega_q and omega_cl must be > 0");
  }
  if (coupling < 0.0) {
    throw ConfigError("coupling must be >= 0");
  }
  if (damping < 0.0) {
    throw ConfigError("damping must be >= 0");
  }
}

bool DynState::finite() const {
  return std::isfinite(x2) && std::isfinite(p2) && std::isfinite(l) &&
         std::isfinite(a) && std::isfinite(pa);
}

DynState vector_field(const DynState& s, const SystemParams& p) {
  const double w = p.omega_q + p.coupling * s.a * s.a;
  DynState d;
  d.x2 = p.omega_q * s.l;
  d.p2 = -w * s.l;
  d.l = 2.0 * (p.omega_q * s.p2 - w * s.x2);
  d.a = p.omega_cl * s.pa;
  d.pa = -s.a * (p.omega_cl + p.coupling * s.x2) - p.damping * s.pa;
  return d;
}

double motion_invariant(const DynState& s) {
  return s.x2 * s.p2 - 0.25 * s.l * s.l;
}

double total_energy(const DynState& s, const SystemParams& p) {
  return 0.5 * (p.omega_q * (s.x2 + s.p2) +
                p.omega_cl * (s.a * s.a + s.pa * s.pa) +
                p.coupling * s.a * s.a * s.x2);
}

double relative_energy(double energy, double invariant, double omega_q) {
  if (!(omega_q > 0.0)) {
    throw ConfigError("relative energy requires omega_q > 0");
  }
  if (!(invariant > 0.0)) {
    throw ConfigError(
        "relative energy requires invariant I > 0; the classical limit "
        "I = 0 is a limit, not an evaluable point");
  }
  return std::abs(energy) / (std::sqrt(invariant) * omega_q);
}

double invariant_for_relative_energy(double energy, double er, double omega_q) {
  if (!(omega_q > 0.0)) {
    throw ConfigError("omega_q must be > 0");
  }
  if (!(er > 0.0)) {
    throw ConfigError("relative energy must be > 0");
  }
  const double root = energy / (er * omega_q);
  return root * root;
}

DynState initial_state(double energy, double invariant, int pa_sign,
                       const SystemParams& params) {
  params.validate();
  if (pa_sign != 1 && pa_sign != -1) {
    throw ConfigError("pa_sign must be +1 or -1");
  }
  if (!(energy > 0.0) || !std::isfinite(energy)) {
    throw ConfigError("initial energy must be finite and > 0");
  }
  if (!(invariant >= 0.0) || !std::isfinite(invariant)) {
    throw ConfigError("invariant I must be finite and >= 0");
  }

  const double e_over_w = energy / params.omega_q;
  const double bound = e_over_w * e_over_w;
  if (invariant > bound * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "uncertainty bound violated (E_r < 1): I = " << invariant
        << " exceeds (E/omega_q)^2 = " << bound;
    throw ConfigError(msg.str());
  }

  // Clamp the tiny negatives that appear when I sits exactly on the bound.
  const double gap = std::max(0.0, bound - invariant);

  DynState s;
  s.l = 0.0;
  s.a = 0.0;
  s.x2 = e_over_w - 0.98 * std::sqrt(gap);
  s.p2 = invariant > 0.0 ? invariant / s.x2 : 0.0;

  const double radicand = 2.0 * energy - params.omega_q * (s.x2 + s.p2);
  if (radicand < -1e-12 * energy) {
    std::ostringstream msg;
    msg << "energy insufficient for P_A(0): radicand " << radicand;
    throw ConfigError(msg.str());
  }
  s.pa = static_cast<double>(pa_sign) * std::sqrt(std::max(0.0, radicand)) /
         std::sqrt(params.omega_cl);
  return s;
}

}  // namespace semiq
