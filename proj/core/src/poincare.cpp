#include "semiq/poincare.hpp"

#include "semiq/errors.hpp"

namespace semiq {

CrossingDirection direction_from_name(const std::string& name) {
  if (name == "ascending") return CrossingDirection::ascending;
  if (name == "descending") return CrossingDirection::descending;
  if (name == "both") return CrossingDirection::both;
  throw ConfigError("unknown crossing direction '" + name +
                    "'; expected ascending, descending or both");
}

std::string direction_name(CrossingDirection dir) {
  switch (dir) {
    case CrossingDirection::ascending: return "ascending";
    case CrossingDirection::descending: return "descending";
    case CrossingDirection::both: return "both";
  }
  return "?";
}

void SectionSpec::validate() const {
  switch (section_variable) {
    case Observable::x2:
    case Observable::p2:
    case Observable::l:
    case Observable::a:
    case Observable::pa:
      break;
    default:
      throw ConfigError(
          "section variable must be a state variable (x2, p2, l, a, pa)");
  }
}

SectionPoints detect_crossings(const Trajectory& traj,
                               const SectionSpec& spec) {
  spec.validate();
  SectionPoints out;
  if (traj.states.size() < 2) {
    return out;
  }

  const bool want_up = spec.direction != CrossingDirection::descending;
  const bool want_down = spec.direction != CrossingDirection::ascending;

  double s_prev = observable_value(traj.states[0], traj.params,
                                   spec.section_variable) -
                  spec.section_value;
  double x_prev = observable_value(traj.states[0], traj.params, spec.plot_x);
  double y_prev = observable_value(traj.states[0], traj.params, spec.plot_y);

  for (std::size_t k = 1; k < traj.states.size(); ++k) {
    const DynState& cur = traj.states[k];
    const double s_cur =
        observable_value(cur, traj.params, spec.section_variable) -
        spec.section_value;
    const double x_cur = observable_value(cur, traj.params, spec.plot_x);
    const double y_cur = observable_value(cur, traj.params, spec.plot_y);

    const bool up = s_prev < 0.0 && s_cur >= 0.0;
    const bool down = s_prev > 0.0 && s_cur <= 0.0;
    if ((up && want_up) || (down && want_down)) {
      // s_prev and s_cur differ in sign, so the denominator is nonzero.
      const double f = s_prev / (s_prev - s_cur);
      SectionPoint pt;
      pt.t = traj.time_at(k - 1) + f * traj.dt_sample;
      pt.x = x_prev + f * (x_cur - x_prev);
      pt.y = y_prev + f * (y_cur - y_prev);
      out.points.push_back(pt);
    }

    s_prev = s_cur;
    x_prev = x_cur;
    y_prev = y_cur;
  }
  return out;
}

}  // namespace semiq
