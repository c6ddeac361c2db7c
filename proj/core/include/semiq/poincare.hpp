#pragma once

#include <string>
#include <vector>

#include "semiq/dynamics.hpp"
#include "semiq/integrator.hpp"

namespace semiq {

enum class CrossingDirection { ascending, descending, both };

CrossingDirection direction_from_name(const std::string& name);
std::string direction_name(CrossingDirection dir);

/// A codimension-one section: crossings of section_variable through
/// section_value in the given direction, projected onto (plot_x, plot_y).
struct SectionSpec {
  Observable section_variable = Observable::a;
  double section_value = 0.0;
  CrossingDirection direction = CrossingDirection::ascending;
  Observable plot_x = Observable::x2;
  Observable plot_y = Observable::p2;

  /// section_variable must be a state variable (x2, p2, l, a, pa).
  void validate() const;
};

struct SectionPoint {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
};

struct SectionPoints {
  std::vector<SectionPoint> points;  ///< crossing times strictly increasing
};

/// Scans adjacent sample pairs for sign changes of section_variable -
/// section_value in the requested direction and emits one point per
/// crossing, with time and plot coordinates linearly interpolated at the
/// crossing fraction.  An empty result is valid.
SectionPoints detect_crossings(const Trajectory& traj, const SectionSpec& spec);

}  // namespace semiq
