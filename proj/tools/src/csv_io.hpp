#pragma once

#include <string>
#include <vector>

#include "semiq/dynamics.hpp"
#include "semiq/poincare.hpp"

namespace semiq::cli {

/// Reads one numeric column from a headered CSV file.  A missing column is
/// reported together with the available column names.
std::vector<double> read_csv_column(const std::string& path,
                                    const std::string& column);

/// Writes `t,x2,p2,l,a,pa,energy,invariant_i` rows, 12 significant digits.
void write_trajectory_csv(const Trajectory& traj, const std::string& path);

/// Writes `t,plot_x,plot_y` rows, 12 significant digits.
void write_section_csv(const SectionPoints& points, const std::string& path);

}  // namespace semiq::cli
