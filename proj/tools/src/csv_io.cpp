#include "csv_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "semiq/errors.hpp"
#include "semiq/format.hpp"
#include "semiq/integrator.hpp"

namespace semiq::cli {

namespace {

std::vector<std::string> split_csv_line(std::string line) {
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    cells.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') {
    cells.emplace_back();
  }
  return cells;
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

std::vector<double> read_csv_column(const std::string& path,
                                    const std::string& column) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path + "'");
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw ConfigError("'" + path + "' is empty");
  }
  const std::vector<std::string> header = split_csv_line(line);
  std::size_t col = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == column) {
      col = i;
      break;
    }
  }
  if (col == header.size()) {
    std::ostringstream msg;
    msg << "column '" << column << "' not found in '" << path
        << "'; available columns:";
    for (std::size_t i = 0; i < header.size(); ++i) {
      msg << (i == 0 ? " " : ", ") << header[i];
    }
    throw ConfigError(msg.str());
  }

  std::vector<double> values;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    const std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != header.size()) {
      std::ostringstream msg;
      msg << "'" << path << "' line " << line_no << ": expected "
          << header.size() << " cells, got " << cells.size();
      throw ConfigError(msg.str());
    }
    const std::string& cell = cells[col];
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end == cell.c_str() || *end != '\0') {
      std::ostringstream msg;
      msg << "'" << path << "' line " << line_no << ": invalid number '"
          << cell << "' in column " << column;
      throw ConfigError(msg.str());
    }
    values.push_back(v);
  }
  if (values.empty()) {
    throw ConfigError("'" + path + "' contains no data rows");
  }
  return values;
}

void write_trajectory_csv(const Trajectory& traj, const std::string& path) {
  std::ostringstream out;
  out << "t,x2,p2,l,a,pa,energy,invariant_i\n";
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    const DynState& s = traj.states[k];
    out << format_number(traj.time_at(k)) << ',' << format_number(s.x2) << ','
        << format_number(s.p2) << ',' << format_number(s.l) << ','
        << format_number(s.a) << ',' << format_number(s.pa) << ','
        << format_number(total_energy(s, traj.params)) << ','
        << format_number(motion_invariant(s)) << '\n';
  }
  write_or_throw(path, out.str());
}

void write_section_csv(const SectionPoints& points, const std::string& path) {
  std::ostringstream out;
  out << "t,plot_x,plot_y\n";
  for (const SectionPoint& pt : points.points) {
    out << format_number(pt.t) << ',' << format_number(pt.x) << ','
        << format_number(pt.y) << '\n';
  }
  write_or_throw(path, out.str());
}

}  // namespace semiq::cli
