#include "darboux/io.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

namespace darboux {

void write_csv(std::ostream& out, const CsvTable& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i)
    out << (i ? "," : "") << table.header[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (first) {
      table.header = cells;
      first = false;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& cell : cells) {
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (ec != std::errc{} || ptr != cell.data() + cell.size())
        throw ParseError("CSV cell '" + cell + "' is not a number",
                         static_cast<int>(table.rows.size()) + 2, 1);
      row.push_back(value);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

CsvTable invariant_table(const RuledSurface& surface, int samples) {
  CsvTable table;
  table.header = {"s",        "e_x",   "e_y",   "e_z",   "t_x",     "t_y",
                  "t_z",      "g_x",   "g_y",   "g_z",   "gamma",   "delta",
                  "Delta",    "gamma_dual", "R_real", "R_dual", "rho_real",
                  "rho_dual"};
  const double S = surface.arc_length_total();
  for (int i = 0; i < samples; ++i) {
    const double s = S * i / (samples - 1.0);
    const DarbouxState f = surface.frame_at(s);
    table.rows.push_back({f.s, f.e.x(), f.e.y(), f.e.z(), f.t.x(), f.t.y(),
                          f.t.z(), f.g.x(), f.g.y(), f.g.z(), f.gamma, f.delta,
                          f.Delta, f.gamma_dual, f.R_bar.real, f.R_bar.dual,
                          f.rho_bar.real, f.rho_bar.dual});
  }
  return table;
}

void write_report_csv(std::ostream& out, const OffsetReport& report) {
  out << "relation_id,s,lhs,rhs,abs_err,rel_err\n";
  for (const auto& row : report.rows) {
    out << row.id << ',' << format_double(row.s) << ',' << format_double(row.lhs)
        << ',' << format_double(row.rhs) << ',' << format_double(row.abs_err)
        << ',' << format_double(row.rel_err) << '\n';
  }
}

void write_report_summary(std::ostream& out, const OffsetReport& report,
                          double threshold) {
  out << "offset: theta = " << format_double(report.spec.theta)
      << " rad, theta* = " << format_double(report.spec.theta_star) << ", "
      << report.sample_count << " samples\n";
  out << "striction curve deviation: "
      << format_double(report.striction_deviation) << "\n";
  int failed = 0;
  for (const auto& f : report.families) {
    const bool ok = f.worst_rel < threshold;
    if (f.gating && !ok) ++failed;
    out << "  " << (ok ? "pass" : (f.gating ? "FAIL" : "warn")) << "  "
        << f.family << ": worst_abs = " << format_double(f.worst_abs)
        << ", worst_rel = " << format_double(f.worst_rel) << "\n";
  }
  const int total = static_cast<int>(report.families.size());
  if (failed == 0)
    out << "all " << total << " relations pass\n";
  else
    out << failed << " of " << total << " relations FAIL\n";
}

void write_obj(std::ostream& out, const MeshGrid& grid) {
  for (const Vec3d& p : grid.points)
    out << "v " << format_double(p.x()) << ' ' << format_double(p.y()) << ' '
        << format_double(p.z()) << '\n';
  for (int i = 0; i + 1 < grid.rows; ++i) {
    for (int j = 0; j + 1 < grid.cols; ++j) {
      const int a = i * grid.cols + j + 1;  // OBJ indices are 1-based
      const int b = (i + 1) * grid.cols + j + 1;
      out << "f " << a << ' ' << b << ' ' << b + 1 << ' ' << a + 1 << '\n';
    }
  }
}

ObjStats read_obj_stats(std::istream& in) {
  ObjStats stats;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string tag;
    if (!(tokens >> tag)) continue;
    if (tag == "v") {
      double x = 0, y = 0, z = 0;
      tokens >> x >> y >> z;
      stats.points.emplace_back(x, y, z);
      ++stats.vertices;
    } else if (tag == "f") {
      ++stats.faces;
      long index = 0;
      while (tokens >> index)
        if (index < 1 || index > stats.vertices) stats.indices_valid = false;
    }
  }
  return stats;
}

}  // namespace darboux
