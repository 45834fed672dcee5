#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "darboux/bertrand.hpp"
#include "darboux/format.hpp"
#include "darboux/ruled_surface.hpp"

namespace darboux {

/// Numeric table with a header row. Cells are emitted in the shortest
/// round-trip decimal form, comma separated, LF line endings.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

void write_csv(std::ostream& out, const CsvTable& table);
CsvTable read_csv(std::istream& in);

/// Frame/invariant table of a surface sampled uniformly in arc length:
/// s, e_*, t_*, g_*, gamma, delta, Delta, gamma_dual, R_*, rho_*.
CsvTable invariant_table(const RuledSurface& surface, int samples);

/// Per-sample relation residuals: relation_id, s, lhs, rhs, abs_err, rel_err.
void write_report_csv(std::ostream& out, const OffsetReport& report);

/// Human-readable block: one line per relation family plus the verdict.
void write_report_summary(std::ostream& out, const OffsetReport& report,
                          double threshold);

/// Wavefront OBJ with v/f records only; quad faces, 1-based indices,
/// row-major over the (s, v) grid.
void write_obj(std::ostream& out, const MeshGrid& grid);

struct ObjStats {
  int vertices = 0;
  int faces = 0;
  bool indices_valid = true;
  std::vector<Vec3d> points;
};

ObjStats read_obj_stats(std::istream& in);

}  // namespace darboux
