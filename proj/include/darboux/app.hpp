#pragma once

#include <iosfwd>
#include <string>

#include "darboux/config.hpp"

namespace darboux {

/// Process exit codes. Config problems and numeric/geometry failures are
/// distinct so scripts can tell bad input from bad mathematics.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitConfigError = 2,
  kExitNumericError = 3,
};

RuledSurface build_base_surface(const JobConfig& config);

/// Writes the base-surface invariant table as CSV.
int cmd_analyze(const JobConfig& config, std::ostream& out);

/// Writes one invariant CSV per offset into `out_dir` (offset_<k>.csv).
int cmd_offset(const JobConfig& config, const std::string& out_dir,
               std::ostream& log);

/// Runs the full relation report for every offset; report_<k>.csv lands in
/// `out_dir` when given. Returns kExitOk iff every gating relation stays
/// below `threshold`.
int cmd_verify(const JobConfig& config, double threshold,
               const std::string& out_dir, std::ostream& log);

/// Writes base.obj and offset_<k>.obj into `out_dir`.
int cmd_mesh(const JobConfig& config, const std::string& out_dir,
             std::ostream& log);

/// Prints the dual angle (degrees) and offset distance between two lines
/// given as "px py pz / dx dy dz".
int cmd_line_angle(const std::string& line_a, const std::string& line_b,
                   std::ostream& out);

}  // namespace darboux
