#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "darboux/bertrand.hpp"
#include "darboux/expression.hpp"
#include "darboux/types.hpp"

namespace darboux {

/// One requested offset, angles in degrees (the human-facing unit).
struct OffsetEntry {
  double theta_deg = 0.0;
  double theta_star = 0.0;
};

/// Parsed and validated job description. See the README for the grammar:
/// flat [section] headers with key = value lines, expressions quoted.
struct JobConfig {
  ParametricCurve base_path;  // [base] c
  ParametricCurve director;   // [base] e
  int samples = 100;
  std::vector<OffsetEntry> offsets;
  Interval v_range{-1.0, 1.0};
  int v_count = 5;

  double tol_s = 1e-10;
  double tol_cyl = 1e-8;
  double tol_mono = 1e-6;
  double verify_threshold = 1e-6;

  SurfaceOptions surface_options() const;
  OffsetOptions offset_options() const;
  OffsetSpec spec_of(const OffsetEntry& entry) const {
    return OffsetSpec::from_degrees(entry.theta_deg, entry.theta_star);
  }
};

JobConfig load_config(const std::string& path);
JobConfig parse_config(std::istream& in, const std::string& source_name);

}  // namespace darboux
