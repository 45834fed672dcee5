#pragma once

#include <string>

#include "darboux/dual_vector.hpp"
#include "darboux/types.hpp"

namespace darboux {

/// Oriented line in normalized Pluecker coordinates:
/// unit direction a and moment a* = p x a for any point p on the line,
/// so <a, a> = 1 and <a, a*> = 0.
struct PlueckerLine {
  Vec3d direction = Vec3d::UnitX();
  Vec3d moment = Vec3d::Zero();
};

/// Validation tolerance on the Pluecker invariants when lines come from
/// external data (text files, dual vectors).
inline constexpr double kLineValidateTolerance = 1e-9;

PlueckerLine line_from_point_direction(const Vec3d& point, const Vec3d& direction);

/// Foot of the perpendicular from the origin: a x a*.
Vec3d closest_point_to_origin(const PlueckerLine& line);

/// E. Study mapping: oriented lines <-> dual unit vectors.
DualVector3 to_dual(const PlueckerLine& line);
PlueckerLine from_dual(const DualVector3& v,
                       double tolerance = kLineValidateTolerance);

/// Parses the CLI text form "px py pz / dx dy dz".
PlueckerLine parse_line_text(const std::string& text);

}  // namespace darboux
