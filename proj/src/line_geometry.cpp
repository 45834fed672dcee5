#include "darboux/line_geometry.hpp"

#include <charconv>
#include <cmath>
#include <vector>

namespace darboux {

PlueckerLine line_from_point_direction(const Vec3d& point, const Vec3d& direction) {
  const double n = direction.norm();
  if (!(n > 0.0)) throw ZeroDirection("line direction must be nonzero");
  PlueckerLine line;
  line.direction = direction / n;
  line.moment = point.cross(line.direction);
  return line;
}

Vec3d closest_point_to_origin(const PlueckerLine& line) {
  return line.direction.cross(line.moment);
}

DualVector3 to_dual(const PlueckerLine& line) {
  return {line.direction, line.moment};
}

PlueckerLine from_dual(const DualVector3& v, double tolerance) {
  const double unit_defect = std::abs(v.real.squaredNorm() - 1.0);
  const double moment_defect = std::abs(v.real.dot(v.dual));
  if (unit_defect > tolerance || moment_defect > tolerance)
    throw NotAUnitLine("dual vector violates the unit-line invariants "
                       "(|<a,a>-1| = " + std::to_string(unit_defect) +
                       ", |<a,a*>| = " + std::to_string(moment_defect) + ")");
  return {v.real, v.dual};
}

namespace {

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  const char* p = text.data();
  const char* end = p + text.size();
  while (p < end) {
    if (*p == ' ' || *p == '\t') {
      ++p;
      continue;
    }
    double value = 0.0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{})
      throw ParseError("expected a number in line spec '" + text + "'", 1,
                       static_cast<int>(p - text.data()) + 1);
    out.push_back(value);
    p = next;
  }
  return out;
}

}  // namespace

PlueckerLine parse_line_text(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos)
    throw ParseError("line spec needs the form 'px py pz / dx dy dz'", 1, 1);
  const auto point = parse_numbers(text.substr(0, slash));
  const auto dir = parse_numbers(text.substr(slash + 1));
  if (point.size() != 3 || dir.size() != 3)
    throw ParseError("line spec needs three point and three direction numbers",
                     1, 1);
  return line_from_point_direction(Vec3d(point[0], point[1], point[2]),
                                   Vec3d(dir[0], dir[1], dir[2]));
}

}  // namespace darboux
