#pragma once

#include <string>

#include "darboux/expression.hpp"
#include "darboux/ruled_surface.hpp"

namespace darboux::fixtures {

inline ParametricCurve curve(const std::string& triple, Interval domain) {
  ParametricCurve c;
  c.components = parse_curve_triple(triple);
  c.domain = domain;
  return c;
}

/// Cone with apex at the origin and half-angle pi/4:
/// gamma = 1, delta = 0, Delta = 0 (developable).
inline RuledSurface cone() {
  const Interval dom{0.0, 2.0 * M_PI};
  return RuledSurface::from_expressions(
      curve("[0, 0, 0]", dom),
      curve("[sqrt(0.5)*cos(u), sqrt(0.5)*sin(u), sqrt(0.5)]", dom));
}

/// Right helicoid of pitch 0.5: gamma = 0, delta = 0, Delta = 0.5.
inline RuledSurface helicoid() {
  const Interval dom{0.0, 2.0 * M_PI};
  return RuledSurface::from_expressions(
      curve("[0, 0, 0.5*u]", dom), curve("[cos(u), sin(u), 0]", dom));
}

/// Tangent developable of the unit-radius helix with pitch 0.5:
/// gamma = 0.5, delta = 1.25, Delta = 0 (developable).
inline RuledSurface tangent_developable() {
  const Interval dom{0.0, 2.0 * M_PI};
  return RuledSurface::from_expressions(
      curve("[cos(u), sin(u), 0.5*u]", dom),
      curve("[-sin(u), cos(u), 0.5]", dom));
}

/// Non-developable surface with varying invariants; director given
/// unnormalized on purpose.
inline RuledSurface skew() {
  const Interval dom{0.0, 5.0};
  return RuledSurface::from_expressions(
      curve("[0.3*cos(u), 0.4*sin(u), 0.2*u]", dom),
      curve("[cos(u), sin(u), 0.3 + 0.2*sin(u)]", dom));
}

}  // namespace darboux::fixtures
