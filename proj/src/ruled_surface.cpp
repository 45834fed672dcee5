#include "darboux/ruled_surface.hpp"

#include <cmath>

#include "darboux/parallel.hpp"
#include "darboux/quadrature.hpp"

namespace darboux {

RuledSurface RuledSurface::from_curves(const Curve3& path, const Curve3& director,
                                       const SurfaceOptions& options) {
  RuledSurface surface;
  surface.options_ = options;
  surface.director_ = normalized(director);
  surface.arc_ = arc_length_reparam(surface.director_, options.curve);
  surface.striction_ =
      darboux::striction_curve(path, surface.director_, options.curve);

  // Construction-invariant spot check: unit director, unit indicatrix
  // speed in s, striction tangency.
  const double S = surface.arc_.total();
  for (int i = 0; i < options.validation_samples; ++i) {
    const double s = S * i / (options.validation_samples - 1.0);
    const Vec3<Jet> e = surface.director_jets(s, 1);
    const Vec3<Jet> c = surface.striction_jets(s, 1);
    const double unit_defect = std::abs(jet_coeff3(e, 0).squaredNorm() - 1.0);
    const double speed_defect = std::abs(jet_coeff3(e, 1).norm() - 1.0);
    const double tangency = std::abs(jet_coeff3(c, 1).dot(jet_coeff3(e, 1)));
    if (unit_defect > options.validation_tol ||
        speed_defect > options.validation_tol ||
        tangency > options.validation_tol)
      throw GeometryError("surface construction invariants violated at s = " +
                          std::to_string(s));
  }
  return surface;
}

RuledSurface RuledSurface::from_expressions(const ParametricCurve& path,
                                            const ParametricCurve& director,
                                            const SurfaceOptions& options) {
  if (!(path.domain.lo == director.domain.lo && path.domain.hi == director.domain.hi))
    throw ValidationError("u_range", "path and director must share a domain");
  return from_curves(make_expression_curve(path), make_expression_curve(director),
                     options);
}

Vec3<Jet> RuledSurface::director_jets(double s, int order) const {
  const double u0 = arc_.u_of(s);
  if (order < 1) return director_.jets(u0, 0);
  return compose3(director_.jets(u0, order), arc_.u_jet_of(s, order));
}

Vec3<Jet> RuledSurface::striction_jets(double s, int order) const {
  const double u0 = arc_.u_of(s);
  if (order < 1) return striction_.jets(u0, 0);
  return compose3(striction_.jets(u0, order), arc_.u_jet_of(s, order));
}

DarbouxState RuledSurface::frame_at(double s) const {
  const double u0 = arc_.u_of(s);
  const Jet u_jet = arc_.u_jet_of(s, 2);
  const Vec3<Jet> ej = compose3(director_.jets(u0, 2), u_jet);
  const Vec3<Jet> cj = compose3(striction_.jets(u0, 1), u_jet);

  DarbouxState state;
  state.s = s;
  state.e = jet_coeff3(ej, 0);
  state.t = jet_coeff3(ej, 1);
  state.g = state.e.cross(state.t);
  const Vec3d epp = jet_derivative3(ej, 2);
  state.gamma = state.g.dot(epp);  // det(e, e', e'')
  state.c = jet_coeff3(cj, 0);
  const Vec3d cp = jet_coeff3(cj, 1);
  state.delta = cp.dot(state.e);
  state.Delta = cp.dot(state.g);  // det(c', e, t)
  state.gamma_dual = state.delta - state.gamma * state.Delta;
  state.R_bar = dual_curvature(state);
  state.rho_bar = spherical_radius(state);
  return state;
}

DualVector3 RuledSurface::dual_curve_at(double s) const {
  const Vec3<Jet> ej = director_jets(s, 0);
  const Vec3<Jet> cj = striction_jets(s, 0);
  const Vec3d e = jet_coeff3(ej, 0);
  const Vec3d c = jet_coeff3(cj, 0);
  return {e, c.cross(e)};
}

double RuledSurface::distribution_at(double s) const {
  const double u0 = arc_.u_of(s);
  const Jet u_jet = arc_.u_jet_of(s, 1);
  const Vec3<Jet> ej = compose3(director_.jets(u0, 1), u_jet);
  const Vec3<Jet> cj = compose3(striction_.jets(u0, 1), u_jet);
  const Vec3d e = jet_coeff3(ej, 0);
  const Vec3d t = jet_coeff3(ej, 1);
  return jet_coeff3(cj, 1).dot(e.cross(t));
}

DualScalar RuledSurface::dual_arc_length(double s) const {
  const double integral = adaptive_simpson(
      [this](double w) { return distribution_at(w); }, 0.0, s,
      options_.curve.tol_s, options_.curve.max_depth);
  return {s, integral};
}

DevelopabilityResult RuledSurface::is_developable(double tolerance) const {
  const int n = 256;
  const double S = arc_.total();
  double worst = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double d = std::abs(distribution_at(S * i / n));
    if (d > worst) worst = d;
  }
  return {worst < tolerance, worst, tolerance};
}

DevelopabilityResult RuledSurface::is_developable() const {
  const int n = 64;
  const double S = arc_.total();
  double scale = 0.0;
  for (int i = 0; i <= n; ++i) {
    const Vec3<Jet> cj = striction_jets(S * i / n, 0);
    scale = std::max(scale, jet_coeff3(cj, 0).norm());
  }
  // Delta has length units; scale the tolerance with the surface size.
  return is_developable(1e-8 * (1.0 + scale));
}

MeshGrid RuledSurface::sample_mesh(int s_count, Interval v_range,
                                   int v_count) const {
  if (s_count < 2) throw ValidationError("samples", "need at least 2");
  if (v_count < 2) throw ValidationError("mesh.v_count", "need at least 2");
  MeshGrid grid;
  grid.rows = s_count;
  grid.cols = v_count;
  grid.points.resize(static_cast<std::size_t>(s_count) * v_count);
  const double S = arc_.total();
  parallel_for(static_cast<std::size_t>(s_count), [&](std::size_t i) {
    const double s = S * static_cast<double>(i) / (s_count - 1.0);
    const Vec3d c = jet_coeff3(striction_jets(s, 0), 0);
    const Vec3d e = jet_coeff3(director_jets(s, 0), 0);
    for (int j = 0; j < v_count; ++j) {
      const double v = v_range.lo + v_range.length() * j / (v_count - 1.0);
      grid.points[i * v_count + j] = c + v * e;
    }
  });
  return grid;
}

DualScalar dual_curvature(const DarbouxState& state) {
  const DualScalar gb = state.gamma_bar();
  return inverse(sqrt(DualScalar(1.0) + gb * gb));
}

DualScalar spherical_radius(const DarbouxState& state) {
  const DualScalar R = dual_curvature(state);      // sin rho_bar
  const DualScalar cosr = state.gamma_bar() * R;   // cos rho_bar
  // rho* from whichever of the two defining identities is better
  // conditioned; both hold to rounding.
  const double rho_star = std::abs(cosr.real) >= R.real
                              ? R.dual / cosr.real
                              : -cosr.dual / R.real;
  return {std::atan2(R.real, cosr.real), rho_star};
}

DualVector3 ruling_line(const DarbouxState& state) {
  return {state.e, state.c.cross(state.e)};
}

DualVector3 central_tangent_line(const DarbouxState& state) {
  return {state.t, state.c.cross(state.t)};
}

DualVector3 central_normal_line(const DarbouxState& state) {
  return {state.g, state.c.cross(state.g)};
}

DualVector3 darboux_vector(const DarbouxState& state) {
  return state.gamma_bar() * ruling_line(state) + central_normal_line(state);
}

DualVector3 unit_darboux_vector(const DarbouxState& state) {
  const DualScalar rho = spherical_radius(state);
  return cos(rho) * ruling_line(state) + sin(rho) * central_normal_line(state);
}

}  // namespace darboux
