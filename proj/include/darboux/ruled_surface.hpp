#pragma once

#include <vector>

#include "darboux/curve.hpp"
#include "darboux/dual_scalar.hpp"
#include "darboux/dual_vector.hpp"
#include "darboux/types.hpp"

namespace darboux {

/// Per-parameter snapshot of the geodesic trihedron {e, t, g} of the
/// director indicatrix and the surface invariants, all at indicatrix arc
/// length s:
///   t = e', g = e x t
///   gamma  = det(e, e', e'')   (conical curvature)
///   delta  = <c', e>
///   Delta  = det(c', e, t)     (distribution parameter)
///   gamma_dual = delta - gamma * Delta (dual part of the dual curvature)
///   R_bar  = 1/sqrt(1 + gamma_bar^2), rho_bar with sin rho_bar = R_bar.
struct DarbouxState {
  double s = 0.0;
  Vec3d c = Vec3d::Zero();  // striction point
  Vec3d e = Vec3d::Zero();
  Vec3d t = Vec3d::Zero();
  Vec3d g = Vec3d::Zero();
  double gamma = 0.0;
  double delta = 0.0;
  double Delta = 0.0;
  double gamma_dual = 0.0;
  DualScalar R_bar;
  DualScalar rho_bar;

  DualScalar gamma_bar() const { return {gamma, gamma_dual}; }
};

struct DevelopabilityResult {
  bool developable = false;
  double max_abs_delta = 0.0;
  double tolerance = 0.0;
};

/// Row-major sample grid: points[i * cols + j] = c(s_i) + v_j e(s_i).
struct MeshGrid {
  int rows = 0;
  int cols = 0;
  std::vector<Vec3d> points;

  const Vec3d& at(int i, int j) const { return points[i * cols + j]; }
};

struct SurfaceOptions {
  CurveOptions curve;
  int validation_samples = 33;
  double validation_tol = 1e-8;
};

/// Ruled surface phi(s, v) = c(s) + v e(s) with unit director e
/// reparameterized by the arc length s of its spherical indicatrix and base
/// curve c the striction curve, so <e,e> = 1, <e',e'> = 1, <c',e'> = 0.
/// Immutable after construction; all queries are const and thread-safe.
class RuledSurface {
 public:
  /// Builds from arbitrary evaluators: the director is normalized
  /// pointwise, the striction curve replaces the given base path, and the
  /// whole surface is reparameterized to indicatrix arc length.
  static RuledSurface from_curves(const Curve3& path, const Curve3& director,
                                  const SurfaceOptions& options = {});

  static RuledSurface from_expressions(const ParametricCurve& path,
                                       const ParametricCurve& director,
                                       const SurfaceOptions& options = {});

  Interval s_domain() const { return {0.0, arc_.total()}; }
  double arc_length_total() const { return arc_.total(); }
  const ArcLengthMap& arc_map() const { return arc_; }

  /// Director / striction jets with respect to arc length s.
  Vec3<Jet> director_jets(double s, int order) const;
  Vec3<Jet> striction_jets(double s, int order) const;

  DarbouxState frame_at(double s) const;

  /// The dual curve of the surface on the dual unit sphere:
  /// e(s) + eps c(s) x e(s), the line of the ruling through c(s).
  DualVector3 dual_curve_at(double s) const;

  /// s + eps * integral of Delta over [0, s].
  DualScalar dual_arc_length(double s) const;

  /// Distribution parameter Delta(s) alone (cheaper than a full frame).
  double distribution_at(double s) const;

  DevelopabilityResult is_developable(double tolerance) const;
  DevelopabilityResult is_developable() const;  // scale-aware default

  MeshGrid sample_mesh(int s_count, Interval v_range, int v_count) const;

  /// Original-parameter evaluators (the offset machinery samples these).
  const Curve3& striction_curve() const { return striction_; }
  const Curve3& director_curve() const { return director_; }

  const SurfaceOptions& options() const { return options_; }

 private:
  RuledSurface() = default;

  Curve3 striction_;  // in the original parameter
  Curve3 director_;   // unit, in the original parameter
  ArcLengthMap arc_;
  SurfaceOptions options_;
};

// Derived dual quantities of a frame snapshot.

/// Dual curvature R_bar = 1/sqrt(1 + gamma_bar^2).
DualScalar dual_curvature(const DarbouxState& state);

/// Dual spherical radius of curvature rho_bar, the dual angle between the
/// ruling and the unit Darboux line: sin rho_bar = R_bar, cot rho_bar =
/// gamma_bar.
DualScalar spherical_radius(const DarbouxState& state);

/// Lines of the frame as dual unit vectors.
DualVector3 ruling_line(const DarbouxState& state);           // e + eps c x e
DualVector3 central_tangent_line(const DarbouxState& state);  // t + eps c x t
DualVector3 central_normal_line(const DarbouxState& state);   // g + eps c x g

/// Dual Darboux vector gamma_bar * e_line + g_line and its unit version
/// cos(rho_bar) e_line + sin(rho_bar) g_line.
DualVector3 darboux_vector(const DarbouxState& state);
DualVector3 unit_darboux_vector(const DarbouxState& state);

}  // namespace darboux
