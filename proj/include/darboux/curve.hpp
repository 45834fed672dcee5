#pragma once

#include <functional>
#include <vector>

#include "darboux/expression.hpp"
#include "darboux/jet.hpp"
#include "darboux/types.hpp"

namespace darboux {

/// Evaluator for a space curve: exact component jets at any parameter.
/// Expression-backed curves come from make_expression_curve; derived curves
/// (normalized directors, striction curves, offsets) are closures over
/// other evaluators. Evaluation at distinct parameters is side-effect free.
struct Curve3 {
  std::function<Vec3<Jet>(double u, int order)> jets;
  Interval domain{0.0, 1.0};

  Vec3d value(double u) const { return jet_coeff3(jets(u, 0), 0); }
  Vec3d derivative(double u) const { return jet_coeff3(jets(u, 1), 1); }
};

struct CurveOptions {
  double tol_s = 1e-10;    // arc-length quadrature tolerance
  double tol_cyl = 1e-8;   // minimum director speed
  int max_depth = 40;      // adaptive quadrature depth limit
  int scan_samples = 257;  // grid for precondition scans
};

Curve3 make_expression_curve(const ParametricCurve& curve);

/// Pointwise projection onto the unit sphere, derivatives included.
Curve3 normalized(const Curve3& curve);

/// Striction curve of the ruled surface (p, e): c = p + lambda e with
/// lambda = -<p', e'>/<e', e'>, the unique base curve with <c', e'> = 0.
/// The result is independent of shifts of p along e.
Curve3 striction_curve(const Curve3& path, const Curve3& director,
                       const CurveOptions& options = {});

/// Monotone tabulated map between a curve parameter u and the arc length
/// s(u) of the curve, s(u_min) = 0. Adaptive quadrature fixes the node
/// table at build time; queries interpolate the table with cubic Hermite
/// segments whose error is validated against the quadrature during the
/// build, so lookups in both directions cost no integrand evaluations.
class ArcLengthMap {
 public:
  double s_of(double u) const;
  double u_of(double s) const;
  double total() const { return s_nodes_.back(); }
  Interval u_domain() const { return {u_nodes_.front(), u_nodes_.back()}; }
  Interval s_domain() const { return {0.0, total()}; }

  /// Series of u(s) at s, to the requested order (>= 1), via inversion of
  /// the local series of s(u).
  Jet u_jet_of(double s, int order) const;

  double speed(double u) const { return speed_(u); }

 private:
  friend ArcLengthMap arc_length_reparam(const Curve3&, const CurveOptions&);

  std::vector<double> u_nodes_;
  std::vector<double> s_nodes_;
  std::vector<double> v_nodes_;  // speed at each node
  std::function<double(double)> speed_;
  std::function<Jet(double, int)> speed_jet_;
  double tol_s_ = 1e-10;

  int segment_by_u(double u) const;
  int segment_by_s(double s) const;
};

/// Tabulates s(u) = integral of the curve speed. Throws CylindricalDirector
/// if the speed drops to tol_cyl anywhere on the quadrature grid.
ArcLengthMap arc_length_reparam(const Curve3& curve,
                                const CurveOptions& options = {});

}  // namespace darboux
