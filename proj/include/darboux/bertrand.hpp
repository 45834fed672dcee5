#pragma once

#include <string>
#include <vector>

#include "darboux/ruled_surface.hpp"

namespace darboux {

/// Dual offset angle (theta, theta*) between the generators of a Bertrand
/// pair: theta is the constant angle between rulings, theta* the constant
/// offset distance along the common perpendicular.
struct OffsetSpec {
  double theta = 0.0;       // radians, in [0, pi]
  double theta_star = 0.0;  // length, unrestricted

  enum class Kind { Oriented, Right, General };

  Kind kind() const {
    if (std::abs(theta) <= 1e-12) return Kind::Oriented;
    if (std::abs(theta - M_PI / 2.0) <= 1e-12) return Kind::Right;
    return Kind::General;
  }

  static OffsetSpec from_degrees(double theta_deg, double theta_star) {
    if (!(theta_deg >= 0.0 && theta_deg <= 180.0))
      throw ValidationError("theta_deg", "must lie in [0, 180]");
    return {theta_deg * M_PI / 180.0, theta_star};
  }
};

struct OffsetOptions {
  SurfaceOptions surface;
  double tol_mono = 1e-6;  // positivity margin for the arc-rate cos t + g sin t
  int scan_samples = 257;
};

/// Bertrand offset surface: director rotated by theta about the common
/// perpendicular (the central tangent line), base curve shifted by theta*
/// along t. The result is rebuilt as a full ruled surface in its own
/// indicatrix arc length; its parameter is the base's arc length s, so
/// offset.arc_map() maps s <-> s1.
RuledSurface make_offset(const RuledSurface& base, const OffsetSpec& spec,
                         const OffsetOptions& options = {});

/// Construction-level rotation without the [0, pi] angle restriction; used
/// by make_offset and by reversal checks.
RuledSurface offset_surface_raw(const RuledSurface& base, double theta,
                                double theta_star,
                                const OffsetOptions& options = {});

struct CommonPerpResidual {
  double direction = 0.0;  // worst ||t - t1|| over matched samples
  double moment = 0.0;     // worst ||c x t - c1 x t1||
};

/// Checks that base and offset share their central tangent line at matched
/// arc lengths. The default matching s -> s1 assumes `offset` came from
/// make_offset over this base (its parameter is the base arc length); pass
/// `matching` for any other pairing, e.g. the identity for a surface
/// against itself. `misalignment` shifts the matching (a nonzero value is
/// the negative control: residuals become O(1)).
CommonPerpResidual verify_common_perpendicular(
    const RuledSurface& base, const RuledSurface& offset, int samples = 50,
    double misalignment = 0.0,
    const std::function<double(double)>& matching = {});

/// Dual arc-length rate d s1_bar / d s_bar = cos theta_bar + gamma_bar sin theta_bar.
DualScalar arc_length_ratio(const DarbouxState& state, const OffsetSpec& spec);

struct ArcLengthCheck {
  double s1_measured = 0.0;
  double s1_predicted = 0.0;
  double integral_measured = 0.0;   // integral of Delta1 over [0, s1]
  double integral_predicted = 0.0;
  bool base_developable = false;
  double developable_criterion = 0.0;  // zero iff the offset is developable
};

/// Integral relations between the arc lengths of base and offset over [0, S].
ArcLengthCheck verify_arc_length_relation(const RuledSurface& base,
                                          const RuledSurface& offset,
                                          const OffsetSpec& spec, double S);

/// Closed-form predictions of every offset invariant from one base frame
/// snapshot. Throws DegenerateOffset when cos theta + gamma sin theta is
/// not safely positive.
struct OffsetInvariants {
  double w = 0.0;  // real arc rate cos theta + gamma sin theta
  double gamma1 = 0.0;
  double delta1 = 0.0;
  double Delta1 = 0.0;
  DualScalar gamma_bar1;           // composed from gamma1, delta1, Delta1
  DualScalar gamma_bar1_expanded;  // expanded closed form (cross-check)
  DualScalar ratio;                // dual arc rate
  double A = 0.0;  // (ds/ds1)(gamma cos theta - sin theta) = gamma1
  double B = 0.0;  // A * (dual part of gamma_bar1)
  DualScalar R_bar1;        // (1+A^2)^(-1/2) - eps B (1+A^2)^(-3/2)
  DualScalar cos_rho_bar1;  // A(1+A^2)^(-1/2) + eps (B/A)(1+A^2)^(-3/2)
  DualScalar rho_bar1;
};

OffsetInvariants invariant_relations(const DarbouxState& state,
                                     const OffsetSpec& spec,
                                     double tol_mono = 1e-6);

/// Recovers the offset angle from the two conical curvatures:
/// theta = arctan((gamma - gamma1)/(1 + gamma gamma1)), branch in [0, pi),
/// with theta = pi/2 at the right-offset pole 1 + gamma gamma1 = 0.
double offset_angle_from_curvatures(double gamma, double gamma1);

/// The unique offset distance making the offset of a developable base
/// developable at this state: theta* = delta sin theta / (sin theta - gamma cos theta).
double developable_offset_angle(const DarbouxState& state, double theta,
                                double developable_tol = 1e-6);

/// One verified relation at one sample. rel_err = abs_err / max(1, |lhs|, |rhs|).
struct RelationRow {
  std::string id;  // family name plus component suffix
  double s = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
};

struct RelationSummary {
  std::string family;
  double worst_abs = 0.0;
  double worst_rel = 0.0;
  bool gating = true;  // non-gating families are reported, never fatal
  int rows = 0;
};

/// Every offset relation evaluated per sample, closed form against
/// first-principles recomputation on the constructed offset surface.
struct OffsetReport {
  OffsetSpec spec;
  std::vector<RelationRow> rows;
  std::vector<RelationSummary> families;
  double striction_deviation = 0.0;
  int sample_count = 0;

  double worst_gating_rel() const;
  bool passed(double threshold) const { return worst_gating_rel() < threshold; }
};

OffsetReport full_report(const RuledSurface& base, const OffsetSpec& spec,
                         int sample_count, const OffsetOptions& options = {});

}  // namespace darboux
