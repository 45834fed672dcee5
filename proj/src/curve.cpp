#include "darboux/curve.hpp"

#include <algorithm>
#include <cmath>

#include "darboux/quadrature.hpp"

namespace darboux {

Curve3 make_expression_curve(const ParametricCurve& curve) {
  return {[curve](double u, int order) { return eval_jet(curve, u, order); },
          curve.domain};
}

Curve3 normalized(const Curve3& curve) {
  auto jets = curve.jets;
  return {[jets](double u, int order) {
            const Vec3<Jet> v = jets(u, order);
            return Vec3<Jet>(v / sqrt(v.dot(v)));
          },
          curve.domain};
}

Curve3 striction_curve(const Curve3& path, const Curve3& director,
                       const CurveOptions& options) {
  // Non-cylindrical precondition: the director must actually move.
  const Interval dom = director.domain;
  for (int i = 0; i < options.scan_samples; ++i) {
    const double u =
        dom.lo + dom.length() * i / (options.scan_samples - 1.0);
    if (director.derivative(u).norm() <= options.tol_cyl)
      throw CylindricalDirector("director derivative vanishes near u = " +
                                std::to_string(u));
  }
  auto pjets = path.jets;
  auto ejets = director.jets;
  return {[pjets, ejets](double u, int order) {
            const Vec3<Jet> p = pjets(u, order + 1);
            const Vec3<Jet> e = ejets(u, order + 1);
            const Vec3<Jet> dp = differentiate3(p);
            const Vec3<Jet> de = differentiate3(e);
            const Jet lambda = -(dp.dot(de)) / de.dot(de);
            const Vec3<Jet> pt = truncated3(p, order);
            const Vec3<Jet> et = truncated3(e, order);
            return Vec3<Jet>(pt + et * lambda);
          },
          dom};
}

namespace {

// Gauss-Legendre 7-point rule; exact through degree 13, far below the
// adaptive panel tolerance for smooth speeds.
double gauss7(const std::function<double(double)>& f, double a, double b) {
  static const double x[] = {0.0,
                             0.4058451513773972, -0.4058451513773972,
                             0.7415311855993945, -0.7415311855993945,
                             0.9491079123427585, -0.9491079123427585};
  static const double w[] = {0.4179591836734694,
                             0.3818300505051189, 0.3818300505051189,
                             0.2797053914892766, 0.2797053914892766,
                             0.1294849661688697, 0.1294849661688697};
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < 7; ++i) acc += w[i] * f(mid + half * x[i]);
  return acc * half;
}

double hermite(double x0, double x1, double f0, double f1, double d0,
               double d1, double x) {
  const double h = x1 - x0;
  const double t = (x - x0) / h;
  const double t2 = t * t, t3 = t2 * t;
  return (2.0 * t3 - 3.0 * t2 + 1.0) * f0 + (t3 - 2.0 * t2 + t) * h * d0 +
         (-2.0 * t3 + 3.0 * t2) * f1 + (t3 - t2) * h * d1;
}

int locate(const std::vector<double>& nodes, double x) {
  const auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
  const int i = static_cast<int>(it - nodes.begin()) - 1;
  return std::clamp(i, 0, static_cast<int>(nodes.size()) - 2);
}

}  // namespace

int ArcLengthMap::segment_by_u(double u) const { return locate(u_nodes_, u); }
int ArcLengthMap::segment_by_s(double s) const { return locate(s_nodes_, s); }

double ArcLengthMap::s_of(double u) const {
  const int i = segment_by_u(u);
  return hermite(u_nodes_[i], u_nodes_[i + 1], s_nodes_[i], s_nodes_[i + 1],
                 v_nodes_[i], v_nodes_[i + 1], u);
}

double ArcLengthMap::u_of(double s) const {
  const double S = total();
  if (s <= 0.0 && s >= -tol_s_) return u_nodes_.front();
  if (s >= S && s <= S + tol_s_) return u_nodes_.back();
  if (s < 0.0 || s > S)
    throw DomainError("arc length " + std::to_string(s) + " outside [0, " +
                      std::to_string(S) + "]");
  const int i = segment_by_s(s);
  return hermite(s_nodes_[i], s_nodes_[i + 1], u_nodes_[i], u_nodes_[i + 1],
                 1.0 / v_nodes_[i], 1.0 / v_nodes_[i + 1], s);
}

Jet ArcLengthMap::u_jet_of(double s, int order) const {
  const double u0 = u_of(s);
  if (order < 1) return Jet(u0);
  const Jet v = speed_jet_(u0, order - 1);
  Eigen::VectorXd sc(order + 1);
  sc[0] = s;
  for (int i = 1; i <= order; ++i) sc[i] = v.coeff(i - 1) / i;
  return series_inverse(Jet::from_coeffs(std::move(sc)), u0);
}

ArcLengthMap arc_length_reparam(const Curve3& curve,
                                const CurveOptions& options) {
  ArcLengthMap map;
  map.tol_s_ = options.tol_s;
  auto jets = curve.jets;
  const double tol_cyl = options.tol_cyl;
  map.speed_ = [jets, tol_cyl](double u) {
    const double v = jet_coeff3(jets(u, 1), 1).norm();
    if (v <= tol_cyl)
      throw CylindricalDirector("director derivative vanishes near u = " +
                                std::to_string(u));
    return v;
  };
  map.speed_jet_ = [jets](double u, int order) {
    const Vec3<Jet> d = differentiate3(jets(u, order + 1));
    return sqrt(d.dot(d));
  };

  // Integration panels chosen adaptively, node values by the fixed rule so
  // that every stored quantity is reproducible from the node table.
  std::vector<double> edges = adaptive_panels(
      map.speed_, curve.domain.lo, curve.domain.hi, options.tol_s,
      options.max_depth);
  map.u_nodes_ = std::move(edges);
  map.s_nodes_.resize(map.u_nodes_.size());
  map.v_nodes_.resize(map.u_nodes_.size());
  map.s_nodes_[0] = 0.0;
  map.v_nodes_[0] = map.speed_(map.u_nodes_[0]);
  for (std::size_t i = 1; i < map.u_nodes_.size(); ++i) {
    map.s_nodes_[i] = map.s_nodes_[i - 1] +
                      gauss7(map.speed_, map.u_nodes_[i - 1], map.u_nodes_[i]);
    map.v_nodes_[i] = map.speed_(map.u_nodes_[i]);
  }

  // Refine until the Hermite interpolants reproduce the quadrature map to a
  // fraction of tol_s in both directions, checked at interior points.
  const double gate = options.tol_s / 8.0;
  bool converged = false;
  for (int pass = 0; pass < 24 && !converged; ++pass) {
    bool split_any = false;
    std::vector<double> u2{map.u_nodes_[0]}, s2{map.s_nodes_[0]},
        v2{map.v_nodes_[0]};
    for (std::size_t i = 0; i + 1 < map.u_nodes_.size(); ++i) {
      const double ua = map.u_nodes_[i], ub = map.u_nodes_[i + 1];
      const double sa = map.s_nodes_[i], sb = map.s_nodes_[i + 1];
      const double va = map.v_nodes_[i], vb = map.v_nodes_[i + 1];
      bool ok = true;
      for (double t : {0.5 - 0.5 / std::sqrt(3.0), 0.5 + 0.5 / std::sqrt(3.0)}) {
        const double u_star = ua + t * (ub - ua);
        const double s_exact = sa + gauss7(map.speed_, ua, u_star);
        const double s_fit = hermite(ua, ub, sa, sb, va, vb, u_star);
        const double u_fit = hermite(sa, sb, ua, ub, 1.0 / va, 1.0 / vb, s_exact);
        if (std::abs(s_fit - s_exact) > gate ||
            std::abs(u_fit - u_star) * std::max(1.0, va) > gate) {
          ok = false;
          break;
        }
      }
      if (ok) {
        u2.push_back(ub);
        s2.push_back(sb);
        v2.push_back(vb);
      } else {
        split_any = true;
        const double um = 0.5 * (ua + ub);
        u2.push_back(um);
        s2.push_back(sa + gauss7(map.speed_, ua, um));
        v2.push_back(map.speed_(um));
        u2.push_back(ub);
        s2.push_back(sb);
        v2.push_back(vb);
      }
    }
    map.u_nodes_ = std::move(u2);
    map.s_nodes_ = std::move(s2);
    map.v_nodes_ = std::move(v2);
    converged = !split_any;
  }
  if (!converged)
    throw QuadratureFailure("arc-length table refinement did not reach tol_s");
  return map;
}

}  // namespace darboux
