#include "darboux/quadrature.hpp"

#include <cmath>

namespace darboux {

namespace {

double simpson(const Integrand& f, double a, double fa, double b, double fb,
               double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const Integrand& f, double a, double fa, double b,
                     double fb, double m, double fm, double whole, double tol,
                     int depth, int max_depth, std::vector<double>* edges) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, flm);
  const double right = simpson(f, m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) {
    if (edges) edges->push_back(b);
    return left + right + delta / 15.0;
  }
  if (depth >= max_depth)
    throw QuadratureFailure("adaptive quadrature exceeded depth " +
                            std::to_string(max_depth));
  const double half = 0.5 * tol;
  return adaptive_step(f, a, fa, m, fm, lm, flm, left, half, depth + 1,
                       max_depth, edges) +
         adaptive_step(f, m, fm, b, fb, rm, frm, right, half, depth + 1,
                       max_depth, edges);
}

double run(const Integrand& f, double a, double b, double tolerance,
           int max_depth, std::vector<double>* edges) {
  if (a == b) return 0.0;
  const double sign = a < b ? 1.0 : -1.0;
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  const double fa = f(lo);
  const double fb = f(hi);
  const double m = 0.5 * (lo + hi);
  const double fm = f(m);
  const double whole = simpson(f, lo, fa, hi, fb, fm);
  return sign * adaptive_step(f, lo, fa, hi, fb, m, fm, whole, tolerance, 0,
                              max_depth, edges);
}

}  // namespace

double adaptive_simpson(const Integrand& f, double a, double b,
                        double tolerance, int max_depth) {
  return run(f, a, b, tolerance, max_depth, nullptr);
}

std::vector<double> adaptive_panels(const Integrand& f, double a, double b,
                                    double tolerance, int max_depth) {
  std::vector<double> edges{a};
  run(f, a, b, tolerance, max_depth, &edges);
  return edges;
}

double composite_simpson(const Integrand& f, double a, double b, int n) {
  if (a == b) return 0.0;
  if (n < 2) n = 2;
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

}  // namespace darboux
