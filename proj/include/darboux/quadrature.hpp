#pragma once

#include <functional>
#include <vector>

#include "darboux/errors.hpp"

namespace darboux {

using Integrand = std::function<double(double)>;

/// Adaptive Simpson quadrature with Richardson correction.
/// Throws QuadratureFailure when the refinement depth limit is exceeded
/// before the tolerance is met.
double adaptive_simpson(const Integrand& f, double a, double b, double tolerance,
                        int max_depth = 40);

/// Runs the adaptive subdivision and returns the panel edges at which the
/// local Simpson estimates converged (a, interior edges, b).
std::vector<double> adaptive_panels(const Integrand& f, double a, double b,
                                    double tolerance, int max_depth = 40);

/// Composite Simpson rule with n subintervals (n even).
double composite_simpson(const Integrand& f, double a, double b, int n);

}  // namespace darboux
