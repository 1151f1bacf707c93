// This file is part of hydroc, released under the MIT License.

#ifndef HYDROC_QUADRATURE_HPP
#define HYDROC_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace hydroc {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
  // Interior points where the integrand is non-smooth (e.g. the zeros of a
  // polynomial under a logarithm). Points outside (a,b) are ignored.
  std::vector<double> split_points;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
  long evaluations = 0;
};

/// Adaptive Gauss-Kronrod (7/15) integration of f over (a, b).
///
/// b may be +infinity and a may be -infinity; semi-infinite intervals are
/// mapped onto (0,1) by the rational substitution x = a + t/(1-t). The rule
/// never evaluates f at segment endpoints, so integrable endpoint
/// singularities (logarithmic or algebraic) are admissible. Hard integrands
/// never raise: when the subdivision budget is exhausted, or an interval with
/// non-finite samples cannot be shrunk further, the result comes back with
/// converged = false and the error estimate still attached.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureConfig& config = {});

}  // namespace hydroc

#endif
