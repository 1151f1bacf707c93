// This file is part of hydroc, released under the MIT License.

#ifndef HYDROC_SPECFUN_HPP
#define HYDROC_SPECFUN_HPP

#include <cmath>
#include <limits>

namespace hydroc {

/// ln Gamma(x) for x > 0, relative error below 1e-13 (Lanczos approximation).
/// Throws std::domain_error for x <= 0.
double ln_gamma(double x);

/// Digamma psi(x) = Gamma'(x)/Gamma(x) for x > 0, absolute error below 1e-12.
/// Throws std::domain_error for x <= 0.
double digamma(double x);

/// A real number carried as sign * exp(log_abs). Keeps products of huge and
/// tiny factors (weights, normalization constants, high-degree polynomial
/// values) representable; exponentiate only at final assembly.
struct SignedLog {
  double log_abs = -std::numeric_limits<double>::infinity();
  int sign = 0;  // -1, 0, +1

  static SignedLog from_value(double v) {
    if (v == 0.0) return {};
    return {std::log(std::abs(v)), v > 0 ? 1 : -1};
  }

  double value() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_abs);
  }

  SignedLog operator*(const SignedLog& o) const {
    if (sign == 0 || o.sign == 0) return {};
    return {log_abs + o.log_abs, sign * o.sign};
  }

  /// Multiply by exp(t) without leaving log space.
  SignedLog scaled(double t) const {
    if (sign == 0) return {};
    return {log_abs + t, sign};
  }
};

}  // namespace hydroc

#endif
