// This file is part of hydroc, released under the MIT License.

#ifndef HYDROC_ORTHOPOLY_HPP
#define HYDROC_ORTHOPOLY_HPP

#include <vector>

#include "hydroc/specfun.hpp"

namespace hydroc {

enum class PolyFamily {
  laguerre,    // weight x^alpha e^{-x} on [0, inf)
  gegenbauer,  // weight (1-x^2)^{lambda-1/2} on [-1, 1]
};

/// An orthonormal polynomial: integral of weight * p_j * p_k over the natural
/// interval is delta_jk.
struct OrthoPolySpec {
  PolyFamily family = PolyFamily::laguerre;
  int degree = 0;
  double parameter = 0.0;  // alpha > -1 (Laguerre); lambda > -1/2, != 0 (Gegenbauer)

  /// Throws std::invalid_argument when degree or parameter is out of range.
  void validate() const;
};

/// Value of the orthonormal polynomial at x. Evaluated by the three-term
/// recurrence on orthonormal coefficients with dynamic rescaling, so no
/// intermediate over- or underflows up to degree ~200 and parameter ~500;
/// the returned double may still be 0 or inf when the value itself is
/// outside double range (use the log form then).
double eval_orthonormal(const OrthoPolySpec& spec, double x);

/// Same evaluation in (sign, log magnitude) form.
SignedLog eval_orthonormal_log(const OrthoPolySpec& spec, double x);

/// ln of the weight function at x (x must be inside the open natural
/// interval).
double log_weight(const OrthoPolySpec& spec, double x);

/// The degree zeros of the polynomial, ascending. Located by scanning
/// 64*(degree+1) uniform points of the natural interval for sign changes and
/// bisecting each bracket; zeros of orthonormal polynomials are simple, so
/// the scan is reliable.
std::vector<double> orthonormal_roots(const OrthoPolySpec& spec);

}  // namespace hydroc

#endif
