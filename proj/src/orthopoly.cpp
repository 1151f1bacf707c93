// This file is part of hydroc, released under the MIT License.

#include "hydroc/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hydroc {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kRescaleHi = 1e150;
constexpr double kRescaleLo = 1e-150;

// Orthonormal three-term recurrences.
//
// Laguerre:   b_{k+1} p_{k+1} = (2k+alpha+1 - x) p_k - b_k p_{k-1},
//             b_k = sqrt(k (k+alpha)),        p_0 = Gamma(alpha+1)^{-1/2}.
// Gegenbauer: b_{k+1} p_{k+1} = x p_k - b_k p_{k-1},
//             b_k = sqrt(k (k+2l-1) / (4 (k+l-1)(k+l))),
//             p_0 = [sqrt(pi) Gamma(l+1/2) / Gamma(l+1)]^{-1/2}.

double log_p0(const OrthoPolySpec& s) {
  if (s.family == PolyFamily::laguerre) {
    return -0.5 * ln_gamma(s.parameter + 1.0);
  }
  const double l = s.parameter;
  return -0.5 * (0.5 * std::log(kPi) + ln_gamma(l + 0.5) - ln_gamma(l + 1.0));
}

double offdiag(const OrthoPolySpec& s, int k) {
  if (k <= 0) return 0.0;
  if (s.family == PolyFamily::laguerre) {
    return std::sqrt(static_cast<double>(k) * (k + s.parameter));
  }
  const double l = s.parameter;
  // numerator and denominator are negative together for k=1, l in (-1/2,0)
  return std::sqrt(k * (k + 2.0 * l - 1.0) / (4.0 * (k + l - 1.0) * (k + l)));
}

}  // namespace

void OrthoPolySpec::validate() const {
  if (degree < 0) {
    throw std::invalid_argument("OrthoPolySpec: degree must be >= 0, got " +
                                std::to_string(degree));
  }
  if (family == PolyFamily::laguerre) {
    if (!(parameter > -1.0)) {
      throw std::invalid_argument(
          "OrthoPolySpec: Laguerre parameter must satisfy alpha > -1, got " +
          std::to_string(parameter));
    }
  } else {
    if (!(parameter > -0.5) || parameter == 0.0) {
      throw std::invalid_argument(
          "OrthoPolySpec: Gegenbauer parameter must satisfy lambda > -1/2 and "
          "lambda != 0, got " +
          std::to_string(parameter));
    }
  }
}

SignedLog eval_orthonormal_log(const OrthoPolySpec& spec, double x) {
  spec.validate();
  const bool laguerre = spec.family == PolyFamily::laguerre;

  // (prev, cur) carry the last two orthonormal values scaled by exp(shift);
  // both share the shift, so rescaling preserves the recurrence.
  double shift = log_p0(spec);
  double prev = 0.0;
  double cur = 1.0;
  for (int k = 0; k < spec.degree; ++k) {
    const double t = laguerre ? (2.0 * k + spec.parameter + 1.0 - x) : x;
    const double next = (t * cur - offdiag(spec, k) * prev) / offdiag(spec, k + 1);
    prev = cur;
    cur = next;
    const double mag = std::max(std::abs(prev), std::abs(cur));
    if (mag > kRescaleHi || (mag > 0.0 && mag < kRescaleLo)) {
      const double s = std::log(mag);
      shift += s;
      const double inv = std::exp(-s);
      prev *= inv;
      cur *= inv;
    }
  }
  if (cur == 0.0) return {};
  return {shift + std::log(std::abs(cur)), cur > 0.0 ? 1 : -1};
}

double eval_orthonormal(const OrthoPolySpec& spec, double x) {
  return eval_orthonormal_log(spec, x).value();
}

double log_weight(const OrthoPolySpec& spec, double x) {
  if (spec.family == PolyFamily::laguerre) {
    return spec.parameter * std::log(x) - x;
  }
  return (spec.parameter - 0.5) * std::log1p(-x * x);
}

std::vector<double> orthonormal_roots(const OrthoPolySpec& spec) {
  spec.validate();
  std::vector<double> roots;
  if (spec.degree == 0) return roots;

  double lo, hi;
  if (spec.family == PolyFamily::laguerre) {
    lo = 0.0;
    // All Laguerre zeros lie below 4k + 2alpha + 2.
    hi = 4.0 * spec.degree + 2.0 * spec.parameter + 2.0;
  } else {
    lo = -1.0;
    hi = 1.0;
  }

  const int scan = 64 * (spec.degree + 1);
  const double step = (hi - lo) / scan;
  const auto sgn = [&spec](double x) {
    return eval_orthonormal_log(spec, x).sign;
  };

  double xa = lo + 1e-3 * step;  // stay off the interval endpoints
  int sa = sgn(xa);
  for (int i = 1; i <= scan; ++i) {
    const double xb = std::min(lo + step * i, hi - 1e-3 * step);
    const int sb = sgn(xb);
    if (sb == 0) {
      roots.push_back(xb);
    } else if (sa != 0 && sa != sb) {
      double a = xa, b = xb;
      int sleft = sa;
      for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b);
        const int sm = sgn(m);
        if (sm == 0) {
          a = b = m;
          break;
        }
        if (sm == sleft) {
          a = m;
        } else {
          b = m;
        }
        if (b - a <= 1e-15 * std::max(1.0, std::abs(a))) break;
      }
      roots.push_back(0.5 * (a + b));
    }
    xa = xb;
    sa = sb;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace hydroc
