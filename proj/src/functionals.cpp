// This file is part of hydroc, released under the MIT License.

#include "hydroc/functionals.hpp"

#include <cmath>

#include "hydroc/orthopoly.hpp"

namespace hydroc {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2 = 0.69314718055994530942;

// Densities at or below 1e-300 contribute 0 to p ln p integrands.
constexpr double kLogDensityFloor = -690.0;

Estimate from_quadrature(const QuadratureResult& q) {
  return {q.value, q.error_estimate, q.converged};
}

// value = prod_i v_i (relative errors add, convergence ANDed)
Estimate product_of(const Estimate& a, const Estimate& b) {
  Estimate out;
  out.value = a.value * b.value;
  out.error = std::abs(a.error * b.value) + std::abs(b.error * a.value);
  out.converged = a.converged && b.converged;
  return out;
}

double log1p_sq(double u) {
  const double au = std::abs(u);
  if (au > 1e8) return 2.0 * std::log(au);
  return std::log1p(u * u);
}

double cos_angle_of(double u) {
  if (std::abs(u) <= 1.0) return (1.0 - u * u) / (1.0 + u * u);
  const double v = 1.0 / u;
  return (v * v - 1.0) / (v * v + 1.0);
}

}  // namespace

Estimate laguerre_entropy(int degree, double alpha,
                          const QuadratureConfig& config) {
  const OrthoPolySpec poly{PolyFamily::laguerre, degree, alpha};
  poly.validate();
  QuadratureConfig cfg = config;
  cfg.split_points = orthonormal_roots(poly);
  auto f = [&poly, alpha](double x) {
    const SignedLog y = eval_orthonormal_log(poly, x);
    if (y.sign == 0) return 0.0;
    const double t = 2.0 * y.log_abs;  // ln y~^2
    if (t < kLogDensityFloor) return 0.0;
    return -std::exp((alpha + 1.0) * std::log(x) - x + t) * t;
  };
  return from_quadrature(
      integrate(f, 0.0, std::numeric_limits<double>::infinity(), cfg));
}

Estimate gegenbauer_entropy(int degree, double lambda,
                            const QuadratureConfig& config) {
  const OrthoPolySpec poly{PolyFamily::gegenbauer, degree, lambda};
  poly.validate();
  QuadratureConfig cfg = config;
  cfg.split_points = orthonormal_roots(poly);
  auto f = [&poly, lambda](double x) {
    const SignedLog y = eval_orthonormal_log(poly, x);
    if (y.sign == 0) return 0.0;
    const double t = 2.0 * y.log_abs;
    if (t < kLogDensityFloor) return 0.0;
    return -std::exp((lambda - 0.5) * std::log1p(-x * x) + t) * t;
  };
  return from_quadrature(integrate(f, -1.0, 1.0, cfg));
}

Estimate angular_quartic(const StateSpec& spec,
                         const QuadratureConfig& config) {
  Estimate out{1.0 / (2.0 * kPi), 0.0, true};
  for (const AngularFactor& fac : angular_factors(spec)) {
    const OrthoPolySpec poly{PolyFamily::gegenbauer, fac.degree, fac.lambda};
    QuadratureConfig cfg = config;
    for (double r : orthonormal_roots(poly)) {
      cfg.split_points.push_back(std::acos(r));
    }
    const double spower = 4.0 * fac.sin_power + fac.weight_power;
    auto f = [&poly, spower](double theta) {
      const SignedLog c = eval_orthonormal_log(poly, std::cos(theta));
      if (c.sign == 0) return 0.0;
      const double s = std::sin(theta);
      if (s <= 0.0) return 0.0;
      return std::exp(4.0 * c.log_abs + spower * std::log(s));
    };
    out = product_of(out, from_quadrature(integrate(f, 0.0, kPi, cfg)));
  }
  return out;
}

Estimate position_radial_quartic_power(const StateSpec& spec, double x_power,
                                       const QuadratureConfig& config) {
  const DerivedParams d = DerivedParams::from(spec);
  const int k = spec.n - spec.l() - 1;
  const OrthoPolySpec poly{PolyFamily::laguerre, k, 2.0 * d.L + 1.0};
  QuadratureConfig cfg = config;
  cfg.split_points = orthonormal_roots(poly);
  const double power = x_power + 2.0 * (2.0 * d.L + 1.0);
  auto f = [&poly, power](double x) {
    const SignedLog y = eval_orthonormal_log(poly, x);
    if (y.sign == 0) return 0.0;
    return std::exp(power * std::log(x) - 2.0 * x + 4.0 * y.log_abs);
  };
  return from_quadrature(
      integrate(f, 0.0, std::numeric_limits<double>::infinity(), cfg));
}

Estimate position_radial_quartic(const StateSpec& spec,
                                 const QuadratureConfig& config) {
  return position_radial_quartic_power(spec, 3.0 - spec.D, config);
}

Estimate momentum_radial_quartic(const StateSpec& spec,
                                 const QuadratureConfig& config) {
  const DerivedParams d = DerivedParams::from(spec);
  const int l = spec.l();
  const int k = spec.n - l - 1;
  const OrthoPolySpec poly{PolyFamily::gegenbauer, k, d.L + 1.0};
  QuadratureConfig cfg = config;
  for (double r : orthonormal_roots(poly)) {
    // (1-y^2)/(1+y^2) = r  =>  y = sqrt((1-r)/(1+r))
    if (r > -1.0 && r < 1.0) {
      cfg.split_points.push_back(std::sqrt((1.0 - r) / (1.0 + r)));
    }
  }
  const double power = 4.0 * l + spec.D - 1.0;
  const double qpower = 4.0 * d.L + 8.0;
  auto f = [&poly, power, qpower](double y) {
    const SignedLog c = eval_orthonormal_log(poly, cos_angle_of(y));
    if (c.sign == 0) return 0.0;
    return std::exp(power * std::log(y) - qpower * log1p_sq(y) +
                    4.0 * c.log_abs);
  };
  return from_quadrature(
      integrate(f, 0.0, std::numeric_limits<double>::infinity(), cfg));
}

Estimate position_disequilibrium(const StateSpec& spec,
                                 const QuadratureConfig& config) {
  const DerivedParams d = DerivedParams::from(spec);
  Estimate out = product_of(position_radial_quartic(spec, config),
                            angular_quartic(spec, config));
  const double pre = std::exp((spec.D - 2.0) * kLog2 -
                              (spec.D + 2.0) * std::log(d.eta) +
                              spec.D * std::log(spec.Z));
  out.value *= pre;
  out.error *= pre;
  return out;
}

Estimate momentum_disequilibrium(const StateSpec& spec,
                                 const QuadratureConfig& config) {
  const DerivedParams d = DerivedParams::from(spec);
  Estimate out = product_of(momentum_radial_quartic(spec, config),
                            angular_quartic(spec, config));
  const double pre = std::exp((4.0 * d.L + 8.0) * kLog2 +
                              spec.D * std::log(d.eta) -
                              spec.D * std::log(spec.Z));
  out.value *= pre;
  out.error *= pre;
  return out;
}

double radial_entropy_offset(int n, int l, int D) {
  const double eta = n + 0.5 * (D - 3);
  const double L = l + 0.5 * (D - 3);
  return -2.0 * l * ((2.0 * eta - 2.0 * L - 1.0) / (2.0 * eta) +
                     digamma(eta + L + 1.0)) +
         (3.0 * eta * eta - L * (L + 1.0)) / eta -
         ((D - 1.0) * kLog2 - (D + 1.0) * std::log(eta));
}

double angular_entropy_offset(const StateSpec& spec) {
  double b = std::log(2.0 * kPi);
  for (const AngularFactor& fac : angular_factors(spec)) {
    if (fac.sin_power == 0) continue;  // empty term
    const double aj_mu = fac.lambda + fac.degree;  // alpha_j + mu_j
    b -= 2.0 * fac.sin_power *
         (digamma(2.0 * fac.lambda + fac.degree) - digamma(aj_mu) - kLog2 -
          1.0 / (2.0 * aj_mu));
  }
  return b;
}

double momentum_entropy_offset(int n, int l, int D) {
  const double eta = n + 0.5 * (D - 3);
  const double L = l + 0.5 * (D - 3);
  const double num = 2.0 * eta * (2.0 * L + 1.0);
  const double den = 4.0 * eta * eta - 1.0;
  double frac;
  if (2 * l + D - 2 == 0) {
    // l = 0, D = 2: the numerator vanishes identically. At n = 1 the
    // denominator vanishes too; the 0/0 resolves by continuity in D,
    // (2l+D-2)/(2n+D-4) -> 1, leaving 2 eta / (2n+D-2) = 1/2.
    frac = (n == 1) ? 0.5 : 0.0;
  } else {
    frac = num / den;
  }
  return -(D * std::log(eta) - (2.0 * L + 4.0) * kLog2) -
         (2.0 * L + 4.0) * (digamma(eta + L + 1.0) - digamma(eta)) +
         (L + 2.0) / eta - (D + 1.0) * (1.0 - frac);
}

Estimate angular_entropy(const StateSpec& spec,
                         const QuadratureConfig& config) {
  Estimate out{angular_entropy_offset(spec), 0.0, true};
  for (const AngularFactor& fac : angular_factors(spec)) {
    const Estimate e2 = gegenbauer_entropy(fac.degree, fac.lambda, config);
    out.value += e2.value;
    out.error += e2.error;
    out.converged = out.converged && e2.converged;
  }
  return out;
}

Estimate radial_entropy(const StateSpec& spec,
                        const QuadratureConfig& config) {
  const DerivedParams d = DerivedParams::from(spec);
  const int l = spec.l();
  const Estimate e1 =
      laguerre_entropy(spec.n - l - 1, 2.0 * d.L + 1.0, config);
  Estimate out;
  out.value = radial_entropy_offset(spec.n, l, spec.D) +
              e1.value / (2.0 * d.eta) - spec.D * std::log(spec.Z);
  out.error = e1.error / (2.0 * d.eta);
  out.converged = e1.converged;
  return out;
}

Estimate momentum_radial_entropy(const StateSpec& spec,
                                 const QuadratureConfig& config) {
  const DerivedParams d = DerivedParams::from(spec);
  const int l = spec.l();
  const Estimate e2 = gegenbauer_entropy(spec.n - l - 1, d.L + 1.0, config);
  Estimate out;
  out.value = momentum_entropy_offset(spec.n, l, spec.D) + e2.value +
              spec.D * std::log(spec.Z);
  out.error = e2.error;
  out.converged = e2.converged;
  return out;
}

}  // namespace hydroc
