// This file is part of hydroc, released under the MIT License.

#include "hydroc/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hydroc/orthopoly.hpp"

namespace hydroc {

namespace {

constexpr double kPi = 3.14159265358979323846;

double log1p_sq(double u) {
  // ln(1 + u^2) without overflowing u^2.
  const double au = std::abs(u);
  if (au > 1e8) return 2.0 * std::log(au);
  return std::log1p(u * u);
}

double cos_angle_of(double u) {
  // y = (1 - u^2) / (1 + u^2), stable for huge u.
  if (std::abs(u) <= 1.0) return (1.0 - u * u) / (1.0 + u * u);
  const double v = 1.0 / u;
  return (v * v - 1.0) / (v * v + 1.0);
}

}  // namespace

void StateSpec::validate() const {
  if (D < 2) {
    throw std::invalid_argument("StateSpec: D >= 2 violated (D = " +
                                std::to_string(D) + ")");
  }
  if (!(Z > 0.0)) {
    throw std::invalid_argument("StateSpec: Z > 0 violated (Z = " +
                                std::to_string(Z) + ")");
  }
  if (n < 1) {
    throw std::invalid_argument("StateSpec: n >= 1 violated (n = " +
                                std::to_string(n) + ")");
  }
  if (static_cast<int>(mu.size()) != D - 1) {
    throw std::invalid_argument(
        "StateSpec: mu must have D-1 = " + std::to_string(D - 1) +
        " entries, got " + std::to_string(mu.size()));
  }
  // l >= mu_2 >= ... >= mu_{D-2} >= |mu_{D-1}| >= 0
  for (int j = 0; j + 1 < D - 1; ++j) {
    const int lhs = mu[j];
    const int rhs = (j + 1 == D - 2) ? std::abs(mu[j + 1]) : mu[j + 1];
    if (lhs < rhs) {
      throw std::invalid_argument(
          "StateSpec: mu_" + std::to_string(j + 1) +
          " >= " + (j + 1 == D - 2 ? "|mu_" : "mu_") + std::to_string(j + 2) +
          (j + 1 == D - 2 ? "|" : "") + " violated (" + std::to_string(lhs) +
          " < " + std::to_string(rhs) + ")");
    }
  }
  const int lq = l();
  if (lq < 0) {
    throw std::invalid_argument("StateSpec: l >= 0 violated (l = " +
                                std::to_string(lq) + ")");
  }
  if (lq > n - 1) {
    throw std::invalid_argument("StateSpec: l <= n-1 violated (l = " +
                                std::to_string(lq) + ", n = " +
                                std::to_string(n) + ")");
  }
}

StateSpec StateSpec::ground(int D, double Z) {
  StateSpec s;
  s.D = D;
  s.Z = Z;
  s.n = 1;
  s.mu.assign(D - 1, 0);
  s.validate();
  return s;
}

StateSpec StateSpec::circular(int n, int D, double Z) {
  StateSpec s;
  s.D = D;
  s.Z = Z;
  s.n = n;
  s.mu.assign(D - 1, n - 1);
  s.validate();
  return s;
}

bool is_ground(const StateSpec& spec) {
  if (spec.n != 1) return false;
  for (int m : spec.mu) {
    if (m != 0) return false;
  }
  return true;
}

bool is_circular(const StateSpec& spec) {
  for (int m : spec.mu) {
    if (m != spec.n - 1) return false;
  }
  return true;
}

DerivedParams DerivedParams::from(const StateSpec& spec) {
  spec.validate();
  DerivedParams d;
  d.eta = spec.n + 0.5 * (spec.D - 3);
  d.L = spec.l() + 0.5 * (spec.D - 3);
  d.lambda = d.eta / (2.0 * spec.Z);
  d.alpha.reserve(spec.D - 2);
  for (int j = 1; j <= spec.D - 2; ++j) {
    d.alpha.push_back(0.5 * (spec.D - j - 1));
  }
  return d;
}

double energy(const StateSpec& spec) {
  const DerivedParams d = DerivedParams::from(spec);
  return -spec.Z * spec.Z / (2.0 * d.eta * d.eta);
}

std::vector<AngularFactor> angular_factors(const StateSpec& spec) {
  spec.validate();
  std::vector<AngularFactor> out;
  const int D = spec.D;
  out.reserve(D >= 2 ? D - 2 : 0);
  for (int j = 1; j <= D - 2; ++j) {
    const int mu_j = spec.mu[j - 1];
    // mu_{D-1} enters only through its absolute value
    const int mu_next =
        (j + 1 == D - 1) ? std::abs(spec.mu[j]) : spec.mu[j];
    AngularFactor f;
    f.degree = mu_j - mu_next;
    f.lambda = 0.5 * (D - j - 1) + mu_next;
    f.sin_power = mu_next;
    f.weight_power = D - 1 - j;
    out.push_back(f);
  }
  return out;
}

SignedLog radial_position_log(const StateSpec& spec, double r) {
  if (!(r > 0.0)) {
    throw std::domain_error("radial_position: r > 0 required");
  }
  const DerivedParams d = DerivedParams::from(spec);
  const int l = spec.l();
  const double rhat = r / d.lambda;
  // R = sqrt(lambda^{-D} / (2 eta)) rhat^l e^{-rhat/2} L~_{n-l-1}^{2L+1}(rhat)
  const OrthoPolySpec poly{PolyFamily::laguerre, spec.n - l - 1,
                           2.0 * d.L + 1.0};
  SignedLog v = eval_orthonormal_log(poly, rhat);
  const double logpre = -0.5 * (spec.D * std::log(d.lambda) +
                                std::log(2.0 * d.eta));
  return v.scaled(logpre + l * std::log(rhat) - 0.5 * rhat);
}

double radial_position(const StateSpec& spec, double r) {
  return radial_position_log(spec, r).value();
}

SignedLog radial_momentum_log(const StateSpec& spec, double p) {
  if (!(p > 0.0)) {
    throw std::domain_error("radial_momentum: p > 0 required");
  }
  const DerivedParams d = DerivedParams::from(spec);
  const int l = spec.l();
  const double u = d.eta * p / spec.Z;  // eta * p~
  const double y = cos_angle_of(u);
  // M = 2^{L+2} (eta/Z)^{D/2} u^l (1+u^2)^{-(L+2)} C~_{n-l-1}^{L+1}(y)
  const OrthoPolySpec poly{PolyFamily::gegenbauer, spec.n - l - 1, d.L + 1.0};
  SignedLog v = eval_orthonormal_log(poly, y);
  const double logpre = (d.L + 2.0) * std::log(2.0) +
                        0.5 * spec.D * std::log(d.eta / spec.Z) +
                        l * std::log(u) - (d.L + 2.0) * log1p_sq(u);
  return v.scaled(logpre);
}

double radial_momentum(const StateSpec& spec, double p) {
  return radial_momentum_log(spec, p).value();
}

double angular_density(const StateSpec& spec, std::span<const double> angles) {
  spec.validate();
  if (static_cast<int>(angles.size()) != spec.D - 1) {
    throw std::invalid_argument("angular_density: need D-1 angles");
  }
  for (std::size_t i = 0; i + 1 < angles.size(); ++i) {
    if (!(angles[i] >= 0.0 && angles[i] <= kPi)) {
      throw std::domain_error("angular_density: theta_" + std::to_string(i + 1) +
                              " outside [0, pi]");
    }
  }
  const double phi = angles.back();
  if (!(phi >= 0.0 && phi < 2.0 * kPi)) {
    throw std::domain_error("angular_density: phi outside [0, 2 pi)");
  }

  double log_y2 = -std::log(2.0 * kPi);
  const auto factors = angular_factors(spec);
  for (std::size_t j = 0; j < factors.size(); ++j) {
    const AngularFactor& f = factors[j];
    const double theta = angles[j];
    const double s = std::sin(theta);
    if (f.sin_power > 0 && s == 0.0) return 0.0;
    const OrthoPolySpec poly{PolyFamily::gegenbauer, f.degree, f.lambda};
    const SignedLog c = eval_orthonormal_log(poly, std::cos(theta));
    if (c.sign == 0) return 0.0;
    log_y2 += 2.0 * c.log_abs;
    if (f.sin_power > 0) log_y2 += 2.0 * f.sin_power * std::log(s);
  }
  return std::exp(log_y2);
}

double position_density(const StateSpec& spec, double r,
                        std::span<const double> angles) {
  const SignedLog R = radial_position_log(spec, r);
  const double y2 = angular_density(spec, angles);
  if (R.sign == 0 || y2 == 0.0) return 0.0;
  return std::exp(2.0 * R.log_abs + std::log(y2));
}

double momentum_density(const StateSpec& spec, double p,
                        std::span<const double> angles) {
  const SignedLog M = radial_momentum_log(spec, p);
  const double y2 = angular_density(spec, angles);
  if (M.sign == 0 || y2 == 0.0) return 0.0;
  return std::exp(2.0 * M.log_abs + std::log(y2));
}

}  // namespace hydroc
