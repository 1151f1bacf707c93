// This file is part of hydroc, released under the MIT License.

#include "hydroc/specfun.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hydroc {

namespace {

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficient set).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2*pi)/2

[[noreturn]] void domain_error(const char* fn, double x) {
  throw std::domain_error(std::string(fn) + ": argument must be positive, got " +
                          std::to_string(x));
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0)) domain_error("ln_gamma", x);
  double acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    acc += kLanczos[i] / (x + static_cast<double>(i) - 1.0);
  }
  const double t = x + kLanczosG - 0.5;
  return kHalfLog2Pi + std::log(acc) - t + (x - 0.5) * std::log(t);
}

double digamma(double x) {
  if (!(x > 0.0)) domain_error("digamma", x);
  // Push the argument above 10 with psi(x) = psi(x+1) - 1/x, then use the
  // asymptotic series psi(z) ~ ln z - 1/(2z) - sum B_{2k}/(2k z^{2k}).
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // B_2/2, B_4/4, ..., B_14/14
  constexpr std::array<double, 7> kBernTerm = {
      1.0 / 12.0,   -1.0 / 120.0,     1.0 / 252.0,  -1.0 / 240.0,
      1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,
  };
  double series = 0.0;
  double p = inv2;
  for (double c : kBernTerm) {
    series += c * p;
    p *= inv2;
  }
  return acc + std::log(x) - 0.5 * inv - series;
}

}  // namespace hydroc
