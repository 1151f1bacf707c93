// This file is part of hydroc, released under the MIT License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>

#include "hydroc/complexity.hpp"
#include "hydroc/functionals.hpp"
#include "hydroc/orthopoly.hpp"
#include "oracle_reference.hpp"

using namespace hydroc;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Brute-force reference for the Laguerre entropy functional: composite
// Simpson on the truncated interval [0, 80], polynomial from the series.
double laguerre_entropy_reference(int k, double alpha) {
  const OrthoPolySpec poly{PolyFamily::laguerre, k, alpha};
  return oracle::simpson(
      [&](double x) {
        if (x <= 0.0) return 0.0;
        const SignedLog y = eval_orthonormal_log(poly, x);
        if (y.sign == 0) return 0.0;
        const double t = 2.0 * y.log_abs;
        if (t < -690.0) return 0.0;
        return -std::exp((alpha + 1.0) * std::log(x) - x + t) * t;
      },
      0.0, 80.0, 1 << 22);
}

double gegenbauer_entropy_reference(int k, double lambda) {
  const OrthoPolySpec poly{PolyFamily::gegenbauer, k, lambda};
  return oracle::simpson(
      [&](double x) {
        if (x <= -1.0 || x >= 1.0) return 0.0;
        const SignedLog y = eval_orthonormal_log(poly, x);
        if (y.sign == 0) return 0.0;
        const double t = 2.0 * y.log_abs;
        if (t < -690.0) return 0.0;
        return -std::exp((lambda - 0.5) * std::log1p(-x * x) + t) * t;
      },
      -1.0, 1.0, 1 << 22);
}

}  // namespace

TEST_CASE("degree-0 Laguerre entropy closed form (alpha+1) ln Gamma(alpha+1)") {
  CHECK(std::abs(laguerre_entropy(0, 0.0).value) < 1e-12);
  for (double a : {1.0, 2.5, 7.0}) {
    const Estimate e = laguerre_entropy(0, a);
    REQUIRE(e.converged);
    CHECK(e.value ==
          doctest::Approx((a + 1.0) * ln_gamma(a + 1.0)).epsilon(1e-10));
  }
}

TEST_CASE("degree-0 Gegenbauer entropy closed form") {
  const Estimate half = gegenbauer_entropy(0, 0.5);
  REQUIRE(half.converged);
  CHECK(half.value == doctest::Approx(std::log(2.0)).epsilon(1e-10));
  for (double l : {1.0, 2.0, 6.5}) {
    const Estimate e = gegenbauer_entropy(0, l);
    REQUIRE(e.converged);
    const double expected =
        0.5 * std::log(kPi) + ln_gamma(l + 0.5) - ln_gamma(l + 1.0);
    CHECK(e.value == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("Laguerre entropy k=1 alpha=1 against the brute-force rule") {
  const Estimate e = laguerre_entropy(1, 1.0);
  REQUIRE(e.converged);
  // frozen from the reference rule (and the 40-digit run that produced it)
  CHECK(e.value == doctest::Approx(-7.22555697399567750).epsilon(1e-9));
  CHECK(std::abs(e.value - laguerre_entropy_reference(1, 1.0)) < 1e-8);
}

TEST_CASE("Gegenbauer entropy k=2 lambda=2 against the brute-force rule") {
  const Estimate e = gegenbauer_entropy(2, 2.0);
  REQUIRE(e.converged);
  CHECK(e.value == doctest::Approx(-0.73623171107679075).epsilon(1e-9));
  CHECK(std::abs(e.value - gegenbauer_entropy_reference(2, 2.0)) < 1e-8);
}

TEST_CASE("entropy functionals stay finite and converged up to degree 50") {
  const Estimate e1 = laguerre_entropy(50, 3.0);
  CHECK(e1.converged);
  CHECK(std::isfinite(e1.value));
  const Estimate e2 = gegenbauer_entropy(50, 2.0);
  CHECK(e2.converged);
  CHECK(std::isfinite(e2.value));
}

TEST_CASE("angular quartic integral of l = 0 states") {
  for (int D = 2; D <= 8; ++D) {
    const Estimate k2 = angular_quartic(StateSpec::ground(D));
    REQUIRE(k2.converged);
    const double expected =
        std::exp(ln_gamma(0.5 * D)) / (2.0 * std::pow(kPi, 0.5 * D));
    CHECK(k2.value == doctest::Approx(expected).epsilon(1e-9));
  }
  CHECK(angular_quartic(StateSpec::ground(3)).value ==
        doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-10));
}

TEST_CASE("angular quartic of the 3D l=1, m=1 state vs 2-d quadrature") {
  const StateSpec s{3, 1.0, 2, {1, 1}};
  const Estimate k2 = angular_quartic(s);
  REQUIRE(k2.converged);
  // direct two-dimensional tensor rule over (theta, phi)
  const double ref = oracle::simpson2d(
      [&](double theta, double phi) {
        const std::array<double, 2> angles = {theta, phi};
        const double y2 = angular_density(s, angles);
        return y2 * y2 * std::sin(theta);
      });
  CHECK(k2.value == doctest::Approx(ref).epsilon(1e-8));
  CHECK(k2.value == doctest::Approx(3.0 / (10.0 * kPi)).epsilon(1e-10));
}

TEST_CASE("assembled <rho> reproduces the ground-state closed value") {
  for (int D = 2; D <= 8; ++D) {
    const Estimate d = position_disequilibrium(StateSpec::ground(D));
    REQUIRE(d.converged);
    const double closed = closed_ground(D, 1.0, Space::position).disequilibrium;
    CHECK(d.value == doctest::Approx(closed).epsilon(1e-9));
  }
}

TEST_CASE("assembled <gamma> reproduces the ground-state closed value") {
  for (int D = 2; D <= 8; ++D) {
    const Estimate d = momentum_disequilibrium(StateSpec::ground(D));
    REQUIRE(d.converged);
    const double closed = closed_ground(D, 1.0, Space::momentum).disequilibrium;
    CHECK(d.value == doctest::Approx(closed).epsilon(1e-9));
  }
}

TEST_CASE("assembled <rho> of the n=2, D=3 circular state") {
  const Estimate d = position_disequilibrium(StateSpec::circular(2, 3));
  REQUIRE(d.converged);
  const double closed = closed_circular(2, 3, 1.0, Space::position).disequilibrium;
  CHECK(d.value == doctest::Approx(closed).epsilon(1e-9));
}

TEST_CASE("the wrong x-power breaks the ground-state identity") {
  const StateSpec gs = StateSpec::ground(3);
  QuadratureConfig cfg;
  cfg.max_subdivisions = 150;
  const Estimate bad = position_radial_quartic_power(gs, -(gs.D + 5.0), cfg);
  const Estimate good = position_radial_quartic(gs, cfg);
  REQUIRE(good.converged);
  // x^{-8} w^2 integrand diverges at the origin for D = 3
  CHECK((!bad.converged ||
         std::abs(bad.value / good.value - 1.0) > 1e-3));
}

TEST_CASE("radial entropy constant at the 3D ground state is 3 - ln 4") {
  CHECK(radial_entropy_offset(1, 0, 3) ==
        doctest::Approx(3.0 - std::log(4.0)).epsilon(1e-14));
}

TEST_CASE("assembled radial entropy matches direct quadrature (3D ground)") {
  const StateSpec s = StateSpec::ground(3);
  const Estimate sr = radial_entropy(s);
  REQUIRE(sr.converged);
  // S[R] for R = 2 e^{-r}: -int_0^inf r^2 R^2 ln R^2 dr, smooth integrand
  const double ref = oracle::simpson(
      [&](double r) {
        if (r <= 0.0) return 0.0;
        const double R = radial_position(s, r);
        const double R2 = R * R;
        if (R2 <= 0.0) return 0.0;
        return -r * r * R2 * std::log(R2);
      },
      0.0, 60.0, 1 << 21);
  CHECK(sr.value == doctest::Approx(ref).epsilon(1e-9));
  // equals the closed total minus the angular part
  const MeasureReport gs = closed_ground(3, 1.0, Space::position);
  CHECK(sr.value == doctest::Approx(gs.entropy_radial).epsilon(1e-10));
}

TEST_CASE("angular entropy offset with all mu zero is ln 2 pi") {
  CHECK(angular_entropy_offset(StateSpec::ground(5)) ==
        doctest::Approx(std::log(2.0 * kPi)).epsilon(1e-14));
}

TEST_CASE("hyperspherical entropy ln 2 pi (D=2) and ln 4 pi (D=3)") {
  const Estimate d2 = angular_entropy(StateSpec::ground(2));
  REQUIRE(d2.converged);
  CHECK(d2.value == doctest::Approx(std::log(2.0 * kPi)).epsilon(1e-10));
  const Estimate d3 = angular_entropy(StateSpec::ground(3));
  REQUIRE(d3.converged);
  CHECK(d3.value == doctest::Approx(std::log(4.0 * kPi)).epsilon(1e-10));
}

TEST_CASE("hyperspherical entropy of the n=2, D=3 circular state") {
  const StateSpec s{3, 1.0, 2, {1, 1}};
  const Estimate sy = angular_entropy(s);
  REQUIRE(sy.converged);
  // frozen from the 40-digit run
  CHECK(sy.value == doctest::Approx(2.40593144440790246).epsilon(1e-10));
  // direct 2-d quadrature of -|Y|^2 ln |Y|^2
  const double ref = oracle::simpson2d(
      [&](double theta, double phi) {
        const std::array<double, 2> angles = {theta, phi};
        const double y2 = angular_density(s, angles);
        if (y2 <= 1e-300) return 0.0;
        return -y2 * std::log(y2) * std::sin(theta);
      });
  CHECK(sy.value == doctest::Approx(ref).epsilon(1e-7));
}

TEST_CASE("functional S[Y] matches factor-wise brute force on mixed states") {
  for (const StateSpec& s :
       {StateSpec{4, 1.0, 3, {2, 1, 0}}, StateSpec{5, 1.0, 2, {1, 1, 1, -1}},
        StateSpec{6, 1.0, 4, {3, 2, 2, 1, -1}}}) {
    const Estimate sy = angular_entropy(s);
    REQUIRE(sy.converged);
    double ref = std::log(2.0 * kPi);
    for (const AngularFactor& fac : angular_factors(s)) {
      const OrthoPolySpec poly{PolyFamily::gegenbauer, fac.degree, fac.lambda};
      ref -= oracle::simpson(
          [&](double theta) {
            const double c = eval_orthonormal(poly, std::cos(theta));
            const double sn = std::sin(theta);
            if (sn <= 0.0) return 0.0;
            const double g = c * c * std::pow(sn, 2.0 * fac.sin_power);
            if (g <= 1e-300) return 0.0;
            return g * std::log(g) * std::pow(sn, fac.weight_power);
          },
          0.0, kPi, 1 << 20);
    }
    CHECK(sy.value == doctest::Approx(ref).epsilon(1e-7));
  }
}

TEST_CASE("momentum entropy constant: D=3 ground assembly matches the closed S") {
  const StateSpec s = StateSpec::ground(3);
  const Estimate sm = momentum_radial_entropy(s);
  const Estimate sy = angular_entropy(s);
  REQUIRE(sm.converged);
  const double total = sm.value + sy.value;
  CHECK(total == doctest::Approx(2.42186234117).epsilon(1e-9));
  CHECK(total == doctest::Approx(closed_ground(3, 1.0, Space::momentum)
                                     .entropy_total)
                     .epsilon(1e-10));
}

TEST_CASE("momentum entropy constant at the D=2 ground corner") {
  // The 0/0 in the closed constant resolves so that the assembled momentum
  // entropy equals ln(2 pi) + 3/2 (confirmed by direct quadrature).
  const StateSpec s = StateSpec::ground(2);
  const Estimate sm = momentum_radial_entropy(s);
  const Estimate sy = angular_entropy(s);
  REQUIRE(sm.converged);
  CHECK(sm.value + sy.value ==
        doctest::Approx(std::log(2.0 * kPi) + 1.5).epsilon(1e-10));
}

TEST_CASE("quartic integrals are strictly positive") {
  for (const StateSpec& s : {StateSpec::ground(4), StateSpec::circular(3, 5),
                             StateSpec{3, 1.0, 3, {1, 0}}}) {
    CHECK(position_radial_quartic(s).value > 0.0);
    CHECK(momentum_radial_quartic(s).value > 0.0);
    CHECK(angular_quartic(s).value > 0.0);
  }
}
