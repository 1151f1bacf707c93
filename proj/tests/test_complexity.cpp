// This file is part of hydroc, released under the MIT License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hydroc/complexity.hpp"

using namespace hydroc;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;

double rel(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}
}  // namespace

TEST_CASE("ground-state position complexity is (e/2)^D") {
  for (int D = 2; D <= 10; ++D) {
    const MeasureReport m = closed_ground(D, 1.0, Space::position);
    CHECK(rel(m.complexity, std::pow(0.5 * kE, D)) < 1e-12);
  }
}

TEST_CASE("3D ground-state position components") {
  const MeasureReport m = closed_ground(3, 1.0, Space::position);
  CHECK(m.disequilibrium == doctest::Approx(1.0 / (8.0 * kPi)).epsilon(1e-13));
  CHECK(m.entropy_total == doctest::Approx(3.0 + std::log(kPi)).epsilon(1e-13));
  CHECK(m.entropy_angular ==
        doctest::Approx(std::log(4.0 * kPi)).epsilon(1e-13));
}

TEST_CASE("ground-state momentum complexity closed values") {
  // exact displays: 2 e^{3/2}/5, 66 e^{-10/3}, e^{35/12}/6
  const double c2 = closed_ground(2, 1.0, Space::momentum).complexity;
  const double c3 = closed_ground(3, 1.0, Space::momentum).complexity;
  const double c4 = closed_ground(4, 1.0, Space::momentum).complexity;
  CHECK(rel(c2, 0.4 * std::exp(1.5)) < 1e-12);
  CHECK(rel(c3, 66.0 * std::exp(-10.0 / 3.0)) < 1e-12);
  CHECK(rel(c4, std::exp(35.0 / 12.0) / 6.0) < 1e-12);
  CHECK(c2 == doctest::Approx(1.7926756281352259).epsilon(1e-13));
  CHECK(c3 == doctest::Approx(2.3544835609186582).epsilon(1e-13));
  CHECK(c4 == doctest::Approx(3.0799310101683094).epsilon(1e-13));
}

TEST_CASE("report invariants hold for every method") {
  const StateSpec s = StateSpec::circular(2, 4);
  for (Method m : {Method::closed_form, Method::functional,
                   Method::direct_oracle}) {
    for (Space space : {Space::position, Space::momentum}) {
      const MeasureReport r = measure(s, space, m);
      REQUIRE(r.converged);
      CHECK(r.entropy_total ==
            doctest::Approx(r.entropy_radial + r.entropy_angular)
                .epsilon(1e-14));
      CHECK(rel(r.complexity,
                r.disequilibrium * std::exp(r.entropy_total)) < 1e-12);
      CHECK(r.complexity > 1.0);
      CHECK(r.disequilibrium > 0.0);
    }
  }
}

TEST_CASE("circular closed form reduces to ground at n = 1") {
  for (int D = 2; D <= 10; ++D) {
    for (Space space : {Space::position, Space::momentum}) {
      const MeasureReport cs = closed_circular(1, D, 1.7, space);
      const MeasureReport gs = closed_ground(D, 1.7, space);
      CHECK(rel(cs.complexity, gs.complexity) < 1e-12);
      CHECK(std::abs(cs.entropy_total - gs.entropy_total) < 1e-12 *
            std::max(1.0, std::abs(gs.entropy_total)));
      CHECK(rel(cs.disequilibrium, gs.disequilibrium) < 1e-12);
    }
  }
}

TEST_CASE("three routes agree on the n=2, D=3 circular state") {
  const StateSpec s = StateSpec::circular(2, 3);
  for (Space space : {Space::position, Space::momentum}) {
    const double a = measure(s, space, Method::closed_form).complexity;
    const double b = measure(s, space, Method::functional).complexity;
    const double c = measure(s, space, Method::direct_oracle).complexity;
    CHECK(rel(a, b) < 1e-6);
    CHECK(rel(a, c) < 1e-6);
    CHECK(rel(b, c) < 1e-6);
  }
}

TEST_CASE("two numerical routes agree on non-circular excited states") {
  for (const StateSpec& s :
       {StateSpec{3, 1.0, 2, {0, 0}}, StateSpec{3, 1.0, 3, {1, 0}},
        StateSpec{4, 1.0, 2, {0, 0, 0}}, StateSpec{2, 1.0, 3, {0}}}) {
    for (Space space : {Space::position, Space::momentum}) {
      const MeasureReport f = measure(s, space, Method::functional);
      const MeasureReport o = measure(s, space, Method::direct_oracle);
      REQUIRE(f.converged);
      REQUIRE(o.converged);
      CHECK(rel(f.complexity, o.complexity) < 1e-6);
      CHECK(std::abs(f.entropy_total - o.entropy_total) < 1e-7);
    }
  }
}

TEST_CASE("complexity ordering in n at fixed D") {
  const double c2 = closed_circular(2, 2, 1.0, Space::position).complexity;
  const double c3 = closed_circular(3, 2, 1.0, Space::position).complexity;
  CHECK(c3 < c2);
}

TEST_CASE("closed_form is refused outside its domain") {
  const StateSpec s{3, 1.0, 2, {0, 0}};  // excited but not circular
  CHECK_THROWS_AS(measure(s, Space::position, Method::closed_form),
                  std::invalid_argument);
}

TEST_CASE("automatic method picks closed forms, else functional") {
  CHECK(measure(StateSpec::circular(3, 4), Space::position).method ==
        Method::closed_form);
  CHECK(measure(StateSpec{3, 1.0, 2, {0, 0}}, Space::position).method ==
        Method::functional);
}

TEST_CASE("Z-invariance of the complexity") {
  for (double z : {0.5, 2.0, 10.0, 137.0}) {
    for (Space space : {Space::position, Space::momentum}) {
      const MeasureReport a = closed_circular(3, 5, 1.0, space);
      const MeasureReport b = closed_circular(3, 5, z, space);
      CHECK(rel(a.complexity, b.complexity) < 1e-10);
      const double shift = (space == Space::position ? -1.0 : 1.0) * 5 *
                           std::log(z);
      CHECK(std::abs(b.entropy_total - a.entropy_total - shift) < 1e-10);
      CHECK(std::abs(b.log_disequilibrium - a.log_disequilibrium + shift) <
            1e-10);
    }
  }
  // functional route on a state without closed form
  const StateSpec s1{3, 1.0, 2, {0, 0}};
  StateSpec s2 = s1;
  s2.Z = 2.0;
  const double c1 = measure(s1, Space::position, Method::functional).complexity;
  const double c2 = measure(s2, Space::position, Method::functional).complexity;
  CHECK(rel(c1, c2) < 1e-7);
}

TEST_CASE("rydberg asymptotes") {
  AsymptoticRequest req;
  req.limit = LimitKind::rydberg;
  req.quantity = LimitQuantity::position_complexity;
  req.D = 3;
  const AsymptoticValue pos3 = asymptotic(req);
  CHECK(pos3.representable);
  CHECK(pos3.value == doctest::Approx(0.5 * kE).epsilon(1e-14));

  req.quantity = LimitQuantity::product;
  const AsymptoticValue prod3 = asymptotic(req);
  CHECK(prod3.value == doctest::Approx(0.25 * kE * kE).epsilon(1e-14));

  req.D = 2;
  const AsymptoticValue prod2 = asymptotic(req);
  CHECK(prod2.value == doctest::Approx(0.5 * kE).epsilon(1e-14));
}

TEST_CASE("circular complexities approach the rydberg asymptote") {
  // ratios frozen from the 40-digit baseline at n = 200
  const double r_pos3 = std::exp(log_closed_complexity(200, 3, Space::position) -
                                 0.5 * 2.0 * (1.0 - std::log(2.0)));
  CHECK(r_pos3 == doctest::Approx(1.002919883).epsilon(1e-6));
  CHECK(std::abs(r_pos3 - 1.0) < 0.02);
  const double r_mom2 = std::exp(log_closed_complexity(200, 2, Space::momentum) -
                                 0.5 * (1.0 - std::log(2.0)));
  CHECK(r_mom2 == doctest::Approx(1.002806324).epsilon(1e-6));
}

TEST_CASE("dimensional asymptotes at D = 200 stay within 5% in log") {
  for (int n : {1, 2, 3}) {
    AsymptoticRequest req;
    req.limit = LimitKind::dimensional;
    req.n = n;
    req.D = 200;
    req.quantity = LimitQuantity::position_complexity;
    const double lp = asymptotic(req).log_value;
    CHECK(std::abs(lp / log_closed_complexity(n, 200, Space::position) - 1.0) <
          0.05);
    req.quantity = LimitQuantity::momentum_complexity;
    const double lm = asymptotic(req).log_value;
    CHECK(std::abs(lm / log_closed_complexity(n, 200, Space::momentum) - 1.0) <
          0.05);
    req.quantity = LimitQuantity::product;
    const double lboth = asymptotic(req).log_value;
    const double exact = log_closed_complexity(n, 200, Space::position) +
                         log_closed_complexity(n, 200, Space::momentum);
    CHECK(std::abs(lboth / exact - 1.0) < 0.05);
  }
  // the position asymptote at n=1 is exact: (e/2)^D term for term
  AsymptoticRequest req;
  req.limit = LimitKind::dimensional;
  req.n = 1;
  req.D = 200;
  req.quantity = LimitQuantity::position_complexity;
  CHECK(std::abs(asymptotic(req).log_value -
                 log_closed_complexity(1, 200, Space::position)) < 1e-10);
}

TEST_CASE("large-D closed forms stay usable in log space") {
  const MeasureReport m = closed_circular(3, 300, 1.0, Space::momentum);
  CHECK(std::isfinite(m.log_complexity));
  CHECK(std::isfinite(m.log_disequilibrium));
  CHECK(std::isfinite(m.entropy_total));
}

TEST_CASE("uncertainty products") {
  // frozen: (e/2)^3 * 66 e^{-10/3}
  const double p3 = uncertainty_product(StateSpec::ground(3));
  CHECK(p3 == doctest::Approx(5.9113833122).epsilon(1e-10));
  CHECK(p3 == doctest::Approx(std::pow(0.5 * kE, 3) * 66.0 *
                              std::exp(-10.0 / 3.0))
                  .epsilon(1e-12));
  // bound e/2 on a small sample
  for (int D = 2; D <= 6; ++D) {
    for (int n = 1; n <= 4; ++n) {
      CHECK(uncertainty_product(StateSpec::circular(n, D)) >=
            0.5 * kE - 1e-12);
    }
  }
}

TEST_CASE("log_closed_complexity is Z-free and matches the report") {
  const MeasureReport m = closed_circular(4, 6, 3.0, Space::position);
  CHECK(std::abs(log_closed_complexity(4, 6, Space::position) -
                 m.log_complexity) < 1e-11);
}
