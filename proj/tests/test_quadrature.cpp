// This file is part of hydroc, released under the MIT License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "hydroc/quadrature.hpp"

using namespace hydroc;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_result_contract(const QuadratureResult& q,
                           const QuadratureConfig& cfg = {}) {
  if (q.converged) {
    CHECK(q.error_estimate <=
          std::max(cfg.abs_tol, cfg.rel_tol * std::abs(q.value)) * (1 + 1e-12));
  }
  CHECK(q.evaluations > 0);
}
}  // namespace

TEST_CASE("exponential tail on (0, inf)") {
  const auto q = integrate([](double x) { return std::exp(-x); }, 0.0, kInf);
  CHECK(q.converged);
  CHECK(q.value == doctest::Approx(1.0).epsilon(1e-10));
  check_result_contract(q);
}

TEST_CASE("endpoint log singularity: ln x on (0,1)") {
  const auto q = integrate([](double x) { return std::log(x); }, 0.0, 1.0);
  CHECK(q.converged);
  CHECK(q.value == doctest::Approx(-1.0).epsilon(1e-10));
  check_result_contract(q);
}

TEST_CASE("x^3 e^{-2x} on (0, inf) = Gamma(4)/2^4") {
  const auto q = integrate(
      [](double x) { return x * x * x * std::exp(-2.0 * x); }, 0.0, kInf);
  CHECK(q.converged);
  CHECK(q.value == doctest::Approx(3.0 / 8.0).epsilon(1e-10));
}

TEST_CASE("finite interval, smooth") {
  const auto q = integrate([](double x) { return std::sin(x); }, 0.0,
                           3.14159265358979323846);
  CHECK(q.converged);
  CHECK(q.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("interior kink handled by split points") {
  QuadratureConfig cfg;
  cfg.split_points = {0.3};
  const auto q =
      integrate([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, cfg);
  CHECK(q.converged);
  CHECK(q.value == doctest::Approx(0.5 * (0.09 + 0.49)).epsilon(1e-12));
}

TEST_CASE("split points survive the semi-infinite transform") {
  QuadratureConfig cfg;
  cfg.split_points = {3.0};
  const auto q = integrate(
      [](double x) { return std::exp(-std::abs(x - 3.0)); }, 0.0, kInf, cfg);
  CHECK(q.converged);
  CHECK(q.value == doctest::Approx(2.0 - std::exp(-3.0)).epsilon(1e-10));
}

TEST_CASE("algebraic endpoint singularity") {
  // int_0^1 x^{-1/2} dx = 2
  const auto q =
      integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
  CHECK(q.converged);
  CHECK(q.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("budget exhaustion reports converged = false, never throws") {
  QuadratureConfig cfg;
  cfg.max_subdivisions = 2;
  const auto q = integrate(
      [](double x) { return 1.0 / std::sqrt(std::abs(x - 0.33333)); }, 0.0,
      1.0, cfg);
  CHECK_FALSE(q.converged);
  CHECK(q.error_estimate > 0.0);
}

TEST_CASE("non-finite samples are confined, not propagated") {
  // 1/(x - 0.5) is not integrable; the engine must give up cleanly.
  QuadratureConfig cfg;
  cfg.max_subdivisions = 100;
  const auto q =
      integrate([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0, cfg);
  CHECK_FALSE(std::isnan(q.value));
  CHECK_FALSE(q.converged);
}

TEST_CASE("empty and reversed intervals") {
  const auto q = integrate([](double) { return 1.0; }, 2.0, 2.0);
  CHECK(q.converged);
  CHECK(q.value == 0.0);
}

TEST_CASE("doubly infinite interval") {
  const auto q = integrate([](double x) { return std::exp(-x * x); }, -kInf,
                           kInf);
  CHECK(q.converged);
  CHECK(q.value == doctest::Approx(std::sqrt(3.14159265358979323846))
                       .epsilon(1e-10));
}

TEST_CASE("tolerance configuration is honored") {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-4;
  cfg.abs_tol = 1e-12;
  const auto q = integrate([](double x) { return std::log(x); }, 0.0, 1.0, cfg);
  CHECK(q.converged);
  CHECK(std::abs(q.value + 1.0) < 1e-3);
  check_result_contract(q, cfg);
}
