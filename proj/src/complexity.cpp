// This file is part of hydroc, released under the MIT License.

#include "hydroc/complexity.hpp"

#include <cmath>
#include <stdexcept>

#include "hydroc/orthopoly.hpp"

namespace hydroc {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2 = 0.69314718055994530942;
constexpr double kLogPi = 1.14472988584940017414;
constexpr double kLogDensityFloor = -690.0;
constexpr double kMaxExpArg = 709.0;

double safe_exp(double x) {
  if (x > kMaxExpArg) return std::numeric_limits<double>::infinity();
  return std::exp(x);
}

// ln E2 closed form at degree 0: the polynomial is the constant
// [sqrt(pi) Gamma(l+1/2)/Gamma(l+1)]^{-1/2}.
double degree0_gegenbauer_entropy(double lambda) {
  return 0.5 * kLogPi + ln_gamma(lambda + 0.5) - ln_gamma(lambda + 1.0);
}

// S[Y] for states whose angular Gegenbauer degrees all vanish (ground and
// circular): the offset constant plus the degree-0 entropies, no quadrature.
double closed_angular_entropy(const StateSpec& spec) {
  double s = angular_entropy_offset(spec);
  for (const AngularFactor& fac : angular_factors(spec)) {
    s += degree0_gegenbauer_entropy(fac.lambda);
  }
  return s;
}

MeasureReport assemble_closed(const StateSpec& spec, Space space,
                              double log_diseq, double entropy_total) {
  MeasureReport r;
  r.space = space;
  r.method = Method::closed_form;
  r.log_disequilibrium = log_diseq;
  r.entropy_total = entropy_total;
  r.entropy_angular = closed_angular_entropy(spec);
  r.entropy_radial = entropy_total - r.entropy_angular;
  r.log_complexity = log_diseq + entropy_total;
  r.disequilibrium = safe_exp(log_diseq);
  r.complexity = safe_exp(r.log_complexity);
  r.error_estimate = 0.0;
  r.converged = true;
  return r;
}

MeasureReport measure_functional(const StateSpec& spec, Space space,
                                 const QuadratureConfig& cfg) {
  const Estimate diseq = space == Space::position
                             ? position_disequilibrium(spec, cfg)
                             : momentum_disequilibrium(spec, cfg);
  const Estimate s_rad = space == Space::position
                             ? radial_entropy(spec, cfg)
                             : momentum_radial_entropy(spec, cfg);
  const Estimate s_ang = angular_entropy(spec, cfg);

  MeasureReport r;
  r.space = space;
  r.method = Method::functional;
  r.disequilibrium = diseq.value;
  r.entropy_radial = s_rad.value;
  r.entropy_angular = s_ang.value;
  r.entropy_total = s_rad.value + s_ang.value;
  r.log_disequilibrium = std::log(diseq.value);
  r.log_complexity = r.log_disequilibrium + r.entropy_total;
  r.complexity = diseq.value * safe_exp(r.entropy_total);
  const double rel = std::abs(diseq.error / diseq.value) + s_rad.error +
                     s_ang.error;
  r.error_estimate = std::abs(r.complexity) * rel;
  r.converged = diseq.converged && s_rad.converged && s_ang.converged;
  return r;
}

// Direct route: quadratures of the densities themselves (radial integrals of
// R^2/M^2 powers and per-angle integrals of the |Y|^2 factors), bypassing the
// functional decomposition constants entirely.
MeasureReport measure_oracle(const StateSpec& spec, Space space,
                             const QuadratureConfig& cfg) {
  const DerivedParams d = DerivedParams::from(spec);
  const int l = spec.l();
  const int k = spec.n - l - 1;

  Estimate radial_sq;    // int (radial wf)^4 volume-weighted
  Estimate radial_ent;   // -int (radial wf)^2 ln (radial wf)^2 volume-weighted
  if (space == Space::position) {
    // r = lambda x keeps the integrand O(1)-scaled; Laguerre zeros sit at
    // x = zero directly.
    const OrthoPolySpec poly{PolyFamily::laguerre, k, 2.0 * d.L + 1.0};
    QuadratureConfig c = cfg;
    c.split_points = orthonormal_roots(poly);
    const double lam = d.lambda;
    const int D = spec.D;
    auto quart = [&spec, lam, D](double x) {
      const SignedLog R = radial_position_log(spec, lam * x);
      if (R.sign == 0) return 0.0;
      return std::exp(4.0 * R.log_abs + (D - 1.0) * std::log(lam * x) +
                      std::log(lam));
    };
    auto ent = [&spec, lam, D](double x) {
      const SignedLog R = radial_position_log(spec, lam * x);
      if (R.sign == 0) return 0.0;
      const double t = 2.0 * R.log_abs;
      if (t < kLogDensityFloor) return 0.0;
      return -std::exp((D - 1.0) * std::log(lam * x) + t + std::log(lam)) * t;
    };
    const auto q1 =
        integrate(quart, 0.0, std::numeric_limits<double>::infinity(), c);
    radial_sq = {q1.value, q1.error_estimate, q1.converged};
    const auto q2 =
        integrate(ent, 0.0, std::numeric_limits<double>::infinity(), c);
    radial_ent = {q2.value, q2.error_estimate, q2.converged};
  } else {
    // p = (Z/eta) tan(chi/2) maps (0, inf) onto chi in (0, pi) and turns the
    // Gegenbauer argument into cos(chi).
    const OrthoPolySpec poly{PolyFamily::gegenbauer, k, d.L + 1.0};
    QuadratureConfig c = cfg;
    for (double r : orthonormal_roots(poly)) {
      c.split_points.push_back(std::acos(r));
    }
    const double scale = spec.Z / d.eta;
    const int D = spec.D;
    auto with_jacobian = [&spec, scale, D](double chi, bool entropy) {
      const double u = std::tan(0.5 * chi);
      if (!(u > 0.0) || !std::isfinite(u)) return 0.0;
      const double p = scale * u;
      const SignedLog M = radial_momentum_log(spec, p);
      if (M.sign == 0) return 0.0;
      const double log_u = std::log(u);
      const double log_jac =
          std::log(0.5 * scale) +
          (std::abs(u) > 1e8 ? 2.0 * log_u : std::log1p(u * u));
      const double log_pw = (D - 1.0) * std::log(p);
      const double t = 2.0 * M.log_abs;
      if (entropy) {
        if (t < kLogDensityFloor) return 0.0;
        return -std::exp(log_pw + t + log_jac) * t;
      }
      return std::exp(log_pw + 2.0 * t + log_jac);
    };
    const auto q1 = integrate([&](double chi) { return with_jacobian(chi, false); },
                              0.0, kPi, c);
    radial_sq = {q1.value, q1.error_estimate, q1.converged};
    const auto q2 = integrate([&](double chi) { return with_jacobian(chi, true); },
                              0.0, kPi, c);
    radial_ent = {q2.value, q2.error_estimate, q2.converged};
  }

  // Angular pieces: quartic norm and entropy of the factorized |Y|^2.
  const Estimate ang_quartic = angular_quartic(spec, cfg);
  Estimate ang_ent{std::log(2.0 * kPi), 0.0, true};
  for (const AngularFactor& fac : angular_factors(spec)) {
    const OrthoPolySpec poly{PolyFamily::gegenbauer, fac.degree, fac.lambda};
    QuadratureConfig c = cfg;
    for (double r : orthonormal_roots(poly)) {
      c.split_points.push_back(std::acos(r));
    }
    auto f = [&poly, &fac](double theta) {
      const SignedLog cv = eval_orthonormal_log(poly, std::cos(theta));
      if (cv.sign == 0) return 0.0;
      const double s = std::sin(theta);
      if (s <= 0.0) return 0.0;
      const double logs = std::log(s);
      const double lf = 2.0 * cv.log_abs + 2.0 * fac.sin_power * logs;
      if (lf < kLogDensityFloor) return 0.0;
      return std::exp(lf + fac.weight_power * logs) * lf;
    };
    const auto q = integrate(f, 0.0, kPi, c);
    ang_ent.value -= q.value;
    ang_ent.error += q.error_estimate;
    ang_ent.converged = ang_ent.converged && q.converged;
  }

  MeasureReport r;
  r.space = space;
  r.method = Method::direct_oracle;
  r.disequilibrium = radial_sq.value * ang_quartic.value;
  r.entropy_radial = radial_ent.value;
  r.entropy_angular = ang_ent.value;
  r.entropy_total = radial_ent.value + ang_ent.value;
  r.log_disequilibrium = std::log(r.disequilibrium);
  r.log_complexity = r.log_disequilibrium + r.entropy_total;
  r.complexity = r.disequilibrium * safe_exp(r.entropy_total);
  const double rel = std::abs(radial_sq.error / radial_sq.value) +
                     std::abs(ang_quartic.error / ang_quartic.value) +
                     radial_ent.error + ang_ent.error;
  r.error_estimate = std::abs(r.complexity) * rel;
  r.converged = radial_sq.converged && radial_ent.converged &&
                ang_quartic.converged && ang_ent.converged;
  return r;
}

}  // namespace

MeasureReport closed_ground(int D, double Z, Space space) {
  if (D < 2) throw std::invalid_argument("closed_ground: D >= 2 required");
  const StateSpec spec = StateSpec::ground(D, Z);
  const double lgD1 = std::log(static_cast<double>(D - 1));
  const double lZ = std::log(Z);
  if (space == Space::position) {
    const double log_diseq = D * lZ - D * lgD1 - 0.5 * (D - 1) * kLogPi -
                             ln_gamma(0.5 * (D + 1));
    const double entropy = D * lgD1 - D * kLog2 + 0.5 * (D - 1) * kLogPi +
                           ln_gamma(0.5 * (D + 1)) + D - D * lZ;
    return assemble_closed(spec, space, log_diseq, entropy);
  }
  const double log_diseq = D * (kLog2 + lgD1) - D * lZ -
                           0.5 * (D + 2) * kLogPi +
                           2.0 * ln_gamma(0.5 * (D + 1)) +
                           ln_gamma(2.0 + 1.5 * D) - ln_gamma(2.0 * D + 2.0);
  const double entropy = 0.5 * (D + 1) * kLogPi - D * lgD1 -
                         ln_gamma(0.5 * (D + 1)) +
                         (D + 1) * (digamma(D + 1.0) - digamma(0.5 * D + 1.0)) +
                         D * lZ;
  return assemble_closed(spec, space, log_diseq, entropy);
}

MeasureReport closed_circular(int n, int D, double Z, Space space) {
  if (n < 1) throw std::invalid_argument("closed_circular: n >= 1 required");
  if (D < 2) throw std::invalid_argument("closed_circular: D >= 2 required");
  const StateSpec spec = StateSpec::circular(n, D, Z);
  const double lZ = std::log(Z);
  const double lg_base = std::log(2.0 * n + D - 3.0);
  const double half = 0.5 * (D - 1);

  if (space == Space::position) {
    const double log_diseq =
        D * lZ + ln_gamma(n - 0.5) + ln_gamma(2.0 * n + 0.5 * (D - 3)) -
        (2.0 * n - 2.0) * kLog2 - 0.5 * D * kLogPi - D * lg_base -
        ln_gamma(static_cast<double>(n)) - 2.0 * ln_gamma(n + half);
    const double entropy =
        2.0 * n + D - 2.0 -
        (n - 1.0) * (digamma(static_cast<double>(n)) + digamma(n + half)) -
        D * kLog2 + D * lg_base + half * kLogPi +
        ln_gamma(static_cast<double>(n)) + ln_gamma(n + half) - D * lZ;
    return assemble_closed(spec, space, log_diseq, entropy);
  }

  const double a2 = (2.0 * n + D - 1.0) / (2.0 * n + D - 3.0) -
                    (D + 1.0) / (2.0 * n + D - 2.0) -
                    (n - 1.0) * digamma(static_cast<double>(n)) -
                    0.5 * (D + 1.0) * digamma(n + 0.5 * (D - 2)) +
                    (n + half) * digamma(n + 0.5 * (D - 3));
  const double log_diseq =
      (4.0 * n + D - 4.0) * kLog2 + D * lg_base + 2.0 * ln_gamma(n + half) +
      ln_gamma(2.0 * n - 1.0) + ln_gamma(2.0 * n + 1.5 * D) - D * lZ -
      0.5 * (D + 2) * kLogPi - 2.0 * ln_gamma(static_cast<double>(n)) -
      ln_gamma(4.0 * n + 2.0 * D - 2.0);
  const double entropy = a2 + (D + 1.0) * kLog2 + D * lZ +
                         0.5 * (D + 1) * kLogPi +
                         ln_gamma(static_cast<double>(n)) - D * lg_base -
                         ln_gamma(n + half);
  return assemble_closed(spec, space, log_diseq, entropy);
}

MeasureReport measure(const StateSpec& spec, Space space, Method method,
                      const QuadratureConfig& config) {
  spec.validate();
  Method resolved = method;
  if (method == Method::automatic) {
    resolved = (is_ground(spec) || is_circular(spec)) ? Method::closed_form
                                                      : Method::functional;
  }
  switch (resolved) {
    case Method::closed_form:
      if (is_ground(spec)) return closed_ground(spec.D, spec.Z, space);
      if (is_circular(spec)) {
        return closed_circular(spec.n, spec.D, spec.Z, space);
      }
      throw std::invalid_argument(
          "measure: closed_form covers only ground and circular states");
    case Method::functional:
      return measure_functional(spec, space, config);
    case Method::direct_oracle:
      return measure_oracle(spec, space, config);
    default:
      throw std::logic_error("measure: unresolved method");
  }
}

double log_closed_complexity(int n, int D, Space space) {
  return closed_circular(n, D, 1.0, space).log_complexity;
}

namespace {

double log_dimensional_position_circular(int n, int D) {
  return (D + 2.0 * n - 2.0) * (1.0 - kLog2) +
         (1.0 - n) * digamma(static_cast<double>(n)) + ln_gamma(n - 0.5) -
         0.5 * kLogPi;
}

double log_dimensional_momentum_ground(int D) {
  return 1.5 * (D - 1.0) * std::log(3.0) - (2.0 * D - 1.5) * kLog2 - 0.5;
}

double log_dimensional_momentum_circular(int n, int D) {
  return D * (1.5 * std::log(3.0) - 2.0 * kLog2) +
         (2.0 * n - 0.5) * std::log(3.0) + ln_gamma(2.0 * n - 1.0) -
         (4.0 * n - 2.5) * kLog2 - ln_gamma(static_cast<double>(n)) +
         (1.0 - n) * digamma(static_cast<double>(n)) - 0.5;
}

double log_dimensional_product_circular(int n, int D) {
  return D * (1.5 * std::log(3.0) + 1.0 - 3.0 * kLog2) +
         (2.0 * n - 0.5) * std::log(3.0) - (4.0 * n - 2.5) * kLog2 +
         2.0 * ln_gamma(n - 0.5) - kLogPi + 2.0 * n - 2.5 -
         2.0 * (n - 1.0) * digamma(static_cast<double>(n));
}

double log_dimensional_product_ground(int D) {
  return D * (1.5 * std::log(3.0) + 1.0 - 3.0 * kLog2) +
         1.5 * (std::log(3.0) - kLog2) - 0.5;
}

}  // namespace

AsymptoticValue asymptotic(const AsymptoticRequest& request) {
  double lv = 0.0;
  if (request.limit == LimitKind::rydberg) {
    const int D = request.D;
    if (D < 2) throw std::invalid_argument("asymptotic: D >= 2 required");
    switch (request.quantity) {
      case LimitQuantity::position_complexity:
      case LimitQuantity::momentum_complexity:
        lv = 0.5 * (D - 1.0) * (1.0 - kLog2);
        break;
      case LimitQuantity::product:
        lv = (D - 1.0) * (1.0 - kLog2);
        break;
    }
  } else {
    const int n = request.n;
    const int D = request.D;
    if (n < 1) throw std::invalid_argument("asymptotic: n >= 1 required");
    switch (request.quantity) {
      case LimitQuantity::position_complexity:
        lv = log_dimensional_position_circular(n, D);
        break;
      case LimitQuantity::momentum_complexity:
        lv = n == 1 ? log_dimensional_momentum_ground(D)
                    : log_dimensional_momentum_circular(n, D);
        break;
      case LimitQuantity::product:
        lv = n == 1 ? log_dimensional_product_ground(D)
                    : log_dimensional_product_circular(n, D);
        break;
    }
  }
  AsymptoticValue out;
  out.log_value = lv;
  out.representable = std::abs(lv) < kMaxExpArg;
  out.value = out.representable ? std::exp(lv)
                                : std::numeric_limits<double>::quiet_NaN();
  return out;
}

double uncertainty_product(const StateSpec& spec, Method method,
                           const QuadratureConfig& config) {
  const MeasureReport pos = measure(spec, Space::position, method, config);
  const MeasureReport mom = measure(spec, Space::momentum, method, config);
  return safe_exp(pos.log_complexity + mom.log_complexity);
}

}  // namespace hydroc
