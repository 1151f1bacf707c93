// This file is part of hydroc, released under the MIT License.

#include "hydroc/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hydroc/complexity.hpp"
#include "hydroc/report_io.hpp"
#include "hydroc/functionals.hpp"
#include "hydroc/grid.hpp"
#include "hydroc/orthopoly.hpp"
#include "hydroc/states.hpp"

namespace hydroc {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEOver2 = 1.3591409142295226;

std::string describe(const StateSpec& s) {
  std::ostringstream os;
  os << "D=" << s.D << " n=" << s.n << " mu=(";
  for (std::size_t i = 0; i < s.mu.size(); ++i) {
    if (i) os << ',';
    os << s.mu[i];
  }
  os << ")";
  return os.str();
}

// A spread of valid states for one (n, D): ground/circular plus s-like and
// mixed hyperquantum chains, including a negative magnetic number.
std::vector<StateSpec> sample_states(int n, int D, double Z) {
  std::vector<StateSpec> out;
  const auto add = [&out](StateSpec s) {
    s.validate();
    out.push_back(std::move(s));
  };
  add(StateSpec::circular(n, D, Z));
  if (n > 1) {
    StateSpec s{D, Z, n, std::vector<int>(D - 1, 0)};
    add(s);  // l = 0
    if (D >= 3) {
      StateSpec t{D, Z, n, std::vector<int>(D - 1, 0)};
      t.mu[0] = n - 1;  // l = n-1, remaining mu zero
      add(t);
      StateSpec u{D, Z, n, std::vector<int>(D - 1, n - 1)};
      u.mu[D - 2] = -(n - 1);  // circular chain with m < 0
      add(u);
    }
  }
  return out;
}

double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

struct Worst {
  double value = 0.0;
  std::string where;

  void update(double v, const std::string& w) {
    if (v > value) {
      value = v;
      where = w;
    }
  }
};

CheckResult check_normalization(const std::vector<StateSpec>& states,
                                const QuadratureConfig& cfg, bool parallel) {
  struct Row {
    double dev = 0.0;
    std::string where;
  };
  const auto rows = grid_map<Row>(states.size(), parallel, [&](std::size_t i) {
    const StateSpec& s = states[i];
    const DerivedParams d = DerivedParams::from(s);
    const int k = s.n - s.l() - 1;
    Row row;

    // radial position norm, r = lambda x
    {
      const OrthoPolySpec poly{PolyFamily::laguerre, k, 2.0 * d.L + 1.0};
      QuadratureConfig c = cfg;
      c.split_points = orthonormal_roots(poly);
      auto f = [&s, &d](double x) {
        const SignedLog R = radial_position_log(s, d.lambda * x);
        if (R.sign == 0) return 0.0;
        return std::exp(2.0 * R.log_abs +
                        (s.D - 1.0) * std::log(d.lambda * x) +
                        std::log(d.lambda));
      };
      const auto q =
          integrate(f, 0.0, std::numeric_limits<double>::infinity(), c);
      row.dev = std::max(row.dev, std::abs(q.value - 1.0));
    }
    // radial momentum norm, p = (Z/eta) tan(chi/2)
    {
      const OrthoPolySpec poly{PolyFamily::gegenbauer, k, d.L + 1.0};
      QuadratureConfig c = cfg;
      for (double r : orthonormal_roots(poly)) {
        c.split_points.push_back(std::acos(r));
      }
      const double scale = s.Z / d.eta;
      auto f = [&s, scale](double chi) {
        const double u = std::tan(0.5 * chi);
        if (!(u > 0.0) || !std::isfinite(u)) return 0.0;
        const SignedLog M = radial_momentum_log(s, scale * u);
        if (M.sign == 0) return 0.0;
        const double lg_jac = std::log(0.5 * scale) +
                              (u > 1e8 ? 2.0 * std::log(u) : std::log1p(u * u));
        return std::exp(2.0 * M.log_abs +
                        (s.D - 1.0) * std::log(scale * u) + lg_jac);
      };
      const auto q = integrate(f, 0.0, kPi, c);
      row.dev = std::max(row.dev, std::abs(q.value - 1.0));
    }
    // angular norm: (1/2pi) * 2pi * product of factor norms
    {
      double total = 1.0;
      for (const AngularFactor& fac : angular_factors(s)) {
        const OrthoPolySpec poly{PolyFamily::gegenbauer, fac.degree,
                                 fac.lambda};
        QuadratureConfig c = cfg;
        for (double r : orthonormal_roots(poly)) {
          c.split_points.push_back(std::acos(r));
        }
        auto f = [&poly, &fac](double theta) {
          const SignedLog cv = eval_orthonormal_log(poly, std::cos(theta));
          if (cv.sign == 0) return 0.0;
          const double sn = std::sin(theta);
          if (sn <= 0.0) return 0.0;
          return std::exp(2.0 * cv.log_abs +
                          (2.0 * fac.sin_power + fac.weight_power) *
                              std::log(sn));
        };
        total *= integrate(f, 0.0, kPi, c).value;
      }
      row.dev = std::max(row.dev, std::abs(total - 1.0));
    }
    row.where = describe(s);
    return row;
  });

  Worst worst;
  for (const Row& r : rows) worst.update(r.dev, r.where);
  std::ostringstream os;
  os << "max |norm - 1| = " << worst.value << " at " << worst.where;
  return {"density normalizations (position, momentum, angular)",
          worst.value < 1e-8, os.str()};
}

CheckResult check_z_invariance(bool quick) {
  const std::vector<double> zs = {0.5, 1.0, 2.0, 10.0, 137.0};
  Worst worst_c, worst_s, worst_d;
  const int dmax = quick ? 4 : 8;
  for (int D = 2; D <= dmax; ++D) {
    for (int n : {1, quick ? 2 : 4}) {
      for (Space space : {Space::position, Space::momentum}) {
        const MeasureReport base = closed_circular(n, D, 1.0, space);
        for (double z : zs) {
          const MeasureReport m = closed_circular(n, D, z, space);
          const std::string where = "n=" + std::to_string(n) +
                                    " D=" + std::to_string(D) + " Z=" +
                                    std::to_string(z);
          worst_c.update(rel_diff(m.complexity, base.complexity), where);
          const double shift = (space == Space::position ? -1.0 : 1.0) * D *
                               std::log(z);
          worst_s.update(
              std::abs(m.entropy_total - base.entropy_total - shift), where);
          worst_d.update(
              std::abs(m.log_disequilibrium - base.log_disequilibrium + shift),
              where);
        }
      }
    }
  }
  std::ostringstream os;
  os << "max rel dC = " << worst_c.value << ", |dS + D ln Z| = " << worst_s.value
     << ", |d ln<.> - D ln Z| = " << worst_d.value;
  const bool ok =
      worst_c.value < 1e-10 && worst_s.value < 1e-10 && worst_d.value < 1e-10;
  return {"Z-invariance of C and -+D ln Z covariance of S, <.>", ok, os.str()};
}

CheckResult check_three_way(const std::vector<StateSpec>& closed_states,
                            const QuadratureConfig& cfg, bool parallel) {
  struct Row {
    double dev = 0.0;
    std::string where;
  };
  std::vector<std::pair<StateSpec, Space>> points;
  for (const StateSpec& s : closed_states) {
    points.emplace_back(s, Space::position);
    points.emplace_back(s, Space::momentum);
  }
  const auto rows = grid_map<Row>(points.size(), parallel, [&](std::size_t i) {
    const auto& [s, space] = points[i];
    const MeasureReport a = measure(s, space, Method::closed_form, cfg);
    const MeasureReport b = measure(s, space, Method::functional, cfg);
    const MeasureReport c = measure(s, space, Method::direct_oracle, cfg);
    Row row;
    row.dev = std::max(rel_diff(a.complexity, b.complexity),
                       std::max(rel_diff(a.complexity, c.complexity),
                                rel_diff(b.complexity, c.complexity)));
    row.where = describe(s) + " " + space_name(space);
    if (!b.converged || !c.converged) row.dev = 1.0;
    return row;
  });
  Worst worst;
  for (const Row& r : rows) worst.update(r.dev, r.where);
  std::ostringstream os;
  os << "max pairwise rel diff = " << worst.value << " at " << worst.where;
  return {"three-way method agreement (closed, functional, oracle)",
          worst.value < 1e-6, os.str()};
}

CheckResult check_reduction() {
  Worst worst;
  for (int D = 2; D <= 10; ++D) {
    for (Space space : {Space::position, Space::momentum}) {
      const MeasureReport cs = closed_circular(1, D, 1.0, space);
      const MeasureReport gs = closed_ground(D, 1.0, space);
      const std::string where =
          "D=" + std::to_string(D) + " " + space_name(space);
      worst.update(rel_diff(cs.complexity, gs.complexity), where);
      worst.update(std::abs(cs.entropy_total - gs.entropy_total), where);
      worst.update(rel_diff(cs.disequilibrium, gs.disequilibrium), where);
    }
  }
  std::ostringstream os;
  os << "max deviation = " << worst.value << " at " << worst.where;
  return {"circular closed form reduces to ground at n = 1", worst.value < 1e-12,
          os.str()};
}

CheckResult check_ordering(bool quick) {
  const int dmax = quick ? 4 : 10;
  bool ok = true;
  std::ostringstream os;
  for (int D = 2; D <= dmax && ok; ++D) {
    for (Space space : {Space::position, Space::momentum}) {
      const double c1 = closed_circular(1, D, 1.0, space).complexity;
      const double c2 = closed_circular(2, D, 1.0, space).complexity;
      const double c3 = closed_circular(3, D, 1.0, space).complexity;
      if (!(c3 < c2 && c2 < c1)) {
        ok = false;
        os << "violated at D=" << D << " " << space_name(space);
        break;
      }
    }
  }
  if (ok) os << "C[n=3] < C[n=2] < C[n=1] for D = 2.." << dmax;
  return {"complexity ordering in n", ok, os.str()};
}

CheckResult check_bound(const std::vector<StateSpec>& closed_states) {
  double min_product = std::numeric_limits<double>::infinity();
  std::string where;
  for (const StateSpec& s : closed_states) {
    const double p = uncertainty_product(s, Method::closed_form);
    if (p < min_product) {
      min_product = p;
      where = describe(s);
    }
  }
  std::ostringstream os;
  os << "min C[rho]C[gamma] = " << min_product << " at " << where
     << " (bound e/2 = " << kEOver2 << ")";
  return {"uncertainty product bound C[rho]C[gamma] >= e/2",
          min_product >= kEOver2 - 1e-12, os.str()};
}

CheckResult check_exponent_probe(const QuadratureConfig& cfg) {
  // The position quartic must carry x^{3-D}; assembling <rho> with the
  // alternative power x^{-D-5} has to break the ground-state identity
  // (for D=3 that integrand diverges at the origin).
  const StateSpec gs = StateSpec::ground(3);
  const DerivedParams d = DerivedParams::from(gs);
  QuadratureConfig c = cfg;
  c.max_subdivisions = std::min(c.max_subdivisions, 200);
  const Estimate k1 = position_radial_quartic_power(gs, -(gs.D + 5.0), c);
  const Estimate k2 = angular_quartic(gs, c);
  const double assembled =
      std::exp((gs.D - 2.0) * std::log(2.0) -
               (gs.D + 2.0) * std::log(d.eta)) *
      k1.value * k2.value;
  const double closed = closed_ground(3, 1.0, Space::position).disequilibrium;
  const double dev = rel_diff(assembled, closed);
  std::ostringstream os;
  os << "wrong-power <rho> rel deviation = " << dev
     << (k1.converged ? " (converged)" : " (non-converged)");
  const bool ok = !k1.converged || dev > 1e-3;
  return {"quartic exponent probe rejects x^{-D-5}", ok, os.str()};
}

}  // namespace

std::vector<CheckResult> run_validation(bool quick,
                                        const QuadratureConfig& config,
                                        bool parallel) {
  const int dmax = quick ? 4 : 8;
  const int nmax = quick ? 2 : 5;

  std::vector<StateSpec> closed_states;  // ground + circular grid
  std::vector<StateSpec> norm_states;
  for (int D = 2; D <= dmax; ++D) {
    closed_states.push_back(StateSpec::ground(D));
    for (int n = 2; n <= nmax; ++n) {
      closed_states.push_back(StateSpec::circular(n, D));
    }
    for (int n = 1; n <= nmax; ++n) {
      const auto samples = sample_states(n, D, 1.0);
      norm_states.insert(norm_states.end(), samples.begin(), samples.end());
    }
  }

  std::vector<CheckResult> out;
  out.push_back(check_normalization(norm_states, config, parallel));
  out.push_back(check_z_invariance(quick));
  out.push_back(check_three_way(closed_states, config, parallel));
  out.push_back(check_reduction());
  out.push_back(check_ordering(quick));
  out.push_back(check_bound(closed_states));
  out.push_back(check_exponent_probe(config));
  return out;
}

}  // namespace hydroc
