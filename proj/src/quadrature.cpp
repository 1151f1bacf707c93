// This file is part of hydroc, released under the MIT License.

#include "hydroc/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace hydroc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// 15-point Kronrod abscissae on [-1,1] (positive half) and weights, with the
// embedded 7-point Gauss weights. Standard QUADPACK dqk15 constants.
constexpr std::array<double, 8> kXgk = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr std::array<double, 4> kWg = {0.129484966168870, 0.279705391489277,
                                       0.381830050505119, 0.417959183673469};

struct Segment {
  double a = 0.0, b = 0.0;
  double value = 0.0;
  double error = kInf;
  bool refinable = true;
};

struct RuleEval {
  double value = 0.0;
  double error = kInf;
  bool finite = false;
};

RuleEval gk15(const std::function<double(double)>& f, double a, double b,
              long& evaluations) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  std::array<double, 15> fv{};
  bool finite = true;
  const double fc = f(c);
  evaluations += 1;
  fv[7] = fc;
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(c - h * kXgk[j]);
    fv[14 - j] = f(c + h * kXgk[j]);
    evaluations += 2;
  }
  for (double v : fv) {
    if (!std::isfinite(v)) {
      finite = false;
      break;
    }
  }
  if (!finite) return {0.0, kInf, false};

  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  double resabs = kWgk[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    const double pair = fv[j] + fv[14 - j];
    resk += kWgk[j] * pair;
    resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
    if (j % 2 == 1) resg += kWg[(j - 1) / 2] * pair;  // Gauss nodes 1,3,5
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
  }

  const double value = resk * h;
  resabs *= std::abs(h);
  resasc *= std::abs(h);
  double err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (resabs > kTiny / (50.0 * kEps)) {
    err = std::max(err, 50.0 * kEps * resabs);
  }
  return {value, err, true};
}

double sum_values(const std::vector<Segment>& segs) {
  // Compensated (Kahan) sum keeps the roundoff of thousands of partial sums
  // out of the 1e-10 tolerance regime.
  double s = 0.0, comp = 0.0;
  for (const Segment& seg : segs) {
    const double y = seg.value - comp;
    const double t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  return s;
}

double sum_errors(const std::vector<Segment>& segs) {
  double s = 0.0;
  for (const Segment& seg : segs) s += seg.error;
  return s;
}

QuadratureResult adapt_finite(const std::function<double(double)>& f, double a,
                              double b, const QuadratureConfig& cfg,
                              std::vector<double> splits) {
  QuadratureResult out;
  if (!(a < b)) {
    out.converged = true;
    return out;
  }

  std::sort(splits.begin(), splits.end());
  std::vector<double> bounds;
  bounds.push_back(a);
  for (double s : splits) {
    if (s > bounds.back() && s < b) bounds.push_back(s);
  }
  bounds.push_back(b);

  std::vector<Segment> segs;
  segs.reserve(bounds.size() - 1);
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    Segment seg;
    seg.a = bounds[i];
    seg.b = bounds[i + 1];
    const RuleEval r = gk15(f, seg.a, seg.b, out.evaluations);
    seg.value = r.value;
    seg.error = r.error;
    segs.push_back(seg);
  }

  const auto tolerance = [&cfg](double v) {
    return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(v));
  };

  int subdivisions = 0;
  while (true) {
    const double total = sum_values(segs);
    const double err = sum_errors(segs);
    if (err <= tolerance(total)) {
      out.value = total;
      out.error_estimate = err;
      out.converged = true;
      return out;
    }
    if (subdivisions >= cfg.max_subdivisions) break;

    // Refine the segment with the largest error estimate.
    std::size_t worst = segs.size();
    double worst_err = 0.0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      if (segs[i].refinable && segs[i].error > worst_err) {
        worst_err = segs[i].error;
        worst = i;
      }
    }
    if (worst == segs.size()) break;  // nothing left to refine

    Segment& seg = segs[worst];
    const double mid = 0.5 * (seg.a + seg.b);
    if (!(mid > seg.a && mid < seg.b)) {  // no representable midpoint left
      seg.refinable = false;
      continue;
    }
    Segment right;
    right.b = seg.b;
    right.a = mid;
    seg.b = mid;
    const RuleEval rl = gk15(f, seg.a, seg.b, out.evaluations);
    const RuleEval rr = gk15(f, right.a, right.b, out.evaluations);
    seg.value = rl.value;
    seg.error = rl.error;
    right.value = rr.value;
    right.error = rr.error;
    segs.push_back(right);
    ++subdivisions;
  }

  out.value = sum_values(segs);
  out.error_estimate = sum_errors(segs);
  out.converged = out.error_estimate <= tolerance(out.value);
  return out;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureConfig& config) {
  const bool a_inf = std::isinf(a);
  const bool b_inf = std::isinf(b);

  if (!a_inf && !b_inf) {
    return adapt_finite(f, a, b, config, config.split_points);
  }

  if (a_inf && b_inf) {
    // x = t/(1-t^2) maps (-1,1) onto the real line.
    auto g = [&f](double t) {
      const double u = 1.0 - t * t;
      const double x = t / u;
      const double jac = (1.0 + t * t) / (u * u);
      return f(x) * jac;
    };
    QuadratureConfig cfg = config;
    cfg.split_points.clear();
    for (double s : config.split_points) {
      // Inverse of x = t/(1-t^2): t = (sqrt(1+4s^2)-1)/(2s).
      if (s != 0.0) {
        cfg.split_points.push_back((std::sqrt(1.0 + 4.0 * s * s) - 1.0) /
                                   (2.0 * s));
      } else {
        cfg.split_points.push_back(0.0);
      }
    }
    return adapt_finite(g, -1.0, 1.0, cfg, cfg.split_points);
  }

  // Semi-infinite: reduce (-inf, b) to (a', +inf) by reflection, then map
  // (a, inf) onto (0,1) with x = a + t/(1-t).
  if (a_inf) {
    auto reflected = [&f, b](double x) { return f(b - x); };
    QuadratureConfig cfg = config;
    for (double& s : cfg.split_points) s = b - s;
    return integrate(reflected, 0.0, kInf, cfg);
  }

  auto g = [&f, a](double t) {
    const double u = 1.0 - t;
    const double x = a + t / u;
    return f(x) / (u * u);
  };
  QuadratureConfig cfg = config;
  cfg.split_points.clear();
  for (double s : config.split_points) {
    if (s > a) cfg.split_points.push_back((s - a) / (1.0 + s - a));
  }
  return adapt_finite(g, 0.0, 1.0, cfg, cfg.split_points);
}

}  // namespace hydroc
