// This file is part of hydroc, released under the MIT License.

#include "hydroc/cli_app.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "hydroc/complexity.hpp"
#include "hydroc/grid.hpp"
#include "hydroc/report_io.hpp"
#include "hydroc/validation.hpp"

namespace hydroc {

namespace {

struct ComputeOptions {
  int D = 3;
  double Z = 1.0;
  int n = 1;
  std::string mu;
  int l = -1;
  std::string state_fill = "circular";  // for --l: circular | s
  std::string space = "both";
  std::string method = "auto";
  std::string format = "text";
  int digits = 17;
};

struct SweepOptions {
  int d_min = 2, d_max = 8;
  int n_min = 1, n_max = 5;
  double Z = 1.0;
  std::string space = "both";
  std::string method = "auto";
  std::string out_path;
  int digits = 17;
  bool serial = false;
  std::string emit = "measures";  // measures | radial-density
  int samples = 400;
  double coord_max = 0.0;  // 0: auto
};

struct LimitsOptions {
  std::string limit;
  std::string quantity;
  int n = 1;
  int D = 3;
  std::string points;
};

struct ValidateOptions {
  bool quick = false;
  bool serial = false;
};

Method parse_method(const std::string& m) {
  if (m == "auto") return Method::automatic;
  if (m == "closed") return Method::closed_form;
  if (m == "functional") return Method::functional;
  if (m == "oracle") return Method::direct_oracle;
  throw std::invalid_argument("unknown method: " + m);
}

std::vector<Space> parse_spaces(const std::string& s) {
  if (s == "position") return {Space::position};
  if (s == "momentum") return {Space::momentum};
  if (s == "both") return {Space::position, Space::momentum};
  throw std::invalid_argument("unknown space: " + s);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(std::stoi(item));
  }
  return out;
}

QuadratureConfig default_config() {
  QuadratureConfig cfg;
  if (const char* env = std::getenv("HYDRO_QUAD_RELTOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0 && v < 1.0) cfg.rel_tol = v;
  }
  return cfg;
}

StateSpec build_state(const ComputeOptions& o) {
  StateSpec s;
  s.D = o.D;
  s.Z = o.Z;
  s.n = o.n;
  if (!o.mu.empty()) {
    s.mu = parse_int_list(o.mu);
  } else if (o.l >= 0) {
    if (o.state_fill == "circular") {
      s.mu.assign(o.D - 1, o.l);
    } else if (o.state_fill == "s") {
      s.mu.assign(o.D - 1, 0);
      s.mu.front() = o.l;
    } else {
      throw std::invalid_argument("unknown --state fill: " + o.state_fill);
    }
  } else {
    throw std::invalid_argument("one of --mu or --l is required");
  }
  s.validate();
  return s;
}

int cmd_compute(const ComputeOptions& o, std::ostream& out, std::ostream& err) {
  const QuadratureConfig cfg = default_config();
  const StateSpec spec = build_state(o);
  const Method method = parse_method(o.method);

  std::vector<StateRecord> records;
  for (Space space : parse_spaces(o.space)) {
    records.push_back({spec, measure(spec, space, method, cfg)});
  }

  if (o.format == "json") {
    out << json_array(records) << "\n";
  } else if (o.format == "csv") {
    out << csv_header() << "\n";
    for (const StateRecord& r : records) out << csv_row(r, o.digits) << "\n";
  } else if (o.format == "text") {
    for (const StateRecord& r : records) out << text_block(r);
  } else {
    throw std::invalid_argument("unknown format: " + o.format);
  }

  for (const StateRecord& r : records) {
    if (!r.report.converged) {
      err << "warning: quadrature did not reach the requested tolerance\n";
      return 2;
    }
  }
  return 0;
}

int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  const QuadratureConfig cfg = default_config();
  const Method method = parse_method(o.method);
  const std::vector<Space> spaces = parse_spaces(o.space);
  if (o.d_min < 2 || o.d_max < o.d_min || o.n_min < 1 || o.n_max < o.n_min) {
    throw std::invalid_argument("sweep ranges must satisfy 2 <= D-min <= D-max "
                                "and 1 <= n-min <= n-max");
  }

  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) throw std::runtime_error("cannot open " + o.out_path);
  }
  std::ostream& os = o.out_path.empty() ? out : file;

  if (o.emit == "radial-density") {
    // Radial probability densities of the circular states on the sweep grid:
    // position r^{D-1} R^2(r) over r in (0, coord-max], momentum analogue.
    os << "D,Z,n,space,coordinate,density\n";
    for (int D = o.d_min; D <= o.d_max; ++D) {
      for (int n = o.n_min; n <= o.n_max; ++n) {
        const StateSpec s = StateSpec::circular(n, D, o.Z);
        const DerivedParams d = DerivedParams::from(s);
        for (Space space : spaces) {
          const double cmax =
              o.coord_max > 0.0
                  ? o.coord_max
                  : (space == Space::position ? d.lambda * (4.0 * d.eta + 20.0)
                                              : 12.0 * s.Z / d.eta);
          for (int i = 1; i <= o.samples; ++i) {
            const double x = cmax * i / o.samples;
            double density;
            if (space == Space::position) {
              const SignedLog R = radial_position_log(s, x);
              density = R.sign == 0 ? 0.0
                                    : std::exp(2.0 * R.log_abs +
                                               (D - 1.0) * std::log(x));
            } else {
              const SignedLog M = radial_momentum_log(s, x);
              density = M.sign == 0 ? 0.0
                                    : std::exp(2.0 * M.log_abs +
                                               (D - 1.0) * std::log(x));
            }
            char buf[128];
            std::snprintf(buf, sizeof(buf), "%d,%.*g,%d,%s,%.*g,%.*g", D,
                          o.digits, o.Z, n, space_name(space).c_str(),
                          o.digits, x, o.digits, density);
            os << buf << "\n";
          }
        }
      }
    }
    return 0;
  }
  if (o.emit != "measures") {
    throw std::invalid_argument("unknown --emit mode: " + o.emit);
  }

  struct Point {
    int D, n;
    Space space;
  };
  std::vector<Point> grid;
  for (int D = o.d_min; D <= o.d_max; ++D) {
    for (int n = o.n_min; n <= o.n_max; ++n) {
      for (Space space : spaces) grid.push_back({D, n, space});
    }
  }

  // Grid points run concurrently; rows are buffered and emitted in grid
  // order, so output is independent of scheduling.
  struct Row {
    std::string csv;
    std::string error;
  };
  const auto rows = grid_map<Row>(grid.size(), !o.serial, [&](std::size_t i) {
    const Point& pt = grid[i];
    const StateSpec s = StateSpec::circular(pt.n, pt.D, o.Z);
    try {
      return Row{csv_row({s, measure(s, pt.space, method, cfg)}, o.digits), ""};
    } catch (const std::exception& e) {
      // partial failure: the row stays schema-clean with converged=false,
      // the diagnostic goes to the error stream
      MeasureReport bad;
      bad.space = pt.space;
      bad.method = method == Method::automatic ? Method::closed_form : method;
      bad.converged = false;
      return Row{csv_row({s, bad}, o.digits), e.what()};
    }
  });

  os << csv_header() << "\n";
  for (const Row& row : rows) {
    os << row.csv << "\n";
    if (!row.error.empty()) err << "sweep: " << row.error << "\n";
  }
  if (!os) {
    err << "error: short write\n";
    return 1;
  }
  return 0;
}

int cmd_limits(const LimitsOptions& o, std::ostream& out, std::ostream&) {
  const bool dimensional = o.limit == "dimensional";
  if (!dimensional && o.limit != "rydberg") {
    throw std::invalid_argument("--limit must be dimensional or rydberg");
  }
  LimitQuantity quantity;
  if (o.quantity == "position") {
    quantity = LimitQuantity::position_complexity;
  } else if (o.quantity == "momentum") {
    quantity = LimitQuantity::momentum_complexity;
  } else if (o.quantity == "product") {
    quantity = LimitQuantity::product;
  } else {
    throw std::invalid_argument("--quantity must be position, momentum or "
                                "product");
  }

  std::vector<int> points = o.points.empty()
                                ? std::vector<int>{10, 20, 50, 100, 200}
                                : parse_int_list(o.points);

  const auto exact_log = [&](int point) {
    const int n = dimensional ? o.n : point;
    const int D = dimensional ? point : o.D;
    switch (quantity) {
      case LimitQuantity::position_complexity:
        return log_closed_complexity(n, D, Space::position);
      case LimitQuantity::momentum_complexity:
        return log_closed_complexity(n, D, Space::momentum);
      default:
        return log_closed_complexity(n, D, Space::position) +
               log_closed_complexity(n, D, Space::momentum);
    }
  };

  out << (dimensional ? "# dimensional limit, n = " + std::to_string(o.n)
                      : "# rydberg limit, D = " + std::to_string(o.D))
      << ", quantity = " << o.quantity << "\n";
  out << "point,log_exact,log_asymptote,log_ratio,linear_ratio\n";
  for (int point : points) {
    AsymptoticRequest req;
    req.limit = dimensional ? LimitKind::dimensional : LimitKind::rydberg;
    req.quantity = quantity;
    req.n = dimensional ? o.n : point;
    req.D = dimensional ? point : o.D;
    const AsymptoticValue asym = asymptotic(req);
    const double le = exact_log(point);
    const double diff = le - asym.log_value;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%d,%.12g,%.12g,%.12g,", point, le,
                  asym.log_value, asym.log_value / le);
    out << buf;
    if (std::abs(diff) < 700.0) {
      std::snprintf(buf, sizeof(buf), "%.12g", std::exp(diff));
      out << buf << "\n";
    } else {
      out << "overflow\n";
    }
  }
  return 0;
}

int cmd_validate(const ValidateOptions& o, std::ostream& out, std::ostream&) {
  const QuadratureConfig cfg = default_config();
  const auto results = run_validation(o.quick, cfg, !o.serial);
  bool all = true;
  for (const CheckResult& r : results) {
    out << (r.passed ? "[ok]   " : "[FAIL] ") << r.name << ": " << r.detail
        << "\n";
    all = all && r.passed;
  }
  out << (all ? "validation passed" : "validation FAILED") << "\n";
  return all ? 0 : 3;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Shape complexity of D-dimensional hydrogenic states in "
               "position and momentum space"};
  app.require_subcommand(1);

  ComputeOptions co;
  CLI::App* compute = app.add_subcommand(
      "compute", "Measures for a single state (one row per space)");
  compute->add_option("--D", co.D, "dimension (>= 2)")->required();
  compute->add_option("--Z", co.Z, "nuclear charge (default 1)");
  compute->add_option("--n", co.n, "principal quantum number")->required();
  auto* mu_opt = compute->add_option(
      "--mu", co.mu, "comma list of the D-1 hyperquantum numbers (mu_1=l..m)");
  auto* l_opt = compute->add_option(
      "--l", co.l, "orbital number shorthand; remaining mu filled per --state");
  mu_opt->excludes(l_opt);
  compute->add_option("--state", co.state_fill,
                      "fill used by --l: circular (all mu=l) or s (rest 0)")
      ->check(CLI::IsMember({"circular", "s"}));
  compute->add_option("--space", co.space, "position | momentum | both")
      ->check(CLI::IsMember({"position", "momentum", "both"}));
  compute->add_option("--method", co.method,
                      "auto | closed | functional | oracle")
      ->check(CLI::IsMember({"auto", "closed", "functional", "oracle"}));
  compute->add_option("--format", co.format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  compute->add_option("--digits", co.digits, "csv significant digits");

  SweepOptions so;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "CSV over a (D, n) grid of circular states");
  sweep->add_option("--D-min", so.d_min, "first dimension");
  sweep->add_option("--D-max", so.d_max, "last dimension");
  sweep->add_option("--n-min", so.n_min, "first principal number");
  sweep->add_option("--n-max", so.n_max, "last principal number");
  sweep->add_option("--Z", so.Z, "nuclear charge");
  sweep->add_option("--space", so.space, "position | momentum | both")
      ->check(CLI::IsMember({"position", "momentum", "both"}));
  sweep->add_option("--method", so.method,
                    "auto | closed | functional | oracle")
      ->check(CLI::IsMember({"auto", "closed", "functional", "oracle"}));
  sweep->add_option("--out", so.out_path, "output file (default stdout)");
  sweep->add_option("--digits", so.digits, "significant digits (default 17)");
  sweep->add_flag("--serial", so.serial, "disable OpenMP over grid points");
  sweep->add_option("--emit", so.emit, "measures | radial-density")
      ->check(CLI::IsMember({"measures", "radial-density"}));
  sweep->add_option("--samples", so.samples,
                    "points per curve for --emit radial-density");
  sweep->add_option("--coord-max", so.coord_max,
                    "upper radial/momentum coordinate (default auto)");

  LimitsOptions lo;
  CLI::App* limits = app.add_subcommand(
      "limits", "Exact vs asymptotic complexity at large D or n");
  limits->add_option("--limit", lo.limit, "dimensional | rydberg")->required();
  limits->add_option("--quantity", lo.quantity,
                     "position | momentum | product")
      ->required();
  limits->add_option("--n", lo.n, "fixed n for the dimensional limit");
  limits->add_option("--D", lo.D, "fixed D for the rydberg limit");
  limits->add_option("--points", lo.points,
                     "comma list of evaluation points (D's or n's)");

  ValidateOptions vo;
  CLI::App* validate = app.add_subcommand(
      "validate", "Run the oracle cross-check suite (exit 3 on failure)");
  validate->add_flag("--quick", vo.quick, "restrict to D <= 4, n <= 2");
  validate->add_flag("--serial", vo.serial, "disable OpenMP");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (compute->parsed()) return cmd_compute(co, out, err);
    if (sweep->parsed()) return cmd_sweep(so, out, err);
    if (limits->parsed()) return cmd_limits(lo, out, err);
    if (validate->parsed()) return cmd_validate(vo, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace hydroc
