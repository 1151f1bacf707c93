// This file is part of hydroc, released under the MIT License.

#include "hydroc/report_io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace hydroc {

namespace {

std::string fmt(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::string mu_list(const StateSpec& spec, char sep) {
  std::string out;
  for (std::size_t i = 0; i < spec.mu.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(spec.mu[i]);
  }
  return out;
}

}  // namespace

std::string space_name(Space space) {
  return space == Space::position ? "position" : "momentum";
}

std::string method_name(Method method) {
  switch (method) {
    case Method::automatic: return "auto";
    case Method::closed_form: return "closed_form";
    case Method::functional: return "functional";
    case Method::direct_oracle: return "direct_oracle";
  }
  return "?";
}

std::string csv_header() {
  return "D,Z,n,mu,space,method,disequilibrium,entropy_radial,entropy_angular,"
         "entropy_total,complexity,error_estimate,converged";
}

std::string csv_row(const StateRecord& rec, int digits) {
  std::ostringstream os;
  os << rec.spec.D << ',' << fmt(rec.spec.Z, digits) << ',' << rec.spec.n
     << ',' << mu_list(rec.spec, ';') << ',' << space_name(rec.report.space)
     << ',' << method_name(rec.report.method) << ','
     << fmt(rec.report.disequilibrium, digits) << ','
     << fmt(rec.report.entropy_radial, digits) << ','
     << fmt(rec.report.entropy_angular, digits) << ','
     << fmt(rec.report.entropy_total, digits) << ','
     << fmt(rec.report.complexity, digits) << ','
     << fmt(rec.report.error_estimate, digits) << ','
     << (rec.report.converged ? "true" : "false");
  return os.str();
}

std::vector<std::string> formula_refs(const StateRecord& rec) {
  const bool pos = rec.report.space == Space::position;
  switch (rec.report.method) {
    case Method::closed_form:
      if (is_ground(rec.spec)) {
        return pos ? std::vector<std::string>{"C-def", "GS-D-pos", "GS-S-pos",
                                              "GS-SY"}
                   : std::vector<std::string>{"C-def", "GS-D-mom", "GS-S-mom",
                                              "GS-SY"};
      }
      return pos ? std::vector<std::string>{"C-def", "CS-D-pos", "CS-S-pos",
                                            "CS-SY"}
                 : std::vector<std::string>{"C-def", "CS-D-mom", "CS-S-mom",
                                            "CS-A", "CS-SY"};
    case Method::functional:
      return pos ? std::vector<std::string>{"C-def", "D-split-pos", "S-split",
                                            "SR-E1", "SY-E2"}
                 : std::vector<std::string>{"C-def", "D-split-mom", "S-split",
                                            "SM-E2", "SY-E2"};
    case Method::direct_oracle:
      return {"C-def", "direct-density-quadrature"};
    default:
      return {"C-def"};
  }
}

std::string json_object(const StateRecord& rec) {
  nlohmann::json j;
  j["D"] = rec.spec.D;
  j["Z"] = rec.spec.Z;
  j["n"] = rec.spec.n;
  j["mu"] = rec.spec.mu;
  j["space"] = space_name(rec.report.space);
  j["method"] = method_name(rec.report.method);
  j["disequilibrium"] = rec.report.disequilibrium;
  j["entropy_radial"] = rec.report.entropy_radial;
  j["entropy_angular"] = rec.report.entropy_angular;
  j["entropy_total"] = rec.report.entropy_total;
  j["complexity"] = rec.report.complexity;
  j["log_disequilibrium"] = rec.report.log_disequilibrium;
  j["log_complexity"] = rec.report.log_complexity;
  j["error_estimate"] = rec.report.error_estimate;
  j["converged"] = rec.report.converged;
  j["paper_refs"] = formula_refs(rec);
  return j.dump(2);
}

std::string json_array(const std::vector<StateRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const StateRecord& rec : records) {
    arr.push_back(nlohmann::json::parse(json_object(rec)));
  }
  return arr.dump(2);
}

std::string text_block(const StateRecord& rec) {
  std::ostringstream os;
  os << space_name(rec.report.space) << " space (method "
     << method_name(rec.report.method) << ")\n"
     << "  state            D=" << rec.spec.D << " Z=" << fmt(rec.spec.Z, 12)
     << " n=" << rec.spec.n << " mu=(" << mu_list(rec.spec, ',') << ")\n"
     << "  disequilibrium   " << fmt(rec.report.disequilibrium, 12) << "\n"
     << "  entropy          " << fmt(rec.report.entropy_total, 12)
     << "  (radial " << fmt(rec.report.entropy_radial, 12) << ", angular "
     << fmt(rec.report.entropy_angular, 12) << ")\n"
     << "  complexity       " << fmt(rec.report.complexity, 12) << "\n"
     << "  error estimate   " << fmt(rec.report.error_estimate, 3) << "\n"
     << "  converged        " << (rec.report.converged ? "true" : "false")
     << "\n";
  return os.str();
}

}  // namespace hydroc
