#include "bihcp/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace bihcp {

namespace {

void render(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        out += Json(it.key()).dump();
        out += ": ";
        render(it.value(), indent + 1, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        render(v, indent + 1, out);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

double num(const Json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number()) {
    throw std::invalid_argument(std::string("report lacks numeric field '") + key + "'");
  }
  return obj.at(key).get<double>();
}

std::string threshold_verdict(double residual, double tol, const char* pass, const char* fail) {
  return residual <= tol ? pass : fail;
}

}  // namespace

Json tolerances_to_json(const ToleranceConfig& tol) {
  Json t = Json::object();
  t["unit_norm"] = tol.unit_norm;
  t["orthogonality"] = tol.orthogonality;
  t["residual"] = tol.residual;
  t["classification"] = tol.classification;
  t["minimality"] = tol.minimality;
  t["vertical_detection"] = tol.vertical_detection;
  t["rank_truncation"] = tol.rank_truncation;
  t["fd_step"] = tol.fd_step;
  return t;
}

ToleranceConfig tolerances_from_json(const Json& j) {
  ToleranceConfig t;
  t.unit_norm = num(j, "unit_norm");
  t.orthogonality = num(j, "orthogonality");
  t.residual = num(j, "residual");
  t.classification = num(j, "classification");
  t.minimality = num(j, "minimality");
  t.vertical_detection = num(j, "vertical_detection");
  t.rank_truncation = num(j, "rank_truncation");
  t.fd_step = num(j, "fd_step");
  return t;
}

Json make_report(const std::string& command, Json inputs, const ToleranceConfig& tol) {
  Json r = Json::object();
  r["schema"] = kReportSchema;
  r["command"] = command;
  r["inputs"] = std::move(inputs);
  r["residuals"] = Json::object();
  r["roots"] = Json::array();
  r["verdict"] = "";
  r["tolerances"] = tolerances_to_json(tol);
  r["warnings"] = Json::array();
  r["details"] = Json::object();
  return r;
}

void add_root(Json& report, const std::string& label, double value) {
  Json root = Json::object();
  root["label"] = label;
  root["value"] = value;
  report["roots"].push_back(std::move(root));
}

void add_warning(Json& report, const std::string& text) { report["warnings"].push_back(text); }

std::string render_json(const Json& j) {
  std::string out;
  render(j, 0, out);
  out += "\n";
  return out;
}

std::string staged_verdict(double tension, double bitension, double minus4, double tol,
                           double minimality_tol) {
  if (tension <= minimality_tol) return "harmonic";
  if (bitension <= tol) return "proper-biharmonic";
  if (minus4 <= tol) return "lambda-biharmonic(-4)";
  return "not-biharmonic";
}

std::string rederive_verdict(const Json& report) {
  const std::string command = report.at("command").get<std::string>();
  const Json& res = report.at("residuals");
  const ToleranceConfig tol = tolerances_from_json(report.at("tolerances"));
  const std::size_t roots = report.at("roots").size();

  if (command == "verify curve") {
    return staged_verdict(num(res, "tension_max"), num(res, "bitension_max"),
                          num(res, "minus4_max"), tol.residual, tol.minimality);
  }
  if (command == "verify torus") {
    if (res.contains("zhang_residual")) {
      if (num(res, "minimality_defect") <= tol.minimality) return "excluded-minimal";
      return threshold_verdict(num(res, "zhang_residual"), tol.residual, "lambda-biharmonic(-4)",
                               "not-biharmonic");
    }
    return staged_verdict(num(res, "tension"), num(res, "bitension"), num(res, "minus4"),
                          tol.residual, tol.minimality);
  }
  if (command == "verify hypersurface") {
    if (num(res, "mean_curvature_sq") <= tol.minimality) return "harmonic";
    return threshold_verdict(num(res, "second_ff_defect"), tol.residual, "proper-biharmonic",
                             "not-biharmonic");
  }
  if (command == "solve clifford") {
    if (roots == 0) return "no-solution";
    return threshold_verdict(num(res, "max_condition_residual"), tol.residual,
                             "lambda-biharmonic(-4)", "not-biharmonic");
  }
  if (command == "solve zhang") {
    if (roots == 0) return "no-solution";
    return threshold_verdict(num(res, "max_zhang_residual"), tol.residual,
                             "lambda-biharmonic(-4)", "not-biharmonic");
  }
  if (command == "solve sphere-bundle") {
    if (res.contains("tension")) {
      return staged_verdict(num(res, "tension"), num(res, "bitension"), num(res, "minus4"),
                            tol.residual, tol.minimality);
    }
    if (roots == 0) return "no-solution";
    return threshold_verdict(num(res, "max_minus4_coefficient"), tol.residual,
                             "lambda-biharmonic(-4)", "not-biharmonic");
  }
  if (command == "solve helix") {
    if (num(res, "solved_count") == 0.0) return "no-solution";
    return threshold_verdict(num(res, "max_cpn_bitension"), tol.residual, "proper-biharmonic",
                             "not-biharmonic");
  }
  if (command == "classify helix") {
    const Json& dist = report.at("details").at("distances");
    std::string best_label = "unclassified";
    double best = std::numeric_limits<double>::infinity();
    for (auto it = dist.begin(); it != dist.end(); ++it) {
      const double d = it.value().get<double>();
      if (d < best) {
        best = d;
        best_label = it.key();
      }
    }
    if (std::abs(best - num(res, "best_distance")) > 0.0) {
      throw std::invalid_argument("best_distance disagrees with the per-row distances");
    }
    return best <= tol.classification ? best_label : "unclassified";
  }
  throw std::invalid_argument("no verdict rule for command '" + command + "'");
}

bool report_consistent(const Json& report) {
  if (rederive_verdict(report) != report.at("verdict").get<std::string>()) return false;
  if (report.at("command") == "verify curve") {
    const Json& down = report.at("details").at("downstairs");
    if (down.contains("verdict")) {
      const ToleranceConfig tol = tolerances_from_json(report.at("tolerances"));
      const std::string expected =
          staged_verdict(num(down, "tension_max"), num(down, "bitension_max"),
                         std::numeric_limits<double>::infinity(), tol.residual, tol.minimality);
      if (expected != down.at("verdict").get<std::string>()) return false;
    }
  }
  return true;
}

}  // namespace bihcp
