#include "deltafn/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "deltafn/errors.hpp"

namespace deltafn {

std::string PointRecord::to_string() const {
  std::string out;
  for (const auto& [key, value] : labels) {
    if (!out.empty()) out += ' ';
    out += key + '=' + value;
  }
  for (const auto& [key, value] : numbers) {
    if (!out.empty()) out += ' ';
    out += key + '=' + format_real(value);
  }
  return out;
}

IdentityResidual make_residual(std::string identity, PointRecord point, double lhs, double rhs,
                               double tolerance, ResidualKind kind) {
  IdentityResidual r;
  r.identity = std::move(identity);
  r.point = std::move(point);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tolerance;
  r.kind = kind;
  const double diff = lhs - rhs;
  if (kind == ResidualKind::kRelative) {
    const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
    r.residual = scale == 0.0 ? 0.0 : diff / scale;
  } else {
    r.residual = diff;
  }
  r.pass = std::isfinite(r.residual) && std::fabs(r.residual) <= tolerance;
  return r;
}

IdentityResidual make_inequality(std::string identity, PointRecord point, double lhs, double rhs,
                                 double violation, double tolerance) {
  IdentityResidual r;
  r.identity = std::move(identity);
  r.point = std::move(point);
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = violation;
  r.tolerance = tolerance;
  r.kind = ResidualKind::kInequality;
  r.pass = std::isfinite(violation) && std::fabs(violation) <= tolerance;
  return r;
}

void VerificationReport::add(IdentityResidual check) {
  (check.pass ? n_pass : n_fail) += 1;
  checks.push_back(std::move(check));
}

void VerificationReport::append(const VerificationReport& other) {
  for (const auto& c : other.checks) add(c);
}

std::string_view kind_name(ResidualKind kind) {
  switch (kind) {
    case ResidualKind::kAbsolute:
      return "absolute";
    case ResidualKind::kInequality:
      return "inequality";
    case ResidualKind::kRelative:
      break;
  }
  return "relative";
}

namespace {

ResidualKind kind_from_name(const std::string& s) {
  if (s == "relative") return ResidualKind::kRelative;
  if (s == "absolute") return ResidualKind::kAbsolute;
  if (s == "inequality") return ResidualKind::kInequality;
  throw DomainError("unknown residual kind: " + s);
}

const char* const kFixedKeys[] = {"identity", "kind", "lhs", "rhs", "residual", "tolerance", "pass"};

bool is_fixed_key(const std::string& key) {
  for (const char* k : kFixedKeys) {
    if (key == k) return true;
  }
  return false;
}

// JSON has no NaN/inf; keep them visible as strings.
nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

double number_from(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  const std::string s = j.get<std::string>();
  if (s == "nan") return std::nan("");
  return s == "inf" ? HUGE_VAL : -HUGE_VAL;
}

}  // namespace

nlohmann::json to_json(const IdentityResidual& check) {
  nlohmann::json j = nlohmann::json::object();
  j["identity"] = check.identity;
  j["kind"] = std::string(kind_name(check.kind));
  for (const auto& [key, value] : check.point.labels) j[key] = value;
  for (const auto& [key, value] : check.point.numbers) j[key] = number(value);
  j["lhs"] = number(check.lhs);
  j["rhs"] = number(check.rhs);
  j["residual"] = number(check.residual);
  j["tolerance"] = number(check.tolerance);
  j["pass"] = check.pass;
  return j;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  return nlohmann::json{{"suite", report.suite},
                        {"checks", checks},
                        {"n_pass", report.n_pass},
                        {"n_fail", report.n_fail},
                        {"wall_time_ms", report.wall_time_ms}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport report;
  report.suite = j.at("suite").get<std::string>();
  report.wall_time_ms = j.at("wall_time_ms").get<long>();
  for (const auto& c : j.at("checks")) {
    IdentityResidual r;
    r.identity = c.at("identity").get<std::string>();
    r.kind = kind_from_name(c.at("kind").get<std::string>());
    r.lhs = number_from(c.at("lhs"));
    r.rhs = number_from(c.at("rhs"));
    r.residual = number_from(c.at("residual"));
    r.tolerance = number_from(c.at("tolerance"));
    r.pass = c.at("pass").get<bool>();
    for (const auto& [key, value] : c.items()) {
      if (is_fixed_key(key)) continue;
      if (value.is_string() && value != "nan" && value != "inf" && value != "-inf") {
        r.point.label(key, value.get<std::string>());
      } else {
        r.point.set(key, number_from(value));
      }
    }
    report.add(std::move(r));
  }
  if (report.n_pass != j.at("n_pass").get<long>() || report.n_fail != j.at("n_fail").get<long>()) {
    throw DomainError("report_from_json: pass/fail counts do not match checks");
  }
  return report;
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_summary(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS" : "FAIL") << '\t' << c.identity << '\t' << c.point.to_string() << '\t'
        << format_real(c.residual) << '\t' << format_real(c.tolerance) << '\n';
  }
  out << "suite " << report.suite << ": " << report.n_pass << " passed, " << report.n_fail << " failed\n";
  return out.str();
}

}  // namespace deltafn
