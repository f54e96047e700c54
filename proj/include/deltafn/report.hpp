#pragma once

// Identity residuals and verification reports (JSON serializable).

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace deltafn {

enum class ResidualKind {
  kRelative,    // (lhs - rhs) / max(|lhs|, |rhs|)
  kAbsolute,    // lhs - rhs
  kInequality,  // amount by which the stated inequality is violated (>= 0)
};

/// Named parameters of the evaluation point, in insertion order. String
/// values (route names) are kept separately from numeric ones.
struct PointRecord {
  std::vector<std::pair<std::string, double>> numbers;
  std::vector<std::pair<std::string, std::string>> labels;

  PointRecord& set(std::string key, double value) {
    numbers.emplace_back(std::move(key), value);
    return *this;
  }
  PointRecord& label(std::string key, std::string value) {
    labels.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  std::string to_string() const;
};

struct IdentityResidual {
  std::string identity;
  PointRecord point;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  ResidualKind kind = ResidualKind::kRelative;
};

/// Build a residual for an equality; pass iff |residual| <= tolerance.
IdentityResidual make_residual(std::string identity, PointRecord point, double lhs, double rhs,
                               double tolerance, ResidualKind kind);

/// Build a residual for an inequality with a precomputed violation >= 0.
IdentityResidual make_inequality(std::string identity, PointRecord point, double lhs, double rhs,
                                 double violation, double tolerance = 0.0);

struct VerificationReport {
  std::string suite;
  std::vector<IdentityResidual> checks;
  long n_pass = 0;
  long n_fail = 0;
  long wall_time_ms = 0;

  void add(IdentityResidual check);
  void append(const VerificationReport& other);
  bool all_pass() const { return n_fail == 0; }
};

std::string_view kind_name(ResidualKind kind);

/// Flat JSON: point parameters become keys of each check object.
nlohmann::json to_json(const IdentityResidual& check);
nlohmann::json to_json(const VerificationReport& report);

/// Inverse of to_json (used by tests and by consumers of report files).
VerificationReport report_from_json(const nlohmann::json& j);

/// Deterministic one-line-per-check text summary.
std::string format_summary(const VerificationReport& report);

/// Shortest decimal rendering that round-trips; 17 significant digits
/// for the fixed-format CLI output.
std::string format_real(double x);

}  // namespace deltafn
