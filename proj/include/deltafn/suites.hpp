#pragma once

// Named verification suites. Each runs a fixed grid of identity residuals and
// returns a report in deterministic order.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deltafn/quad.hpp"
#include "deltafn/report.hpp"

namespace deltafn {

/// Suite names accepted by run_suite, in canonical order.
const std::vector<std::string>& suite_names();

/// Runs one suite. `tol_override`, when set, replaces every per-check
/// tolerance. Throws DomainError for an unknown name.
VerificationReport run_suite(std::string_view name, std::optional<double> tol_override = std::nullopt,
                             const QuadConfig& cfg = {});

/// The x grid shared by the route and recurrence suites.
const std::vector<double>& route_grid();

/// count points over [start, stop]; log spacing requires start > 0.
std::vector<double> make_grid(double start, double stop, int count, bool log_spacing);

/// Mixed grid on (-0.9, 100]: half the points linear on [-0.9, 0.9], the rest
/// logarithmic on [1, 100].
std::vector<double> mixed_grid(int count);

}  // namespace deltafn
