#ifndef TRIGACCEL_TOOLS_CLI_HPP
#define TRIGACCEL_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "trigaccel/evaluation.hpp"

namespace trigaccel::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInvalidInput = 2,
  kBudgetExceeded = 3,
};

/// Decimal literal, or a rational multiple of pi written "Npi/M" ("3pi/4", "-pi/2", "2pi").
real_t parse_angle(const std::string& text);

nlohmann::json to_json(const AccelerationReport& report);
AccelerationReport report_from_json(const nlohmann::json& j);
std::string to_csv(const AccelerationReport& report);

/// Entry point shared by the executable and the tests. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trigaccel::cli

#endif  // TRIGACCEL_TOOLS_CLI_HPP
