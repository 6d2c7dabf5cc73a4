#pragma once

// The goodline command line, callable in process.

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace goodline::cli {

inline constexpr const char* kVersion = "0.1.0";

struct Outcome {
  int exit_code = 0;
  nlohmann::json report;  // RunReport or error object; null after --help
};

// args excludes the program name. Writes the report (or help text) to out.
Outcome run_command(const std::vector<std::string>& args, std::ostream& out);

}  // namespace goodline::cli
