#ifndef MCDEFORM_CLI_REPORT_HPP
#define MCDEFORM_CLI_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace mcdeform::cli {

enum class Format { Json, Text };

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitEngine = 2;
inline constexpr int kExitParse = 3;

struct Report {
  std::string command;
  std::vector<std::string> args;
  std::string status = "ok";
  nlohmann::json payload = nlohmann::json::object();
  int exit_code = kExitOk;
  std::optional<double> wall_time;
};

/// Keys come out sorted (nlohmann's default object is an ordered map), so
/// identical reports render to identical bytes.
nlohmann::json to_json(const Report& r);
std::string render(const Report& r, Format f);

}  // namespace mcdeform::cli

#endif  // MCDEFORM_CLI_REPORT_HPP
