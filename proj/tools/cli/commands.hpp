#ifndef MCDEFORM_CLI_COMMANDS_HPP
#define MCDEFORM_CLI_COMMANDS_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "report.hpp"

namespace mcdeform::cli {

// Every command catches its own failures and encodes them in the report:
// invalid inputs exit 1, engine errors 2, unreadable documents 3.

Report cmd_validate(const std::string& path);

struct McOptions {
  enum class Mode { Check, SolveSquareZero, Lift } mode = Mode::Check;
  std::string z_path;                 // --check
  std::size_t order = 0;              // --lift-order
  std::optional<std::string> start;   // --lift-order; default: tangent basis
};
Report cmd_mc(const std::string& g_path, const std::string& r_path, const McOptions& options);

Report cmd_gauge(const std::string& g_path, const std::string& r_path, const std::string& z_path,
                 const std::string& z_prime_path);

struct NerveOptions {
  enum class Mode { Path, Member } mode = Mode::Path;
  std::string z_path;
  std::string gamma_path;
  std::string simplex_path;
};
Report cmd_nerve(const std::string& g_path, const std::string& r_path, const NerveOptions& options);

struct DeformOptions {
  std::optional<std::string> a_path;
  std::optional<int> counterexample;
};
Report cmd_deform(const DeformOptions& options);

}  // namespace mcdeform::cli

#endif  // MCDEFORM_CLI_COMMANDS_HPP
