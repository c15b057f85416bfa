#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace quiver::cli {

enum class Format { Text, Json, Dot };

struct RunConfig {
  int n = 2;
  std::string command;
  int max_depth = 0;
  std::uint64_t seed = 0;
  std::string output_path;
  Format format = Format::Text;
  int workers = 1;
  std::optional<std::string> b0_file;
  std::string sequence;
  std::string matrix;
  bool loops = false;
  // Negative control: evaluates the formula with the transposition product
  // reversed. Never set outside tests.
  bool corrupt_formula = false;
};

/// Exit codes: 0 success, 1 a requested verification failed, 2 usage or
/// input error.
int cmd_mutate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_census(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_enumerate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_export_dot(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_check_standard(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_walk(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.command.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace quiver::cli
