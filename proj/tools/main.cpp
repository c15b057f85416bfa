#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "commands.hpp"

int main(int argc, char** argv) {
  using quiver::cli::Format;
  quiver::cli::RunConfig config;
  std::string format = "text";
  std::string b0_file;

  CLI::App app{"Quiver mutation and associated permutations for straight A_n"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "Number of vertices of A_n")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--out", config.output_path, "Write output to this file instead of stdout");
    sub->add_option("--workers", config.workers, "Worker threads for exhaustive sweeps")->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed, "Seed for randomized walks");
    sub->add_option("--max-depth", config.max_depth, "Loop length bound (verify, enumerate) or walk length")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--b0-file", b0_file, "JSON skew-symmetric initial exchange matrix; disables formula commands");
  };

  auto* mutate = app.add_subcommand("mutate", "Apply a mutation sequence to the framed quiver");
  add_common(mutate);
  mutate->add_option("--sequence", config.sequence, "Vertices, e.g. \"2 1 2\"");

  auto* verify = app.add_subcommand("verify", "Check the formula against observed permutations");
  add_common(verify);
  verify->add_flag("--corrupt-formula", config.corrupt_formula)->group("");

  add_common(app.add_subcommand("census", "Maximal green sequence statistics"));

  auto* enumerate = app.add_subcommand("enumerate", "Maximal green sequences (or loops) as JSON lines");
  add_common(enumerate);
  enumerate->add_flag("--loops", config.loops, "Enumerate loop sequences at the framed quiver instead");

  add_common(app.add_subcommand("export-dot", "Exchange graph in DOT"));

  auto* check = app.add_subcommand("check-standard", "Standardness of an integer matrix");
  add_common(check);
  check->add_option("--matrix", config.matrix, "JSON matrix, e.g. [[1,1],[0,-1]]")->required();

  add_common(app.add_subcommand("walk", "Random mutation walk tracking the associated permutation"));

  CLI11_PARSE(app, argc, argv);

  config.command = app.get_subcommands().front()->get_name();
  static const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"json", Format::Json}, {"dot", Format::Dot}};
  config.format = formats.at(format);
  if (!b0_file.empty()) config.b0_file = b0_file;

  if (config.output_path.empty()) return quiver::cli::run_command(config, std::cout, std::cerr);
  std::ofstream file(config.output_path);
  if (!file) {
    std::cerr << "error: cannot write " << config.output_path << '\n';
    return 2;
  }
  const int code = quiver::cli::run_command(config, file, std::cerr);
  file.close();
  if (!file) {
    std::cerr << "error: failed writing " << config.output_path << '\n';
    return 2;
  }
  return code;
}
