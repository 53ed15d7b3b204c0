#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "stonet/commands.hpp"

namespace {

std::string slurp(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite checks for enriched topological categories and their frames"};
  app.set_help_all_flag("--help-all");

  stonet::Flags flags;
  std::string command;
  std::string input;
  std::string format = "json";
  std::string target;

  std::string commands;
  for (const auto& c : stonet::command_names()) {
    commands += (commands.empty() ? "" : ", ") + c;
  }
  app.add_option("command", command, "One of: " + commands)->required();
  app.add_option("input", input, "Workspace file; '-' or omitted reads stdin (sweep needs none)");
  app.add_option("--max-objects", flags.max_objects, "Largest |X| enumerated by sweep")
      ->capture_default_str();
  app.add_option("--max-index", flags.max_index, "Largest |I| for bounded diagram checks")
      ->capture_default_str();
  app.add_option("--theory", flags.theory, "identity or finite-ultrafilter (sweep)")
      ->capture_default_str();
  app.add_option("--quantale", flags.quantale,
                 "Quantale for sweep: a workspace name or two, goedel-chain(n), lawvere-chain(n)")
      ->capture_default_str();
  app.add_flag("--oracle", flags.oracle, "Cross-check with slow brute-force oracles");
  app.add_option("--seed", flags.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--cap", flags.cap, "Candidate limit for backtracking searches")
      ->capture_default_str();
  app.add_option("--target", target, "Only report on this entity");
  app.add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (!target.empty()) {
    flags.target = target;
  }

  try {
    std::string text;
    std::string file = "<stdin>";
    if (!input.empty() && input != "-") {
      std::ifstream in(input);
      if (!in) {
        std::cerr << "cannot open " << input << "\n";
        return 2;
      }
      text = slurp(in);
      file = input;
    } else if (command != "sweep" || input == "-") {
      text = slurp(std::cin);
    }
    stonet::Workspace const ws = stonet::parse(text, file);
    stonet::Report const report = stonet::run(ws, command, flags);
    if (format == "text") {
      std::cout << report.to_text();
    } else {
      std::cout << report.to_json().dump(2) << "\n";
    }
    return report.exit_code();
  } catch (const stonet::ParseError& e) {
    std::cerr << (input.empty() ? "<stdin>" : input) << ":" << e.what() << "\n";
    return 2;
  } catch (const stonet::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const stonet::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
