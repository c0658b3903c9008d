#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "globact/cli.hpp"

namespace {
  bool read_file(std::string const& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      return false;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    out = buffer.str();
    return true;
  }

  std::size_t default_bound() {
    if (char const* env = std::getenv("GLOBACT_BOUND")) {
      try {
        return std::stoul(env);
      } catch (std::exception const&) {
        std::cerr << "globact: ignoring invalid GLOBACT_BOUND=" << env << "\n";
      }
    }
    return 12;
  }
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Globalizations of finite partial semigroup acts"};
  app.set_version_flag("--version", std::string(globact::VERSION));

  std::string command, input, globalization, out;
  std::size_t bound = default_bound();
  bool        quiet = false;

  std::string command_help = "one of:";
  for (auto const& name : globact::commands()) {
    command_help += " " + name;
  }
  app.add_option("command", command, command_help)->required();
  app.add_option("input", input, "act document (JSON)")->required()->check(CLI::ExistingFile);
  app.add_option("globalization", globalization, "globalization document, for verify")
      ->check(CLI::ExistingFile);
  app.add_option("--bound", bound, "largest |A (x) S| the census will search (env GLOBACT_BOUND)");
  app.add_option("--out", out, "write the report to this file instead of stdout");
  app.add_flag("--quiet", quiet, "print nothing; report only through the exit code and --out");
  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(globact::ExitCode::invalid_input);
  }

  std::string input_text;
  if (!read_file(input, input_text)) {
    std::cerr << "globact: cannot read " << input << "\n";
    return static_cast<int>(globact::ExitCode::invalid_input);
  }
  std::optional<std::string> globalization_text;
  if (!globalization.empty()) {
    globalization_text.emplace();
    if (!read_file(globalization, *globalization_text)) {
      std::cerr << "globact: cannot read " << globalization << "\n";
      return static_cast<int>(globact::ExitCode::invalid_input);
    }
  }

  globact::RunResult result;
  try {
    result = globact::run(command, input_text, globalization_text, bound);
  } catch (std::exception const& e) {
    std::cerr << "globact: internal error: " << e.what() << "\n";
    return 4;
  }

  std::string const text = result.report.dump(2) + "\n";
  if (!out.empty()) {
    std::ofstream file(out, std::ios::binary);
    if (!file) {
      std::cerr << "globact: cannot write " << out << "\n";
      return static_cast<int>(globact::ExitCode::invalid_input);
    }
    file << text;
  } else if (!quiet) {
    std::cout << text;
  }
  if (!quiet && !result.diagnostic.empty()) {
    std::cerr << "globact: " << result.diagnostic << "\n";
  }
  return static_cast<int>(result.code);
}
