#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "globact/io.hpp"

namespace globact {

  inline constexpr char const* VERSION = GLOBACT_VERSION;

  enum class ExitCode : int {
    success            = 0,
    invalid_input      = 1,
    precondition       = 2,
    resource_exceeded  = 3,
  };

  struct RunResult {
    ExitCode    code;
    json        report;
    std::string diagnostic;  // empty on success
  };

  std::vector<std::string> const& commands();

  // Runs one command on the text of an input document. `verify` also needs
  // the text of a globalization document. `bound` caps |A (x) S| for census.
  // Never throws for bad input: failures are reported through the exit code
  // and an "error" member of the report.
  RunResult run(std::string const&                command,
                std::string const&                input,
                std::optional<std::string> const& globalization = std::nullopt,
                std::size_t                       bound         = 12);

}  // namespace globact
