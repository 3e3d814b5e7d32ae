#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "homcoh/brackets.hpp"
#include "homcoh/cli/document.hpp"

namespace homcoh::cli {

enum ExitCode : int { kExitPass = 0, kExitMathFailure = 1, kExitInputError = 2 };

struct Options {
  std::size_t arity_cap = 4;
  bool representatives = false;
};

enum class DeformAction { check, obstruction, extend, poisson };

std::optional<DeformAction> parse_deform_action(std::string_view s);

struct CommandResult {
  int exit_code = kExitPass;
  json report;
  // Emitted document for deform extend and deform poisson.
  std::optional<json> document;
};

CommandResult cmd_verify(const AlgebraDocument& input);
CommandResult cmd_cohomology(const AlgebraDocument& input, std::size_t n, const Options& opts = {});
CommandResult cmd_bracket(const AlgebraDocument& input, const CochainDocument& phi, const CochainDocument& psi,
                          BracketKind which, const Options& opts = {});
CommandResult cmd_deform(const DeformationDocument& input, DeformAction action, const Options& opts = {});

// One "key: value" line per leaf; nested keys are joined with '.', and
// lists of objects are indexed as key[i].
std::string render_text(const json& report);

// Full command-line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace homcoh::cli
