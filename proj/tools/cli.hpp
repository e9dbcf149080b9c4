#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sldtree/engine.hpp"

namespace sldtree::cli {

enum class Format { Ascii, Canonical, AnswersOnly };

struct RunConfig {
  std::string db_path;
  std::optional<std::string> fixture;  // bundled knowledge base instead of db_path
  std::string query;
  Format format = Format::Ascii;
  Limits limits;
  UnknownPolicy unknown = UnknownPolicy::Fail;
  RenameStyle rename = RenameStyle::Prime;
  int width = 120;
};

enum ExitCode : int {
  kFound = 0,
  kNoAnswers = 1,
  kError = 2,
  kTruncated = 3,
};

/// Prolog-style answer list: one block per answer, "false." when empty.
std::string format_answers(const std::vector<Answer>& answers);

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace sldtree::cli
