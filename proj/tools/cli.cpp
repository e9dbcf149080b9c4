#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "sldtree/fixtures.hpp"
#include "sldtree/reader.hpp"
#include "sldtree/render.hpp"

namespace sldtree::cli {

std::string format_answers(const std::vector<Answer>& answers) {
  if (answers.empty()) return "false.\n";
  std::string out;
  for (std::size_t i = 0; i < answers.size(); ++i) {
    std::vector<std::string> lines;
    for (const auto& [var, term] : answers[i].bindings) {
      if (term.is_var() && term.as_var() == var) continue;
      lines.push_back(var.name + " = " + to_string(term));
    }
    if (lines.empty()) lines.push_back("true");
    for (std::size_t j = 0; j < lines.size(); ++j) {
      out += lines[j];
      if (j + 1 < lines.size()) out += ",\n";
    }
    out += i + 1 < answers.size() ? " ;\n" : ".\n";
  }
  return out;
}

namespace {

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::string source;
  std::string origin;
  if (cfg.fixture) {
    const Fixture* f = find_fixture(*cfg.fixture);
    if (!f) {
      err << "error: no bundled fixture named '" << *cfg.fixture << "'\n";
      return kError;
    }
    source = std::string(f->source);
    origin = std::string(f->file);
  } else {
    if (!read_file(cfg.db_path, source)) {
      err << "error: cannot read " << cfg.db_path << "\n";
      return kError;
    }
    origin = cfg.db_path;
  }
  if (cfg.query.empty()) {
    err << "error: empty query\n";
    return kError;
  }

  Program program;
  try {
    program = parse_program(source);
  } catch (const SyntaxError& e) {
    err << origin << ":" << e.position().line << ":" << e.position().column
        << ": syntax error: " << e.detail() << "\n";
    return kError;
  }
  GoalSeq query;
  try {
    query = parse_query(cfg.query);
  } catch (const SyntaxError& e) {
    err << "query:" << e.position().line << ":" << e.position().column
        << ": syntax error: " << e.detail() << "\n";
    return kError;
  }

  SearchTree tree;
  try {
    EngineOptions opts;
    opts.unknown = cfg.unknown;
    opts.rename = cfg.rename;
    tree = build_tree(program, query, cfg.limits, opts);
  } catch (const EngineError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const CyclicTermError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  const auto answers = solutions(tree);
  switch (cfg.format) {
    case Format::Ascii: {
      RenderOptions ropts;
      ropts.max_width = cfg.width;
      out << render_text(tree, ropts) << "\n";
      break;
    }
    case Format::Canonical:
      out << serialize(tree) << "\n";
      break;
    case Format::AnswersOnly:
      break;
  }
  out << format_answers(answers);

  if (tree.truncated) {
    err << "warning: search tree truncated (max depth " << cfg.limits.max_depth
        << ", max nodes " << cfg.limits.max_nodes << "); answers may be incomplete\n";
    return kTruncated;
  }
  return answers.empty() ? kNoAnswers : kFound;
}

}  // namespace sldtree::cli
