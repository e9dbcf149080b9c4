// sldtree: draws the complete search tree of a query and lists its answers.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli.hpp"
#include "sldtree/fixtures.hpp"

int main(int argc, char** argv) {
  using namespace sldtree;
  cli::RunConfig cfg;
  bool list = false;
  std::string fixture;

  CLI::App app{"Draw exhaustive SLD search trees for a Prolog subset"};
  app.add_option("--db", cfg.db_path, "Knowledge base file");
  app.add_option("--fixture", fixture, "Use a bundled knowledge base (see --list-fixtures)");
  app.add_option("--query", cfg.query, "Query, e.g. 'jealous(X,Y)'");
  app.add_option("--format", cfg.format, "ascii | canonical | answers-only")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, cli::Format>{{"ascii", cli::Format::Ascii},
                                             {"canonical", cli::Format::Canonical},
                                             {"answers-only", cli::Format::AnswersOnly}},
          CLI::ignore_case).description(""))
      ->option_text("FORMAT (default ascii)");
  app.add_option("--max-depth", cfg.limits.max_depth, "Depth limit (default 500)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-nodes", cfg.limits.max_nodes, "Node limit (default 10000)")
      ->check(CLI::PositiveNumber);
  app.add_option("--unknown", cfg.unknown, "Calls to undefined predicates: fail | error")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, UnknownPolicy>{{"fail", UnknownPolicy::Fail},
                                               {"error", UnknownPolicy::Error}},
          CLI::ignore_case).description(""))
      ->option_text("POLICY (default fail)");
  app.add_option("--rename", cfg.rename, "Fresh variable names: prime | numeric")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, RenameStyle>{{"prime", RenameStyle::Prime},
                                             {"numeric", RenameStyle::Numeric}},
          CLI::ignore_case).description(""))
      ->option_text("STYLE (default prime)");
  app.add_option("--width", cfg.width, "Maximum drawing width before falling back to an outline")
      ->check(CLI::Range(40, 100000));
  app.add_flag("--list-fixtures", list, "List bundled knowledge bases and their queries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kError;
  }

  if (list) {
    std::cout << fixture_listing();
    return 0;
  }
  if (!fixture.empty()) {
    cfg.fixture = fixture;
    if (cfg.query.empty()) {
      if (const Fixture* f = find_fixture(fixture)) cfg.query = std::string(f->query);
    }
  } else if (cfg.db_path.empty()) {
    std::cerr << "error: --db or --fixture is required\n";
    return cli::kError;
  }
  if (cfg.query.empty()) {
    std::cerr << "error: --query is required\n";
    return cli::kError;
  }
  return cli::run(cfg, std::cout, std::cerr);
}
