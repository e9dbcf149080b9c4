#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "cli.hpp"
#include "sldtree/fixtures.hpp"

namespace sldtree::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_fixture(std::string_view fixture, std::string query, Format format = Format::Ascii) {
  RunConfig cfg;
  cfg.fixture = std::string(fixture);
  cfg.query = std::move(query);
  cfg.format = format;
  std::ostringstream out, err;
  int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

TEST(Run, RomanceAnswersOnly) {
  Result r = run_fixture("romance", "jealous(X,Y)", Format::AnswersOnly);
  EXPECT_EQ(r.code, kFound);
  EXPECT_EQ(r.out,
            "X = vincent,\nY = vincent ;\n"
            "X = vincent,\nY = marsellus ;\n"
            "X = marsellus,\nY = vincent ;\n"
            "X = marsellus,\nY = marsellus.\n");
}

TEST(Run, AbsentAtomIsFalse) {
  Result r = run_fixture("animals", "animal(unicorn)", Format::AnswersOnly);
  EXPECT_EQ(r.code, kNoAnswers);
  EXPECT_EQ(r.out, "false.\n");
}

TEST(Run, YoungestTreeThenAnswer) {
  Result r = run_fixture("youngest", "youngest(Who)");
  EXPECT_EQ(r.code, kFound);
  EXPECT_NE(r.out.find("[youngest(Who)]"), std::string::npos);
  EXPECT_TRUE(r.out.ends_with("\nWho = ben.\n")) << r.out;
}

TEST(Run, CanonicalOutputIsFollowedByAnswers) {
  Result r = run_fixture("proof-search-k", "k(Y)", Format::Canonical);
  EXPECT_EQ(r.code, kFound);
  EXPECT_TRUE(r.out.starts_with(R"J({"format":"sldtree","version":1,"query":"k(Y)")J"));
  EXPECT_TRUE(r.out.ends_with("}\n\nY = b.\n")) << r.out;
}

TEST(Run, GroundSuccessPrintsTrue) {
  EXPECT_EQ(run_fixture("animals", "animal(bat)", Format::AnswersOnly).out, "true.\n");
}

TEST(Run, TruncationWarnsAndExitsThree) {
  RunConfig cfg;
  cfg.db_path = write_temp("sldtree_loop.pl", "p :- p.\n").string();
  cfg.query = "p";
  std::ostringstream out, err;
  EXPECT_EQ(run(cfg, out, err), kTruncated);
  EXPECT_NE(err.str().find("truncated"), std::string::npos) << err.str();
}

TEST(Run, ErrorsExitTwo) {
  RunConfig cfg;
  cfg.db_path = write_temp("sldtree_bad.pl", "a.\np :- .\n").string();
  cfg.query = "p";
  std::ostringstream out, err;
  EXPECT_EQ(run(cfg, out, err), kError);
  EXPECT_NE(err.str().find(":2:6: syntax error"), std::string::npos) << err.str();

  Result bad_query = run_fixture("romance", "loves(X");
  EXPECT_EQ(bad_query.code, kError);
  EXPECT_NE(bad_query.err.find("query:1:"), std::string::npos);

  RunConfig strict;
  strict.fixture = "magic";
  strict.query = "magic(X)";
  strict.unknown = UnknownPolicy::Error;
  std::ostringstream o2, e2;
  EXPECT_EQ(run(strict, o2, e2), kError);
  EXPECT_NE(e2.str().find("in goal wizard(X')"), std::string::npos) << e2.str();

  EXPECT_EQ(run_fixture("youngest", "X < 1").code, kError);
  EXPECT_EQ(run_fixture("nope", "p").code, kError);
  RunConfig missing;
  missing.db_path = "/nonexistent/kb.pl";
  missing.query = "p";
  EXPECT_EQ(run(missing, o2, e2), kError);
}

TEST(Run, EveryFixtureExitCode) {
  for (const auto& f : fixtures()) {
    Result r = run_fixture(f.name, std::string(f.query));
    EXPECT_EQ(r.code, kFound) << f.name;
    EXPECT_TRUE(r.err.empty()) << f.name << r.err;
  }
}

TEST(Run, ByteDeterminism) {
  for (const auto& f : fixtures()) {
    for (auto fmt : {Format::Ascii, Format::Canonical, Format::AnswersOnly}) {
      EXPECT_EQ(run_fixture(f.name, std::string(f.query), fmt).out,
                run_fixture(f.name, std::string(f.query), fmt).out);
    }
  }
}

TEST(Run, DatabaseFileMatchesBundledFixture) {
  const Fixture* f = find_fixture("cut-abc");
  RunConfig cfg;
  cfg.db_path = write_temp("sldtree_cut.pl", std::string(f->source)).string();
  cfg.query = "a(A)";
  std::ostringstream out, err;
  EXPECT_EQ(run(cfg, out, err), kFound);
  EXPECT_EQ(out.str(), run_fixture("cut-abc", "a(A)").out);
}

TEST(Fixtures, Listing) {
  std::string listing = fixture_listing();
  for (std::string_view line :
       {"romance: jealous(X,Y)\n", "cut-abc: a(A)\n",
        "add: add(succ(succ(succ(0))),succ(succ(0)),R)\n", "animals: animal(Animal)\n",
        "member: member(X,[a,b,c])\n", "youngest: youngest(Who)\n", "proof-search-k: k(Y)\n",
        "descend: descend(anne,donna)\n", "append: append([a,b,c],[1,2,3],X)\n",
        "magic: magic(Hermione)\n"}) {
    EXPECT_NE(listing.find(line), std::string::npos) << line;
  }
  EXPECT_EQ(fixtures().size(), 10u);
}

int shell(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Binary, ExitCodes) {
  const std::string bin = SLDTREE_CLI_PATH;
  auto loop = write_temp("sldtree_bin_loop.pl", "p :- p.\n");
  EXPECT_EQ(shell(bin + " --db " + loop.string() + " --query p >/dev/null 2>&1"), 3);
  EXPECT_EQ(shell(bin + " --fixture romance --format answers-only >/dev/null"), 0);
  EXPECT_EQ(shell(bin + " --fixture animals --query 'animal(unicorn)' >/dev/null"), 1);
  EXPECT_EQ(shell(bin + " --bogus >/dev/null 2>&1"), 2);
  EXPECT_EQ(shell(bin + " --list-fixtures | grep -q '^cut-abc: a(A)$'"), 0);
}

}  // namespace
}  // namespace sldtree::cli
