// test_cli.cpp - flag handling, exit codes, output framing
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "focuslog/cli.hpp"
#include "focuslog/sexpr.hpp"

using focuslog::cli::run;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "focuslog");
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({""}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--frobnicate", "a man ate it"}).code == 2);
  CHECK(cli({"--batch", "a man ate it"}).code == 2);
  CHECK(cli({"--format", "yaml", "a man ate it"}).code == 2);
  CHECK(cli({"*a* man ate *it*"}).code == 2);
  CHECK(cli({"--lexicon", "/nonexistent.lex", "a man ate it"}).code == 2);
}

TEST_CASE("single sentence output") {
  auto r = cli({"the woman stole a bike"});
  CHECK(r.code == 0);
  CHECK(r.out.find("analysis 1:") != std::string::npos);
  CHECK(r.out.find("simple") != std::string::npos);
  CHECK(r.err.empty());

  SUBCASE("sexpr output parses back") {
    auto s = cli({"--format", "sexpr", "the woman stole a bike"});
    REQUIRE(s.code == 0);
    auto pos = s.out.find(": ");
    REQUIRE(pos != std::string::npos);
    std::string sexpr = s.out.substr(pos + 2);
    CHECK_NOTHROW(focuslog::logic::parse_term(sexpr.substr(0, sexpr.find('\n'))));
  }
  SUBCASE("latex output") {
    auto s = cli({"--format", "latex", "the woman stole a bike"});
    REQUIRE(s.code == 0);
    CHECK(s.out.find("\\iota") != std::string::npos);
  }
  SUBCASE("focus residue line") {
    auto s = cli({"A *man* ate it"});
    REQUIRE(s.code == 0);
    CHECK(s.out.find("focus 1: man ~ ") != std::string::npos);
  }
  SUBCASE("entailments") {
    auto s = cli({"--entail", "I only borrowed a *car*"});
    REQUIRE(s.code == 0);
    CHECK(s.out.find("entail 1.positive:") != std::string::npos);
    CHECK(s.out.find("entail 1.exclusive:") != std::string::npos);
  }
  SUBCASE("store trace") {
    auto s = cli({"--show-store", "the woman stole a bike"});
    REQUIRE(s.code == 0);
    CHECK(s.out.find("store 1: existential") != std::string::npos);
    CHECK(s.out.find("store 1: iota") != std::string::npos);
  }
  SUBCASE("chart trace") {
    auto s = cli({"--show-chart", "a man ate it"});
    REQUIRE(s.code == 0);
    CHECK(s.out.find("chart: [0,1) Det") != std::string::npos);
    CHECK(s.out.find("chart: [0,4) S") != std::string::npos);
  }
  SUBCASE("--first keeps one analysis") {
    auto all = cli({"a man stole a bike"});
    auto first = cli({"--first", "a man stole a bike"});
    CHECK(all.out.find("analysis 2:") != std::string::npos);
    CHECK(first.out.find("analysis 2:") == std::string::npos);
  }
}

TEST_CASE("parse failures exit with 1") {
  auto r = cli({"woman the"});
  CHECK(r.code == 1);
  CHECK(r.err.find("no parse") != std::string::npos);

  auto u = cli({"the gnu ate it"});
  CHECK(u.code == 1);
  CHECK(u.err.find("gnu") != std::string::npos);
}

TEST_CASE("batch mode") {
  std::string input = "a man ate it\nthe woman stole a bike\n";
  auto r = cli({"--batch"}, input);
  CHECK(r.code == 0);
  CHECK(r.out.find("## 1: a man ate it") != std::string::npos);
  CHECK(r.out.find("## 2: the woman stole a bike") != std::string::npos);

  SUBCASE("a failing line marks the run but the rest is processed") {
    auto f = cli({"--batch"}, "woman the\na man ate it\n");
    CHECK(f.code == 1);
    CHECK(f.out.find("## 2: a man ate it") != std::string::npos);
    CHECK(f.out.find("analysis 1:") != std::string::npos);
  }
  SUBCASE("blank lines are skipped") {
    auto b = cli({"--batch"}, "\na man ate it\n\n");
    CHECK(b.code == 0);
    CHECK(b.out.find("## 1: a man ate it") != std::string::npos);
  }
  SUBCASE("byte-identical across runs") {
    std::string corpus = "a man ate it\nI only borrowed a *car*\nI didn't *steal* it\n";
    auto a = cli({"--batch", "--entail", "--show-store"}, corpus);
    auto b = cli({"--batch", "--entail", "--show-store"}, corpus);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("custom lexicon") {
  // a one-noun lexicon: everything else becomes unknown
  std::string path = "cli_test_lexicon.lex";
  {
    std::ofstream f(path);
    f << "dog | N | num=sg | no | (lam Z (pred dog (var Z))) | -\n";
  }
  auto r = cli({"--lexicon", path, "a man ate it"});
  CHECK(r.code == 1);
  CHECK(r.err.find("unknown word") != std::string::npos);
}
