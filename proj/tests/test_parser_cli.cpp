#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fungraph/algebra.hpp"
#include "fungraph/canonical.hpp"
#include "fungraph/cli.hpp"
#include "fungraph/dot.hpp"
#include "fungraph/enumerate.hpp"
#include "fungraph/parser.hpp"

using namespace fungraph;

namespace {

struct CliOutcome {
  int code;
  std::string out;
  std::string err;
};

CliOutcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expression grammar") {
  CHECK(is_isomorphic(eval("C2*C2"), scalar(2, cycle(2))));
  CHECK(is_isomorphic(eval("2C1"), eval("2*C1")));
  CHECK(is_isomorphic(eval("C4*C6"), eval("2C12")));
  CHECK(is_isomorphic(eval("[1,0]"), cycle(2)));
  CHECK(is_isomorphic(eval("(C2+C3)*C6"), product(sum(cycle(2), cycle(3)), cycle(6))));
  CHECK(is_isomorphic(eval("C2 C3"), product(cycle(2), cycle(3))));
  CHECK(is_isomorphic(eval("2[0,0]"), scalar(2, eval("[0,0]"))));
  CHECK(eval("0").empty());
  CHECK(eval("[]").empty());
  // Multiplication binds tighter than addition.
  CHECK(is_isomorphic(eval("C1+C2*C2"), sum(cycle(1), scalar(2, cycle(2)))));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse("C2+*C2"), ParseError);
  CHECK_THROWS_AS(parse("C0"), ParseError);
  CHECK_THROWS_AS(parse("(C2"), ParseError);
  CHECK_THROWS_AS(parse("[0,2]"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("C2)"), ParseError);
  try {
    parse("C2+*C2");
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
  }
}

TEST_CASE("literal print and parse round trip") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& g : all_digraphs(EnumFilter::of_size(n))) {
      CHECK(is_isomorphic(eval(to_literal(g)), g));
    }
  }
}

TEST_CASE("expression str round trip") {
  for (const char* text : {"C2*C2", "2C1+C3", "[0,0]*(C2+C1)", "3(C2+[0])"}) {
    const Expr e = parse(text);
    CHECK(is_isomorphic(eval(e.str()), e.eval()));
  }
}

TEST_CASE("dot output") {
  const std::string dot = to_dot(cycle(1), "g");
  CHECK(dot.find("digraph g {") == 0);
  CHECK(dot.find("0 -> 0;") != std::string::npos);
}

TEST_CASE("cli eq, canon, prod, sum") {
  auto r = run_cli({"eq", "C2*C2", "2C2"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");

  r = run_cli({"eq", "C2", "C3"});
  CHECK(r.code == 0);
  CHECK(r.out == "false\n");

  r = run_cli({"canon", "C4*C6"});
  const auto r2 = run_cli({"canon", "2C12"});
  CHECK(r.code == 0);
  CHECK(r.out == r2.out);

  r = run_cli({"prod", "C2", "C2"});
  CHECK(r.code == 0);
  CHECK(is_isomorphic(eval(r.out), scalar(2, cycle(2))));

  r = run_cli({"sum", "C1", "C2"});
  CHECK(r.code == 0);
  CHECK(is_isomorphic(eval(r.out), sum(cycle(1), cycle(2))));
}

TEST_CASE("cli divides, quotients, irreducible") {
  auto r = run_cli({"divides", "C2", "2C2"});
  CHECK(r.code == 0);
  CHECK(r.out == "yes\n");

  r = run_cli({"divides", "C4", "C2"});
  CHECK(r.code == 0);
  CHECK(r.out == "no\n");

  r = run_cli({"divides", "C2", "9C2"});
  CHECK(r.code == 3);
  CHECK(r.out == "unknown\n");

  r = run_cli({"divides", "C2", "9C2", "--bound", "9"});
  CHECK(r.code == 0);
  CHECK(r.out == "yes\n");

  r = run_cli({"quotients", "C2", "2C2"});
  CHECK(r.code == 0);
  CHECK(r.out == "[1,0]\n[0,1]\n");

  r = run_cli({"quotients", "C2", "10C2"});
  CHECK(r.code == 3);

  r = run_cli({"irreducible", "C8"});
  CHECK(r.code == 0);
  CHECK(r.out == "yes\n");

  r = run_cli({"irreducible", "2C2"});
  CHECK(r.out == "no\n");
}

TEST_CASE("cli enumerate") {
  auto r = run_cli({"enumerate", "3"});
  CHECK(r.code == 0);
  int lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 7);

  const auto brute = run_cli({"enumerate", "3", "--strategy", "brute-force"});
  CHECK(brute.out == r.out);

  r = run_cli({"enumerate", "4", "--connected", "--cycle-len", "1"});
  lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 4);

  r = run_cli({"enumerate", "3", "--cycle-len", "1"});
  CHECK(r.code == 1);  // needs --connected
}

TEST_CASE("cli witness writes reports and figures") {
  const auto dir = std::filesystem::temp_directory_path() / "fungraph_cli_test";
  std::filesystem::remove_all(dir);
  const auto json_path = dir / "report.json";
  std::filesystem::create_directories(dir);

  auto r = run_cli({"witness", "[0,0]", "--json", json_path.string(),
                    "--dot", (dir / "dots").string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("branch: fixed-point-tree") != std::string::npos);
  CHECK(r.out.find("verified: true") != std::string::npos);

  std::ifstream in(json_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str().find("\"schema\": 1") != std::string::npos);
  CHECK(buffer.str().find("\"kind\": \"exhaustive-search\"") != std::string::npos);
  CHECK(buffer.str().find("\"candidates_checked\": 7") != std::string::npos);
  CHECK(buffer.str().find("\"radices\"") != std::string::npos);
  for (const char* name :
       {"subject.dot", "factor_a.dot", "factor_b.dot", "cofactor.dot",
        "left_product.dot", "right_product.dot"}) {
    CHECK(std::filesystem::exists(dir / "dots" / name));
  }

  // Identical runs produce identical reports.
  const auto json2 = dir / "report2.json";
  run_cli({"witness", "[0,0]", "--json", json2.string()});
  std::ifstream in2(json2);
  std::stringstream buffer2;
  buffer2 << in2.rdbuf();
  CHECK(buffer.str() == buffer2.str());

  // Branches without an explicit map record canonical-equality evidence.
  const auto json3 = dir / "report3.json";
  run_cli({"witness", "2C1", "--json", json3.string()});
  std::ifstream in3(json3);
  std::stringstream buffer3;
  buffer3 << in3.rdbuf();
  CHECK(buffer3.str().find("\"branch\": \"disconnected\"") != std::string::npos);
  CHECK(buffer3.str().find("\"kind\": \"canonical-equality\"") != std::string::npos);
  CHECK(buffer3.str().find("\"prime\": 2") != std::string::npos);

  std::filesystem::remove_all(dir);
}

TEST_CASE("cli error paths") {
  CHECK(run_cli({"witness", "C1"}).code == 1);
  CHECK(run_cli({"canon", "C2+"}).code == 1);
  CHECK(run_cli({"nonsense"}).code == 1);
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);
}
