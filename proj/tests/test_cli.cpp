// End-to-end checks of the installed command-line contract: exit codes,
// byte-stable reports, idempotent enumeration files.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

int run(const std::string& args) {
  std::string cmd = std::string(SZW_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("verify exit codes: 0 pass, 1 violated, 2 usage or guard") {
  CHECK(run("verify thm2.3 --n 5") == 0);
  CHECK(run("verify tree-order --n 9") == 1);
  CHECK(run("verify thm9.9 --n 5") == 2);
  CHECK(run("verify thm2.3") == 2);           // missing --n
  CHECK(run("enum --class connected --n 10") == 2);  // guard without override
  CHECK(run("gen lollipop:3:9") == 2);
  CHECK(run("gen nosuch:1") == 2);
}

TEST_CASE("identical verify commands write byte-identical reports") {
  const char* a = "cli_report_a.txt";
  REQUIRE(run(std::string("verify thm2.2 --n 6 --out ") + a) == 0);
  std::string first = slurp(a);
  REQUIRE(run(std::string("verify thm2.2 --n 6 --out ") + a) == 0);
  CHECK(first == slurp(a));
  CHECK(first.rfind("szw-report 1\n", 0) == 0);
  std::remove(a);
}

TEST_CASE("enum rewrites files identically") {
  const char* path = "cli_trees_9.g6";
  REQUIRE(run(std::string("enum --class trees --n 9 --out ") + path) == 0);
  std::string first = slurp(path);
  REQUIRE(run(std::string("enum --class trees --n 9 --out ") + path) == 0);
  CHECK(first == slurp(path));
  // 47 trees on nine vertices, one line each
  std::size_t lines = 0;
  for (char ch : first) lines += ch == '\n';
  CHECK(lines == 47);
  std::remove(path);
}
