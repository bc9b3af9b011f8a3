// End-to-end contract test for the command-line binary.  Takes the binary
// path as argv[1], shells out, and checks stdout text and exit codes.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

static int failures = 0;

#define CHECK(cond)                                                       \
  do {                                                                    \
    if (!(cond)) {                                                        \
      ++failures;                                                         \
      std::cerr << "FAIL line " << __LINE__ << ": " << #cond << "\n";     \
    }                                                                     \
  } while (0)

struct RunResult {
  int code = -1;
  std::string out;
};

static std::string g_bin;

static RunResult run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd =
      "\"" + g_bin + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  return r;
}

static std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur)) out.push_back(cur);
  return out;
}

static bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: test_cli <path-to-binary>\n";
    return 2;
  }
  g_bin = argv[1];

  // --- enum ---------------------------------------------------------------
  {
    auto r = run("enum 2");
    CHECK(r.code == 0);
    CHECK(lines_of(r.out).size() == 4);

    CHECK(lines_of(run("enum 3").out).size() == 29);
    CHECK(lines_of(run("enum 3 --unlabeled").out).size() == 9);
    CHECK(lines_of(run("enum 3 --t0").out).size() == 19);

    auto r0 = run("enum 0");
    CHECK(r0.code == 0);
    CHECK(r0.out == "{}\n");

    CHECK(run("enum 6").code == 2);
    CHECK(run("enum").code == 1);
  }

  // --- count ---------------------------------------------------------------
  {
    auto r = run("count 3");
    CHECK(r.code == 0);
    const auto ls = lines_of(r.out);
    CHECK(ls.size() == 5);
    CHECK(ls[0] == "n,labeled,unlabeled");
    CHECK(ls[1] == "0,1,1");
    CHECK(ls[2] == "1,1,1");
    CHECK(ls[3] == "2,4,3");
    CHECK(ls[4] == "3,29,9");
    CHECK(run("count 6").code == 2);
  }

  // --- op: products and grafting -------------------------------------------
  {
    auto r = run("op graft '{a}' '{b<c}'");
    CHECK(r.code == 0);
    const auto ls = lines_of(r.out);
    CHECK(ls.size() == 2);
    CHECK(has(r.out, "1\t{b<a, b<c}"));
    CHECK(has(r.out, "1\t{b<a, b<c, c<a}"));

    auto at = run("op graft '{a}' '{b<c}' --at b");
    CHECK(at.code == 0);
    CHECK(at.out == "{b<a, b<c}\n");

    auto up = run("op graft-up '{a}' '{b}' --at b");
    CHECK(up.code == 0);
    CHECK(up.out == "{a<b}\n");

    CHECK(run("op product '{a}' '{b}'").out == "{a, b}\n");
    CHECK(run("op bplus '{a, b}'").out == "{*<a, *<b}\n");
    CHECK(run("op bplus '{a}' --star r").out == "{r<a}\n");
    CHECK(run("op j '{a<b}'").out == "{b<a}\n");
    CHECK(run("op quotient '{a<b}' '{a<b}'").out == "{a<b, b<a}\n");
    CHECK(run("op restrict '{a<b, a<c}' --keep a,b").out == "{a<b}\n");
    CHECK(run("op canon '{x<y}'").out == "{0<1}\n");
    CHECK(run("op sigma '{a<c, b<c}'").out == "2\n");

    auto comps = run("op components '{a<b, x<y}'");
    CHECK(comps.out == "{a<b}\n{x<y}\n");
    CHECK(lines_of(run("op opens '{a<b}'").out).size() == 3);
  }

  // --- op: star / ograft / unshuffle ---------------------------------------
  {
    auto r = run("op star '{a}' '{b}'");
    CHECK(r.code == 0);
    CHECK(lines_of(r.out).size() == 2);
    CHECK(has(r.out, "1\t{a, b}"));
    CHECK(has(r.out, "1\t{b<a}"));

    CHECK(lines_of(run("op ograft '{c<e, d<e, f}' '{t1<t2}'").out).size() == 4);
    CHECK(lines_of(run("op star '{c<e, d<e, f}' '{t1<t2}'").out).size() == 9);
    CHECK(lines_of(run("op unshuffle '{a, b}'").out).size() == 4);
  }

  // --- op: coproducts --------------------------------------------------------
  {
    auto r = run("op coprod '{a<b}'");
    CHECK(r.code == 0);
    const auto ls = lines_of(r.out);
    CHECK(ls.size() == 3);
    CHECK(has(r.out, "1\t{a} | {b}"));

    CHECK(lines_of(run("op coprod '{a<c, b<c}' --rule graft").out).size() == 2);
    CHECK(lines_of(run("op coprod '{a<c, b<c}' --rule graft --cut-rule literal-min").out)
              .size() == 4);
    CHECK(lines_of(run("op coprod '{a<b}' --rule gamma").out).size() == 2);
    CHECK(lines_of(run("op gamma '{a<b}'").out).size() == 2);
    CHECK(lines_of(run("op gamma '{a<b}' --reading classes-of-finer").out).size() == 1);
    CHECK(run("op coprod '{a<b}' --rule bogus").code == 1);
  }

  // --- op: pairing ------------------------------------------------------------
  {
    CHECK(run("op pair '{a}' '{b}' '{x<y}'").out == "1\n");
    CHECK(run("op pair '{a}' '{b<c}' '{o<s, o<t}'").out == "2\n");
    CHECK(run("op pair '{a<b}' '{c}' '{x<z, y<z}'").out == "0\n");
  }

  // --- op: errors ---------------------------------------------------------------
  {
    auto r = run("op psi '{a<b<c}' --a1 a --a2 c", /*merge_stderr=*/true);
    CHECK(r.code == 3);
    CHECK(has(r.out, "TransitivityBroken"));

    CHECK(run("op psi '{a<c, b<c}' --a1 a --a2 c").out == "{b<c, a}\n");
    CHECK(run("op j '{a<'").code == 1);
    CHECK(run("op bogus '{a}'").code == 1);
    CHECK(run("op graft '{a}'").code == 1);
    CHECK(run("op product '{a}' '{a}'", true).code == 3);
    CHECK(has(run("op product '{a}' '{a}'", true).out, "LabelClash"));
    CHECK(run("").code == 1);
  }

  // --- JSON in/out -----------------------------------------------------------
  {
    auto r = run("op j '{a<b}' --json");
    CHECK(r.code == 0);
    CHECK(has(r.out, "\"elements\""));
    CHECK(has(r.out, "\"b\""));

    auto rin = run(
        "op j '{\"elements\":[\"a\",\"b\"],\"relations\":[[\"a\",\"b\"]]}' --json-in");
    CHECK(rin.code == 0);
    CHECK(rin.out == "{b<a}\n");

    auto comb = run("op graft '{a}' '{b}' --json");
    CHECK(comb.code == 0);
    CHECK(has(comb.out, "\"rank\": 1"));
    CHECK(has(comb.out, "\"coeff\": \"1\""));
  }

  // --- verify -------------------------------------------------------------------
  {
    auto r = run("verify counts --max-size 3");
    CHECK(r.code == 0);
    CHECK(has(r.out, "\"suite\": \"counts\""));
    CHECK(has(r.out, "\"failure_count\": 0"));

    const std::string tmp = "cli_report_tmp.json";
    auto r2 = run("verify prelie --max-size 2 --trials 5 --out " + tmp);
    CHECK(r2.code == 0);
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(has(ss.str(), "\"suite\": \"prelie\""));
    CHECK(has(ss.str(), "\"failure_count\": 0"));
    std::remove(tmp.c_str());

    CHECK(run("verify bogus").code == 3);
  }

  // --- dot ----------------------------------------------------------------------
  {
    auto r = run("dot '{a<b}'");
    CHECK(r.code == 0);
    CHECK(has(r.out, "digraph"));
    CHECK(has(r.out, "->"));

    auto merged = run("dot '{a~b}'");
    CHECK(has(merged.out, "a,b"));
    CHECK(!has(merged.out, "->"));
  }

  if (failures == 0) {
    std::cout << "cli contract: all checks passed\n";
    return 0;
  }
  std::cerr << "cli contract: " << failures << " failing check(s)\n";
  return 1;
}
