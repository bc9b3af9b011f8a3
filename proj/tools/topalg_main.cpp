// topalg — command-line front end for the preorder algebra library.
//
// Verbs:
//   enum n [--unlabeled] [--t0]        list topologies, one per line
//   count n                            CSV table of labeled/unlabeled counts
//   op <verb> <operands...> [flags]    run one operation, print the result
//   verify <suite> [--max-size k] [--seed s] [--trials t] [--out f]
//   dot <space>                        Hasse diagram of the quotient poset
//
// Exit codes: 0 success, 1 parse/usage error, 2 size limit exceeded,
// 3 other domain error (the error kind goes to stderr), 4 verify found
// failing instances.

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "topalg/canonical.hpp"
#include "topalg/coproducts.hpp"
#include "topalg/errors.hpp"
#include "topalg/graft.hpp"
#include "topalg/guin_oudom.hpp"
#include "topalg/lincomb.hpp"
#include "topalg/preorder.hpp"
#include "topalg/suites.hpp"
#include "topalg/textio.hpp"

namespace {

using namespace topalg;

Preorder read_space(const std::string& text, bool json_in) {
  if (!json_in) return Preorder::parse(text);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return preorder_from_json(j);
}

void print_space(const Preorder& t, bool json_out) {
  if (json_out)
    std::cout << preorder_to_json(t).dump(2) << "\n";
  else
    std::cout << t.to_text() << "\n";
}

void print_comb(const LinComb& a, bool json_out) {
  if (json_out) {
    std::cout << lincomb_to_json(a).dump(2) << "\n";
    return;
  }
  for (const auto& line : a.lines()) std::cout << line << "\n";
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty() || !s.empty()) out.push_back(cur);
  return out;
}

struct OpFlags {
  std::string at;       // vertex for graft / graft-up
  std::string star = "*";
  std::string rule = "ffm";
  std::string cut_rule = "graft";
  std::string reading = "verbatim";
  std::string a1, a2;   // label lists for psi
  std::string keep;     // label list for restrict
  bool json_in = false;
  bool json_out = false;
};

int run_op(const std::string& verb, const std::vector<std::string>& raw,
           const OpFlags& f) {
  auto need = [&](size_t k) {
    if (raw.size() != k)
      throw ParseError("op " + verb + " expects " + std::to_string(k) +
                       " operand(s), got " + std::to_string(raw.size()));
  };
  auto space = [&](size_t i) { return read_space(raw[i], f.json_in); };

  if (verb == "product") {
    need(2);
    print_space(product(space(0), space(1)), f.json_out);
  } else if (verb == "graft") {
    need(2);
    if (!f.at.empty())
      print_space(graft_at(space(0), space(1), f.at), f.json_out);
    else
      print_comb(graft(space(0), space(1)), f.json_out);
  } else if (verb == "graft-up") {
    need(2);
    if (!f.at.empty())
      print_space(graft_up_at(space(0), space(1), f.at), f.json_out);
    else
      print_comb(graft_up(space(0), space(1)), f.json_out);
  } else if (verb == "bplus") {
    need(1);
    print_space(bplus(space(0), f.star), f.json_out);
  } else if (verb == "star") {
    need(2);
    print_comb(gl_star(space(0), space(1)), f.json_out);
  } else if (verb == "ograft") {
    need(2);
    print_comb(extended_graft(space(0), space(1)), f.json_out);
  } else if (verb == "unshuffle") {
    need(1);
    print_comb(unshuffle(space(0)), f.json_out);
  } else if (verb == "coprod" || verb == "gamma") {
    need(1);
    const std::string rule = verb == "gamma" ? "gamma" : f.rule;
    const GammaReading reading = f.reading == "classes-of-finer"
                                     ? GammaReading::ClassesOfFiner
                                     : GammaReading::Verbatim;
    if (rule == "ffm")
      print_comb(delta_open(space(0)), f.json_out);
    else if (rule == "graft")
      print_comb(delta_graft(space(0), f.cut_rule == "literal-min"
                                           ? CutRule::LiteralMin
                                           : CutRule::Graft),
                 f.json_out);
    else
      print_comb(gamma(space(0), reading), f.json_out);
  } else if (verb == "quotient") {
    need(2);
    print_space(quotient(space(0), space(1)), f.json_out);
  } else if (verb == "psi") {
    need(1);
    if (f.a1.empty() || f.a2.empty())
      throw ParseError("op psi requires --a1 and --a2");
    print_space(psi(space(0), split_csv(f.a1), split_csv(f.a2)), f.json_out);
  } else if (verb == "j") {
    need(1);
    print_space(opposite(space(0)), f.json_out);
  } else if (verb == "restrict") {
    need(1);
    if (f.keep.empty()) throw ParseError("op restrict requires --keep");
    print_space(space(0).restrict_to(split_csv(f.keep)), f.json_out);
  } else if (verb == "pair") {
    need(3);
    std::cout << pairing_rhs(space(0), space(1), space(2)).str() << "\n";
  } else if (verb == "canon") {
    need(1);
    print_space(canonical_form(space(0)), f.json_out);
  } else if (verb == "sigma") {
    need(1);
    std::cout << sigma(space(0)).str() << "\n";
  } else if (verb == "components") {
    need(1);
    const Preorder t = space(0);
    for (const Mask m : t.connected_components())
      print_space(t.restrict_to(m), f.json_out);
  } else if (verb == "opens") {
    need(1);
    const Preorder t = space(0);
    for (const Mask m : t.open_sets()) print_space(t.restrict_to(m), f.json_out);
  } else {
    throw ParseError("unknown op verb '" + verb + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact algebra of finite topological spaces"};
  app.require_subcommand(1);

  auto* cmd_enum = app.add_subcommand("enum", "list topologies on n points");
  int enum_n = 0;
  bool enum_unlabeled = false, enum_t0 = false;
  cmd_enum->add_option("n", enum_n, "number of points")->required();
  cmd_enum->add_flag("--unlabeled", enum_unlabeled, "one space per homeomorphism class");
  cmd_enum->add_flag("--t0", enum_t0, "only T0 spaces (posets)");

  auto* cmd_count = app.add_subcommand("count", "CSV of counts for 0..n points");
  int count_n = 0;
  cmd_count->add_option("n", count_n, "largest size")->required();

  auto* cmd_op = app.add_subcommand("op", "run one operation");
  std::string op_verb;
  std::vector<std::string> op_args;
  OpFlags flags;
  cmd_op->add_option("verb", op_verb,
                     "product|graft|graft-up|bplus|star|ograft|unshuffle|coprod|"
                     "gamma|quotient|psi|j|restrict|pair|canon|sigma|components|opens")
      ->required();
  cmd_op->add_option("operands", op_args, "spaces in text form");
  cmd_op->add_option("--at", flags.at, "graft at this vertex only");
  cmd_op->add_option("--star", flags.star, "label of the new minimum for bplus");
  cmd_op->add_option("--rule", flags.rule, "coproduct rule")
      ->check(CLI::IsMember({"ffm", "graft", "gamma"}));
  cmd_op->add_option("--cut-rule", flags.cut_rule, "admissible-cut rule")
      ->check(CLI::IsMember({"graft", "literal-min"}));
  cmd_op->add_option("--reading", flags.reading, "gamma admissibility reading")
      ->check(CLI::IsMember({"verbatim", "classes-of-finer"}));
  cmd_op->add_option("--a1", flags.a1, "first label set for psi (comma-separated)");
  cmd_op->add_option("--a2", flags.a2, "second label set for psi (comma-separated)");
  cmd_op->add_option("--keep", flags.keep, "labels to keep for restrict");
  cmd_op->add_flag("--json-in", flags.json_in, "operands are JSON objects");
  cmd_op->add_flag("--json", flags.json_out, "emit JSON instead of text");

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite_name, out_file;
  SuiteOptions sopts;
  cmd_verify->add_option("suite", suite_name, "suite name")->required();
  cmd_verify->add_option("--max-size", sopts.max_size, "size bound override");
  cmd_verify->add_option("--seed", sopts.seed, "seed for randomized portions");
  cmd_verify->add_option("--trials", sopts.trials, "random trial count override");
  cmd_verify->add_option("--out", out_file, "also write the JSON report here");

  auto* cmd_dot = app.add_subcommand("dot", "Hasse diagram of the quotient poset");
  std::string dot_arg;
  bool dot_json_in = false;
  cmd_dot->add_option("space", dot_arg, "space in text form")->required();
  cmd_dot->add_flag("--json-in", dot_json_in, "operand is a JSON object");

  try {
    app.parse(argc, argv);

    if (*cmd_enum) {
      const auto& all =
          enum_unlabeled ? enumerate_unlabeled(enum_n) : enumerate_labeled(enum_n);
      for (const auto& t : all) {
        if (enum_t0 && !t.is_t0()) continue;
        std::cout << t.to_text() << "\n";
      }
    } else if (*cmd_count) {
      std::cout << "n,labeled,unlabeled\n";
      for (int n = 0; n <= count_n; ++n)
        std::cout << n << "," << enumerate_labeled(n).size() << ","
                  << enumerate_unlabeled(n).size() << "\n";
    } else if (*cmd_op) {
      return run_op(op_verb, op_args, flags);
    } else if (*cmd_verify) {
      const SuiteReport rep = run_suite(suite_name, sopts);
      const std::string text = rep.to_json().dump(2);
      std::cout << text << "\n";
      if (!out_file.empty()) {
        std::ofstream out(out_file);
        if (!out) throw ParseError("cannot open --out file '" + out_file + "'");
        out << text << "\n";
      }
      return rep.ok() ? 0 : 4;
    } else if (*cmd_dot) {
      std::cout << render_dot(read_space(dot_arg, dot_json_in));
    }
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == "SizeLimitExceeded" ? 2 : 3;
  }
}
