#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "aq/session.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw aq::InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Andre-Quillen homology and cotangent complexes of finitely presented algebras"};
  app.require_subcommand(1);

  std::string file, out_dir, order = "degrevlex";
  int max_level = -1;
  auto* run = app.add_subcommand("run", "run a session file");
  run->add_option("file", file, "session file")->required();
  run->add_option("--out", out_dir, "directory for per-task JSON reports and summary.json");
  run->add_option("--order", order, "monomial order")->check(CLI::IsMember({"degrevlex", "lex"}));
  run->add_option("--max-level", max_level, "cap on simplicial levels and homology degrees")->check(CLI::NonNegativeNumber);

  std::string fmt_file;
  auto* fmt = app.add_subcommand("fmt", "parse a session file and print it in canonical form");
  fmt->add_option("file", fmt_file, "session file")->required();

  std::string suite;
  std::uint64_t seed = 1;
  std::string check_order = "degrevlex";
  auto* check = app.add_subcommand("check", "run a built-in check suite");
  check->add_option("suite", suite, "suite name")->required();
  check->add_option("--seed", seed, "seed of the random corpora");
  check->add_option("--order", check_order, "monomial order")->check(CLI::IsMember({"degrevlex", "lex"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      aq::RunOptions opts;
      opts.order = order == "lex" ? aq::OrderKind::Lex : aq::OrderKind::DegRevLex;
      if (max_level >= 0) opts.max_level = max_level;
      if (!out_dir.empty()) opts.out_dir = out_dir;
      aq::SessionResult r = aq::run_session(aq::parse_session(read_file(file)), opts);
      std::cout << aq::canonical_dump(r.summary());
      if (!r.error.empty()) std::cerr << "error: " << r.error << "\n";
      return r.exit_code;
    }
    if (*fmt) {
      std::cout << aq::print_session(aq::parse_session(read_file(fmt_file)));
      return 0;
    }
    if (*check) {
      aq::SuiteResult r =
          aq::run_suite(suite, seed, check_order == "lex" ? aq::OrderKind::Lex : aq::OrderKind::DegRevLex);
      std::cout << aq::canonical_dump(aq::suite_json(r));
      return r.ok() ? 0 : 1;
    }
  } catch (const aq::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
