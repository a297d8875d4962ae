#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "aq/session.hpp"

namespace {

struct Line {
  bool ok;
  std::string detail;
};

Line suite_line(const std::string& suite) {
  aq::SuiteResult r = aq::run_suite(suite);
  std::string d = suite + " " + std::to_string(r.passed) + "/" + std::to_string(r.cases) + " cases";
  for (const auto& f : r.failures) d += "\n      " + f;
  return {r.ok(), d};
}

const char* kSession = R"(field QQ
ring K = poly()
ring P = poly(x, y)
ring S = P / (y^2-x^3)
ring F = P / (x^2, x*y, y^2)
ring T = poly(t)
ring D = T / (t^2)
ring C = P / (x^2+y^2-1)
map eta : K -> S
map phi : P -> S
map pi : P -> F
map tau : T -> D
map gam : K -> C
point o on S (x=0, y=0)
point p on S (x=1, y=1)
point z on F (x=0, y=0)
point d on D (t=0)
task homology eta coeff residue o maxdeg 2
task homology eta coeff residue p maxdeg 2
task homology phi coeff residue o maxdeg 4
task homology pi coeff residue z maxdeg 2
task homology tau coeff residue d maxdeg 4
task homology gam coeff generic maxdeg 2
task cohomology eta coeff residue o maxdeg 2
task homology phi coeff target maxdeg 2
task classify lci pi at z
task classify smooth eta at o, p
task resolve hypersurface P (y^2-x^3) levels 4
task resolve koszul P (x^2, y^2) levels 2
)";

std::string bundle(const aq::SessionResult& r) {
  std::string s = aq::canonical_dump(r.summary());
  for (const auto& t : r.tasks) s += aq::canonical_dump(t.canonical);
  return s;
}

// homology dims (and zero/free flags of module coefficients) of every homology task
aq::Json homology_dims(const aq::SessionResult& r) {
  aq::Json out = aq::Json::array();
  for (const auto& t : r.tasks) {
    if (t.kind != "homology" && t.kind != "cohomology") continue;
    aq::Json row = aq::Json::array();
    for (const auto& d : t.canonical["result"]["degrees"]) {
      aq::Json e = {{"n", d["n"]}, {"dim", d["dim"]}};
      if (d.contains("module") && !d["module"].is_null()) {
        e["zero"] = d["module"]["zero"];
        e["free_rank"] = d["module"]["free_rank"];
      }
      row.push_back(e);
    }
    out.push_back(row);
  }
  return out;
}

Line reproducibility() {
  aq::SessionFile s = aq::parse_session(kSession);
  aq::RunOptions grevlex, lex;
  lex.order = aq::OrderKind::Lex;
  aq::SessionResult a = aq::run_session(s, grevlex), b = aq::run_session(s, grevlex), c = aq::run_session(s, lex);
  bool same_bytes = bundle(a) == bundle(b);
  bool same_dims = homology_dims(a) == homology_dims(c);
  bool ok_runs = a.exit_code == 0 && c.exit_code == 0;
  // surjection corpus dimensions under both orders
  aq::SuiteResult g = aq::run_suite("aq1-conormal", 1, aq::OrderKind::DegRevLex);
  aq::SuiteResult l = aq::run_suite("aq1-conormal", 1, aq::OrderKind::Lex);
  bool same_corpus = g.ok() && l.ok() && g.details.size() == l.details.size();
  for (std::size_t i = 0; same_corpus && i < g.details.size(); ++i)
    same_corpus = g.details[i]["points"] == l.details[i]["points"];
  std::string d = std::string("identical bytes: ") + (same_bytes ? "yes" : "no") +
                  ", homology dims lex = degrevlex: " + (same_dims ? "yes" : "no") +
                  ", surjection corpus dims lex = degrevlex: " + (same_corpus ? "yes" : "no");
  if (!ok_runs) d += ", session exit codes " + std::to_string(a.exit_code) + "/" + std::to_string(c.exit_code);
  return {same_bytes && same_dims && same_corpus && ok_runs, d};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Line()>>> criteria = {
      {"AC1", [] { return suite_line("polynomial-vanishing"); }},
      {"AC2", [] { return suite_line("hypersurface-sigma-s"); }},
      {"AC3", [] { return suite_line("aq1-conormal"); }},
      {"AC4", [] { return suite_line("five-term"); }},
      {"AC5", [] { return suite_line("classifier-oracle"); }},
      {"AC6", [] { return suite_line("hkr"); }},
      {"AC7", [] { return suite_line("simplicial-validity"); }},
      {"AC8", [] { return suite_line("koszul-regular"); }},
      {"AC9", [] { return suite_line("kahler-dual"); }},
      {"AC10", reproducibility},
  };
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Line l;
    try {
      l = run();
    } catch (const std::exception& e) {
      l = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char t[32];
    std::snprintf(t, sizeof t, "%.1fs", secs);
    std::cout << id << " " << (l.ok ? "PASS" : "FAIL") << " " << l.detail << " (" << t << ")" << std::endl;
    if (!l.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
