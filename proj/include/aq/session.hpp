#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "aq/suites.hpp"

namespace aq {

// Parse or resolution error at a position of a session file.
class SessionError : public InputError {
 public:
  SessionError(int line, int column, const std::string& msg);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_, column_;
  std::string detail_;
};

struct FieldDecl {
  std::uint64_t characteristic = 0;
  bool operator==(const FieldDecl&) const = default;
};
struct RingDecl {
  std::string name;
  bool polynomial = true;
  std::vector<std::string> vars;       // polynomial rings
  std::string base;                    // quotients
  std::vector<std::string> relations;  // quotients
  bool operator==(const RingDecl&) const = default;
};
struct MapDecl {
  std::string name, source, target;
  std::vector<std::pair<std::string, std::string>> images;
  bool operator==(const MapDecl&) const = default;
};
struct PointDecl {
  std::string name, ring;
  std::vector<std::pair<std::string, std::string>> values;
  bool operator==(const PointDecl&) const = default;
};
// coeff residue <point> | target | free <r> | generic | quotient (<polys>)
struct HomologyTask {
  bool cohomology = false;
  std::string map;
  std::string coeff;
  std::string arg;
  std::vector<std::string> polys;
  int maxdeg = 2;
  bool operator==(const HomologyTask&) const = default;
};
struct ClassifyTask {
  std::string property, subject;
  std::vector<std::string> points;
  bool operator==(const ClassifyTask&) const = default;
};
// bar <ring> | koszul <ring> (<polys>) | hypersurface <ring> (<poly>) | killcycles <ring> (<polys>)
struct ResolveTask {
  std::string construction, ring;
  std::vector<std::string> polys;
  int levels = 4;
  bool operator==(const ResolveTask&) const = default;
};
struct CheckTask {
  std::string suite;
  std::optional<std::uint64_t> seed;
  bool operator==(const CheckTask&) const = default;
};

struct Statement {
  int line = 0;
  std::variant<FieldDecl, RingDecl, MapDecl, PointDecl, HomologyTask, ClassifyTask, ResolveTask, CheckTask> body;
  bool operator==(const Statement& o) const { return body == o.body; }
};

struct SessionFile {
  std::vector<Statement> statements;
  bool operator==(const SessionFile&) const = default;
};

SessionFile parse_session(const std::string& text);
std::string print_session(const SessionFile& s);
std::string print_statement(const Statement& s);

struct RunOptions {
  OrderKind order = OrderKind::DegRevLex;
  std::optional<int> max_level;
  std::optional<std::string> out_dir;
};

struct TaskOutcome {
  std::size_t index = 0;
  int line = 0;
  std::string kind;
  std::string status;  // ok | failed | error
  Json canonical;
  double elapsed_ms = 0;
};

struct SessionResult {
  int exit_code = 0;
  std::vector<TaskOutcome> tasks;
  Json discrepancies = Json::array();
  std::string error;  // input error that stopped the run
  Json summary() const;
};

// 0: all tasks and cross-checks pass; 1: a task failed or an oracle disagreed;
// 2: invalid input
SessionResult run_session(const SessionFile& s, const RunOptions& opts = {});

}  // namespace aq
