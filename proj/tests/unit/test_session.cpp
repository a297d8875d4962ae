#include <gtest/gtest.h>

#include "aq/session.hpp"

using namespace aq;

namespace {
const char* kCusp =
    "field QQ\nring P = poly(x,y)\nring S = P/(y^2−x^3)\nmap phi: P -> S\npoint o on S (x=0,y=0)\n"
    "task classify lci phi at o\n";
}

TEST(SessionParse, CuspSessionRunsLci) {
  SessionFile s = parse_session(kCusp);
  ASSERT_EQ(s.statements.size(), 6u);
  SessionResult r = run_session(s);
  ASSERT_EQ(r.exit_code, 0) << r.error;
  ASSERT_EQ(r.tasks.size(), 1u);
  EXPECT_EQ(r.tasks[0].canonical["result"]["points"][0]["verdict"], true);
}

TEST(SessionParse, EmptyFileIsNoOp) {
  SessionFile s = parse_session("");
  EXPECT_TRUE(s.statements.empty());
  SessionResult r = run_session(s);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.tasks.empty());
}

TEST(SessionParse, CompositeCharacteristicRejected) {
  try {
    parse_session("field GF 4\n");
    FAIL() << "no error";
  } catch (const SessionError& e) {
    EXPECT_EQ(e.detail(), "characteristic must be prime");
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 10);
  }
}

TEST(SessionParse, UnknownTaskListsValidTasks) {
  try {
    parse_session("field QQ\ntask frobnicate\n");
    FAIL() << "no error";
  } catch (const SessionError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("valid tasks: homology, cohomology, classify, resolve, check"), std::string::npos);
  }
}

TEST(SessionParse, UnresolvedReferences) {
  EXPECT_THROW(parse_session("ring S = P / (x)\n"), SessionError);
  EXPECT_THROW(parse_session("ring P = poly(x)\nmap f : P -> Q\n"), SessionError);
  EXPECT_THROW(parse_session("ring P = poly(x)\nring P = poly(y)\n"), SessionError);
  EXPECT_THROW(parse_session("ring P = poly(x)\npoint o on P (y=0)\n"), SessionError);
  EXPECT_THROW(parse_session("ring P = poly(x,y)\npoint o on P (x=0)\n"), SessionError);
  EXPECT_THROW(parse_session("task check no-such-suite\n"), SessionError);
}

TEST(SessionParse, RoundTrip) {
  const std::string text =
      "field GF 5\nring P = poly(x, y, t)\nring S = P / (y^2 - x^3, t*x-1)\nmap f : P -> S [x -> x+t, y -> y]\n"
      "point q on S (x=1, y=1, t=1)\ntask homology f coeff quotient (x-1, y-1) maxdeg 2\n"
      "task cohomology f coeff free 2 maxdeg 1\ntask homology f coeff generic maxdeg 2\n"
      "task classify etale f at q, q\ntask resolve killcycles P (x, y^2) levels 3\ntask resolve bar P levels 4\n"
      "task check five-term seed 7\n";
  SessionFile a = parse_session(text);
  std::string printed = print_session(a);
  SessionFile b = parse_session(printed);
  EXPECT_EQ(a, b);
  EXPECT_EQ(print_session(b), printed);
}

TEST(SessionRun, PointOffTheVarietyExitsTwo) {
  SessionResult r = run_session(parse_session("ring P = poly(x,y)\nring S = P/(y^2-x^3)\npoint q on S (x=1,y=2)\n"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.error.find("not a rational point"), std::string::npos);
}

TEST(SessionRun, DeterministicCanonicalSection) {
  const char* text = "ring P = poly(x)\nring S = P/(x^2)\nmap f : P -> S\npoint o on S (x=0)\n"
                     "task homology f coeff residue o maxdeg 3\ntask resolve bar P levels 3\n";
  SessionFile s = parse_session(text);
  SessionResult a = run_session(s), b = run_session(s);
  ASSERT_EQ(a.tasks.size(), b.tasks.size());
  for (std::size_t i = 0; i < a.tasks.size(); ++i)
    EXPECT_EQ(canonical_dump(a.tasks[i].canonical), canonical_dump(b.tasks[i].canonical));
  EXPECT_EQ(canonical_dump(a.summary()), canonical_dump(b.summary()));
}

TEST(SessionRun, MaxLevelCapsDegrees) {
  RunOptions o;
  o.max_level = 2;
  SessionResult r = run_session(parse_session("ring P = poly(x)\nring S = P/(x^2)\nmap f : P -> S\npoint o on S (x=0)\n"
                                              "task homology f coeff residue o maxdeg 5\n"),
                                o);
  ASSERT_EQ(r.exit_code, 0) << r.error;
  EXPECT_EQ(r.tasks[0].canonical["result"]["degrees"].size(), 3u);
}

TEST(SessionRun, CheckTaskRunsSuite) {
  SessionResult r = run_session(parse_session("task check koszul-regular\n"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.tasks[0].canonical["result"]["passed"], 15);
}
