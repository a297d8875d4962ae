#include <set>
#include <gtest/gtest.h>

#include "aq/suites.hpp"

using namespace aq;

TEST(Suites, NamesAreUnique) {
  auto names = suite_names();
  EXPECT_EQ(names.size(), 11u);
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()).size(), names.size());
}

TEST(Suites, UnknownSuiteIsInputError) {
  try {
    run_suite("nope");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("five-term"), std::string::npos);
  }
}

TEST(Suites, RandomSurjectionsAreDeterministicAndVanish) {
  auto a = random_surjections(6, 11, OrderKind::DegRevLex);
  auto b = random_surjections(6, 11, OrderKind::DegRevLex);
  ASSERT_EQ(a.size(), 6u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].map.target().relations(), b[i].map.target().relations());
    ASSERT_EQ(a[i].points.size(), 2u);
    for (const auto& p : a[i].points)
      for (const auto& f : a[i].map.target().relations()) EXPECT_EQ(f.evaluate(p.coords), Scalar(0));
  }
}

TEST(Suites, FastSuitesPass) {
  for (const char* s : {"polynomial-vanishing", "hypersurface-sigma-s", "hkr", "base-change"}) {
    SuiteResult r = run_suite(s, 3);
    EXPECT_TRUE(r.ok()) << s << ": " << suite_json(r).dump();
    EXPECT_EQ(suite_json(r)["ok"], r.ok());
  }
}

TEST(Suites, JacobiZariskiUnderLex) {
  SuiteResult r = run_suite("jacobi-zariski", 2, OrderKind::Lex);
  EXPECT_TRUE(r.ok()) << suite_json(r).dump();
}
