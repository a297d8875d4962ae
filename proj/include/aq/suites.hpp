#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aq/report.hpp"

namespace aq {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;
  Json details = Json::array();
  bool ok() const { return cases > 0 && passed == cases && failures.empty(); }
};

std::vector<std::string> suite_names();
// seed drives the random corpora; order is applied to every ring built
SuiteResult run_suite(const std::string& name, std::uint64_t seed = 1, OrderKind order = OrderKind::DegRevLex);
Json suite_json(const SuiteResult& r);

// random surjection k[x_1..x_n] -> k[x]/(f) with f vanishing at two rational points
struct RandomSurjection {
  AlgebraMap map;
  std::vector<RationalPoint> points;
};
std::vector<RandomSurjection> random_surjections(std::size_t count, std::uint64_t seed, OrderKind order);

}  // namespace aq
