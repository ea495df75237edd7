#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tcs/json_io.hpp"
#include "tcs/reference.hpp"
#include "tcs/svg.hpp"

using namespace tcs;

namespace {
IntVec vec(const std::vector<int>& xs) {
  IntVec v;
  for (int x : xs) v.push_back(x);
  return v;
}
}  // namespace

TEST_CASE("fan JSON round trip is byte-stable") {
  for (const Fan& f : {permutahedral_fan(2), bipermutahedral_fan(1), square_permutahedral_fan(1)}) {
    std::string once = fan_to_json(f);
    Fan parsed = fan_from_json(once);
    CHECK(fans_equal(parsed, f));
    CHECK(fan_to_json(parsed) == once);
  }
}

TEST_CASE("stacky JSON keeps the sublattices") {
  Fan extra = fan_from_arrangement(Arrangement::make(2, {vec({-1, 2})}));
  Scaffold s = refine_scaffold(minimal_scaffold(1), extra);
  ConfigurationFan cf = configuration_fan(s);
  std::string text = stacky_to_json(cf.pi_fan);
  CHECK(text.find("sublattice_hnf") != std::string::npos);
  StackyFan parsed = stacky_from_json(text);
  CHECK(fans_equal(parsed.fan(), cf.pi_fan.fan()));
  for (const Cone& m : parsed.fan().maximal_cones())
    CHECK(parsed.sublattice(m) == cf.pi_fan.sublattice(m));
  CHECK(stacky_to_json(parsed) == text);
}

TEST_CASE("scaffold JSON round trip") {
  Scaffold s = square_scaffold(1);
  std::string text = scaffold_to_json(s);
  Scaffold parsed = scaffold_from_json(text);
  CHECK(parsed.n == 1);
  CHECK(parsed.d == 2);
  CHECK(parsed.kind == "square");
  CHECK(fans_equal(parsed.fan, s.fan));
  CHECK(scaffold_to_json(parsed) == text);
}

TEST_CASE("configuration JSON round trip rebuilds the fibration") {
  ConfigurationFan cf = configuration_fan(minimal_scaffold(2));
  std::string text = configuration_to_json(cf);
  ConfigurationFan parsed = configuration_from_json(text);
  CHECK(fans_equal(parsed.pi_fan.fan(), cf.pi_fan.fan()));
  CHECK(fans_equal(parsed.refined.fan, cf.refined.fan));
  CHECK(parsed.projection == cf.projection);
  REQUIRE(parsed.fiber_cones.size() == cf.fiber_cones.size());
  for (size_t i = 0; i < parsed.fiber_cones.size(); ++i)
    CHECK(parsed.fiber_cones[i] == cf.fiber_cones[i]);
  CHECK(configuration_to_json(parsed) == text);
  // stratum reports agree after the round trip
  Cone rho = cf.pi_fan.fan().maximal_cones()[0];
  CHECK(stratum_report_to_json(parsed, stratum_report(parsed, rho)) ==
        stratum_report_to_json(cf, stratum_report(cf, rho)));
}

TEST_CASE("malformed JSON is an input error") {
  CHECK_THROWS_AS(fan_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(fan_from_json("{\"ambient_rank\": 1}"), std::invalid_argument);
  CHECK_THROWS_AS(scaffold_from_json("{\"n\": 1}"), std::invalid_argument);
}

TEST_CASE("svg rendering of a planar fiber complex") {
  ConfigurationFan cf = configuration_fan(square_scaffold(1));
  auto [rho, rep] = locate(cf, RatVec{Rat(1), Rat(2)});
  (void)rho;
  std::string svg = fiber_complex_svg(cf, rep);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("<line") != std::string::npos);
  CHECK(svg.find("x1") != std::string::npos);
  // d=1 input is rejected
  ConfigurationFan line = configuration_fan(minimal_scaffold(1));
  auto rep1 = stratum_report(line, line.pi_fan.fan().maximal_cones()[0]);
  CHECK_THROWS(fiber_complex_svg(line, rep1));
}
