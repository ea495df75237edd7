#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tcs/reference.hpp"
#include "tcs/scaffold.hpp"

using namespace tcs;

namespace {
IntVec vec(const std::vector<int>& xs) {
  IntVec v;
  for (int x : xs) v.push_back(x);
  return v;
}
}  // namespace

TEST_CASE("minimal scaffold shapes") {
  Scaffold s0 = minimal_scaffold(0);
  CHECK(s0.fan.ambient_rank() == 1);
  CHECK(s0.fan.maximal_cones().size() == 2);
  CHECK(validate_scaffold(s0).ok);

  Scaffold s1 = minimal_scaffold(1);
  CHECK(s1.fan.maximal_cones().size() == 4);
  CHECK(validate_scaffold(s1).ok);

  Scaffold s2 = minimal_scaffold(2);
  CHECK(s2.fan.ambient_rank() == 3);
  CHECK(s2.fan.maximal_cones().size() == 8);  // three independent hyperplanes
  auto rep = validate_scaffold(s2);
  CHECK(rep.ok);
  CHECK(rep.covering.size() == 3);
  for (const auto& cover : rep.covering) CHECK(!cover.empty());
}

TEST_CASE("a plain arrangement fan need not be a scaffold") {
  // only the hyperplane {x = 0} in the (a1, x) plane: H_1 = {x = a1} is not
  // a union of cones
  Scaffold bogus;
  bogus.n = 1;
  bogus.d = 1;
  bogus.kind = "bogus";
  bogus.fan = fan_from_arrangement(Arrangement::make(2, {vec({0, 1})}));
  CHECK(!validate_scaffold(bogus).ok);
}

TEST_CASE("square scaffold is the product of two minimal ones") {
  for (int n = 0; n <= 2; ++n) {
    Scaffold sq = square_scaffold(n);
    CHECK(validate_scaffold(sq).ok);
    Scaffold prod = product_scaffold(minimal_scaffold(n), minimal_scaffold(n));
    CHECK(fans_equal(sq.fan, prod.fan));
    size_t m = minimal_scaffold(n).fan.maximal_cones().size();
    CHECK(sq.fan.maximal_cones().size() == m * m);
  }
}

TEST_CASE("product scaffold rejects mismatched inputs") {
  CHECK_THROWS(product_scaffold(minimal_scaffold(1), minimal_scaffold(2)));
}

TEST_CASE("biperm scaffold refines the square scaffold") {
  Scaffold b = biperm_scaffold(1);
  Scaffold sq = square_scaffold(1);
  CHECK(validate_scaffold(b).ok);
  CHECK(b.fan.maximal_cones().size() > sq.fan.maximal_cones().size());
  CHECK(is_refinement(b.fan, sq.fan));
  CHECK(!is_refinement(sq.fan, b.fan));
}

TEST_CASE("scaffold from a complete fan") {
  // d=1, sigma = {x <= 0, x >= 0}: overlay equals the minimal scaffold
  Fan sigma = fan_from_arrangement(Arrangement::make(1, {vec({1})}));
  Scaffold s = scaffold_from_fan(sigma, 1);
  CHECK(s.fan.maximal_cones().size() == 4);
  CHECK(fans_equal(s.fan, minimal_scaffold(1).fan));
  CHECK(validate_scaffold(s).ok);

  Scaffold s0 = scaffold_from_fan(sigma, 0);
  CHECK(fans_equal(s0.fan, sigma));

  Fan incomplete = Fan::from_maximal({Cone::from_inequalities({vec({1})}, {}, 1)}, 1);
  CHECK_THROWS(scaffold_from_fan(incomplete, 1));
}

TEST_CASE("scaffold from the quadrant fan matches the square scaffold's quotient data") {
  // sigma = normal fan of P1 x P1 (the four quadrants)
  Fan quad = fan_from_arrangement(Arrangement::make(2, {vec({1, 0}), vec({0, 1})}));
  Scaffold s = scaffold_from_fan(quad, 1);
  CHECK(validate_scaffold(s).ok);
  // overlaying translated quadrant fans slices by x=a_i and y=b_i only
  CHECK(fans_equal(s.fan, square_scaffold(1).fan));
}

TEST_CASE("refining by the scaffold's own fan changes nothing") {
  Scaffold s = minimal_scaffold(1);
  Scaffold r = refine_scaffold(s, s.fan);
  CHECK(fans_equal(r.fan, s.fan));
}

TEST_CASE("refining the minimal scaffold by the half-mark ray") {
  // the extra hyperplane {2x = a1}
  Fan extra = fan_from_arrangement(Arrangement::make(2, {vec({-1, 2})}));
  Scaffold r = refine_scaffold(minimal_scaffold(1), extra);
  CHECK(r.fan.maximal_cones().size() == 6);
  CHECK(validate_scaffold(r).ok);
}

TEST_CASE("section maps compose with the projection to the identity") {
  Scaffold s = square_scaffold(2);
  IntMat pi = projection_matrix(s);
  for (int i = 0; i <= s.n; ++i) {
    IntMat comp = mat_mul(pi, section_matrix(s, i));
    CHECK(comp == IntMat::identity(s.base_rank()));
  }
}

TEST_CASE("fiber vertices of the minimal scaffold are the mark values") {
  // over a1=1, a2=3 the fiber decomposition has vertices {0, 1, 3}; count
  // cones of the fan meeting the fiber in single points via section images
  Scaffold s = minimal_scaffold(2);
  auto rep = validate_scaffold(s);
  REQUIRE(rep.ok);
  // each section image covers the base: exactly as many full-dimensional
  // covering cones as chambers of the base arrangement restricted to H_i
  for (const auto& cover : rep.covering) CHECK(cover.size() >= 4);
}
