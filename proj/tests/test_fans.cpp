#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tcs/fan.hpp"

using namespace tcs;

namespace {
IntVec vec(const std::vector<int>& xs) {
  IntVec v;
  for (int x : xs) v.push_back(x);
  return v;
}
}  // namespace

TEST_CASE("fan from one hyperplane on the line") {
  Arrangement a = Arrangement::make(1, {vec({1})});
  Fan f = fan_from_arrangement(a);
  CHECK(f.maximal_cones().size() == 2);
  CHECK(f.all_cones().size() == 3);
  CHECK(check_fan(f).ok);
  CHECK(check_complete(f));
}

TEST_CASE("fan of {x=0, x=a1} in the (a1,x) plane") {
  // this is the minimal scaffold slice for one point on the line
  Arrangement a = Arrangement::make(2, {vec({0, 1}), vec({-1, 1})});
  Fan f = fan_from_arrangement(a);
  CHECK(f.maximal_cones().size() == 4);
  CHECK(f.all_cones().size() == 9);
  CHECK(check_fan(f).ok);
  CHECK(check_complete(f));
}

TEST_CASE("empty arrangement gives the whole space") {
  Arrangement a = Arrangement::make(3, {});
  Fan f = fan_from_arrangement(a);
  CHECK(f.maximal_cones().size() == 1);
  CHECK(f.maximal_cones()[0].is_full());
  CHECK(check_fan(f).ok);
  CHECK(check_complete(f));
}

TEST_CASE("check_fan flags a non-fan") {
  Cone quad = Cone::from_inequalities({vec({1, 0}), vec({0, 1})}, {}, 2);
  Cone wedge = Cone::from_generators({vec({1, 1}), vec({-1, 1})}, {}, 2);
  Fan bad = Fan::from_maximal({quad, wedge}, 2);
  CHECK(!check_fan(bad).ok);

  Fan single = Fan::from_maximal({Cone::zero_cone(2)}, 2);
  CHECK(check_fan(single).ok);
  CHECK(!check_complete(single));
}

TEST_CASE("completeness: half line fan is not complete") {
  Fan f = Fan::from_maximal({Cone::from_inequalities({vec({1})}, {}, 1)}, 1);
  CHECK(check_fan(f).ok);
  CHECK(!check_complete(f));
}

TEST_CASE("sign vector feasibility via Fourier-Motzkin") {
  Arrangement a = Arrangement::make(2, {vec({1, 0}), vec({0, 1}), vec({1, 1})});
  // x>0, y>0 forces x+y>0
  CHECK(signed_region_feasible(a, {1, 1, 1}));
  CHECK(!signed_region_feasible(a, {1, 1, -1}));
  // with x+y = 0
  CHECK(signed_region_feasible(a, {1, -1, 0}));
  CHECK(!signed_region_feasible(a, {1, 1, 0}));
}

TEST_CASE("chamber count equals feasible strict sign vectors") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> d(-2, 2);
  std::uniform_int_distribution<int> rk(2, 4);
  std::uniform_int_distribution<int> hn(1, 5);
  for (int trial = 0; trial < 25; ++trial) {
    int rank = rk(rng);
    std::vector<IntVec> ns;
    int m = hn(rng);
    for (int i = 0; i < m; ++i) {
      IntVec n(rank);
      for (int j = 0; j < rank; ++j) n[j] = d(rng);
      if (!is_zero(n)) ns.push_back(n);
    }
    Arrangement a = Arrangement::make(rank, ns);
    Fan f = fan_from_arrangement(a);
    CHECK(check_fan(f).ok);
    CHECK(check_complete(f));
    size_t feasible = 0;
    size_t hyps = a.normals.size();
    for (size_t mask = 0; mask < (size_t(1) << hyps); ++mask) {
      std::vector<int8_t> signs(hyps);
      for (size_t i = 0; i < hyps; ++i) signs[i] = (mask >> i) & 1 ? 1 : -1;
      if (signed_region_feasible(a, signs)) ++feasible;
    }
    CHECK(f.maximal_cones().size() == feasible);
  }
}

TEST_CASE("common refinement basics") {
  Arrangement ax = Arrangement::make(2, {vec({1, 0})});
  Arrangement ad = Arrangement::make(2, {vec({1, -1})});
  Fan fx = fan_from_arrangement(ax);
  Fan fd = fan_from_arrangement(ad);
  Fan r = common_refinement({fx, fd});
  CHECK(r.maximal_cones().size() == 4);
  CHECK(check_fan(r).ok);
  CHECK(check_complete(r));
  CHECK(is_refinement(r, fx));
  CHECK(is_refinement(r, fd));
  // idempotence
  CHECK(fans_equal(common_refinement({fx, fx}), fx));
  // agreement with the union arrangement
  Fan direct = fan_from_arrangement(Arrangement::make(2, {vec({1, 0}), vec({1, -1})}));
  CHECK(fans_equal(r, direct));
}

TEST_CASE("common refinement of random arrangement fans matches union arrangement") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 15; ++trial) {
    int rank = 3;
    auto rnd_arr = [&](int m) {
      std::vector<IntVec> ns;
      for (int i = 0; i < m; ++i) {
        IntVec n(rank);
        for (int j = 0; j < rank; ++j) n[j] = d(rng);
        if (!is_zero(n)) ns.push_back(n);
      }
      return ns;
    };
    auto na = rnd_arr(3), nb = rnd_arr(3);
    Fan fa = fan_from_arrangement(Arrangement::make(rank, na));
    Fan fb = fan_from_arrangement(Arrangement::make(rank, nb));
    std::vector<IntVec> un = na;
    un.insert(un.end(), nb.begin(), nb.end());
    Fan expect = fan_from_arrangement(Arrangement::make(rank, un));
    Fan got = common_refinement({fa, fb});
    CHECK(fans_equal(got, expect));
    CHECK(is_refinement(got, fa));
    CHECK(is_refinement(got, fb));
  }
}

TEST_CASE("preimage fan") {
  Fan line = fan_from_arrangement(Arrangement::make(1, {vec({1})}));
  IntMat id = IntMat::identity(1);
  CHECK(fans_equal(preimage_fan(id, line), line));

  IntMat proj(1, 2);
  proj.at(0, 0) = 1;
  Fan halves = preimage_fan(proj, line);
  CHECK(halves.maximal_cones().size() == 2);
  for (const Cone& c : halves.maximal_cones()) CHECK(c.lineality_rank() == 1);
  CHECK(check_complete(halves));

  IntMat notsurj(2, 2);
  notsurj.at(0, 0) = 1;
  CHECK_THROWS(preimage_fan(notsurj, product_fan(line, line)));
}

TEST_CASE("preimage of the braid fan equals the pulled-back arrangement") {
  // project (a1, a2, x) -> (a1, a2); the preimage of the rank-2 braid fan is
  // the fan of the pulled-back braid arrangement, with lineality in x
  std::vector<IntVec> braid2 = {vec({1, 0}), vec({0, 1}), vec({1, -1})};
  Fan base = fan_from_arrangement(Arrangement::make(2, braid2));
  IntMat proj(2, 3);
  proj.at(0, 0) = 1;
  proj.at(1, 1) = 1;
  Fan pre = preimage_fan(proj, base);
  std::vector<IntVec> lifted;
  for (const auto& u : braid2) {
    IntVec w = u;
    w.push_back(0);
    lifted.push_back(w);
  }
  Fan expect = fan_from_arrangement(Arrangement::make(3, lifted));
  CHECK(fans_equal(pre, expect));
  for (const Cone& c : pre.maximal_cones()) CHECK(c.lineality_rank() == 1);
}

TEST_CASE("products and coordinate permutation") {
  Fan line = fan_from_arrangement(Arrangement::make(1, {vec({1})}));
  Fan square = product_fan(line, line);
  CHECK(square.maximal_cones().size() == 4);
  CHECK(check_fan(square).ok);
  CHECK(check_complete(square));
  Fan whole = fan_from_arrangement(Arrangement::make(1, {}));
  Fan halfspaces = product_fan(line, whole);
  CHECK(halfspaces.maximal_cones().size() == 2);
  for (const Cone& c : halfspaces.maximal_cones()) CHECK(c.lineality_rank() == 1);
  // swapping the two coordinates of the square fan fixes it
  Fan swapped = permute_coordinates(square, {1, 0});
  CHECK(fans_equal(swapped, square));
}

TEST_CASE("cone_containing descends to the right face") {
  Fan f = fan_from_arrangement(Arrangement::make(2, {vec({1, 0}), vec({0, 1})}));
  Cone c = cone_containing(f, RatVec{Rat(1), Rat(1)});
  CHECK(c.dim() == 2);
  Cone r = cone_containing(f, RatVec{Rat(1), Rat(0)});
  CHECK(r.dim() == 1);
  CHECK(r.rays()[0] == vec({1, 0}));
  Cone z = cone_containing(f, RatVec{Rat(0), Rat(0)});
  CHECK(z.is_zero());
}

TEST_CASE("f-vector of the quadrant fan") {
  Fan f = fan_from_arrangement(Arrangement::make(2, {vec({1, 0}), vec({0, 1})}));
  FVector fv = f_vector(f);
  CHECK(fv.counts == std::vector<size_t>{1, 4, 4});
}
