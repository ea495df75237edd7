#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "tcs/expansion.hpp"
#include "tcs/reference.hpp"

using namespace tcs;

namespace {

IntVec vec(const std::vector<int>& xs) {
  IntVec v;
  for (int x : xs) v.push_back(x);
  return v;
}
RatVec rvec(const std::vector<int>& xs) {
  RatVec v;
  for (int x : xs) v.push_back(Rat(x));
  return v;
}

const ConfigurationFan& chain_cf() {
  static ConfigurationFan cf = configuration_fan(minimal_scaffold(3));
  return cf;
}

const ConfigurationFan& square_cf() {
  static ConfigurationFan cf = configuration_fan(square_scaffold(2));
  return cf;
}

const ConfigurationFan& biperm_cf() {
  static ConfigurationFan cf = configuration_fan(biperm_scaffold(2));
  return cf;
}

// index of the ray equal to r in the cone's canonical ray order
int ray_index(const Cone& c, const IntVec& r) {
  for (size_t i = 0; i < c.rays().size(); ++i)
    if (c.rays()[i] == r) return int(i);
  return -1;
}

}  // namespace

TEST_CASE("generic fiber over the zero cone") {
  const auto& cf = chain_cf();
  auto [rho, rep] = locate(cf, rvec({0, 0, 0}));
  CHECK(rho.is_zero());
  CHECK(rep.stratum_dim == 3);
  CHECK(rep.fiber.vertices.size() == 1);
  // all marks on the single vertex at the origin
  for (int i = 0; i <= 3; ++i) CHECK(rep.markings.at(i) == rep.fiber.vertices[0]);
  // its component fan is the asymptotic fan of the scaffold: the full line fan
  CHECK(rep.component_fans.at(rep.fiber.vertices[0]).maximal_cones().size() == 2);
  // rubber lattice is trivial over the zero cone
  CHECK(rep.rubber.rubber_lattice.rank() == 0);
}

TEST_CASE("chain of three components over the two-equal-marks cone") {
  const auto& cf = chain_cf();
  auto [rho, rep] = locate(cf, rvec({1, 1, 2}));
  // the cone 0 <= a1 = a2 <= a3
  Cone expect = Cone::from_inequalities({vec({1, 0, 0}), vec({-1, 0, 1})},
                                        {vec({1, -1, 0})}, 3);
  CHECK(rho == expect);
  CHECK(rho.dim() == 2);
  CHECK(rep.stratum_dim == 1);

  // chain: three vertices, two bounded edges, two unbounded rays
  CHECK(rep.fiber.vertices.size() == 3);
  int bounded = 0, unbounded = 0;
  for (const auto& p : rep.fiber.polyhedra) {
    if (p.dim != 1) continue;
    (p.bounded ? bounded : unbounded)++;
  }
  CHECK(bounded == 2);
  CHECK(unbounded == 2);

  // markings: 0 at the origin vertex, 1 and 2 share the middle, 3 at the end
  CHECK(rep.markings.at(1) == rep.markings.at(2));
  CHECK(rep.markings.at(0) != rep.markings.at(1));
  CHECK(rep.markings.at(3) != rep.markings.at(1));
  CHECK(rep.fiber.vertex_position.at(rep.markings.at(0)) == rvec({0}));
  CHECK(rep.fiber.vertex_position.at(rep.markings.at(1)) == rvec({1}));
  CHECK(rep.fiber.vertex_position.at(rep.markings.at(3)) == rvec({2}));

  // rubber weights in the coordinates dual to the rays: 0, e1, e1+e2 where
  // e1 is dual to the all-ones ray and e2 to the last-coordinate ray
  int e1 = ray_index(rho, vec({1, 1, 1}));
  int e2 = ray_index(rho, vec({0, 0, 1}));
  REQUIRE(e1 >= 0);
  REQUIRE(e2 >= 0);
  const auto& p0 = rep.positions.at(rep.markings.at(0));
  const auto& p1 = rep.positions.at(rep.markings.at(1));
  const auto& p3 = rep.positions.at(rep.markings.at(3));
  REQUIRE(p0.on_rays);
  CHECK((*p0.on_rays)[e1] == RatVec{Rat(0)});
  CHECK((*p0.on_rays)[e2] == RatVec{Rat(0)});
  CHECK((*p1.on_rays)[e1] == RatVec{Rat(1)});
  CHECK((*p1.on_rays)[e2] == RatVec{Rat(0)});
  CHECK((*p3.on_rays)[e1] == RatVec{Rat(1)});
  CHECK((*p3.on_rays)[e2] == RatVec{Rat(1)});

  // rubber torus has rank two
  CHECK(rep.rubber.rubber_lattice.rank() == 2);
  // interior vertices carry the two-cone fan of the line
  for (int v : rep.fiber.vertices)
    CHECK(rep.component_fans.at(v).maximal_cones().size() == 2);
}

TEST_CASE("anchor map vanishes and stacked positions recover the sublattice") {
  const auto& cf = chain_cf();
  for (const Cone& rho : cf.pi_fan.fan().all_cones()) {
    StratumReport rep = stratum_report(cf, rho);
    // anchor invariant
    const auto& anchor = rep.positions.at(rep.markings.at(0));
    for (const auto& col : anchor.on_span_basis)
      for (const auto& x : col) CHECK(sgn(x) == 0);
    // gluing identity: stacked marking weights equal the inclusion of the
    // rubber sublattice
    const LatticeBasis& L = rep.rubber.rubber_lattice;
    for (int r = 0; r < L.basis.rows; ++r) {
      for (int i = 1; i <= cf.n(); ++i) {
        const IntMat& w = rep.positions.at(rep.markings.at(i)).on_sublattice;
        for (int j = 0; j < cf.d(); ++j)
          CHECK(w.at(j, r) == L.basis.at(r, cf.d() * (i - 1) + j));
      }
    }
    // dimension bookkeeping
    CHECK(rep.stratum_dim + rho.dim() == cf.n() * cf.d());
  }
}

TEST_CASE("square scaffold stratum of the worked example") {
  const auto& cf = square_cf();
  // rho: a1 <= a0 <= a2, b0 <= b2 <= b1 in coordinates (a1,b1,a2,b2)
  Cone rho = Cone::from_inequalities(
      {vec({-1, 0, 0, 0}), vec({0, 0, 1, 0}), vec({0, 0, 0, 1}), vec({0, 1, 0, -1})}, {}, 4);
  REQUIRE(cf.pi_fan.fan().has_cone(rho));
  StratumReport rep = stratum_report(cf, rho);

  CHECK(rep.rubber.rubber_lattice.rank() == 4);
  CHECK(rep.stratum_dim == 0);
  CHECK(rep.fiber.vertices.size() == 9);  // 3 x 3 patchwork grid

  int e1 = ray_index(rho, vec({-1, 0, 0, 0}));
  int e2 = ray_index(rho, vec({0, 0, 1, 0}));
  int f1 = ray_index(rho, vec({0, 1, 0, 1}));
  int f2 = ray_index(rho, vec({0, 1, 0, 0}));
  REQUIRE((e1 >= 0 && e2 >= 0 && f1 >= 0 && f2 >= 0));

  auto col = [](const RatVec& v) { return v; };
  const auto& phi1 = rep.positions.at(rep.markings.at(1));
  REQUIRE(phi1.on_rays);
  CHECK(col((*phi1.on_rays)[e1]) == RatVec{Rat(-1), Rat(0)});
  CHECK(col((*phi1.on_rays)[e2]) == RatVec{Rat(0), Rat(0)});
  CHECK(col((*phi1.on_rays)[f1]) == RatVec{Rat(0), Rat(1)});
  CHECK(col((*phi1.on_rays)[f2]) == RatVec{Rat(0), Rat(1)});
  const auto& phi2 = rep.positions.at(rep.markings.at(2));
  CHECK(col((*phi2.on_rays)[e1]) == RatVec{Rat(0), Rat(0)});
  CHECK(col((*phi2.on_rays)[e2]) == RatVec{Rat(1), Rat(0)});
  CHECK(col((*phi2.on_rays)[f1]) == RatVec{Rat(0), Rat(1)});
  CHECK(col((*phi2.on_rays)[f2]) == RatVec{Rat(0), Rat(0)});

  // each component is a quadrant (P1 x P1 patchwork)
  for (int v : rep.fiber.vertices)
    CHECK(rep.component_fans.at(v).maximal_cones().size() == 4);
  // markings on three distinct components
  CHECK(rep.markings.at(0) != rep.markings.at(1));
  CHECK(rep.markings.at(0) != rep.markings.at(2));
  CHECK(rep.markings.at(1) != rep.markings.at(2));
}

TEST_CASE("biperm scaffold stratum of the worked example") {
  const auto& cf = biperm_cf();
  auto [tau, rep] = locate(cf, RatVec{Rat(-3), Rat(4), Rat(3), Rat(3)});
  CHECK(rep.bisequence);
  CHECK(*rep.bisequence == "2|0|12|1");
  CHECK(tau.dim() == 3);
  CHECK(rep.stratum_dim == 1);
  CHECK(rep.rubber.rubber_lattice.rank() == 3);

  // the antidiagonal relation a1 + b2 = 0 cuts the cone
  bool found = false;
  for (const auto& e : tau.span_equations())
    if (e == vec({1, 0, 0, 1}) || e == vec({-1, 0, 0, -1})) found = true;
  CHECK(found);

  // eleven components: two hexagonal, nine quadrilateral
  CHECK(rep.fiber.vertices.size() == 11);
  int hex = 0, quad = 0;
  for (int v : rep.fiber.vertices) {
    size_t m = rep.component_fans.at(v).maximal_cones().size();
    if (m == 6) ++hex;
    if (m == 4) ++quad;
  }
  CHECK(hex == 2);
  CHECK(quad == 9);

  int e1 = ray_index(tau, vec({-1, 1, 0, 1}));
  int e2 = ray_index(tau, vec({0, 0, 1, 0}));
  int f2 = ray_index(tau, vec({0, 1, 0, 0}));
  REQUIRE((e1 >= 0 && e2 >= 0 && f2 >= 0));
  const auto& phi1 = rep.positions.at(rep.markings.at(1));
  REQUIRE(phi1.on_rays);
  CHECK((*phi1.on_rays)[e1] == RatVec{Rat(-1), Rat(1)});
  CHECK((*phi1.on_rays)[e2] == RatVec{Rat(0), Rat(0)});
  CHECK((*phi1.on_rays)[f2] == RatVec{Rat(0), Rat(1)});
  const auto& phi2 = rep.positions.at(rep.markings.at(2));
  CHECK((*phi2.on_rays)[e1] == RatVec{Rat(0), Rat(1)});
  CHECK((*phi2.on_rays)[e2] == RatVec{Rat(1), Rat(0)});
  CHECK((*phi2.on_rays)[f2] == RatVec{Rat(0), Rat(0)});
}

TEST_CASE("sliced scaffold n=1: antidiagonal passes through the anchor") {
  ConfigurationFan cf = configuration_fan(biperm_scaffold(1));
  // a1 < 0 < b1 with a1 + b1 > 0: the anchor realizes the minimum
  auto [rho, rep] = locate(cf, RatVec{Rat(-1), Rat(2)});
  (void)rho;
  CHECK(rep.bisequence);
  // grid plus one antidiagonal segment through the anchor: six vertices
  CHECK(rep.fiber.vertices.size() == 6);
  // the anchor component is hexagonal, the marked one stays a quadrant
  CHECK(rep.component_fans.at(rep.markings.at(0)).maximal_cones().size() == 6);
  CHECK(rep.component_fans.at(rep.markings.at(1)).maximal_cones().size() == 4);
}

TEST_CASE("square root stack station: weights double on the marked component") {
  Fan extra = fan_from_arrangement(Arrangement::make(2, {vec({-1, 2})}));
  Scaffold s = refine_scaffold(minimal_scaffold(1), extra);
  ConfigurationFan cf = configuration_fan(s);
  Cone ray = Cone::from_inequalities({vec({1})}, {}, 1);
  StratumReport rep = stratum_report(cf, ray);
  CHECK(rep.rubber.rubber_lattice == lattice_from_rows(1, {vec({2})}));
  // three vertices on the chain: anchor, empty middle, marked end
  CHECK(rep.fiber.vertices.size() == 3);
  IntMat w1 = rep.positions.at(rep.markings.at(1)).on_sublattice;
  REQUIRE((w1.rows == 1 && w1.cols == 1));
  CHECK(w1.at(0, 0) == 2);  // multiplication by two on the rubber lattice
  CHECK(rep.stabilizers.at(rep.markings.at(1)) == std::vector<Int>{2});
  // the unmarked middle vertex moves freely
  for (int v : rep.fiber.vertices) {
    if (v == rep.markings.at(0) || v == rep.markings.at(1)) continue;
    IntMat w = rep.positions.at(v).on_sublattice;
    CHECK(w.at(0, 0) == 1);
  }
}

TEST_CASE("fiber poset is constant on the relative interior") {
  const auto& cf = square_cf();
  for (const Cone& m : cf.pi_fan.fan().maximal_cones()) {
    FiberComplex a = fiber_complex_at(cf, m, m.relative_interior_point());
    FiberComplex b = fiber_complex_at(cf, m, m.relative_interior_point_variant());
    CHECK(a.poset_fingerprint() == b.poset_fingerprint());
  }
}

TEST_CASE("degeneration collapses vertices") {
  const auto& cf = chain_cf();
  const auto& cones = cf.pi_fan.fan().all_cones();
  for (const Cone& rho : cones) {
    FiberComplex frho = fiber_complex(cf, rho);
    for (const Cone& tau : cones) {
      if (tau.dim() >= rho.dim() || !is_face_of(tau, rho)) continue;
      FiberComplex ftau = fiber_complex(cf, tau);
      CHECK(ftau.vertices.size() <= frho.vertices.size());
    }
  }
}

TEST_CASE("bounded edges have distinct endpoints") {
  const auto& cf = square_cf();
  for (const Cone& m : cf.pi_fan.fan().maximal_cones()) {
    FiberComplex fc = fiber_complex(cf, m);
    for (size_t i = 0; i < fc.polyhedra.size(); ++i) {
      if (fc.polyhedra[i].dim != 1 || !fc.polyhedra[i].bounded) continue;
      std::vector<int> ends;
      for (int v : fc.vertices)
        if (fc.leq[size_t(v)][i]) ends.push_back(v);
      REQUIRE(ends.size() == 2);
      CHECK(!(fc.vertex_position.at(ends[0]) == fc.vertex_position.at(ends[1])));
    }
  }
}

TEST_CASE("locate rejects bad input") {
  CHECK_THROWS(locate(chain_cf(), rvec({1, 2})));
  // a cone that is not part of the fan
  Cone alien = Cone::from_generators({vec({1, 2, 3})}, {}, 3);
  CHECK_THROWS(fiber_complex(chain_cf(), alien));
  CHECK_THROWS(stratum_report(chain_cf(), alien));
}

TEST_CASE("fiber vertices of the minimal scaffold are the mark values") {
  const auto& cf = chain_cf();
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int t = 0; t < 25; ++t) {
    RatVec p(3);
    for (int j = 0; j < 3; ++j) p[j] = Rat(d(rng), 1 + (t % 3));
    auto [rho, rep] = locate(cf, p);
    (void)rho;
    std::set<Rat> expected{Rat(0)};
    for (const Rat& x : p) expected.insert(x);
    std::set<Rat> got;
    for (const auto& [v, pos] : rep.fiber.vertex_position) got.insert(pos[0]);
    CHECK(got == expected);
  }
}
