#include "tcs/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "tcs/expansion.hpp"
#include "tcs/json_io.hpp"
#include "tcs/reference.hpp"

namespace tcs {

namespace {

struct Ctx {
  int max_n;
  uint64_t seed;
  std::map<std::string, ConfigurationFan> cache;

  const ConfigurationFan& quotient(const std::string& kind, int n) {
    std::string key = kind + ":" + std::to_string(n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Scaffold s;
    if (kind == "lambda0") s = minimal_scaffold(n);
    else if (kind == "square") s = square_scaffold(n);
    else if (kind == "biperm") s = biperm_scaffold(n);
    else if (kind == "sqrt") {
      Fan extra = fan_from_arrangement(
          Arrangement::make(2, {IntVec{Int(-1), Int(2)}}));
      s = refine_scaffold(minimal_scaffold(1), extra);
    } else {
      throw std::invalid_argument("unknown corpus scaffold " + kind);
    }
    return cache.emplace(key, configuration_fan(s)).first->second;
  }
};

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

IntVec vec(const std::vector<int>& xs) {
  IntVec v;
  for (int x : xs) v.push_back(x);
  return v;
}

int ray_index(const Cone& c, const IntVec& r) {
  for (size_t i = 0; i < c.rays().size(); ++i)
    if (c.rays()[i] == r) return int(i);
  return -1;
}

void check_on_rays(const TropicalPositionMap& tpm, int ray, const std::vector<int>& want) {
  expect(bool(tpm.on_rays), "simplicial position data missing");
  const RatVec& got = (*tpm.on_rays)[size_t(ray)];
  expect(got.size() == want.size(), "position column has wrong dimension");
  for (size_t i = 0; i < want.size(); ++i)
    expect(got[i] == Rat(want[i]), "position column entry mismatch");
}

// --- targets ----------------------------------------------------------------

std::string t_permutahedron(Ctx& ctx) {
  std::ostringstream note;
  int hi = std::min(ctx.max_n, 4);
  for (int n = 1; n <= hi; ++n) {
    const ConfigurationFan& cf = ctx.quotient("lambda0", n);
    expect(fans_equal(cf.pi_fan.fan(), permutahedral_fan(n)),
           "quotient fan differs from the permutahedral fan at n=" + std::to_string(n));
    expect(cf.pi_fan.is_trivial(), "stacky data not trivial at n=" + std::to_string(n));
    for (const Cone& c : cf.pi_fan.fan().all_cones())
      expect(isotropy(cf.pi_fan, c).empty(), "nontrivial isotropy at n=" + std::to_string(n));
    expect(fans_equal(cf.refined.fan, permutahedral_fan(n + 1)),
           "refined scaffold is not the next permutahedral fan at n=" + std::to_string(n));
    note << "n=" << n << " ok (" << cf.pi_fan.fan().maximal_cones().size() << " maximal); ";
  }
  return note.str();
}

std::string t_square(Ctx& ctx) {
  std::ostringstream note;
  int hi = std::min(ctx.max_n, 2);
  for (int n = 1; n <= hi; ++n) {
    const ConfigurationFan& cf = ctx.quotient("square", n);
    expect(fans_equal(cf.pi_fan.fan(), square_permutahedral_fan(n)),
           "quotient fan differs from the square of the permutahedral fan at n=" +
               std::to_string(n));
    expect(cf.pi_fan.is_trivial(), "stacky data not trivial at n=" + std::to_string(n));
    note << "n=" << n << " ok (" << cf.pi_fan.fan().maximal_cones().size() << " maximal); ";
  }
  return note.str();
}

std::string t_bipermutahedron(Ctx& ctx) {
  std::ostringstream note;
  int hi = std::min(ctx.max_n, 2);
  for (int n = 1; n <= hi; ++n) {
    const ConfigurationFan& cf = ctx.quotient("biperm", n);
    expect(fans_equal(cf.pi_fan.fan(), bipermutahedral_fan(n)),
           "quotient fan differs from the bipermutahedral fan at n=" + std::to_string(n));
    expect(cf.pi_fan.is_trivial(), "stacky data not trivial at n=" + std::to_string(n));
    note << "n=" << n << " ok (" << cf.pi_fan.fan().maximal_cones().size() << " maximal); ";
  }
  return note.str();
}

std::string t_sqrt_stack(Ctx& ctx) {
  const ConfigurationFan& cf = ctx.quotient("sqrt", 1);
  Fan expect_fan = fan_from_arrangement(Arrangement::make(1, {vec({1})}));
  expect(fans_equal(cf.pi_fan.fan(), expect_fan), "quotient is not the three-cone line fan");
  LatticeBasis two = lattice_from_rows(1, {vec({2})});
  for (const Cone& m : cf.pi_fan.fan().maximal_cones()) {
    expect(cf.pi_fan.sublattice(m) == two, "ray sublattice is not index two");
    expect(isotropy(cf.pi_fan, m) == std::vector<Int>{2}, "ray isotropy is not [2]");
  }
  Cone ray = Cone::from_inequalities({vec({1})}, {}, 1);
  StratumReport rep = stratum_report(cf, ray);
  const IntMat& w = rep.positions.at(rep.markings.at(1)).on_sublattice;
  expect(w.rows == 1 && w.cols == 1 && w.at(0, 0) == 2,
         "marked-vertex position map is not multiplication by two");
  return "index-two sublattices on both rays; marked weight 2";
}

std::string t_chain_stratum(Ctx& ctx) {
  const ConfigurationFan& cf = ctx.quotient("lambda0", 3);
  auto [rho, rep] = locate(cf, RatVec{Rat(1), Rat(1), Rat(2)});
  Cone want = Cone::from_inequalities({vec({1, 0, 0}), vec({-1, 0, 1})}, {vec({1, -1, 0})}, 3);
  expect(rho == want, "located cone differs from the two-equal-marks cone");
  expect(rep.fiber.vertices.size() == 3, "chain does not have three components");
  int e1 = ray_index(rho, vec({1, 1, 1})), e2 = ray_index(rho, vec({0, 0, 1}));
  expect(e1 >= 0 && e2 >= 0, "expected rays missing");
  check_on_rays(rep.positions.at(rep.markings.at(0)), e1, {0});
  check_on_rays(rep.positions.at(rep.markings.at(0)), e2, {0});
  check_on_rays(rep.positions.at(rep.markings.at(1)), e1, {1});
  check_on_rays(rep.positions.at(rep.markings.at(1)), e2, {0});
  check_on_rays(rep.positions.at(rep.markings.at(3)), e1, {1});
  check_on_rays(rep.positions.at(rep.markings.at(3)), e2, {1});
  expect(rep.markings.at(1) == rep.markings.at(2), "marks one and two are not together");
  return "chain of three; weights 0, e1, e1+e2";
}

std::string t_square_stratum(Ctx& ctx) {
  const ConfigurationFan& cf = ctx.quotient("square", 2);
  Cone rho = Cone::from_inequalities(
      {vec({-1, 0, 0, 0}), vec({0, 0, 1, 0}), vec({0, 0, 0, 1}), vec({0, 1, 0, -1})}, {}, 4);
  expect(cf.pi_fan.fan().has_cone(rho), "the worked-example cone is missing");
  StratumReport rep = stratum_report(cf, rho);
  expect(rep.rubber.rubber_lattice.rank() == 4, "rubber rank is not four");
  expect(rep.stratum_dim == 0, "stratum dimension is not zero");
  int e1 = ray_index(rho, vec({-1, 0, 0, 0})), e2 = ray_index(rho, vec({0, 0, 1, 0}));
  int f1 = ray_index(rho, vec({0, 1, 0, 1})), f2 = ray_index(rho, vec({0, 1, 0, 0}));
  expect(e1 >= 0 && e2 >= 0 && f1 >= 0 && f2 >= 0, "expected rays missing");
  const auto& phi1 = rep.positions.at(rep.markings.at(1));
  check_on_rays(phi1, e1, {-1, 0});
  check_on_rays(phi1, e2, {0, 0});
  check_on_rays(phi1, f1, {0, 1});
  check_on_rays(phi1, f2, {0, 1});
  const auto& phi2 = rep.positions.at(rep.markings.at(2));
  check_on_rays(phi2, e1, {0, 0});
  check_on_rays(phi2, e2, {1, 0});
  check_on_rays(phi2, f1, {0, 1});
  check_on_rays(phi2, f2, {0, 0});
  return "rubber rank 4, stratum dim 0, position maps (-e1, f1+f2) and (e2, f1)";
}

std::string t_biperm_stratum(Ctx& ctx) {
  const ConfigurationFan& cf = ctx.quotient("biperm", 2);
  auto [tau, rep] = locate(cf, RatVec{Rat(-3), Rat(4), Rat(3), Rat(3)});
  expect(rep.bisequence && *rep.bisequence == "2|0|12|1", "bisequence label mismatch");
  expect(rep.rubber.rubber_lattice.rank() == 3, "rubber rank is not three");
  expect(rep.stratum_dim == 1, "stratum dimension is not one");
  bool eq_found = false;
  for (const auto& e : tau.span_equations())
    if (e == vec({1, 0, 0, 1}) || e == vec({-1, 0, 0, -1})) eq_found = true;
  expect(eq_found, "cone equation a1 + b2 = 0 missing");
  expect(rep.fiber.vertices.size() == 11, "fiber does not have eleven components");
  int hex = 0, quad = 0;
  for (int v : rep.fiber.vertices) {
    size_t m = rep.component_fans.at(v).maximal_cones().size();
    if (m == 6) ++hex;
    else if (m == 4) ++quad;
  }
  expect(hex == 2 && quad == 9, "component shapes are not two hexagons and nine quads");
  int e1 = ray_index(tau, vec({-1, 1, 0, 1})), e2 = ray_index(tau, vec({0, 0, 1, 0}));
  int f2 = ray_index(tau, vec({0, 1, 0, 0}));
  expect(e1 >= 0 && e2 >= 0 && f2 >= 0, "expected rays missing");
  const auto& phi1 = rep.positions.at(rep.markings.at(1));
  check_on_rays(phi1, e1, {-1, 1});
  check_on_rays(phi1, e2, {0, 0});
  check_on_rays(phi1, f2, {0, 1});
  const auto& phi2 = rep.positions.at(rep.markings.at(2));
  check_on_rays(phi2, e1, {0, 1});
  check_on_rays(phi2, e2, {1, 0});
  check_on_rays(phi2, f2, {0, 0});
  return "rubber rank 3, stratum dim 1, two hexagonal of eleven components";
}

std::string t_certificates(Ctx& ctx) {
  std::ostringstream note;
  std::vector<std::pair<std::string, int>> corpus = {
      {"lambda0", 1}, {"lambda0", 2}, {"lambda0", 3}, {"lambda0", 4},
      {"sqrt", 1},    {"square", 1},  {"square", 2},  {"biperm", 1},
      {"biperm", 2}};
  if (ctx.max_n < 4) {
    corpus = {{"lambda0", 1}, {"lambda0", 2}, {"sqrt", 1}, {"square", 1}, {"biperm", 1}};
  }
  for (const auto& [kind, n] : corpus) {
    const ConfigurationFan& cf = ctx.quotient(kind, n);
    FanMap pi{cf.projection, cf.refined_stacky, cf.pi_fan};
    auto pr = check_weakly_semistable(pi);
    expect(pr.ok && pr.lattice_surjective,
           "projection not weakly semistable for " + kind + " n=" + std::to_string(n));
    for (int i = 0; i <= cf.n(); ++i) {
      FanMap sec{cf.sections[size_t(i)], cf.pi_fan, cf.refined_stacky};
      expect(check_weakly_semistable(sec).ok,
             "section " + std::to_string(i) + " not weakly semistable for " + kind);
    }
    expect(check_terminality(cf).ok, "terminality fails for " + kind);
    expect(check_stacky(cf.pi_fan).ok, "stacky face compatibility fails for " + kind);
    // anchor and gluing identities over every cone
    for (const Cone& rho : cf.pi_fan.fan().all_cones()) {
      StratumReport rep = stratum_report(cf, rho);
      const auto& anchor = rep.positions.at(rep.markings.at(0));
      for (const auto& col : anchor.on_span_basis)
        for (const auto& x : col) expect(sgn(x) == 0, "anchor position map is nonzero");
      const LatticeBasis& L = rep.rubber.rubber_lattice;
      for (int r = 0; r < L.basis.rows; ++r)
        for (int i = 1; i <= cf.n(); ++i) {
          const IntMat& w = rep.positions.at(rep.markings.at(i)).on_sublattice;
          for (int j = 0; j < cf.d(); ++j)
            expect(w.at(j, r) == L.basis.at(r, cf.d() * (i - 1) + j),
                   "stacked position maps do not recover the sublattice inclusion");
        }
      expect(rep.stratum_dim + rho.dim() == cf.n() * cf.d(), "dimension bookkeeping fails");
    }
    note << kind << "(" << n << ") ok; ";
  }
  return note.str();
}

std::string t_properties(Ctx& ctx) {
  std::mt19937_64 rng(ctx.seed);
  int cases = 0;

  // dual description round trips
  {
    std::uniform_int_distribution<int> d(-4, 4), nn(1, 6), rk(1, 5);
    for (int t = 0; t < 400; ++t) {
      int rank = rk(rng);
      std::vector<IntVec> normals;
      int m = nn(rng);
      for (int i = 0; i < m; ++i) {
        IntVec u(rank);
        for (int j = 0; j < rank; ++j) u[j] = d(rng);
        if (!is_zero(u)) normals.push_back(u);
      }
      Cone c = Cone::from_inequalities(normals, {}, rank);
      Cone back = Cone::from_inequalities(c.facet_normals(), c.span_equations(), rank);
      expect(back == c, "dual description round trip fails");
      ++cases;
    }
  }

  // lattice intersection against solve-based membership on a box
  {
    std::uniform_int_distribution<int> d(-3, 3);
    auto member = [](const LatticeBasis& l, const IntVec& z) {
      if (l.rank() == 0) return is_zero(z);
      auto x = solve_rational(l.basis.transposed(), to_rational(z));
      if (!x) return false;
      for (const Rat& q : *x)
        if (q.get_den() != 1) return false;
      return true;
    };
    for (int t = 0; t < 300; ++t) {
      std::vector<IntVec> ga, gb;
      for (int i = 0; i < 3; ++i) {
        IntVec ra(3), rb(3);
        for (int j = 0; j < 3; ++j) {
          ra[j] = d(rng);
          rb[j] = d(rng);
        }
        ga.push_back(ra);
        gb.push_back(rb);
      }
      LatticeBasis la = lattice_from_rows(3, ga), lb = lattice_from_rows(3, gb);
      LatticeBasis li = lattice_intersect(la, lb);
      IntVec z(3);
      std::uniform_int_distribution<int> bx(-4, 4);
      for (int j = 0; j < 3; ++j) z[j] = bx(rng);
      bool in_both = member(la, z) && member(lb, z);
      expect(member(li, z) == in_both, "intersection membership mismatch");
      ++cases;
    }
  }

  // common refinement against the union arrangement
  {
    std::uniform_int_distribution<int> d(-2, 2), rk(2, 4);
    for (int t = 0; t < 150; ++t) {
      int rank = rk(rng);
      auto rnd_arr = [&](int m) {
        std::vector<IntVec> ns;
        for (int i = 0; i < m; ++i) {
          IntVec u(rank);
          for (int j = 0; j < rank; ++j) u[j] = d(rng);
          if (!is_zero(u)) ns.push_back(u);
        }
        return ns;
      };
      auto na = rnd_arr(3), nb = rnd_arr(2);
      Fan fa = fan_from_arrangement(Arrangement::make(rank, na));
      Fan fb = fan_from_arrangement(Arrangement::make(rank, nb));
      std::vector<IntVec> both = na;
      both.insert(both.end(), nb.begin(), nb.end());
      Fan direct = fan_from_arrangement(Arrangement::make(rank, both));
      Fan ref = common_refinement({fa, fb});
      expect(fans_equal(ref, direct), "common refinement differs from the union arrangement");
      expect(is_refinement(ref, fa) && is_refinement(ref, fb), "refinement relation fails");
      ++cases;
    }
  }

  // fiber poset constancy across two interior samples per maximal cone
  {
    for (const auto& [kind, n] : std::vector<std::pair<std::string, int>>{
             {"lambda0", 3}, {"square", 1}, {"sqrt", 1}, {"biperm", 1}}) {
      const ConfigurationFan& cf = ctx.quotient(kind, n);
      for (const Cone& m : cf.pi_fan.fan().maximal_cones()) {
        FiberComplex a = fiber_complex_at(cf, m, m.relative_interior_point());
        FiberComplex b = fiber_complex_at(cf, m, m.relative_interior_point_variant());
        expect(a.poset_fingerprint() == b.poset_fingerprint(),
               "fiber poset depends on the sample point");
        ++cases;
      }
    }
    const ConfigurationFan& cf4 = ctx.quotient("lambda0", 4);
    for (const Cone& m : cf4.pi_fan.fan().maximal_cones()) {
      FiberComplex a = fiber_complex_at(cf4, m, m.relative_interior_point());
      FiberComplex b = fiber_complex_at(cf4, m, m.relative_interior_point_variant());
      expect(a.poset_fingerprint() == b.poset_fingerprint(),
             "fiber poset depends on the sample point");
      ++cases;
    }
  }

  return std::to_string(cases) + " cases";
}

using Target = std::function<std::string(Ctx&)>;

const std::vector<std::pair<std::string, Target>>& targets() {
  static const std::vector<std::pair<std::string, Target>> t = {
      {"permutahedron", t_permutahedron},
      {"square", t_square},
      {"bipermutahedron", t_bipermutahedron},
      {"sqrt-stack", t_sqrt_stack},
      {"chain-stratum", t_chain_stratum},
      {"square-stratum", t_square_stratum},
      {"biperm-stratum", t_biperm_stratum},
      {"certificates", t_certificates},
      {"properties", t_properties},
  };
  return t;
}

}  // namespace

std::vector<std::string> verify_target_names() {
  std::vector<std::string> names;
  for (const auto& [n, f] : targets()) names.push_back(n);
  return names;
}

std::vector<VerifyResult> run_verify(const std::string& name_or_all, int max_n, uint64_t seed) {
  Ctx ctx{max_n, seed, {}};
  std::vector<VerifyResult> out;
  bool matched = false;
  for (const auto& [name, fn] : targets()) {
    if (name_or_all != "all" && name_or_all != name) continue;
    matched = true;
    VerifyResult r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      r.detail = fn(ctx);
      r.pass = true;
    } catch (const Failure& f) {
      r.pass = false;
      r.detail = f.what;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  if (!matched) throw std::invalid_argument("unknown verify target: " + name_or_all);
  return out;
}

}  // namespace tcs
