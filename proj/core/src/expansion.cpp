#include "tcs/expansion.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tcs/reference.hpp"

namespace tcs {

std::string FiberComplex::poset_fingerprint() const {
  std::ostringstream os;
  for (size_t i = 0; i < polyhedra.size(); ++i) {
    os << polyhedra[i].dim << (polyhedra[i].bounded ? 'b' : 'u') << ':';
    for (size_t j = 0; j < polyhedra.size(); ++j)
      if (leq[i][j]) os << j << ',';
    os << ';';
  }
  return os.str();
}

namespace {

// unique preimage of w under the projection restricted to span(cone)
RatVec lift_to_span(const Cone& up, const IntMat& pi, const RatVec& w) {
  LatticeBasis span = up.span_lattice();
  IntMat m(pi.rows, span.basis.rows);
  for (int c = 0; c < span.basis.rows; ++c) {
    IntVec img = mat_apply(pi, span.basis.row(c));
    for (int r = 0; r < pi.rows; ++r) m.at(r, c) = img[r];
  }
  auto coeff = solve_rational(m, w);
  if (!coeff) throw std::runtime_error("lift_to_span: point not in the image span");
  RatVec out(size_t(pi.cols), Rat(0));
  for (int c = 0; c < span.basis.rows; ++c)
    for (int j = 0; j < pi.cols; ++j) out[size_t(j)] += (*coeff)[size_t(c)] * Rat(span.basis.at(c, j));
  return out;
}

RatVec fiber_block(const ConfigurationFan& cf, const RatVec& total) {
  int d = cf.d(), base = cf.scaffold.base_rank();
  RatVec x(static_cast<size_t>(d));
  for (int r = 0; r < d; ++r) x[size_t(r)] = total[size_t(base + r)];
  return x;
}

}  // namespace

FiberComplex fiber_complex_at(const ConfigurationFan& cf, const Cone& rho,
                              const RatVec& base_point) {
  int idx = cf.pi_fan.fan().cone_index(rho);
  if (idx < 0) throw std::invalid_argument("fiber_complex: unknown cone");
  const auto& bucket = cf.fiber_cones[size_t(idx)];
  const auto& up = cf.refined.fan.all_cones();

  FiberComplex fc;
  fc.rho = rho;
  fc.base_point = base_point;
  Cone kernel = Cone::from_inequalities({}, cf.projection.row_list(), cf.scaffold.total_rank());
  for (int ui : bucket) {
    FiberPolyhedron p;
    p.cone_index = ui;
    p.dim = up[size_t(ui)].dim() - rho.dim();
    p.bounded = intersect(up[size_t(ui)], kernel).is_zero();
    fc.polyhedra.push_back(p);
  }
  size_t m = fc.polyhedra.size();
  fc.leq.assign(m, std::vector<bool>(m, false));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      if (i == j) {
        fc.leq[i][j] = true;
        continue;
      }
      const Cone& a = up[size_t(fc.polyhedra[i].cone_index)];
      const Cone& b = up[size_t(fc.polyhedra[j].cone_index)];
      fc.leq[i][j] = fc.polyhedra[i].dim <= fc.polyhedra[j].dim && b.contains_cone(a);
    }
  for (size_t i = 0; i < m; ++i)
    if (fc.polyhedra[i].dim == 0) {
      fc.vertices.push_back(int(i));
      RatVec total =
          lift_to_span(up[size_t(fc.polyhedra[i].cone_index)], cf.projection, base_point);
      fc.vertex_position[int(i)] = fiber_block(cf, total);
    }
  return fc;
}

FiberComplex fiber_complex(const ConfigurationFan& cf, const Cone& rho) {
  return fiber_complex_at(cf, rho, rho.relative_interior_point());
}

std::map<int, int> marking_vertices(const ConfigurationFan& cf, const FiberComplex& fc) {
  const auto& up = cf.refined.fan.all_cones();
  std::map<int, int> out;
  for (int i = 0; i <= cf.n(); ++i) {
    std::vector<IntVec> eqs = section_equations(cf.refined, i);
    int found = -1;
    for (int v : fc.vertices) {
      const Cone& c = up[size_t(fc.polyhedra[size_t(v)].cone_index)];
      bool inside = true;
      for (const auto& e : eqs) {
        for (const auto& g : c.generators())
          if (sgn(dot(e, g)) != 0) {
            inside = false;
            break;
          }
        if (!inside) break;
      }
      if (!inside) continue;
      if (found >= 0) throw std::runtime_error("marking_vertices: mark supported on two vertices");
      found = v;
    }
    if (found < 0) throw std::runtime_error("marking_vertices: mark has no supporting vertex");
    out[i] = found;
  }
  return out;
}

std::map<int, TropicalPositionMap> position_maps(const ConfigurationFan& cf,
                                                 const FiberComplex& fc) {
  const auto& up = cf.refined.fan.all_cones();
  LatticeBasis span = fc.rho.span_lattice();
  const LatticeBasis& sub = cf.pi_fan.sublattice(fc.rho);
  bool simplicial = int(fc.rho.rays().size()) == fc.rho.dim() && fc.rho.lineality_rank() == 0;
  std::map<int, TropicalPositionMap> out;
  for (int v : fc.vertices) {
    const Cone& c = up[size_t(fc.polyhedra[size_t(v)].cone_index)];
    TropicalPositionMap tpm;
    tpm.vertex = v;
    for (int r = 0; r < span.basis.rows; ++r) {
      RatVec w = to_rational(span.basis.row(r));
      tpm.on_span_basis.push_back(fiber_block(cf, lift_to_span(c, cf.projection, w)));
    }
    tpm.on_sublattice = IntMat(cf.d(), sub.basis.rows);
    for (int r = 0; r < sub.basis.rows; ++r) {
      RatVec w = to_rational(sub.basis.row(r));
      RatVec x = fiber_block(cf, lift_to_span(c, cf.projection, w));
      for (int j = 0; j < cf.d(); ++j) {
        if (x[size_t(j)].get_den() != 1)
          throw std::runtime_error("position map is not integral on the rubber sublattice");
        tpm.on_sublattice.at(j, r) = x[size_t(j)].get_num();
      }
    }
    if (simplicial) {
      std::vector<RatVec> on_rays;
      for (const auto& ray : fc.rho.rays())
        on_rays.push_back(fiber_block(cf, lift_to_span(c, cf.projection, to_rational(ray))));
      tpm.on_rays = std::move(on_rays);
    }
    out[v] = std::move(tpm);
  }
  return out;
}

RubberData rubber_data(const ConfigurationFan& cf, const Cone& rho) {
  RubberData rd;
  rd.rho = rho;
  rd.rubber_lattice = cf.pi_fan.sublattice(rho);
  rd.stratum_dim = cf.n() * cf.d() - rho.dim();
  FiberComplex fc = fiber_complex(cf, rho);
  for (auto& [v, tpm] : position_maps(cf, fc)) rd.weights[v] = tpm.on_sublattice;
  return rd;
}

Fan component_fan(const ConfigurationFan& cf, const FiberComplex& fc, int vertex) {
  const auto& up = cf.refined.fan.all_cones();
  auto pos_it = fc.vertex_position.find(vertex);
  if (pos_it == fc.vertex_position.end())
    throw std::invalid_argument("component_fan: not a vertex of the fiber complex");
  int d = cf.d(), base = cf.scaffold.base_rank();
  RatVec total(size_t(base + d));
  for (int r = 0; r < base; ++r) total[size_t(r)] = fc.base_point[size_t(r)];
  for (int r = 0; r < d; ++r) total[size_t(base + r)] = pos_it->second[size_t(r)];
  std::vector<Cone> maximal;
  for (size_t j = 0; j < fc.polyhedra.size(); ++j) {
    if (!fc.leq[size_t(vertex)][j]) continue;
    if (fc.polyhedra[j].dim != d) continue;
    const Cone& c = up[size_t(fc.polyhedra[j].cone_index)];
    std::vector<IntVec> normals, eqs;
    for (const auto& u : c.facet_normals()) {
      if (sgn(dot(u, total)) != 0) continue;  // inactive at the vertex
      IntVec ux(static_cast<size_t>(d));
      for (int r = 0; r < d; ++r) ux[size_t(r)] = u[size_t(base + r)];
      normals.push_back(std::move(ux));
    }
    for (const auto& e : c.span_equations()) {
      IntVec ex(static_cast<size_t>(d));
      for (int r = 0; r < d; ++r) ex[size_t(r)] = e[size_t(base + r)];
      eqs.push_back(std::move(ex));
    }
    Cone tangent = Cone::from_inequalities(normals, eqs, d);
    if (tangent.dim() == d) maximal.push_back(tangent);
  }
  return Fan::from_maximal(std::move(maximal), d);
}

namespace {

StratumReport assemble_report(const ConfigurationFan& cf, const Cone& rho, FiberComplex fc) {
  StratumReport rep;
  rep.rho = rho;
  rep.stratum_dim = cf.n() * cf.d() - rho.dim();
  rep.fiber = std::move(fc);
  rep.markings = marking_vertices(cf, rep.fiber);
  rep.positions = position_maps(cf, rep.fiber);
  rep.rubber.rho = rho;
  rep.rubber.rubber_lattice = cf.pi_fan.sublattice(rho);
  rep.rubber.stratum_dim = rep.stratum_dim;
  for (auto& [v, tpm] : rep.positions) rep.rubber.weights[v] = tpm.on_sublattice;
  for (int v : rep.fiber.vertices) {
    rep.component_fans.emplace(v, component_fan(cf, rep.fiber, v));
    std::vector<Int> inv = snf_invariants(rep.positions[v].on_sublattice);
    std::vector<Int> nontrivial;
    for (const Int& x : inv)
      if (x != 1) nontrivial.push_back(x);
    rep.stabilizers[v] = std::move(nontrivial);
  }
  if (cf.d() == 2) rep.bisequence = bisequence_of(rep.fiber.base_point);
  return rep;
}

}  // namespace

StratumReport stratum_report(const ConfigurationFan& cf, const Cone& rho) {
  return assemble_report(cf, rho, fiber_complex(cf, rho));
}

std::pair<Cone, StratumReport> locate(const ConfigurationFan& cf, const RatVec& p) {
  if (int(p.size()) != cf.scaffold.base_rank())
    throw std::invalid_argument("locate: point dimension mismatch");
  Cone rho = cone_containing(cf.pi_fan.fan(), p);
  return {rho, assemble_report(cf, rho, fiber_complex_at(cf, rho, p))};
}

}  // namespace tcs
