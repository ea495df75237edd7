#include "tcs/stacky.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace tcs {

struct StackyFan::Data {
  Fan fan;
  std::map<std::string, LatticeBasis> on_maximal;
  mutable std::unordered_map<std::string, LatticeBasis> cache;
};

StackyFan StackyFan::trivial(const Fan& f) { return with_sublattices(f, {}); }

StackyFan StackyFan::with_sublattices(const Fan& f,
                                      std::map<std::string, LatticeBasis> on_maximal) {
  StackyFan s;
  s.d_ = std::make_shared<Data>();
  s.d_->fan = f;
  for (const Cone& m : f.maximal_cones()) {
    auto it = on_maximal.find(m.key());
    if (it == on_maximal.end()) continue;
    if (it->second.ambient != f.ambient_rank())
      throw std::invalid_argument("stacky sublattice: ambient mismatch");
    if (it->second.rank() != m.dim())
      throw std::invalid_argument("stacky sublattice: not finite index in its span");
  }
  s.d_->on_maximal = std::move(on_maximal);
  return s;
}

StackyFan trivial_stacky(const Fan& f) { return StackyFan::trivial(f); }

const Fan& StackyFan::fan() const { return d_->fan; }

const LatticeBasis& StackyFan::sublattice(const Cone& sigma) const {
  auto hit = d_->cache.find(sigma.key());
  if (hit != d_->cache.end()) return hit->second;
  auto stored = d_->on_maximal.find(sigma.key());
  LatticeBasis out;
  if (stored != d_->on_maximal.end()) {
    out = stored->second;
  } else {
    int parent = d_->fan.parent_of(sigma);
    if (parent < 0) throw std::invalid_argument("sublattice: cone not in fan");
    const Cone& pc = d_->fan.maximal_cones()[size_t(parent)];
    if (pc == sigma) {
      out = sigma.span_lattice();
    } else {
      auto pl = d_->on_maximal.find(pc.key());
      LatticeBasis parent_lattice = pl != d_->on_maximal.end() ? pl->second : pc.span_lattice();
      out = lattice_intersect(parent_lattice, sigma.span_lattice());
    }
  }
  return d_->cache.emplace(sigma.key(), std::move(out)).first->second;
}

bool StackyFan::is_trivial() const {
  for (const Cone& m : d_->fan.maximal_cones())
    if (!(sublattice(m) == m.span_lattice())) return false;
  return true;
}

std::vector<Int> isotropy(const StackyFan& s, const Cone& sigma) {
  if (!s.fan().has_cone(sigma)) throw std::invalid_argument("isotropy: unknown cone");
  std::vector<Int> inv = quotient_invariants(s.sublattice(sigma), sigma.span_lattice());
  std::vector<Int> out;
  for (const Int& d : inv)
    if (d != 1) out.push_back(d);
  return out;
}

FanCheckReport check_stacky(const StackyFan& s) {
  const Fan& fan = s.fan();
  for (const Cone& m : fan.maximal_cones()) {
    const LatticeBasis& l = s.sublattice(m);
    if (l.rank() != m.dim()) return {false, "sublattice rank mismatch on a maximal cone"};
    if (!sublattice_of(l, m.span_lattice()))
      return {false, "sublattice not contained in the span lattice"};
  }
  // face compatibility against every containing maximal cone
  for (const Cone& tau : fan.all_cones()) {
    const LatticeBasis& derived = s.sublattice(tau);
    if (derived.rank() != tau.dim()) return {false, "face sublattice rank mismatch"};
    for (const Cone& m : fan.maximal_cones()) {
      if (!m.contains_cone(tau)) continue;
      LatticeBasis via = lattice_intersect(s.sublattice(m), tau.span_lattice());
      if (!(via == derived))
        return {false, "face compatibility fails between a face and a maximal cone"};
    }
  }
  return {};
}

SemistabilityReport check_weakly_semistable(const FanMap& m) {
  SemistabilityReport rep;
  if (m.matrix.cols != m.source.fan().ambient_rank() ||
      m.matrix.rows != m.target.fan().ambient_rank())
    throw std::invalid_argument("check_weakly_semistable: matrix shape mismatch");
  rep.lattice_surjective = rank_of(m.matrix) == m.matrix.rows;
  for (const Cone& sigma : m.source.fan().all_cones()) {
    Cone image = linear_image(m.matrix, sigma);
    if (!m.target.fan().has_cone(image)) {
      rep.ok = false;
      rep.violations.push_back("image of a source cone is not a target cone (dim " +
                               std::to_string(sigma.dim()) + ")");
      continue;
    }
    LatticeBasis mapped = image_lattice(m.matrix, m.source.sublattice(sigma));
    if (!(mapped == m.target.sublattice(image))) {
      rep.ok = false;
      rep.violations.push_back("sublattice image mismatch over a cone of dim " +
                               std::to_string(sigma.dim()));
    }
  }
  return rep;
}

}  // namespace tcs
