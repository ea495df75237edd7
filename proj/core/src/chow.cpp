#include "tcs/chow.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tcs {

namespace {

IntVec sign_normalized(IntVec v) {
  make_primitive(v);
  for (const Int& x : v) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0) v = negated(v);
    break;
  }
  return v;
}

// Distinct full-dimensional images of the scaffold cones under the
// projection, sorted canonically.
std::vector<Cone> full_dim_images(const Scaffold& s, const IntMat& pi) {
  std::map<std::string, Cone> images;
  for (const Cone& c : s.fan.all_cones()) {
    Cone img = linear_image(pi, c);
    if (img.dim() == s.base_rank()) images.emplace(img.key(), img);
  }
  std::vector<Cone> out;
  for (auto& [k, c] : images) out.push_back(c);
  return out;
}

std::vector<bool> containing_set(const std::vector<Cone>& images, const RatVec& p) {
  std::vector<bool> s(images.size());
  for (size_t i = 0; i < images.size(); ++i)
    s[i] = images[i].contains(p) != Position::outside;
  return s;
}

[[noreturn]] void certificate_failure(const std::string& what) {
  throw std::runtime_error("configuration_fan certificate failed: " + what);
}

}  // namespace

ConfigurationFan configuration_fan(const Scaffold& s, LatticeQuantifier q) {
  ConfigurationFan cf;
  cf.scaffold = s;
  int base = s.base_rank();
  cf.projection = projection_matrix(s);
  for (int i = 0; i <= s.n; ++i) cf.sections.push_back(section_matrix(s, i));

  // (1) overlay data: distinct full-dimensional images and their facets
  std::vector<Cone> images = full_dim_images(s, cf.projection);
  std::set<IntVec> hyperplanes;
  for (const Cone& img : images)
    for (const auto& u : img.facet_normals()) hyperplanes.insert(sign_normalized(u));

  // (2) chambers of the facet arrangement, by incremental splitting
  std::vector<Cone> chambers{Cone::full_space(base)};
  for (const auto& h : hyperplanes) {
    std::vector<Cone> next;
    next.reserve(chambers.size());
    for (const Cone& c : chambers) {
      bool pos = false, neg = false;
      for (const auto& g : c.generators()) {
        int sg = sgn(dot(h, g));
        if (sg > 0) pos = true;
        if (sg < 0) neg = true;
      }
      if (pos && neg) {
        next.push_back(intersect_halfspace(c, h));
        next.push_back(intersect_halfspace(c, negated(h)));
      } else {
        next.push_back(c);
      }
    }
    chambers = std::move(next);
  }

  // (3) merge chambers with equal containing-image sets
  std::map<std::vector<bool>, Cone> classes;
  for (const Cone& c : chambers) {
    std::vector<bool> key = containing_set(images, c.relative_interior_point());
    if (std::none_of(key.begin(), key.end(), [](bool b) { return b; }))
      certificate_failure("a chamber lies in no projected cone; scaffold not complete");
    auto it = classes.find(key);
    if (it != classes.end()) continue;
    std::vector<IntVec> normals;
    for (size_t i = 0; i < key.size(); ++i) {
      if (!key[i]) continue;
      for (const auto& u : images[i].facet_normals()) normals.push_back(u);
    }
    Cone merged = Cone::from_inequalities(normals, {}, base);
    if (merged.dim() != base) certificate_failure("merged region is not full-dimensional");
    classes.emplace(std::move(key), std::move(merged));
  }
  for (const Cone& c : chambers) {
    const Cone& merged = classes.at(containing_set(images, c.relative_interior_point()));
    if (!merged.contains_cone(c)) certificate_failure("chamber escapes its merged region");
  }

  std::vector<Cone> maximal;
  for (auto& [key, c] : classes) maximal.push_back(c);
  {
    std::map<std::string, Cone> dedup;
    for (const Cone& c : maximal) {
      if (dedup.count(c.key())) certificate_failure("two containing-image sets share a region");
      dedup.emplace(c.key(), c);
    }
  }
  Fan pi_fan = Fan::from_maximal(std::move(maximal), base);
  FanCheckReport fr = check_fan(pi_fan);
  if (!fr.ok) certificate_failure("overlay is not a fan: " + fr.detail);
  if (!check_complete(pi_fan)) certificate_failure("overlay fan is not complete");
  pi_fan.cache_complete(true);

  // (4) refine the scaffold so the projection becomes a map of fans
  if (!s.fan.completeness_cache()) {
    if (!check_complete(s.fan)) certificate_failure("input scaffold fan is not complete");
    s.fan.cache_complete(true);
  }
  Fan refined_fan = common_refinement({s.fan, preimage_fan(cf.projection, pi_fan)});
  cf.refined.n = s.n;
  cf.refined.d = s.d;
  cf.refined.kind = "refined";
  cf.refined.fan = refined_fan;

  // (5) fibration index and quotient sublattices
  const auto& up = refined_fan.all_cones();
  const auto& down = pi_fan.all_cones();
  cf.fiber_cones.assign(down.size(), {});
  std::vector<int> image_of(up.size(), -1);
  for (size_t i = 0; i < up.size(); ++i) {
    Cone img = linear_image(cf.projection, up[i]);
    int at = pi_fan.cone_index(img);
    if (at < 0) certificate_failure("a refined cone does not map onto a quotient cone");
    image_of[i] = at;
    cf.fiber_cones[size_t(at)].push_back(int(i));
  }

  std::vector<LatticeBasis> down_lattice(down.size());
  for (size_t r = 0; r < down.size(); ++r) {
    if (cf.fiber_cones[r].empty()) certificate_failure("a quotient cone has an empty fiber");
    bool first = true;
    LatticeBasis acc;
    for (int ui : cf.fiber_cones[r]) {
      LatticeBasis img = image_lattice(cf.projection, up[size_t(ui)].span_lattice());
      acc = first ? img : lattice_intersect(acc, img);
      first = false;
    }
    down_lattice[r] = acc;
    if (acc.rank() != down[r].dim())
      certificate_failure("quotient sublattice does not have finite index");
  }
  if (q == LatticeQuantifier::image_contains) {
    // intersect over every cone whose image contains rho
    std::vector<LatticeBasis> wide(down.size());
    for (size_t r = 0; r < down.size(); ++r) {
      LatticeBasis acc = down_lattice[r];
      for (size_t t = 0; t < down.size(); ++t) {
        if (t == r || !down[t].contains_cone(down[r])) continue;
        acc = lattice_intersect(acc, lattice_intersect(down_lattice[t], down[r].span_lattice()));
      }
      wide[r] = acc;
    }
    down_lattice = std::move(wide);
  }

  std::map<std::string, LatticeBasis> down_max;
  for (const Cone& m : pi_fan.maximal_cones()) down_max[m.key()] = down_lattice[size_t(pi_fan.cone_index(m))];
  cf.pi_fan = StackyFan::with_sublattices(pi_fan, down_max);

  // face compatibility of the directly computed lattices
  for (size_t r = 0; r < down.size(); ++r)
    if (!(cf.pi_fan.sublattice(down[r]) == down_lattice[r]))
      certificate_failure("quotient sublattices are not face-compatible");

  // (6) pulled-back sublattices upstairs and weak semistability of the
  // projection, cone by cone
  std::vector<LatticeBasis> up_lattice(up.size());
  for (size_t i = 0; i < up.size(); ++i) {
    LatticeBasis span = up[i].span_lattice();
    IntMat to_base(span.basis.rows, base);
    for (int r = 0; r < span.basis.rows; ++r) {
      IntVec img = mat_apply(cf.projection, span.basis.row(r));
      to_base.set_row(r, img);
    }
    LatticeBasis coeffs = preimage_lattice(to_base, down_lattice[size_t(image_of[i])]);
    std::vector<IntVec> gens;
    for (int r = 0; r < coeffs.basis.rows; ++r)
      gens.push_back(row_times_mat(coeffs.basis.row(r), span.basis));
    up_lattice[i] = lattice_from_rows(s.total_rank(), gens);
    if (up_lattice[i].rank() != up[i].dim())
      certificate_failure("pulled-back sublattice does not have finite index");
    LatticeBasis mapped = image_lattice(cf.projection, up_lattice[i]);
    if (!(mapped == down_lattice[size_t(image_of[i])]))
      certificate_failure("projection is not weakly semistable on a refined cone");
  }
  std::map<std::string, LatticeBasis> up_max;
  for (const Cone& m : refined_fan.maximal_cones())
    up_max[m.key()] = up_lattice[size_t(refined_fan.cone_index(m))];
  cf.refined_stacky = StackyFan::with_sublattices(refined_fan, up_max);
  for (size_t i = 0; i < up.size(); ++i)
    if (!(cf.refined_stacky.sublattice(up[i]) == up_lattice[i]))
      certificate_failure("pulled-back sublattices are not face-compatible");

  // (7) every section is a weakly semistable map onto a subfan upstairs
  for (int i = 0; i <= s.n; ++i) {
    const IntMat& sec = cf.sections[size_t(i)];
    for (size_t r = 0; r < down.size(); ++r) {
      Cone img = linear_image(sec, down[r]);
      int at = refined_fan.cone_index(img);
      if (at < 0) certificate_failure("a section image is not a cone of the refined scaffold");
      if (img.dim() != down[r].dim())
        certificate_failure("a section does not map a cone isomorphically");
      LatticeBasis mapped = image_lattice(sec, down_lattice[r]);
      if (!(mapped == up_lattice[size_t(at)]))
        certificate_failure("a section is not weakly semistable");
    }
  }

  // (8) terminality of the merged fan
  FanCheckReport term = check_terminality(cf);
  if (!term.ok) certificate_failure(term.detail);
  return cf;
}

Scaffold refined_scaffold_of(const ConfigurationFan& cf) { return cf.refined; }

FanCheckReport check_terminality(const ConfigurationFan& cf) {
  IntMat pi = projection_matrix(cf.scaffold);
  std::vector<Cone> images = full_dim_images(cf.scaffold, pi);
  const auto& max = cf.pi_fan.fan().maximal_cones();
  std::vector<std::vector<bool>> sets(max.size());
  for (size_t i = 0; i < max.size(); ++i) {
    std::vector<bool> in(images.size());
    std::vector<IntVec> normals;
    for (size_t t = 0; t < images.size(); ++t) {
      in[t] = images[t].contains_cone(max[i]);
      if (in[t])
        for (const auto& u : images[t].facet_normals()) normals.push_back(u);
    }
    Cone inter = Cone::from_inequalities(normals, {}, cf.scaffold.base_rank());
    if (!(inter == max[i]))
      return {false, "maximal cone " + std::to_string(i) +
                         " is not the intersection of its containing images"};
    sets[i] = std::move(in);
  }
  // adjacent maximal cones must have different containing-image sets
  std::map<std::string, std::vector<size_t>> ridge_owners;
  for (size_t i = 0; i < max.size(); ++i)
    for (const Cone& r : facet_faces(max[i])) ridge_owners[r.key()].push_back(i);
  for (const auto& [k, owners] : ridge_owners) {
    if (owners.size() != 2) continue;
    if (sets[owners[0]] == sets[owners[1]])
      return {false, "adjacent maximal cones " + std::to_string(owners[0]) + " and " +
                         std::to_string(owners[1]) + " have equal containing-image sets"};
  }
  return {};
}

}  // namespace tcs
