#include "tcs/fan.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace tcs {

Arrangement Arrangement::make(int rank, std::vector<IntVec> ns) {
  Arrangement a;
  a.ambient_rank = rank;
  std::vector<IntVec> canon;
  for (IntVec n : ns) {
    if (int(n.size()) != rank) throw std::invalid_argument("arrangement: normal length mismatch");
    if (is_zero(n)) throw std::invalid_argument("arrangement: zero normal");
    make_primitive(n);
    for (const Int& x : n) {
      if (sgn(x) == 0) continue;
      if (sgn(x) < 0) n = negated(n);
      break;
    }
    canon.push_back(std::move(n));
  }
  std::sort(canon.begin(), canon.end(),
            [](const IntVec& x, const IntVec& y) { return compare(x, y) < 0; });
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  a.normals = std::move(canon);
  return a;
}

struct Fan::Data {
  int rank = 0;
  std::vector<Cone> maximal;
  mutable std::optional<bool> complete;
  mutable std::vector<Cone> closure;
  mutable bool closure_ready = false;
  mutable std::unordered_map<std::string, int> index;
  mutable std::unordered_map<std::string, int> parent;
};

Fan Fan::from_maximal(std::vector<Cone> maximal, int rank, std::optional<bool> complete) {
  if (maximal.empty()) throw std::invalid_argument("fan needs at least one cone");
  for (const Cone& c : maximal)
    if (c.ambient_rank() != rank) throw std::invalid_argument("fan: cone rank mismatch");
  std::sort(maximal.begin(), maximal.end());
  maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
  Fan f;
  f.d_ = std::make_shared<Data>();
  f.d_->rank = rank;
  f.d_->maximal = std::move(maximal);
  f.d_->complete = complete;
  return f;
}

int Fan::ambient_rank() const { return d_->rank; }
const std::vector<Cone>& Fan::maximal_cones() const { return d_->maximal; }

const std::vector<Cone>& Fan::all_cones() const {
  if (!d_->closure_ready) {
    std::map<std::string, Cone> seen;
    for (size_t m = 0; m < d_->maximal.size(); ++m)
      for (const Cone& f : faces(d_->maximal[m])) {
        seen.emplace(f.key(), f);
        d_->parent.emplace(f.key(), int(m));
      }
    d_->closure.clear();
    for (auto& [k, c] : seen) d_->closure.push_back(c);
    for (size_t i = 0; i < d_->closure.size(); ++i) d_->index[d_->closure[i].key()] = int(i);
    d_->closure_ready = true;
  }
  return d_->closure;
}

bool Fan::has_cone(const Cone& c) const { return cone_index(c) >= 0; }

int Fan::cone_index(const Cone& c) const {
  all_cones();
  auto it = d_->index.find(c.key());
  return it == d_->index.end() ? -1 : it->second;
}

int Fan::parent_of(const Cone& face) const {
  all_cones();
  auto it = d_->parent.find(face.key());
  return it == d_->parent.end() ? -1 : it->second;
}

std::optional<bool> Fan::completeness_cache() const { return d_->complete; }
void Fan::cache_complete(bool value) const { d_->complete = value; }

// --- arrangements ----------------------------------------------------------

namespace {

// Fourier-Motzkin emptiness test for a system of strict inequalities.
bool fm_feasible(std::vector<IntVec> rows, int rank) {
  auto tidy = [](std::vector<IntVec>& rs) {
    for (auto& r : rs) make_primitive(r);
    std::sort(rs.begin(), rs.end(),
              [](const IntVec& x, const IntVec& y) { return compare(x, y) < 0; });
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  };
  tidy(rows);
  for (int var = 0; var < rank; ++var) {
    for (const auto& r : rows)
      if (is_zero(r)) return false;  // 0 > 0
    std::vector<IntVec> pos, neg, rest;
    for (auto& r : rows) {
      int s = sgn(r[var]);
      if (s > 0) pos.push_back(std::move(r));
      else if (s < 0) neg.push_back(std::move(r));
      else rest.push_back(std::move(r));
    }
    for (const auto& p : pos)
      for (const auto& n : neg) rest.push_back(combine(-n[var], p, p[var], n));
    rows = std::move(rest);
    tidy(rows);
  }
  for (const auto& r : rows)
    if (is_zero(r)) return false;
  return true;
}

}  // namespace

bool signed_region_feasible(const Arrangement& a, const std::vector<int8_t>& signs) {
  if (signs.size() != a.normals.size()) throw std::invalid_argument("sign vector length mismatch");
  std::vector<IntVec> strict;
  std::vector<IntVec> eqs;
  for (size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] > 0) strict.push_back(a.normals[i]);
    else if (signs[i] < 0) strict.push_back(negated(a.normals[i]));
    else eqs.push_back(a.normals[i]);
  }
  if (eqs.empty()) return fm_feasible(std::move(strict), a.ambient_rank);
  // restrict the strict system to the subspace cut out by the equations
  IntMat W = right_kernel(IntMat::from_rows(eqs, a.ambient_rank));
  if (W.rows == 0) return strict.empty();
  std::vector<IntVec> restricted;
  for (const auto& s : strict) {
    IntVec r(W.rows);
    for (int i = 0; i < W.rows; ++i) r[i] = dot(W.row(i), s);
    restricted.push_back(std::move(r));
  }
  return fm_feasible(std::move(restricted), W.rows);
}

Fan fan_from_arrangement(const Arrangement& a) {
  size_t m = a.normals.size();
  if (m == 0) return Fan::from_maximal({Cone::full_space(a.ambient_rank)}, a.ambient_rank, true);
  if (m > 24) throw std::invalid_argument("fan_from_arrangement: too many hyperplanes");
  std::vector<Cone> maximal;
  for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
    std::vector<int8_t> signs(m);
    for (size_t i = 0; i < m; ++i) signs[i] = (mask & (size_t(1) << i)) ? 1 : -1;
    if (!signed_region_feasible(a, signs)) continue;
    std::vector<IntVec> normals;
    for (size_t i = 0; i < m; ++i)
      normals.push_back(signs[i] > 0 ? a.normals[i] : negated(a.normals[i]));
    maximal.push_back(Cone::from_inequalities(normals, {}, a.ambient_rank));
  }
  return Fan::from_maximal(std::move(maximal), a.ambient_rank, true);
}

// --- validity and completeness ----------------------------------------------

FanCheckReport check_fan(const Fan& f) {
  const auto& max = f.maximal_cones();
  for (size_t i = 0; i < max.size(); ++i)
    for (size_t j = i + 1; j < max.size(); ++j) {
      if (max[i].contains_cone(max[j]) || max[j].contains_cone(max[i]))
        return {false, "maximal cone contained in another (" + std::to_string(i) + "," +
                           std::to_string(j) + ")"};
      Cone I = intersect(max[i], max[j]);
      if (!is_face_of(I, max[i]) || !is_face_of(I, max[j]))
        return {false, "intersection of maximal cones " + std::to_string(i) + " and " +
                           std::to_string(j) + " is not a common face"};
    }
  return {};
}

namespace {

RatVec random_rational_point(int rank, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 3);
  RatVec p(rank);
  for (int i = 0; i < rank; ++i) {
    Rat q(num(rng), den(rng));
    q.canonicalize();
    p[i] = q;
  }
  return p;
}

}  // namespace

bool check_complete(const Fan& f, uint64_t seed) {
  int rank = f.ambient_rank();
  const auto& max = f.maximal_cones();
  if (rank == 0) return true;
  for (const Cone& c : max)
    if (c.dim() != rank) return false;
  // ridge pairing
  std::map<std::string, std::vector<size_t>> ridge_owners;
  for (size_t i = 0; i < max.size(); ++i)
    for (const Cone& r : facet_faces(max[i])) ridge_owners[r.key()].push_back(i);
  for (const auto& [k, owners] : ridge_owners)
    if (owners.size() != 2) return false;
  // connectivity of the dual graph
  if (max.size() > 1) {
    std::vector<std::vector<size_t>> adj(max.size());
    for (const auto& [k, owners] : ridge_owners) {
      adj[owners[0]].push_back(owners[1]);
      adj[owners[1]].push_back(owners[0]);
    }
    std::vector<bool> vis(max.size(), false);
    std::vector<size_t> stack{0};
    vis[0] = true;
    size_t count = 1;
    while (!stack.empty()) {
      size_t v = stack.back();
      stack.pop_back();
      for (size_t w : adj[v])
        if (!vis[w]) {
          vis[w] = true;
          ++count;
          stack.push_back(w);
        }
    }
    if (count != max.size()) return false;
  }
  // probabilistic spot check
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 100; ++t) {
    RatVec p = random_rational_point(rank, rng);
    bool inside = false;
    for (const Cone& c : max)
      if (c.contains(p) != Position::outside) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

namespace {

bool require_complete(const Fan& f) {
  auto c = f.completeness_cache();
  if (!c) {
    bool v = check_complete(f);
    f.cache_complete(v);
    return v;
  }
  return *c;
}

}  // namespace

Fan common_refinement(const std::vector<Fan>& fans) {
  if (fans.empty()) throw std::invalid_argument("common_refinement: no fans");
  int rank = fans[0].ambient_rank();
  for (const Fan& f : fans) {
    if (f.ambient_rank() != rank)
      throw std::invalid_argument("common_refinement: ambient rank mismatch");
    if (!require_complete(f)) throw std::invalid_argument("common_refinement: fan not complete");
  }
  Fan acc = fans[0];
  for (size_t k = 1; k < fans.size(); ++k) {
    std::map<std::string, Cone> cells;
    for (const Cone& s : acc.maximal_cones())
      for (const Cone& t : fans[k].maximal_cones()) {
        Cone I = intersect(s, t);
        if (I.dim() == rank) cells.emplace(I.key(), I);
      }
    std::vector<Cone> maximal;
    for (auto& [key, c] : cells) maximal.push_back(c);
    acc = Fan::from_maximal(std::move(maximal), rank, true);
  }
  return acc;
}

Fan preimage_fan(const IntMat& f, const Fan& g) {
  if (f.rows != g.ambient_rank()) throw std::invalid_argument("preimage_fan: shape mismatch");
  if (rank_of(f) != f.rows)
    throw std::invalid_argument("preimage_fan: map not surjective over Q");
  std::vector<Cone> maximal;
  for (const Cone& c : g.maximal_cones()) maximal.push_back(linear_preimage(f, c));
  return Fan::from_maximal(std::move(maximal), f.cols, g.completeness_cache());
}

bool fans_equal(const Fan& a, const Fan& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw std::invalid_argument("fans_equal: ambient rank mismatch");
  const auto& x = a.maximal_cones();
  const auto& y = b.maximal_cones();
  if (x.size() != y.size()) return false;
  for (size_t i = 0; i < x.size(); ++i)
    if (!(x[i] == y[i])) return false;
  return true;
}

bool is_refinement(const Fan& fine, const Fan& coarse) {
  if (fine.ambient_rank() != coarse.ambient_rank())
    throw std::invalid_argument("is_refinement: ambient rank mismatch");
  for (const Cone& c : fine.maximal_cones()) {
    bool found = false;
    for (const Cone& d : coarse.maximal_cones())
      if (d.contains_cone(c)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  bool fc = require_complete(fine);
  bool cc = require_complete(coarse);
  if (fc != cc) return false;
  if (!fc) {
    // supports must agree; with containment established it remains to cover
    // coarse by fine
    for (const Cone& d : coarse.maximal_cones()) {
      RatVec p = d.relative_interior_point();
      bool covered = false;
      for (const Cone& c : fine.maximal_cones())
        if (c.contains(p) != Position::outside) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
  }
  return true;
}

Fan product_fan(const Fan& a, const Fan& b) {
  int r1 = a.ambient_rank(), r2 = b.ambient_rank();
  int rank = r1 + r2;
  auto pad = [&](const IntVec& v, bool left) {
    IntVec w(rank, Int(0));
    for (size_t i = 0; i < v.size(); ++i) w[left ? i : r1 + i] = v[i];
    return w;
  };
  std::vector<Cone> maximal;
  for (const Cone& s : a.maximal_cones())
    for (const Cone& t : b.maximal_cones()) {
      std::vector<IntVec> rays;
      for (const auto& r : s.rays()) rays.push_back(pad(r, true));
      for (const auto& r : t.rays()) rays.push_back(pad(r, false));
      std::vector<IntVec> lin;
      for (int i = 0; i < s.lineality().basis.rows; ++i)
        lin.push_back(pad(s.lineality().basis.row(i), true));
      for (int i = 0; i < t.lineality().basis.rows; ++i)
        lin.push_back(pad(t.lineality().basis.row(i), false));
      LatticeBasis l = lin.empty() ? zero_lattice(rank) : lattice_from_rows(rank, lin);
      maximal.push_back(Cone::from_extremal(std::move(rays), std::move(l), rank));
    }
  std::optional<bool> complete;
  if (a.completeness_cache() && b.completeness_cache())
    complete = *a.completeness_cache() && *b.completeness_cache();
  return Fan::from_maximal(std::move(maximal), rank, complete);
}

Fan permute_coordinates(const Fan& f, const std::vector<int>& perm) {
  int rank = f.ambient_rank();
  if (int(perm.size()) != rank) throw std::invalid_argument("permute_coordinates: bad permutation");
  auto apply = [&](const IntVec& v) {
    IntVec w(rank);
    for (int i = 0; i < rank; ++i) w[perm[i]] = v[i];
    return w;
  };
  std::vector<Cone> maximal;
  for (const Cone& c : f.maximal_cones()) {
    std::vector<IntVec> rays;
    for (const auto& r : c.rays()) rays.push_back(apply(r));
    std::vector<IntVec> lin;
    for (int i = 0; i < c.lineality().basis.rows; ++i)
      lin.push_back(apply(c.lineality().basis.row(i)));
    LatticeBasis l = lin.empty() ? zero_lattice(rank) : lattice_from_rows(rank, lin);
    maximal.push_back(Cone::from_extremal(std::move(rays), std::move(l), rank));
  }
  return Fan::from_maximal(std::move(maximal), rank, f.completeness_cache());
}

Cone cone_containing(const Fan& f, const RatVec& p) {
  for (const Cone& c : f.maximal_cones()) {
    if (c.contains(p) == Position::outside) continue;
    // descend to the face whose relative interior holds p
    Cone cur = c;
    while (true) {
      std::vector<IntVec> tight;
      for (const auto& u : cur.facet_normals())
        if (sgn(dot(u, p)) == 0) tight.push_back(u);
      if (tight.empty()) return cur;
      Cone face = tight_face(cur, tight);
      if (face == cur) return cur;
      cur = face;
    }
  }
  throw std::invalid_argument("cone_containing: point outside the support");
}

FVector f_vector(const Fan& f) {
  FVector fv;
  fv.counts.assign(size_t(f.ambient_rank()) + 1, 0);
  for (const Cone& c : f.all_cones()) fv.counts[size_t(c.dim())]++;
  return fv;
}

}  // namespace tcs
