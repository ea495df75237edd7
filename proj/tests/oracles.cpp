#include "oracles.hpp"

#include <functional>

namespace oracle {

bool lattice_member(const std::vector<IntVec>& basis, const IntVec& z) {
  // solve c * B = z over Q, then demand integrality
  if (basis.empty()) return tcs::is_zero(z);
  size_t k = basis.size(), n = z.size();
  std::vector<RatVec> a(n, RatVec(k + 1, Rat(0)));
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < k; ++i) a[j][i] = Rat(basis[i][j]);
    a[j][k] = Rat(z[j]);
  }
  size_t r = 0;
  std::vector<int> piv(n, -1);
  for (size_t col = 0; col < k && r < n; ++col) {
    size_t sel = r;
    while (sel < n && tcs::sgn(a[sel][col]) == 0) ++sel;
    if (sel == n) continue;
    std::swap(a[r], a[sel]);
    Rat p = a[r][col];
    for (size_t j = 0; j <= k; ++j) a[r][j] /= p;
    for (size_t i = 0; i < n; ++i) {
      if (i == r || tcs::sgn(a[i][col]) == 0) continue;
      Rat f = a[i][col];
      for (size_t j = 0; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    piv[r] = int(col);
    ++r;
  }
  for (size_t i = r; i < n; ++i)
    if (tcs::sgn(a[i][k]) != 0) return false;
  for (size_t i = 0; i < r; ++i)
    if (a[i][k].get_den() != 1) return false;
  return true;
}

std::vector<IntVec> lattice_points_in_box(const std::vector<IntVec>& basis, int n, int b) {
  std::vector<IntVec> out;
  IntVec cur(n, Int(0));
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (lattice_member(basis, cur)) out.push_back(cur);
      return;
    }
    for (int v = -b; v <= b; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

BruteCone brute_cone_from_inequalities(const std::vector<IntVec>& normals, int rank, int box) {
  BruteCone out;
  // primitive directions in the box satisfying all inequalities
  std::vector<IntVec> members;
  IntVec cur(rank, Int(0));
  std::function<void(int)> rec = [&](int i) {
    if (i == rank) {
      if (tcs::is_zero(cur)) return;
      IntVec v = cur;
      tcs::make_primitive(v);
      for (const auto& u : normals)
        if (tcs::sgn(tcs::dot(u, v)) < 0) return;
      members.push_back(v);
      return;
    }
    for (int v = -box; v <= box; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(members.begin(), members.end(),
            [](const IntVec& a, const IntVec& b) { return tcs::compare(a, b) < 0; });
  members.erase(std::unique(members.begin(), members.end()), members.end());

  // rank-2 pointed extremal rays: boundary directions of the normals
  if (rank == 2) {
    for (const auto& u : normals) {
      IntVec d{u[1], -u[0]};
      for (int s : {1, -1}) {
        IntVec v = s > 0 ? d : tcs::negated(d);
        tcs::make_primitive(v);
        if (tcs::is_zero(v)) continue;
        bool ok = true;
        for (const auto& w : normals)
          if (tcs::sgn(tcs::dot(w, v)) < 0) ok = false;
        if (ok) out.rays.push_back(v);
      }
    }
    std::sort(out.rays.begin(), out.rays.end(),
              [](const IntVec& a, const IntVec& b) { return tcs::compare(a, b) < 0; });
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  }

  // facet normals: box functionals nonnegative on all members whose tight set
  // is maximal proper
  std::vector<std::pair<IntVec, std::set<size_t>>> tights;
  IntVec fu(rank, Int(0));
  std::function<void(int)> recf = [&](int i) {
    if (i == rank) {
      if (tcs::is_zero(fu)) return;
      IntVec u = fu;
      tcs::make_primitive(u);
      std::set<size_t> tight;
      for (size_t mi = 0; mi < members.size(); ++mi) {
        int s = tcs::sgn(tcs::dot(u, members[mi]));
        if (s < 0) return;
        if (s == 0) tight.insert(mi);
      }
      tights.push_back({u, tight});
      return;
    }
    for (int v = -box; v <= box; ++v) {
      fu[i] = v;
      recf(i + 1);
    }
  };
  recf(0);
  // a facet tight-set is a maximal tight set not equal to the whole member set
  for (const auto& [u, t] : tights) {
    if (t.size() == members.size()) continue;
    bool maximal = true;
    for (const auto& [u2, t2] : tights) {
      if (t2.size() == members.size()) continue;
      if (t2 != t && std::includes(t2.begin(), t2.end(), t.begin(), t.end())) maximal = false;
    }
    if (maximal) out.facets.push_back(u);
  }
  std::sort(out.facets.begin(), out.facets.end(),
            [](const IntVec& a, const IntVec& b) { return tcs::compare(a, b) < 0; });
  out.facets.erase(std::unique(out.facets.begin(), out.facets.end()), out.facets.end());
  return out;
}

}  // namespace oracle
