#include "tcs/scaffold.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace tcs {

IntMat projection_matrix(const Scaffold& s) {
  IntMat m(s.base_rank(), s.total_rank());
  for (int i = 0; i < s.base_rank(); ++i) m.at(i, i) = 1;
  return m;
}

IntMat section_matrix(const Scaffold& s, int i) {
  if (i < 0 || i > s.n) throw std::invalid_argument("section index out of range");
  IntMat m(s.total_rank(), s.base_rank());
  for (int r = 0; r < s.base_rank(); ++r) m.at(r, r) = 1;
  if (i > 0)
    for (int r = 0; r < s.d; ++r) m.at(s.base_rank() + r, s.d * (i - 1) + r) = 1;
  return m;
}

std::vector<IntVec> section_equations(const Scaffold& s, int i) {
  if (i < 0 || i > s.n) throw std::invalid_argument("section index out of range");
  std::vector<IntVec> eqs;
  for (int r = 0; r < s.d; ++r) {
    IntVec e(s.total_rank(), Int(0));
    e[s.base_rank() + r] = 1;
    if (i > 0) e[s.d * (i - 1) + r] = -1;
    eqs.push_back(std::move(e));
  }
  return eqs;
}

ScaffoldReport validate_scaffold(const Scaffold& s, uint64_t seed) {
  ScaffoldReport rep;
  if (s.fan.ambient_rank() != s.total_rank()) return {false, "fan rank is not n*d + d", {}};
  FanCheckReport fr = check_fan(s.fan);
  if (!fr.ok) return {false, "fan axioms fail: " + fr.detail, {}};
  if (!check_complete(s.fan, seed)) return {false, "fan is not complete", {}};
  s.fan.cache_complete(true);
  IntMat pi = projection_matrix(s);
  for (int i = 0; i <= s.n; ++i) {
    std::vector<IntVec> eqs = section_equations(s, i);
    std::vector<Cone> inside;
    std::vector<std::string> keys;
    for (const Cone& c : s.fan.all_cones()) {
      bool contained = true;
      for (const auto& e : eqs)
        for (const auto& g : c.generators())
          if (sgn(dot(e, g)) != 0) {
            contained = false;
            break;
          }
      if (!contained) continue;
      inside.push_back(c);
      keys.push_back(c.key());
    }
    // the image must map isomorphically to a complete fan on the base
    std::vector<Cone> images;
    for (const Cone& c : inside) {
      Cone img = linear_image(pi, c);
      if (img.dim() != c.dim())
        return {false, "section image cone drops dimension under the projection", {}};
      if (img.dim() == s.base_rank()) images.push_back(img);
    }
    if (images.empty())
      return {false, "section image " + std::to_string(i) + " has no full-dimensional cones", {}};
    Fan image_fan = Fan::from_maximal(images, s.base_rank());
    FanCheckReport ir = check_fan(image_fan);
    if (!ir.ok)
      return {false, "section image " + std::to_string(i) + " is not a subfan: " + ir.detail, {}};
    if (!check_complete(image_fan, seed))
      return {false, "section image " + std::to_string(i) + " is not a union of cones", {}};
    rep.covering.push_back(std::move(keys));
  }
  return rep;
}

namespace {

// covector of (x - a_i)_r on the scaffold coordinates
IntVec line_normal(int n, int d, int i, int r) {
  IntVec e(n * d + d, Int(0));
  e[n * d + r] = 1;
  if (i > 0) e[d * (i - 1) + r] = -1;
  return e;
}

}  // namespace

Scaffold minimal_scaffold(int n) {
  if (n < 0) throw std::invalid_argument("minimal_scaffold: n must be nonnegative");
  Scaffold s;
  s.n = n;
  s.d = 1;
  std::vector<IntVec> normals;
  for (int i = 0; i <= n; ++i) normals.push_back(line_normal(n, 1, i, 0));
  s.fan = fan_from_arrangement(Arrangement::make(n + 1, normals));
  s.kind = "lambda0";
  return s;
}

Scaffold square_scaffold(int n) {
  if (n < 0) throw std::invalid_argument("square_scaffold: n must be nonnegative");
  Scaffold s;
  s.n = n;
  s.d = 2;
  std::vector<IntVec> normals;
  for (int i = 0; i <= n; ++i) {
    normals.push_back(line_normal(n, 2, i, 0));
    normals.push_back(line_normal(n, 2, i, 1));
  }
  s.fan = fan_from_arrangement(Arrangement::make(2 * n + 2, normals));
  s.kind = "square";
  return s;
}

Scaffold biperm_scaffold(int n) {
  if (n < 1) throw std::invalid_argument("biperm_scaffold: n must be positive");
  int rank = 2 * n + 2;
  auto antidiag = [&](int i) {
    // a_i + b_i as a covector
    IntVec v(rank, Int(0));
    if (i > 0) {
      v[2 * (i - 1)] = 1;
      v[2 * (i - 1) + 1] = 1;
    }
    return v;
  };
  std::map<std::string, Cone> cells;
  for (int apex = 0; apex <= n; ++apex) {
    std::vector<IntVec> region;
    for (int j = 0; j <= n; ++j)
      if (j != apex) region.push_back(sub(antidiag(j), antidiag(apex)));
    // fiber antidiagonal x + y compared with a_apex + b_apex
    IntVec fiber_diag(rank, Int(0));
    fiber_diag[2 * n] = 1;
    fiber_diag[2 * n + 1] = 1;
    IntVec dslice = sub(fiber_diag, antidiag(apex));
    int m = 2 * (n + 1) + 1;  // sign choices: x vs a_j, y vs b_j, slice
    for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
      std::vector<IntVec> normals = region;
      for (int j = 0; j <= n; ++j) {
        IntVec vx = line_normal(n, 2, j, 0);
        IntVec vy = line_normal(n, 2, j, 1);
        normals.push_back((mask >> (2 * j)) & 1 ? vx : negated(vx));
        normals.push_back((mask >> (2 * j + 1)) & 1 ? vy : negated(vy));
      }
      normals.push_back((mask >> (2 * (n + 1))) & 1 ? dslice : negated(dslice));
      Cone c = Cone::from_inequalities(normals, {}, rank);
      if (c.dim() == rank) cells.emplace(c.key(), c);
    }
  }
  std::vector<Cone> maximal;
  for (auto& [k, c] : cells) maximal.push_back(c);
  Scaffold s;
  s.n = n;
  s.d = 2;
  s.fan = Fan::from_maximal(std::move(maximal), rank);
  s.kind = "biperm";
  ScaffoldReport rep = validate_scaffold(s);
  if (!rep.ok)
    throw std::runtime_error("biperm_scaffold: glued pieces are not a scaffold: " + rep.detail);
  return s;
}

Scaffold product_scaffold(const Scaffold& s1, const Scaffold& s2) {
  if (s1.n != s2.n) throw std::invalid_argument("product_scaffold: mark counts differ");
  if (s1.d < 1 || s2.d < 1)
    throw std::invalid_argument("product_scaffold: factors need positive fiber dimension");
  int n = s1.n, d1 = s1.d, d2 = s2.d, d = d1 + d2;
  Fan plain = product_fan(s1.fan, s2.fan);
  std::vector<int> perm(size_t(n) * d + d);
  int off2 = n * d1 + d1;
  for (int i = 1; i <= n; ++i) {
    for (int r = 0; r < d1; ++r) perm[d1 * (i - 1) + r] = d * (i - 1) + r;
    for (int r = 0; r < d2; ++r) perm[off2 + d2 * (i - 1) + r] = d * (i - 1) + d1 + r;
  }
  for (int r = 0; r < d1; ++r) perm[n * d1 + r] = n * d + r;
  for (int r = 0; r < d2; ++r) perm[off2 + n * d2 + r] = n * d + d1 + r;
  Scaffold s;
  s.n = n;
  s.d = d;
  s.fan = permute_coordinates(plain, perm);
  s.kind = "product(" + s1.kind + "," + s2.kind + ")";
  return s;
}

Scaffold scaffold_from_fan(const Fan& sigma, int n) {
  if (n < 0) throw std::invalid_argument("scaffold_from_fan: n must be nonnegative");
  int d = sigma.ambient_rank();
  auto complete = sigma.completeness_cache();
  if (!complete) {
    bool v = check_complete(sigma);
    sigma.cache_complete(v);
    complete = v;
  }
  if (!*complete) throw std::invalid_argument("scaffold_from_fan: fan is not complete");
  int rank = n * d + d;
  // overlay the translates of sigma at every mark: pull the (n+1)-fold
  // product back along (a, x) -> (x - a_1, ..., x - a_n, x)
  Fan prod = sigma;
  for (int i = 0; i < n; ++i) prod = product_fan(prod, sigma);
  IntMat phi(rank, rank);
  for (int j = 1; j <= n; ++j)
    for (int r = 0; r < d; ++r) {
      phi.at(d * (j - 1) + r, n * d + r) = 1;
      phi.at(d * (j - 1) + r, d * (j - 1) + r) = -1;
    }
  for (int r = 0; r < d; ++r) phi.at(n * d + r, n * d + r) = 1;
  Scaffold s;
  s.n = n;
  s.d = d;
  s.fan = preimage_fan(phi, prod);
  s.kind = "from-fan";
  return s;
}

Scaffold refine_scaffold(const Scaffold& s, const Fan& extra) {
  if (extra.ambient_rank() != s.total_rank())
    throw std::invalid_argument("refine_scaffold: rank mismatch");
  Scaffold out;
  out.n = s.n;
  out.d = s.d;
  out.fan = common_refinement({s.fan, extra});
  out.kind = s.kind == "refined" ? s.kind : "refined";
  ScaffoldReport rep = validate_scaffold(out);
  if (!rep.ok) throw std::runtime_error("refine_scaffold: result is not a scaffold: " + rep.detail);
  return out;
}

}  // namespace tcs
