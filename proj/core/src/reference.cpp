#include "tcs/reference.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tcs {

namespace {

// covector of a_i on R^n (a_0 = 0)
IntVec acov(int i, int n) {
  IntVec v(n, Int(0));
  if (i > 0) v[i - 1] = 1;
  return v;
}

// covector of a_i resp. b_i on interleaved R^{2n}
IntVec abcov(int i, bool b, int n) {
  IntVec v(2 * n, Int(0));
  if (i > 0) v[2 * (i - 1) + (b ? 1 : 0)] = 1;
  return v;
}

}  // namespace

std::vector<OrderedPartition> ordered_partitions(int n) {
  std::vector<OrderedPartition> out;
  std::vector<int> labels(n + 1);
  std::iota(labels.begin(), labels.end(), 0);
  OrderedPartition cur;
  std::function<void(size_t)> rec = [&](size_t next) {
    if (next == labels.size()) {
      out.push_back(cur);
      return;
    }
    int x = labels[next];
    for (auto& block : cur.blocks) {
      block.push_back(x);
      rec(next + 1);
      block.pop_back();
    }
    for (size_t pos = 0; pos <= cur.blocks.size(); ++pos) {
      cur.blocks.insert(cur.blocks.begin() + pos, {x});
      rec(next + 1);
      cur.blocks.erase(cur.blocks.begin() + pos);
    }
  };
  rec(0);
  for (auto& p : out)
    for (auto& b : p.blocks) std::sort(b.begin(), b.end());
  return out;
}

Cone permutahedral_cone(const OrderedPartition& j, int n) {
  std::vector<IntVec> eqs, ineqs;
  for (const auto& block : j.blocks)
    for (size_t t = 1; t < block.size(); ++t)
      eqs.push_back(sub(acov(block[t], n), acov(block[0], n)));
  for (size_t k = 0; k + 1 < j.blocks.size(); ++k)
    ineqs.push_back(sub(acov(j.blocks[k + 1][0], n), acov(j.blocks[k][0], n)));
  return Cone::from_inequalities(ineqs, eqs, n);
}

Fan permutahedral_fan(int n) {
  if (n < 0) throw std::invalid_argument("permutahedral_fan: n must be nonnegative");
  if (n == 0) return Fan::from_maximal({Cone::zero_cone(0)}, 0, true);
  std::vector<int> order(n + 1);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Cone> maximal;
  do {
    OrderedPartition j;
    for (int x : order) j.blocks.push_back({x});
    maximal.push_back(permutahedral_cone(j, n));
  } while (std::next_permutation(order.begin(), order.end()));
  return Fan::from_maximal(std::move(maximal), n, true);
}

Fan square_permutahedral_fan(int n) {
  Fan p = permutahedral_fan(n);
  Fan plain = product_fan(p, p);
  // (a1..an, b1..bn) -> (a1,b1,...,an,bn)
  std::vector<int> perm(2 * n);
  for (int i = 0; i < n; ++i) {
    perm[i] = 2 * i;
    perm[n + i] = 2 * i + 1;
  }
  return permute_coordinates(plain, perm);
}

Fan bipermutahedral_fan(int n) {
  if (n < 1) throw std::invalid_argument("bipermutahedral_fan: n must be positive");
  int rank = 2 * n;
  std::vector<int> order(n + 1);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));

  std::map<std::string, Cone> cells;
  for (int apex = 0; apex <= n; ++apex) {
    // antidiagonal support region: a_apex + b_apex minimal
    std::vector<IntVec> region;
    for (int j = 0; j <= n; ++j) {
      if (j == apex) continue;
      IntVec u = add(abcov(j, false, n), abcov(j, true, n));
      u = sub(u, add(abcov(apex, false, n), abcov(apex, true, n)));
      region.push_back(u);
    }
    for (const auto& w : perms)
      for (const auto& u : perms) {
        std::vector<IntVec> base = region;
        std::vector<int> apos(n + 1), bpos(n + 1);
        for (int t = 0; t <= n; ++t) {
          apos[w[t]] = t;
          bpos[u[t]] = t;
        }
        for (int t = 0; t + 1 <= n; ++t) {
          base.push_back(sub(abcov(w[t + 1], false, n), abcov(w[t], false, n)));
          base.push_back(sub(abcov(u[t + 1], true, n), abcov(u[t], true, n)));
        }
        // free antidiagonal comparisons of a_apex+b_apex against a_j+b_k:
        // those not already decided by the two orders
        std::vector<std::pair<int, int>> free_pairs;
        for (int j = 0; j <= n; ++j)
          for (int k = 0; k <= n; ++k) {
            if (j == apex || k == apex || j == k) continue;
            bool le = apos[apex] < apos[j] && bpos[apex] < bpos[k];
            bool ge = apos[apex] > apos[j] && bpos[apex] > bpos[k];
            if (!le && !ge) free_pairs.push_back({j, k});
          }
        size_t nf = free_pairs.size();
        for (size_t mask = 0; mask < (size_t(1) << nf); ++mask) {
          std::vector<IntVec> normals = base;
          for (size_t t = 0; t < nf; ++t) {
            auto [j, k] = free_pairs[t];
            IntVec diff = add(abcov(j, false, n), abcov(k, true, n));
            diff = sub(diff, add(abcov(apex, false, n), abcov(apex, true, n)));
            // bit set: a_apex + b_apex <= a_j + b_k
            normals.push_back((mask >> t) & 1 ? diff : negated(diff));
          }
          Cone c = Cone::from_inequalities(normals, {}, rank);
          if (c.dim() == rank) cells.emplace(c.key(), c);
        }
      }
  }
  std::vector<Cone> maximal;
  for (auto& [k, c] : cells) maximal.push_back(c);
  return Fan::from_maximal(std::move(maximal), rank, true);
}

Fan harmonic_fan(int n) {
  if (n < 1) throw std::invalid_argument("harmonic_fan: n must be positive");
  int rank = 2 * n;
  std::vector<int> order(n + 1);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  std::map<std::string, Cone> cells;
  for (int apex = 0; apex <= n; ++apex) {
    std::vector<IntVec> region;
    for (int j = 0; j <= n; ++j) {
      if (j == apex) continue;
      IntVec u = add(abcov(j, false, n), abcov(j, true, n));
      u = sub(u, add(abcov(apex, false, n), abcov(apex, true, n)));
      region.push_back(u);
    }
    for (const auto& w : perms)
      for (const auto& u : perms) {
        std::vector<IntVec> normals = region;
        for (int t = 0; t + 1 <= n; ++t) {
          normals.push_back(sub(abcov(w[t + 1], false, n), abcov(w[t], false, n)));
          normals.push_back(sub(abcov(u[t + 1], true, n), abcov(u[t], true, n)));
        }
        Cone c = Cone::from_inequalities(normals, {}, rank);
        if (c.dim() == rank) cells.emplace(c.key(), c);
      }
  }
  std::vector<Cone> maximal;
  for (auto& [k, c] : cells) maximal.push_back(c);
  return Fan::from_maximal(std::move(maximal), rank, true);
}

namespace {

std::string label_to_string(const std::vector<int>& part, int n) {
  std::ostringstream os;
  for (size_t i = 0; i < part.size(); ++i) {
    if (n > 9 && i) os << ',';
    os << part[i];
  }
  return os.str();
}

std::vector<int> parse_part(const std::string& s, int n) {
  std::vector<int> out;
  if (n > 9) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  } else {
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("bisequence: bad label");
      out.push_back(c - '0');
    }
  }
  return out;
}

}  // namespace

std::string bisequence_of(const RatVec& p) {
  if (p.size() % 2 != 0) throw std::invalid_argument("bisequence_of: odd dimension");
  int n = int(p.size()) / 2;
  auto a = [&](int i) { return i == 0 ? Rat(0) : p[2 * (i - 1)]; };
  auto b = [&](int i) { return i == 0 ? Rat(0) : p[2 * (i - 1) + 1]; };
  Rat c = a(0) + b(0);
  for (int i = 1; i <= n; ++i) {
    Rat s = a(i) + b(i);
    if (s < c) c = s;
  }
  // crossing positions along the supporting antidiagonal, one per line
  std::vector<std::pair<Rat, int>> crossings;  // (position, label)
  for (int i = 0; i <= n; ++i) {
    if (a(i) + b(i) == c) {
      crossings.push_back({a(i), i});  // point on the antidiagonal, one mark
    } else {
      crossings.push_back({a(i), i});
      crossings.push_back({c - b(i), i});
    }
  }
  std::sort(crossings.begin(), crossings.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;  // descending traversal
    return x.second < y.second;
  });
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < crossings.size()) {
    size_t j = i;
    std::vector<int> part;
    while (j < crossings.size() && crossings[j].first == crossings[i].first)
      part.push_back(crossings[j++].second);
    if (!first) os << '|';
    os << label_to_string(part, n);
    first = false;
    i = j;
  }
  return os.str();
}

Cone bisequence_cone(const std::string& label, int n) {
  std::vector<std::vector<int>> parts;
  {
    std::stringstream ss(label);
    std::string tok;
    while (std::getline(ss, tok, '|')) parts.push_back(parse_part(tok, n));
    if (parts.empty()) throw std::invalid_argument("bisequence: empty label");
  }
  std::vector<int> count(n + 1, 0);
  for (const auto& part : parts) {
    std::vector<int> seen;
    for (int x : part) {
      if (x < 0 || x > n) throw std::invalid_argument("bisequence: label out of range");
      if (std::find(seen.begin(), seen.end(), x) != seen.end())
        throw std::invalid_argument("bisequence: repeated label inside a part");
      seen.push_back(x);
      count[x]++;
    }
  }
  std::vector<int> on_diag;
  for (int x = 0; x <= n; ++x) {
    if (count[x] == 1) on_diag.push_back(x);
    else if (count[x] != 2) throw std::invalid_argument("bisequence: label must appear once or twice");
  }
  if (on_diag.empty()) throw std::invalid_argument("bisequence: no label on the antidiagonal");
  int i0 = on_diag[0];
  auto cvalue = add(abcov(i0, false, n), abcov(i0, true, n));  // a_{i0} + b_{i0}
  // expression for the crossing value of each occurrence, scanning descending
  std::vector<int> seen_count(n + 1, 0);
  std::vector<std::vector<IntVec>> values(parts.size());
  for (size_t pi = 0; pi < parts.size(); ++pi)
    for (int x : parts[pi]) {
      ++seen_count[x];
      if (count[x] == 1) {
        values[pi].push_back(abcov(x, false, n));  // a_x, with a_x + b_x = c
      } else if (seen_count[x] == 1) {
        values[pi].push_back(abcov(x, false, n));  // first crossing is the a-line
      } else {
        values[pi].push_back(sub(cvalue, abcov(x, true, n)));  // c - b_x
      }
    }
  std::vector<IntVec> eqs, ineqs;
  for (int x : on_diag)
    if (x != i0) eqs.push_back(sub(add(abcov(x, false, n), abcov(x, true, n)), cvalue));
  for (const auto& vs : values)
    for (size_t t = 1; t < vs.size(); ++t) eqs.push_back(sub(vs[t], vs[0]));
  for (size_t pi = 0; pi + 1 < parts.size(); ++pi)
    ineqs.push_back(sub(values[pi][0], values[pi + 1][0]));  // descending
  // minimality of the supporting antidiagonal
  for (int x = 0; x <= n; ++x)
    ineqs.push_back(sub(add(abcov(x, false, n), abcov(x, true, n)), cvalue));
  return Cone::from_inequalities(ineqs, eqs, 2 * n);
}

}  // namespace tcs
