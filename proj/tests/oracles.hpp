#pragma once

// Independent brute-force oracles used to pin expected values. These stay
// deliberately naive and separate from the library implementations.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "tcs/cone.hpp"
#include "tcs/linalg.hpp"

namespace oracle {

using tcs::Int;
using tcs::IntMat;
using tcs::IntVec;
using tcs::Rat;
using tcs::RatVec;

// Textbook integer row reduction to Hermite form, no transform tracking.
inline IntMat naive_hnf(IntMat m) {
  int r = 0;
  for (int col = 0; col < m.cols && r < m.rows; ++col) {
    while (true) {
      int piv = -1;
      for (int i = r; i < m.rows; ++i)
        if (tcs::sgn(m.at(i, col)) != 0 && (piv < 0 || abs(m.at(i, col)) < abs(m.at(piv, col))))
          piv = i;
      if (piv < 0) break;
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(r, c), m.at(piv, c));
      bool done = true;
      for (int i = r + 1; i < m.rows; ++i) {
        if (tcs::sgn(m.at(i, col)) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(i, col).get_mpz_t(), m.at(r, col).get_mpz_t());
        for (int c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(r, c);
        if (tcs::sgn(m.at(i, col)) != 0) done = false;
      }
      if (done) break;
    }
    if (tcs::sgn(m.at(r, col)) == 0) continue;
    if (tcs::sgn(m.at(r, col)) < 0)
      for (int c = 0; c < m.cols; ++c) m.at(r, c) = -m.at(r, c);
    for (int i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(i, col).get_mpz_t(), m.at(r, col).get_mpz_t());
      for (int c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(r, c);
    }
    ++r;
  }
  return m;
}

// Invariant factors via gcds of k x k minors: d_1...d_k = gcd(k-minors).
inline std::vector<Int> minor_gcd_invariants(const IntMat& m) {
  int n = std::min(m.rows, m.cols);
  std::vector<Int> dets_prev{Int(1)};
  std::vector<Int> out;
  auto minors = [&](int k) {
    std::vector<Int> res;
    std::vector<int> ri(k), ci(k);
    // enumerate all k-subsets of rows and columns
    std::vector<int> rows_sel, cols_sel;
    std::function<void(int, int)> rec_rows = [&](int start, int depth) {
      if (depth == k) {
        std::function<void(int, int)> rec_cols = [&](int cstart, int cdepth) {
          if (cdepth == k) {
            // Laplace expansion determinant (k <= 4 in tests)
            std::function<Int(std::vector<int>, std::vector<int>)> det =
                [&](std::vector<int> rs, std::vector<int> cs) -> Int {
              if (rs.size() == 1) return m.at(rs[0], cs[0]);
              Int s = 0;
              int sign = 1;
              for (size_t j = 0; j < cs.size(); ++j) {
                std::vector<int> rs2(rs.begin() + 1, rs.end());
                std::vector<int> cs2;
                for (size_t t = 0; t < cs.size(); ++t)
                  if (t != j) cs2.push_back(cs[t]);
                s += sign * m.at(rs[0], cs[j]) * det(rs2, cs2);
                sign = -sign;
              }
              return s;
            };
            res.push_back(det(rows_sel, cols_sel));
          } else {
            for (int c = cstart; c < m.cols; ++c) {
              cols_sel.push_back(c);
              rec_cols(c + 1, cdepth + 1);
              cols_sel.pop_back();
            }
          }
        };
        rec_cols(0, 0);
      } else {
        for (int r = start; r < m.rows; ++r) {
          rows_sel.push_back(r);
          rec_rows(r + 1, depth + 1);
          rows_sel.pop_back();
        }
      }
    };
    rec_rows(0, 0);
    return res;
  };
  Int prev = 1;
  for (int k = 1; k <= n; ++k) {
    Int g = 0;
    for (const Int& d : minors(k)) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    if (tcs::sgn(g) == 0) break;  // rank reached
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Membership in the row lattice by tiny rational elimination.
bool lattice_member(const std::vector<IntVec>& basis, const IntVec& z);

// All lattice points of the row lattice inside the box [-b, b]^n.
std::vector<IntVec> lattice_points_in_box(const std::vector<IntVec>& basis, int n, int b);

// Brute facet/ray oracle for small cones: searches integer vectors in a box.
struct BruteCone {
  std::vector<IntVec> rays;     // primitive extremal directions found
  std::vector<IntVec> facets;   // primitive inward facet normals found
};
BruteCone brute_cone_from_inequalities(const std::vector<IntVec>& normals, int rank, int box);

}  // namespace oracle
