#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcs/numeric.hpp"

namespace tcs {

/// Dense integer matrix, row major. Rows are lattice vectors, maps act on
/// column vectors (y = m * x).
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> v;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), v(size_t(r) * size_t(c), Int(0)) {}

  Int& at(int r, int c) { return v[size_t(r) * cols + c]; }
  const Int& at(int r, int c) const { return v[size_t(r) * cols + c]; }

  IntVec row(int r) const {
    return IntVec(v.begin() + size_t(r) * cols, v.begin() + size_t(r + 1) * cols);
  }
  void set_row(int r, const IntVec& x) {
    for (int c = 0; c < cols; ++c) at(r, c) = x[c];
  }

  static IntMat identity(int k);
  static IntMat from_rows(const std::vector<IntVec>& rs, int cols);

  std::vector<IntVec> row_list() const;
  IntMat transposed() const;

  bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && v == o.v; }
};

IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_apply(const IntMat& m, const IntVec& x);      // m * x
RatVec mat_apply(const IntMat& m, const RatVec& x);
IntVec row_times_mat(const IntVec& r, const IntMat& m);  // r * m
IntMat stack_rows(const IntMat& a, const IntMat& b);

struct HnfResult {
  IntMat h;  // canonical row Hermite normal form, zero rows at the bottom
  IntMat u;  // unimodular, u * m = h
};

/// Row-style HNF: pivots positive, entries above each pivot reduced into
/// [0, pivot), zero rows last. Lattice equality becomes literal matrix
/// equality of HNF bases.
HnfResult hnf(const IntMat& m);
IntMat hnf_basis(const IntMat& m);  // nonzero rows of hnf(m).h

/// Invariant factors d_1 | d_2 | ... (ones kept, zeros dropped).
std::vector<Int> snf_invariants(const IntMat& m);

int rank_of(const IntMat& m);

/// Saturated basis of { u : u * m = 0 }, as HNF rows.
IntMat left_kernel(const IntMat& m);
/// Saturated basis of { x : m * x = 0 }, as HNF rows (vectors of length m.cols).
IntMat right_kernel(const IntMat& m);

/// Some rational solution of m * x = v, or nullopt when inconsistent.
std::optional<RatVec> solve_rational(const IntMat& m, const RatVec& v);

/// A full-rank sublattice of some Z^ambient given by an HNF row basis.
/// Equal lattices have identical representations.
struct LatticeBasis {
  int ambient = 0;
  IntMat basis;  // HNF, linearly independent rows (possibly zero rows = zero lattice)

  int rank() const { return basis.rows; }
  bool operator==(const LatticeBasis& o) const { return ambient == o.ambient && basis == o.basis; }
};

LatticeBasis lattice_from_rows(int ambient, const std::vector<IntVec>& gens);
LatticeBasis full_lattice(int ambient);
LatticeBasis zero_lattice(int ambient);

LatticeBasis lattice_intersect(const LatticeBasis& a, const LatticeBasis& b);
LatticeBasis image_lattice(const IntMat& f, const LatticeBasis& l);
LatticeBasis saturate(const LatticeBasis& l);

bool lattice_contains(const LatticeBasis& l, const IntVec& z);
bool sublattice_of(const LatticeBasis& sub, const LatticeBasis& sup);

/// { c in Z^{b.rows} : c * b lies in l }.
LatticeBasis preimage_lattice(const IntMat& b, const LatticeBasis& l);

/// Invariant factors of sup/sub; requires sub to be a finite-index sublattice
/// of sup (equal ranks). Ones are kept.
std::vector<Int> quotient_invariants(const LatticeBasis& sub, const LatticeBasis& sup);

std::string to_string(const IntMat& m);

}  // namespace tcs
