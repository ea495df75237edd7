#include "tcs/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tcs {

IntMat IntMat::identity(int k) {
  IntMat m(k, k);
  for (int i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rs, int cols) {
  IntMat m(int(rs.size()), cols);
  for (size_t i = 0; i < rs.size(); ++i) {
    if (int(rs[i].size()) != cols) throw std::invalid_argument("row length mismatch");
    m.set_row(int(i), rs[i]);
  }
  return m;
}

std::vector<IntVec> IntMat::row_list() const {
  std::vector<IntVec> out;
  out.reserve(rows);
  for (int i = 0; i < rows; ++i) out.push_back(row(i));
  return out;
}

IntMat IntMat::transposed() const {
  IntMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("mat_mul shape mismatch");
  IntMat c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Int& aik = a.at(i, k);
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntVec mat_apply(const IntMat& m, const IntVec& x) {
  if (int(x.size()) != m.cols) throw std::invalid_argument("mat_apply shape mismatch");
  IntVec y(m.rows, Int(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (sgn(m.at(i, j)) != 0) y[i] += m.at(i, j) * x[j];
  return y;
}

RatVec mat_apply(const IntMat& m, const RatVec& x) {
  if (int(x.size()) != m.cols) throw std::invalid_argument("mat_apply shape mismatch");
  RatVec y(m.rows, Rat(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (sgn(m.at(i, j)) != 0) y[i] += Rat(m.at(i, j)) * x[j];
  return y;
}

IntVec row_times_mat(const IntVec& r, const IntMat& m) {
  if (int(r.size()) != m.rows) throw std::invalid_argument("row_times_mat shape mismatch");
  IntVec y(m.cols, Int(0));
  for (int i = 0; i < m.rows; ++i)
    if (sgn(r[i]) != 0)
      for (int j = 0; j < m.cols; ++j) y[j] += r[i] * m.at(i, j);
  return y;
}

IntMat stack_rows(const IntMat& a, const IntMat& b) {
  if (a.cols != b.cols && a.rows != 0 && b.rows != 0)
    throw std::invalid_argument("stack_rows shape mismatch");
  IntMat c(a.rows + b.rows, a.rows ? a.cols : b.cols);
  for (int i = 0; i < a.rows; ++i) c.set_row(i, a.row(i));
  for (int i = 0; i < b.rows; ++i) c.set_row(a.rows + i, b.row(i));
  return c;
}

namespace {

void add_multiple_of_row(IntMat& m, int dst, int src, const Int& q) {
  for (int c = 0; c < m.cols; ++c) m.at(dst, c) -= q * m.at(src, c);
}

void negate_row(IntMat& m, int r) {
  for (int c = 0; c < m.cols; ++c) m.at(r, c) = -m.at(r, c);
}

void swap_rows(IntMat& m, int a, int b) {
  if (a == b) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(a, c), m.at(b, c));
}

}  // namespace

HnfResult hnf(const IntMat& m) {
  IntMat h = m;
  IntMat u = IntMat::identity(m.rows);
  int r = 0;
  for (int col = 0; col < h.cols && r < h.rows; ++col) {
    // clear the column below r via gcd pivoting
    while (true) {
      int piv = -1;
      for (int i = r; i < h.rows; ++i) {
        if (sgn(h.at(i, col)) == 0) continue;
        if (piv < 0) piv = i;
        else {
          Int a = abs(h.at(i, col)), b = abs(h.at(piv, col));
          if (a < b) piv = i;
        }
      }
      if (piv < 0) break;  // column empty below r
      swap_rows(h, r, piv);
      swap_rows(u, r, piv);
      bool cleared = true;
      for (int i = r + 1; i < h.rows; ++i) {
        if (sgn(h.at(i, col)) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(r, col).get_mpz_t());
        add_multiple_of_row(h, i, r, q);
        add_multiple_of_row(u, i, r, q);
        if (sgn(h.at(i, col)) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (sgn(h.at(r, col)) == 0) continue;
    if (sgn(h.at(r, col)) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    // reduce entries above the pivot into [0, pivot)
    for (int i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(r, col).get_mpz_t());
      if (sgn(q) != 0) {
        add_multiple_of_row(h, i, r, q);
        add_multiple_of_row(u, i, r, q);
      }
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

IntMat hnf_basis(const IntMat& m) {
  IntMat h = hnf(m).h;
  int nz = h.rows;
  while (nz > 0 && is_zero(h.row(nz - 1))) --nz;
  IntMat out(nz, h.cols);
  for (int i = 0; i < nz; ++i) out.set_row(i, h.row(i));
  return out;
}

std::vector<Int> snf_invariants(const IntMat& m0) {
  IntMat m = m0;
  int n = std::min(m.rows, m.cols);
  std::vector<Int> inv;
  int t = 0;
  auto find_min_nonzero = [&](int from) -> std::pair<int, int> {
    int bi = -1, bj = -1;
    for (int i = from; i < m.rows; ++i)
      for (int j = from; j < m.cols; ++j) {
        if (sgn(m.at(i, j)) == 0) continue;
        if (bi < 0 || abs(m.at(i, j)) < abs(m.at(bi, bj))) {
          bi = i;
          bj = j;
        }
      }
    return {bi, bj};
  };
  while (t < n) {
    auto [bi, bj] = find_min_nonzero(t);
    if (bi < 0) break;
    swap_rows(m, t, bi);
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, t), m.at(i, bj));
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < m.rows; ++i) {
        if (sgn(m.at(i, t)) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(i, t).get_mpz_t(), m.at(t, t).get_mpz_t());
        add_multiple_of_row(m, i, t, q);
      }
      for (int j = t + 1; j < m.cols; ++j) {
        if (sgn(m.at(t, j)) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(t, j).get_mpz_t(), m.at(t, t).get_mpz_t());
        for (int i = 0; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, t);
      }
      // a nonzero remainder anywhere in row/column t forces another pass
      for (int i = t + 1; i < m.rows; ++i)
        if (sgn(m.at(i, t)) != 0) clean = false;
      for (int j = t + 1; j < m.cols; ++j)
        if (sgn(m.at(t, j)) != 0) clean = false;
      if (!clean) {
        auto [ni, nj] = find_min_nonzero(t);
        swap_rows(m, t, ni);
        for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, t), m.at(i, nj));
      }
    }
    // enforce divisibility of the remaining block by the pivot
    bool redo = false;
    for (int i = t + 1; i < m.rows && !redo; ++i)
      for (int j = t + 1; j < m.cols && !redo; ++j) {
        if (sgn(m.at(i, j)) == 0) continue;
        Int r;
        mpz_mod(r.get_mpz_t(), m.at(i, j).get_mpz_t(), m.at(t, t).get_mpz_t());
        if (sgn(r) != 0) {
          for (int c = 0; c < m.cols; ++c) m.at(t, c) += m.at(i, c);
          redo = true;
        }
      }
    if (redo) continue;  // re-run the pivot step at the same t
    Int d = abs(m.at(t, t));
    inv.push_back(d);
    ++t;
  }
  return inv;
}

int rank_of(const IntMat& m) { return hnf_basis(m).rows; }

IntMat left_kernel(const IntMat& m) {
  HnfResult r = hnf(m);
  std::vector<IntVec> ker;
  for (int i = 0; i < r.h.rows; ++i)
    if (is_zero(r.h.row(i))) ker.push_back(r.u.row(i));
  return hnf_basis(IntMat::from_rows(ker, m.rows));
}

IntMat right_kernel(const IntMat& m) { return left_kernel(m.transposed()); }

std::optional<RatVec> solve_rational(const IntMat& m, const RatVec& v) {
  if (int(v.size()) != m.rows) throw std::invalid_argument("solve_rational shape mismatch");
  int R = m.rows, C = m.cols;
  // augmented rational elimination
  std::vector<RatVec> a(R, RatVec(C + 1, Rat(0)));
  for (int i = 0; i < R; ++i) {
    for (int j = 0; j < C; ++j) a[i][j] = Rat(m.at(i, j));
    a[i][C] = v[i];
  }
  std::vector<int> pivot_col(R, -1);
  int r = 0;
  for (int col = 0; col < C && r < R; ++col) {
    int piv = -1;
    for (int i = r; i < R; ++i)
      if (sgn(a[i][col]) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    Rat p = a[r][col];
    for (int j = col; j <= C; ++j) a[r][j] /= p;
    for (int i = 0; i < R; ++i) {
      if (i == r || sgn(a[i][col]) == 0) continue;
      Rat f = a[i][col];
      for (int j = col; j <= C; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col[r] = col;
    ++r;
  }
  for (int i = r; i < R; ++i)
    if (sgn(a[i][C]) != 0) return std::nullopt;
  RatVec x(C, Rat(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = a[i][C];
  return x;
}

LatticeBasis lattice_from_rows(int ambient, const std::vector<IntVec>& gens) {
  LatticeBasis l;
  l.ambient = ambient;
  l.basis = hnf_basis(IntMat::from_rows(gens, ambient));
  return l;
}

LatticeBasis full_lattice(int ambient) {
  LatticeBasis l;
  l.ambient = ambient;
  l.basis = IntMat::identity(ambient);
  return l;
}

LatticeBasis zero_lattice(int ambient) {
  LatticeBasis l;
  l.ambient = ambient;
  l.basis = IntMat(0, ambient);
  return l;
}

LatticeBasis lattice_intersect(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("lattice_intersect: ambient mismatch");
  if (a.rank() == 0 || b.rank() == 0) return zero_lattice(a.ambient);
  IntMat stacked = stack_rows(a.basis, b.basis);
  IntMat ker = left_kernel(stacked);
  std::vector<IntVec> gens;
  for (int i = 0; i < ker.rows; ++i) {
    IntVec full = ker.row(i);
    IntVec u(full.begin(), full.begin() + a.rank());
    gens.push_back(row_times_mat(u, a.basis));
  }
  return lattice_from_rows(a.ambient, gens);
}

LatticeBasis image_lattice(const IntMat& f, const LatticeBasis& l) {
  if (f.cols != l.ambient) throw std::invalid_argument("image_lattice: shape mismatch");
  std::vector<IntVec> gens;
  for (int i = 0; i < l.basis.rows; ++i) gens.push_back(mat_apply(f, l.basis.row(i)));
  return lattice_from_rows(f.rows, gens);
}

LatticeBasis saturate(const LatticeBasis& l) {
  if (l.rank() == 0) return zero_lattice(l.ambient);
  IntMat n = right_kernel(l.basis);          // vectors orthogonal to the row span
  IntMat sat = right_kernel(n);              // everything orthogonal to those
  LatticeBasis out;
  out.ambient = l.ambient;
  out.basis = sat;
  return out;
}

bool lattice_contains(const LatticeBasis& l, const IntVec& z) {
  if (int(z.size()) != l.ambient) throw std::invalid_argument("lattice_contains: dim mismatch");
  IntVec w = z;
  int row = 0;
  for (int col = 0; col < l.ambient && row < l.basis.rows; ++col) {
    // pivot of this row?
    int pc = -1;
    for (int c = 0; c < l.ambient; ++c)
      if (sgn(l.basis.at(row, c)) != 0) {
        pc = c;
        break;
      }
    if (pc != col) continue;
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w[col].get_mpz_t(), l.basis.at(row, col).get_mpz_t());
    if (sgn(r) != 0) return false;
    for (int c = 0; c < l.ambient; ++c) w[c] -= q * l.basis.at(row, c);
    ++row;
  }
  return is_zero(w);
}

bool sublattice_of(const LatticeBasis& sub, const LatticeBasis& sup) {
  for (int i = 0; i < sub.basis.rows; ++i)
    if (!lattice_contains(sup, sub.basis.row(i))) return false;
  return true;
}

LatticeBasis preimage_lattice(const IntMat& b, const LatticeBasis& l) {
  if (b.cols != l.ambient) throw std::invalid_argument("preimage_lattice: shape mismatch");
  if (l.rank() == 0) {
    // preimage of the zero lattice: c with c*b = 0
    IntMat ker = left_kernel(b);
    LatticeBasis out;
    out.ambient = b.rows;
    out.basis = ker;
    return out;
  }
  IntMat neg(l.basis.rows, l.ambient);
  for (int i = 0; i < l.basis.rows; ++i)
    for (int j = 0; j < l.ambient; ++j) neg.at(i, j) = -l.basis.at(i, j);
  IntMat stacked = stack_rows(b, neg);
  IntMat ker = left_kernel(stacked);  // (c, y) with c*b = y*l
  std::vector<IntVec> gens;
  for (int i = 0; i < ker.rows; ++i) {
    IntVec full = ker.row(i);
    gens.push_back(IntVec(full.begin(), full.begin() + b.rows));
  }
  return lattice_from_rows(b.rows, gens);
}

std::vector<Int> quotient_invariants(const LatticeBasis& sub, const LatticeBasis& sup) {
  if (sub.ambient != sup.ambient) throw std::invalid_argument("quotient_invariants: ambient mismatch");
  if (sub.rank() != sup.rank()) throw std::invalid_argument("quotient_invariants: rank mismatch");
  if (sup.rank() == 0) return {};
  // coordinates of sub's basis in sup's basis; integral because sub <= sup
  int k = sup.rank();
  IntMat coords(sub.rank(), k);
  IntMat supT = sup.basis.transposed();
  for (int i = 0; i < sub.basis.rows; ++i) {
    auto x = solve_rational(supT, to_rational(sub.basis.row(i)));
    if (!x) throw std::invalid_argument("quotient_invariants: not a sublattice");
    for (int j = 0; j < k; ++j) {
      if ((*x)[j].get_den() != 1) throw std::invalid_argument("quotient_invariants: not a sublattice");
      coords.at(i, j) = (*x)[j].get_num();
    }
  }
  return snf_invariants(coords);
}

std::string to_string(const IntMat& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < m.cols; ++j) os << (j ? "," : "") << m.at(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace tcs
