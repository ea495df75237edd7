#include "tcs/cone.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tcs {

namespace {

// --- double description ---------------------------------------------------

using Bits = std::vector<uint64_t>;

Bits bits_make(size_t n) { return Bits((n + 63) / 64, 0); }
void bits_set(Bits& b, size_t i) { b[i / 64] |= uint64_t(1) << (i % 64); }
Bits bits_and(const Bits& a, const Bits& b) {
  Bits r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
  return r;
}
bool bits_superset(const Bits& big, const Bits& small) {
  for (size_t i = 0; i < big.size(); ++i)
    if ((big[i] & small[i]) != small[i]) return false;
  return true;
}

struct DDRay {
  IntVec v;
  Bits zero;
};

// Incremental double description on a pointed-modulo-lineality pair.
// Invariant: (rays, lin) is an irredundant V-representation of the cone cut
// out by the inequalities processed so far.
struct DDState {
  int dim;
  std::vector<IntVec> lin;
  std::vector<DDRay> rays;
  size_t nbits;
  size_t processed = 0;

  DDState(int k, size_t total_ineqs) : dim(k), nbits(total_ineqs) {
    for (int i = 0; i < k; ++i) {
      IntVec e(k, Int(0));
      e[i] = 1;
      lin.push_back(std::move(e));
    }
  }

  bool adjacent(size_t pi, size_t mi) const {
    Bits z = bits_and(rays[pi].zero, rays[mi].zero);
    for (size_t t = 0; t < rays.size(); ++t) {
      if (t == pi || t == mi) continue;
      if (bits_superset(rays[t].zero, z)) return false;
    }
    return true;
  }

  void add_inequality(const IntVec& a0) {
    IntVec a = a0;
    make_primitive(a);
    size_t bit = processed++;
    if (is_zero(a)) {
      for (auto& r : rays) bits_set(r.zero, bit);
      return;
    }
    // consume a lineality direction if the functional is nonzero on it
    int j = -1;
    for (size_t i = 0; i < lin.size(); ++i)
      if (sgn(dot(a, lin[i])) != 0) {
        j = int(i);
        break;
      }
    if (j >= 0) {
      IntVec l0 = lin[size_t(j)];
      if (sgn(dot(a, l0)) < 0) l0 = negated(l0);
      Int al0 = dot(a, l0);
      std::vector<IntVec> nl;
      for (size_t i = 0; i < lin.size(); ++i) {
        if (int(i) == j) continue;
        IntVec w = combine(al0, lin[i], -dot(a, lin[i]), l0);
        make_primitive(w);
        nl.push_back(std::move(w));
      }
      lin = std::move(nl);
      for (auto& r : rays) {
        Int ar = dot(a, r.v);
        if (sgn(ar) != 0) {
          r.v = combine(al0, r.v, -ar, l0);
          make_primitive(r.v);
        }
        bits_set(r.zero, bit);
      }
      DDRay nr;
      nr.v = std::move(l0);
      nr.zero = bits_make(nbits);
      for (size_t b = 0; b < bit; ++b) bits_set(nr.zero, b);
      rays.push_back(std::move(nr));
      return;
    }
    // functional vanishes on the lineality: classify rays
    std::vector<Int> val(rays.size());
    bool has_pos = false, has_neg = false;
    for (size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (sgn(val[i]) > 0) has_pos = true;
      if (sgn(val[i]) < 0) has_neg = true;
    }
    if (!has_neg) {
      for (size_t i = 0; i < rays.size(); ++i)
        if (sgn(val[i]) == 0) bits_set(rays[i].zero, bit);
      return;
    }
    std::vector<DDRay> next;
    if (has_pos) {
      for (size_t p = 0; p < rays.size(); ++p) {
        if (sgn(val[p]) <= 0) continue;
        for (size_t m = 0; m < rays.size(); ++m) {
          if (sgn(val[m]) >= 0) continue;
          if (!adjacent(p, m)) continue;
          DDRay nr;
          nr.v = combine(val[p], rays[m].v, -val[m], rays[p].v);
          make_primitive(nr.v);
          nr.zero = bits_and(rays[p].zero, rays[m].zero);
          bits_set(nr.zero, bit);
          next.push_back(std::move(nr));
        }
      }
    }
    for (size_t i = 0; i < rays.size(); ++i) {
      if (sgn(val[i]) < 0) continue;
      if (sgn(val[i]) == 0) bits_set(rays[i].zero, bit);
      next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }
};

}  // namespace

DualDescription dual_description(const std::vector<IntVec>& ineqs,
                                 const std::vector<IntVec>& eqs, int rank) {
  // restrict to the subspace cut out by the equations
  IntMat W;
  bool restricted = false;
  int dim = rank;
  if (!eqs.empty()) {
    W = right_kernel(IntMat::from_rows(eqs, rank));
    dim = W.rows;
    restricted = true;
    if (dim == 0) return {};
  }
  auto restrict_fn = [&](const IntVec& a) {
    if (!restricted) return a;
    IntVec r(dim);
    for (int i = 0; i < dim; ++i) r[i] = dot(W.row(i), a);
    return r;
  };
  DDState st(dim, ineqs.size());
  for (const IntVec& a : ineqs) st.add_inequality(restrict_fn(a));
  DualDescription out;
  auto lift = [&](const IntVec& c) {
    if (!restricted) return c;
    return row_times_mat(c, W);
  };
  for (const auto& r : st.rays) out.rays.push_back(lift(r.v));
  for (const auto& l : st.lin) out.lineality.push_back(lift(l));
  return out;
}

// --- Cone ------------------------------------------------------------------

struct Cone::Data {
  int rank = 0;
  std::vector<IntVec> rays;
  LatticeBasis lineality;
  std::string key;

  mutable std::once_flag dim_once;
  mutable int dim = -1;
  mutable std::once_flag dual_once;
  mutable std::vector<IntVec> facets;
  mutable std::vector<IntVec> equations;

  IntMat span_rows() const {
    IntMat span = lineality.basis;
    for (const auto& r : rays) span = stack_rows(span, IntMat::from_rows({r}, rank));
    return span;
  }

  void ensure_dim() const {
    std::call_once(dim_once, [this] { dim = rank_of(span_rows()); });
  }

  void ensure_dual() const {
    std::call_once(dual_once, [this] {
      equations = right_kernel(span_rows()).row_list();
      std::vector<IntVec> gen_eqs = lineality.basis.row_list();
      DualDescription dual = dual_description(rays, gen_eqs, rank);
      // dual rays = facet normals; canonicalize modulo the span equations
      facets = dual.rays;
      if (!equations.empty()) {
        IntMat E = IntMat::from_rows(equations, rank);
        IntMat G = mat_mul(E, E.transposed());
        for (IntVec& u : facets) {
          auto c = solve_rational(G, mat_apply(E, to_rational(u)));
          RatVec shift = to_rational(u);
          for (int i = 0; i < E.rows; ++i)
            for (int jc = 0; jc < E.cols; ++jc) shift[jc] -= (*c)[i] * Rat(E.at(i, jc));
          u = primitive_of_rational(shift);
        }
      }
      std::sort(facets.begin(), facets.end(),
                [](const IntVec& a, const IntVec& b) { return compare(a, b) < 0; });
    });
  }
};

namespace {

// Orthogonal projection of r off the row span of B, scaled primitive.
IntVec project_off(const IntVec& r, const IntMat& B) {
  if (B.rows == 0) {
    IntVec c = r;
    make_primitive(c);
    return c;
  }
  IntMat G = mat_mul(B, B.transposed());
  auto c = solve_rational(G, mat_apply(B, to_rational(r)));
  RatVec out = to_rational(r);
  for (int i = 0; i < B.rows; ++i)
    for (int j = 0; j < B.cols; ++j) out[j] -= (*c)[i] * Rat(B.at(i, j));
  return primitive_of_rational(out);
}

std::string build_key(int rank, const LatticeBasis& lin, const std::vector<IntVec>& rays) {
  std::ostringstream os;
  os << rank << ';' << lin.basis.rows << ';';
  for (int i = 0; i < lin.basis.rows; ++i)
    for (int j = 0; j < lin.basis.cols; ++j) os << lin.basis.at(i, j).get_str() << ',';
  os << '|';
  for (const auto& r : rays) {
    for (const auto& x : r) os << x.get_str() << ',';
    os << ';';
  }
  return os.str();
}

}  // namespace

Cone Cone::from_extremal(std::vector<IntVec> rays, LatticeBasis lineality, int rank) {
  auto d = std::make_shared<Data>();
  d->rank = rank;
  d->lineality = std::move(lineality);
  std::sort(rays.begin(), rays.end(),
            [](const IntVec& a, const IntVec& b) { return compare(a, b) < 0; });
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  d->rays = std::move(rays);
  d->key = build_key(d->rank, d->lineality, d->rays);
  return Cone(std::move(d));
}

namespace {

Cone canonicalize_vrep(const DualDescription& dd, int rank) {
  LatticeBasis lin = dd.lineality.empty()
                         ? zero_lattice(rank)
                         : saturate(lattice_from_rows(rank, dd.lineality));
  std::vector<IntVec> rays;
  rays.reserve(dd.rays.size());
  for (const IntVec& r : dd.rays) rays.push_back(project_off(r, lin.basis));
  return Cone::from_extremal(std::move(rays), std::move(lin), rank);
}

}  // namespace

Cone Cone::from_inequalities(const std::vector<IntVec>& normals,
                             const std::vector<IntVec>& equations, int rank) {
  for (const auto& u : normals)
    if (int(u.size()) != rank) throw std::invalid_argument("normal has wrong length");
  for (const auto& u : equations)
    if (int(u.size()) != rank) throw std::invalid_argument("equation has wrong length");
  return canonicalize_vrep(dual_description(normals, equations, rank), rank);
}

Cone Cone::from_generators(const std::vector<IntVec>& rays,
                           const std::vector<IntVec>& lineality, int rank) {
  // facets of the generated cone are the extremal rays of its dual
  DualDescription dual = dual_description(rays, lineality, rank);
  return canonicalize_vrep(dual_description(dual.rays, dual.lineality, rank), rank);
}

Cone Cone::zero_cone(int rank) { return from_extremal({}, zero_lattice(rank), rank); }

Cone Cone::full_space(int rank) { return from_extremal({}, full_lattice(rank), rank); }

int Cone::ambient_rank() const { return d_->rank; }
int Cone::dim() const {
  d_->ensure_dim();
  return d_->dim;
}
const std::vector<IntVec>& Cone::rays() const { return d_->rays; }
const LatticeBasis& Cone::lineality() const { return d_->lineality; }
int Cone::lineality_rank() const { return d_->lineality.basis.rows; }

const std::vector<IntVec>& Cone::facet_normals() const {
  d_->ensure_dual();
  return d_->facets;
}

const std::vector<IntVec>& Cone::span_equations() const {
  d_->ensure_dual();
  return d_->equations;
}

std::vector<IntVec> Cone::generators() const {
  std::vector<IntVec> g = d_->rays;
  for (int i = 0; i < d_->lineality.basis.rows; ++i) {
    g.push_back(d_->lineality.basis.row(i));
    g.push_back(negated(d_->lineality.basis.row(i)));
  }
  return g;
}

LatticeBasis Cone::span_lattice() const {
  IntMat span = d_->lineality.basis;
  for (const auto& r : d_->rays) span = stack_rows(span, IntMat::from_rows({r}, d_->rank));
  LatticeBasis l;
  l.ambient = d_->rank;
  l.basis = hnf_basis(span);
  return saturate(l);
}

Position Cone::contains(const RatVec& p) const {
  if (int(p.size()) != d_->rank) throw std::invalid_argument("contains: dimension mismatch");
  d_->ensure_dual();
  for (const auto& e : d_->equations)
    if (sgn(dot(e, p)) != 0) return Position::outside;
  bool tight = false;
  for (const auto& u : d_->facets) {
    int s = sgn(dot(u, p));
    if (s < 0) return Position::outside;
    if (s == 0) tight = true;
  }
  return tight ? Position::boundary : Position::relative_interior;
}

bool Cone::contains_cone(const Cone& other) const {
  for (const auto& g : other.generators())
    if (contains(to_rational(g)) == Position::outside) return false;
  return true;
}

RatVec Cone::relative_interior_point() const {
  RatVec p(d_->rank, Rat(0));
  for (const auto& r : d_->rays)
    for (int i = 0; i < d_->rank; ++i) p[i] += Rat(r[i]);
  return p;
}

RatVec Cone::relative_interior_point_variant() const {
  RatVec p(d_->rank, Rat(0));
  Int w = 1;
  for (const auto& r : d_->rays) {
    for (int i = 0; i < d_->rank; ++i) p[i] += Rat(w * r[i]);
    w += 1;
  }
  // shift inside the lineality space: stays in the relative interior
  for (int i = 0; i < d_->lineality.basis.rows; ++i)
    for (int j = 0; j < d_->rank; ++j) p[j] += Rat(d_->lineality.basis.at(i, j));
  return p;
}

const std::string& Cone::key() const { return d_->key; }

bool Cone::operator==(const Cone& o) const { return key() == o.key(); }

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw std::invalid_argument("intersect: ambient rank mismatch");
  std::vector<IntVec> normals = a.facet_normals();
  for (const auto& u : b.facet_normals()) normals.push_back(u);
  std::vector<IntVec> eqs = a.span_equations();
  for (const auto& e : b.span_equations()) eqs.push_back(e);
  return Cone::from_inequalities(normals, eqs, a.ambient_rank());
}

Cone intersect_halfspace(const Cone& c, const IntVec& normal) {
  std::vector<IntVec> normals = c.facet_normals();
  normals.push_back(normal);
  return Cone::from_inequalities(normals, c.span_equations(), c.ambient_rank());
}

Cone linear_image(const IntMat& f, const Cone& c) {
  if (f.cols != c.ambient_rank()) throw std::invalid_argument("linear_image: shape mismatch");
  std::vector<IntVec> rays;
  for (const auto& r : c.rays()) rays.push_back(mat_apply(f, r));
  std::vector<IntVec> lin;
  for (int i = 0; i < c.lineality().basis.rows; ++i)
    lin.push_back(mat_apply(f, c.lineality().basis.row(i)));
  return Cone::from_generators(rays, lin, f.rows);
}

Cone linear_preimage(const IntMat& f, const Cone& c) {
  if (f.rows != c.ambient_rank()) throw std::invalid_argument("linear_preimage: shape mismatch");
  std::vector<IntVec> normals;
  for (const auto& u : c.facet_normals()) normals.push_back(row_times_mat(u, f));
  std::vector<IntVec> eqs;
  for (const auto& e : c.span_equations()) eqs.push_back(row_times_mat(e, f));
  return Cone::from_inequalities(normals, eqs, f.cols);
}

Cone tight_face(const Cone& c, const std::vector<IntVec>& tight_normals) {
  std::vector<IntVec> rays;
  for (const auto& r : c.rays()) {
    bool keep = true;
    for (const auto& u : tight_normals)
      if (sgn(dot(u, r)) != 0) {
        keep = false;
        break;
      }
    if (keep) rays.push_back(r);
  }
  return Cone::from_extremal(std::move(rays), c.lineality(), c.ambient_rank());
}

std::vector<Cone> facet_faces(const Cone& c) {
  std::vector<Cone> out;
  for (const auto& u : c.facet_normals()) out.push_back(tight_face(c, {u}));
  return out;
}

std::vector<Cone> faces(const Cone& c) {
  // simplicial fast path: every subset of rays spans a face
  if (int(c.rays().size()) == c.dim() - c.lineality_rank()) {
    std::vector<Cone> out;
    size_t k = c.rays().size();
    if (k > 20) throw std::runtime_error("faces: too many rays for subset enumeration");
    for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
      std::vector<IntVec> sub;
      for (size_t i = 0; i < k; ++i)
        if (mask & (size_t(1) << i)) sub.push_back(c.rays()[i]);
      out.push_back(Cone::from_extremal(std::move(sub), c.lineality(), c.ambient_rank()));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  // Every face keeps exactly the rays tight against a subset of the facets,
  // so the closure is a bitmask search over tight-ray sets; no further dual
  // descriptions are needed and each face is materialized once.
  const auto& facets = c.facet_normals();
  const auto& rays = c.rays();
  std::vector<Bits> facet_tight(facets.size(), bits_make(rays.size()));
  for (size_t fi = 0; fi < facets.size(); ++fi)
    for (size_t ri = 0; ri < rays.size(); ++ri)
      if (sgn(dot(facets[fi], rays[ri])) == 0) bits_set(facet_tight[fi], ri);
  Bits full = bits_make(rays.size());
  for (size_t ri = 0; ri < rays.size(); ++ri) bits_set(full, ri);

  std::set<Bits> seen{full};
  std::vector<Bits> frontier{full};
  std::vector<Cone> all{c};
  while (!frontier.empty()) {
    std::vector<Bits> next;
    for (const Bits& node : frontier) {
      for (size_t fi = 0; fi < facets.size(); ++fi) {
        Bits child = bits_and(node, facet_tight[fi]);
        if (child == node) continue;  // facet already vanishes here
        if (!seen.insert(child).second) continue;
        std::vector<IntVec> sub;
        for (size_t ri = 0; ri < rays.size(); ++ri)
          if (child[ri / 64] & (uint64_t(1) << (ri % 64))) sub.push_back(rays[ri]);
        all.push_back(Cone::from_extremal(std::move(sub), c.lineality(), c.ambient_rank()));
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

bool is_face_of(const Cone& f, const Cone& c) {
  if (f.ambient_rank() != c.ambient_rank()) return false;
  if (!c.contains_cone(f)) return false;
  std::vector<IntVec> tight;
  for (const auto& u : c.facet_normals()) {
    bool vanish = true;
    for (const auto& g : f.generators())
      if (sgn(dot(u, g)) != 0) {
        vanish = false;
        break;
      }
    if (vanish) tight.push_back(u);
  }
  return tight_face(c, tight) == f;
}

}  // namespace tcs
