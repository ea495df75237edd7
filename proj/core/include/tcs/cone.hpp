#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tcs/linalg.hpp"

namespace tcs {

/// Raw exact double-description output: extremal rays and a lineality basis
/// of { x : ineqs * x >= 0, eqs * x = 0 }.
struct DualDescription {
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
};

DualDescription dual_description(const std::vector<IntVec>& ineqs,
                                 const std::vector<IntVec>& eqs, int rank);

enum class Position { outside, boundary, relative_interior };

/// A rational polyhedral cone in canonical form. Rays are primitive,
/// extremal, projected orthogonally off the lineality span and sorted
/// lexicographically; the lineality space is stored as a saturated HNF
/// lattice basis. Two cones are equal iff their canonical forms coincide
/// literally. The facet/equation description is computed once on demand.
class Cone {
 public:
  Cone() = default;

  static Cone from_inequalities(const std::vector<IntVec>& normals,
                                const std::vector<IntVec>& equations, int rank);
  static Cone from_generators(const std::vector<IntVec>& rays,
                              const std::vector<IntVec>& lineality, int rank);
  /// Trusted input: rays already extremal/primitive/canonical reps for the
  /// given lineality space (used for faces of canonical cones).
  static Cone from_extremal(std::vector<IntVec> rays, LatticeBasis lineality, int rank);
  static Cone zero_cone(int rank);
  static Cone full_space(int rank);

  int ambient_rank() const;
  int dim() const;
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_rank(); }

  const std::vector<IntVec>& rays() const;
  const LatticeBasis& lineality() const;
  int lineality_rank() const;

  /// Primitive inward facet normals (canonical reps modulo the span
  /// equations, sorted) and an HNF basis of the functionals vanishing on
  /// the span.
  const std::vector<IntVec>& facet_normals() const;
  const std::vector<IntVec>& span_equations() const;

  /// All generators: rays plus lineality basis rows and their negatives.
  std::vector<IntVec> generators() const;

  /// span(cone) intersected with the integer lattice, as an HNF basis.
  LatticeBasis span_lattice() const;

  Position contains(const RatVec& p) const;
  bool contains_cone(const Cone& other) const;  // other subseteq this

  RatVec relative_interior_point() const;
  /// An alternative relative-interior sample (different generic weights).
  RatVec relative_interior_point_variant() const;

  /// Canonical identity, usable as a hash/sort key.
  const std::string& key() const;

  bool operator==(const Cone& o) const;
  bool operator<(const Cone& o) const { return key() < o.key(); }

  bool valid() const { return bool(d_); }

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
  explicit Cone(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
};

Cone intersect(const Cone& a, const Cone& b);
Cone intersect_halfspace(const Cone& c, const IntVec& normal);
Cone linear_image(const IntMat& f, const Cone& c);
/// { x : f*x in c }.
Cone linear_preimage(const IntMat& f, const Cone& c);

/// All faces of c, including c itself and its minimal face, canonical forms.
std::vector<Cone> faces(const Cone& c);
/// Codimension-one faces of c.
std::vector<Cone> facet_faces(const Cone& c);
/// The face of c on which all the given facet normals of c vanish.
Cone tight_face(const Cone& c, const std::vector<IntVec>& tight_normals);

bool is_face_of(const Cone& f, const Cone& c);

struct ConeHash {
  size_t operator()(const Cone& c) const { return std::hash<std::string>()(c.key()); }
};

}  // namespace tcs
