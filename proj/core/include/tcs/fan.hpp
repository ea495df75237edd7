#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tcs/cone.hpp"

namespace tcs {

constexpr uint64_t kDefaultSeed = 20240901;

/// Sign pattern of a point against the hyperplanes of an arrangement.
struct SignVector {
  std::vector<int8_t> entries;  // -1, 0, +1 per hyperplane
  bool operator==(const SignVector& o) const { return entries == o.entries; }
};

/// A central hyperplane arrangement; normals primitive, sign-normalized
/// (first nonzero entry positive), pairwise distinct and nonzero.
struct Arrangement {
  int ambient_rank = 0;
  std::vector<IntVec> normals;

  static Arrangement make(int rank, std::vector<IntVec> normals);
};

struct FanCheckReport {
  bool ok = true;
  std::string detail;
};

/// A fan given by its maximal cones (canonical, sorted). Faces are derived
/// lazily and cached; completeness is cached once known.
class Fan {
 public:
  Fan() = default;
  static Fan from_maximal(std::vector<Cone> maximal, int rank,
                          std::optional<bool> complete = std::nullopt);

  int ambient_rank() const;
  const std::vector<Cone>& maximal_cones() const;
  /// Face closure of the maximal cones, sorted canonically.
  const std::vector<Cone>& all_cones() const;
  bool has_cone(const Cone& c) const;
  /// Index of c in all_cones(), or -1.
  int cone_index(const Cone& c) const;
  /// Some maximal cone having the given face (index into maximal_cones()).
  int parent_of(const Cone& face) const;

  std::optional<bool> completeness_cache() const;
  void cache_complete(bool value) const;

  bool valid() const { return bool(d_); }

 private:
  struct Data;
  std::shared_ptr<Data> d_;
};

/// Whether the open region with the given strict sign pattern is nonempty,
/// decided by exact Fourier-Motzkin elimination.
bool signed_region_feasible(const Arrangement& a, const std::vector<int8_t>& signs);

/// The complete fan whose cones are the closures of the sign-vector cells of
/// the arrangement.
Fan fan_from_arrangement(const Arrangement& a);

/// Validates the fan axioms (pairwise intersections are common faces, no
/// maximal cone contained in another). Names the first violating pair.
FanCheckReport check_fan(const Fan& f);

/// Structural completeness certificate: maximal cones full-dimensional,
/// every ridge shared by exactly two maximal cones, connected dual graph,
/// plus containment of random rational sample points.
bool check_complete(const Fan& f, uint64_t seed = kDefaultSeed);

/// Minimal common refinement of complete fans on one space.
Fan common_refinement(const std::vector<Fan>& fans);

/// Fan with cones f^{-1}(sigma); f must be surjective over Q.
Fan preimage_fan(const IntMat& f, const Fan& g);

/// Literal equality of canonical maximal-cone sets.
bool fans_equal(const Fan& a, const Fan& b);

/// Every cone of fine lies in a cone of coarse, with equal supports.
bool is_refinement(const Fan& fine, const Fan& coarse);

/// External product on the concatenated coordinate blocks.
Fan product_fan(const Fan& a, const Fan& b);

/// Relabel coordinates: new_coord[perm[i]] = old_coord[i].
Fan permute_coordinates(const Fan& f, const std::vector<int>& perm);

/// The smallest cone of f whose relative interior contains p. Requires p to
/// lie in the support.
Cone cone_containing(const Fan& f, const RatVec& p);

struct FVector {
  std::vector<size_t> counts;  // by dimension, 0..rank
};
FVector f_vector(const Fan& f);

}  // namespace tcs
