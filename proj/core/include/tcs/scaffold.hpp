#pragma once

#include <string>
#include <vector>

#include "tcs/fan.hpp"

namespace tcs {

/// A complete fan on the total space of the universal family, with ambient
/// coordinates (a_1, ..., a_n, x): n blocks of size d for the unanchored
/// marks followed by one fiber block of size d. The anchored mark sits at
/// a_0 = 0. Every section image { x = a_i } must be a union of cones.
struct Scaffold {
  int n = 0;
  int d = 0;
  Fan fan;           // rank n*d + d
  std::string kind;  // constructor tag, kept for self-describing files

  int total_rank() const { return n * d + d; }
  int base_rank() const { return n * d; }
};

/// The projection (a, x) -> a as an integer matrix.
IntMat projection_matrix(const Scaffold& s);
/// The section a -> (a, a_i) (a_0 = 0 for i = 0).
IntMat section_matrix(const Scaffold& s, int i);
/// Equations cutting out the section image H_i = { x = a_i }.
std::vector<IntVec> section_equations(const Scaffold& s, int i);

struct ScaffoldReport {
  bool ok = true;
  std::string detail;
  /// Per section, the keys of the fan cones whose union is the image.
  std::vector<std::vector<std::string>> covering;
};

/// Fan axioms, completeness, and the union-of-cones condition for every
/// section image. The seed drives the sampling half of the completeness
/// certificate.
ScaffoldReport validate_scaffold(const Scaffold& s, uint64_t seed = kDefaultSeed);

/// The d=1 scaffold induced by the hyperplanes { x = a_i }, i = 0..n.
Scaffold minimal_scaffold(int n);

/// The d=2 scaffold induced by { x = a_i } and { y = b_i }.
Scaffold square_scaffold(int n);

/// The d=2 scaffold refining the square one by the supporting antidiagonal;
/// built region by region over the loci where mark i realizes
/// min_j(a_j + b_j), then glued and revalidated.
Scaffold biperm_scaffold(int n);

/// External product along the mark blocks; both factors must have the same
/// number of marks and positive fiber dimension.
Scaffold product_scaffold(const Scaffold& s1, const Scaffold& s2);

/// The scaffold overlaying translates of a complete fan sigma at every mark.
Scaffold scaffold_from_fan(const Fan& sigma, int n);

/// Common refinement with an arbitrary complete fan, revalidated.
Scaffold refine_scaffold(const Scaffold& s, const Fan& extra);

}  // namespace tcs
