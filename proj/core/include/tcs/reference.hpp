#pragma once

#include <map>
#include <string>
#include <vector>

#include "tcs/fan.hpp"

namespace tcs {

/// Ordered set partition of {0,...,n}.
struct OrderedPartition {
  std::vector<std::vector<int>> blocks;
};

std::vector<OrderedPartition> ordered_partitions(int n);

/// Cone of the permutahedral fan given by a total preorder: coordinates
/// within a block agree, blocks are ordered increasingly. Ambient R^n with
/// the a_0 = 0 convention.
Cone permutahedral_cone(const OrderedPartition& j, int n);

/// Permutahedral fan on R^n; one maximal cone per total order of the n+1
/// labels, complete and pointed.
Fan permutahedral_fan(int n);

/// Sigma_n x Sigma_n on interleaved coordinates (a1,b1,...,an,bn).
Fan square_permutahedral_fan(int n);

/// One comparison cell of the bipermutahedral construction.
struct BipermCell {
  int apex = 0;
  OrderedPartition a_order;
  OrderedPartition b_order;
  // (j,k) -> -1/0/+1 meaning a_apex + b_apex (<|=|>) a_j + b_k
  std::map<std::pair<int, int>, int> antidiag_comparisons;
};

/// Bipermutahedral fan on R^{2n} (interleaved coordinates), generated
/// apex-by-apex from order and antidiagonal comparisons and deduplicated.
Fan bipermutahedral_fan(int n);

/// Harmonic fan on R^{2n}: order comparisons plus the subset of points on
/// the supporting antidiagonal, without the mixed comparisons. Sits between
/// the bipermutahedral fan and the square of the permutahedral fan in the
/// refinement order. Experimental target only; no quotient statement is
/// asserted against it.
Fan harmonic_fan(int n);

/// Bar-notation bisequence label of the cone whose relative interior
/// contains p: crossings of the supporting antidiagonal with the lines
/// x = a_i and y = b_i, read from the far end; a point on the antidiagonal
/// appears once.
std::string bisequence_of(const RatVec& p);

/// The cone of the bipermutahedral fan carrying the given bisequence.
Cone bisequence_cone(const std::string& label, int n);

}  // namespace tcs
