#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tcs/chow.hpp"

namespace tcs {

/// One polyhedron of a fiber decomposition, indexed by the refined-scaffold
/// cone mapping onto the base cone.
struct FiberPolyhedron {
  int cone_index = -1;  // into refined.fan.all_cones()
  int dim = 0;          // dimension of the slice
  bool bounded = false;
};

/// The polyhedral decomposition of the fiber over a relative-interior point
/// of a base cone. Polyhedra correspond to cones upstairs mapping onto the
/// base cone; the face poset is inherited from cone inclusion.
struct FiberComplex {
  Cone rho;
  RatVec base_point;
  std::vector<FiberPolyhedron> polyhedra;
  std::vector<std::vector<bool>> leq;  // leq[i][j]: polyhedron i is a face of j
  std::vector<int> vertices;           // indices of the 0-dimensional polyhedra
  std::map<int, RatVec> vertex_position;

  /// Canonical encoding of the face poset, equal for combinatorially equal
  /// complexes with identically ordered polyhedra lists.
  std::string poset_fingerprint() const;
};

FiberComplex fiber_complex(const ConfigurationFan& cf, const Cone& rho);
FiberComplex fiber_complex_at(const ConfigurationFan& cf, const Cone& rho,
                              const RatVec& base_point);

/// For each mark, the unique vertex lying on the section image.
std::map<int, int> marking_vertices(const ConfigurationFan& cf, const FiberComplex& fc);

/// The linear map reading a vertex position off the tropical parameters of
/// the base cone.
struct TropicalPositionMap {
  int vertex = -1;
  /// Images of the HNF basis vectors of the span lattice of rho (rational).
  std::vector<RatVec> on_span_basis;
  /// Integer matrix on the HNF basis of the stacky sublattice of rho
  /// (d rows, rank(L_rho) columns).
  IntMat on_sublattice;
  /// When rho is simplicial: images of its primitive rays, i.e. the map in
  /// the edge-length coordinates dual to the rays.
  std::optional<std::vector<RatVec>> on_rays;
};

std::map<int, TropicalPositionMap> position_maps(const ConfigurationFan& cf,
                                                 const FiberComplex& fc);

/// Rubber torus data over a cone: the stacky sublattice, the position maps
/// of all vertices restricted to it, and the dimension of the stratum.
struct RubberData {
  Cone rho;
  LatticeBasis rubber_lattice;
  std::map<int, IntMat> weights;  // vertex -> d x rank(L_rho), integral
  int stratum_dim = 0;
};

RubberData rubber_data(const ConfigurationFan& cf, const Cone& rho);

/// Fan of tangent cones at a vertex of the fiber complex.
Fan component_fan(const ConfigurationFan& cf, const FiberComplex& fc, int vertex);

struct StratumReport {
  Cone rho;
  int stratum_dim = 0;
  FiberComplex fiber;
  std::map<int, int> markings;                    // mark -> vertex
  std::map<int, TropicalPositionMap> positions;   // vertex -> map
  RubberData rubber;
  std::map<int, Fan> component_fans;              // vertex -> fan on the fiber
  std::map<int, std::vector<Int>> stabilizers;    // vertex -> invariants > 1
  std::optional<std::string> bisequence;          // present when d == 2
};

StratumReport stratum_report(const ConfigurationFan& cf, const Cone& rho);

/// Point location on the base plus the full stratum report; the fiber is
/// computed at p itself when p is interior to the located cone.
std::pair<Cone, StratumReport> locate(const ConfigurationFan& cf, const RatVec& p);

}  // namespace tcs
