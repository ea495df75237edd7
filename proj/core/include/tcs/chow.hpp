#pragma once

#include <vector>

#include "tcs/scaffold.hpp"
#include "tcs/stacky.hpp"

namespace tcs {

/// Which cones contribute to the quotient sublattice over a cone rho: those
/// whose image equals rho, or all whose image contains it. The two readings
/// agree on every fan in the test corpus.
enum class LatticeQuantifier { image_equal, image_contains };

/// Result of universal weak semistable reduction applied to the projection
/// of a scaffold: the configuration fan on the base with its stacky
/// sublattices, the refined scaffold upstairs, and the certified maps
/// between them.
struct ConfigurationFan {
  Scaffold scaffold;        // the input, with its fan replaced downstream
  StackyFan pi_fan;         // configuration fan on the base
  Scaffold refined;         // refinement of the input scaffold
  StackyFan refined_stacky; // refined fan with pulled-back sublattices
  IntMat projection;
  std::vector<IntMat> sections;  // n + 1 section matrices

  /// fiber_cones[i] lists indices into refined.fan.all_cones() of the cones
  /// mapping onto pi_fan.fan().all_cones()[i].
  std::vector<std::vector<int>> fiber_cones;

  int n() const { return scaffold.n; }
  int d() const { return scaffold.d; }
};

/// The main construction: overlay the projected cones, merge regions with
/// equal containing-image sets, attach quotient sublattices, refine the
/// scaffold, and certify weak semistability of the projection and of every
/// section. Throws on any certificate failure.
ConfigurationFan configuration_fan(const Scaffold& s,
                                   LatticeQuantifier q = LatticeQuantifier::image_equal);

Scaffold refined_scaffold_of(const ConfigurationFan& cf);

/// Terminality certificate: every maximal cone is the intersection of the
/// projected scaffold cones containing it, and adjacent maximal cones have
/// different containing-image sets.
FanCheckReport check_terminality(const ConfigurationFan& cf);

}  // namespace tcs
