#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tcs/fan.hpp"

namespace tcs {

/// A fan together with a finite-index sublattice L_sigma of
/// N_sigma = span(sigma) cap Z^n per cone. Sublattices are stored on the
/// maximal cones only; on a face tau of sigma the lattice is derived as
/// L_tau = L_sigma cap span(tau) and cached.
class StackyFan {
 public:
  StackyFan() = default;
  /// L_sigma = N_sigma everywhere (trivial isotropy).
  static StackyFan trivial(const Fan& f);
  /// Explicit sublattices per maximal cone, keyed by canonical cone key.
  /// Missing keys default to the trivial sublattice N_sigma.
  static StackyFan with_sublattices(const Fan& f, std::map<std::string, LatticeBasis> on_maximal);

  const Fan& fan() const;
  /// The sublattice attached to any cone of the fan.
  const LatticeBasis& sublattice(const Cone& sigma) const;
  /// True when every stored sublattice equals the full span lattice.
  bool is_trivial() const;

  bool valid() const { return bool(d_); }

 private:
  struct Data;
  std::shared_ptr<Data> d_;
};

StackyFan trivial_stacky(const Fan& f);

/// Invariant factors of N_sigma / L_sigma with ones dropped; empty means
/// trivial isotropy. Throws on a cone not in the fan.
std::vector<Int> isotropy(const StackyFan& s, const Cone& sigma);

/// Full-rank condition plus face compatibility L_tau = L_sigma cap span(tau)
/// across every face pair.
FanCheckReport check_stacky(const StackyFan& s);

/// A lattice map asserted to send cones of the source fan into the target.
struct FanMap {
  IntMat matrix;
  StackyFan source;
  StackyFan target;
};

struct SemistabilityReport {
  bool ok = true;
  bool lattice_surjective = false;  // informational
  std::vector<std::string> violations;
};

/// Weak semistability: every source cone maps onto a cone of the target fan
/// and the sublattice maps onto the target sublattice.
SemistabilityReport check_weakly_semistable(const FanMap& m);

}  // namespace tcs
