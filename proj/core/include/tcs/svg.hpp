#pragma once

#include <string>

#include "tcs/expansion.hpp"

namespace tcs {

/// Renders a d=2 fiber complex: its edges clipped to a window around the
/// vertices, vertices as dots, marks labelled. Throws unless d == 2.
std::string fiber_complex_svg(const ConfigurationFan& cf, const StratumReport& rep);

}  // namespace tcs
