#pragma once

#include "monpure/purity.hpp"

#include <optional>
#include <string>

namespace monpure {

struct PlotOptions {
  Int m{2};
  std::optional<RatVector> alpha;  // default: max-degree element of V_m
  Rat degree_window{8};
};

/// Static Figure-style SVG for a rank-2 picture: monoid points as circles, a
/// pure translation's points as crosses over the shaded translated cone, and
/// the V_m points highlighted. Byte-deterministic for fixed inputs; plotted
/// points carry exact data-x/data-y fractions.
std::string emit_svg_plot(PurityEngine& engine, const PlotOptions& options);

}  // namespace monpure
