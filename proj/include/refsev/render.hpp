#pragma once

#include <string>

#include "refsev/oracle.hpp"

namespace refsev {

struct RenderOptions {
    long max_diagrams = 50; ///< truncate the gallery after this many diagrams
    bool marked = false;    ///< also draw one canonical marking per diagram
};

/// SVG gallery of the floor diagrams contributing to the count for
/// (polygon, delta), one row per diagram, annotated with its multiplicity
/// and number of markings.
std::string render_floor_diagrams_svg(const HTransversePolygon& p, long delta,
                                      const RenderOptions& opts = {});

} // namespace refsev
