#pragma once

#include <string>

#include "bkcoord/alignment.hpp"
#include "bkcoord/graph.hpp"

namespace bkcoord {

struct SvgOptions {
    /// Pixels per coordinate unit and per layer.
    double unit = 40.0;
    /// Draw blocks as rounded rectangles and classes as hulls.
    bool overlays = false;
    /// Orientation whose blocks and classes the overlays show.
    Orientation overlay_orientation = kUpperLeft;
};

/// SVG 1.1 preview. Vertex centers sit at (x * unit, layer * unit) with
/// 1-based layers; the viewBox is fitted around them.
std::string render_svg(const LayeredGraph& graph, const CoordinateAssignment& coords,
                       const SvgOptions& options = {});

}  // namespace bkcoord
