#pragma once

#include <span>
#include <string>
#include <vector>

#include "bkcoord/alignment.hpp"
#include "bkcoord/graph.hpp"

namespace bkcoord {

struct InvariantViolation {
    /// "order", "separation", "block" or "sink_order".
    std::string kind;
    std::string message;
    std::vector<VertexId> ids;
};

/// Consecutive vertices u, v of every layer must satisfy x(v) - x(u) >= delta.
/// Reports "order" when x(v) <= x(u), otherwise "separation". Exact, no
/// tolerance.
std::vector<InvariantViolation> check_separation(const LayeredGraph& graph,
                                                 const CoordinateAssignment& coords, double delta);

/// Members of one block share a coordinate.
std::vector<InvariantViolation> check_block_alignment(const LayeredGraph& graph,
                                                      const BlockStructure& blocks,
                                                      const CoordinateAssignment& coords);

/// Sink layers never increase from left to right within a layer: for ranks
/// k1 < k2 the sink of the right vertex lies in the same or a higher layer.
/// `sink_of` is per vertex on the canonical graph.
std::vector<InvariantViolation> check_sink_monotonicity(const LayeredGraph& canonical,
                                                        std::span<const Vertex> sink_of);

}  // namespace bkcoord
