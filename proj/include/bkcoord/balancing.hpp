#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bkcoord/alignment.hpp"
#include "bkcoord/compaction.hpp"
#include "bkcoord/graph.hpp"

namespace bkcoord {

/// Aligned per-orientation candidates, translated by the same offset as the
/// balanced result so that each final value is the median of its row.
struct CandidateSet {
    std::vector<Orientation> orientations;
    std::vector<CoordinateAssignment> layouts;  // parallel to orientations
};

struct LayoutResult {
    CoordinateAssignment coordinates;
    std::optional<CandidateSet> candidates;
};

/// Alignment and compaction for one orientation, mapped back to the input
/// graph's left-to-right direction.
CoordinateAssignment assign_single(const LayeredGraph& graph, Orientation orientation,
                                   CompactionStrategy strategy);

/// Combines per-orientation layouts: the narrowest layout is the reference,
/// left-biased layouts are shifted so their minimum matches its minimum and
/// right-biased ones so their maximum matches its maximum. Each vertex then
/// takes the median of its candidates (mean of the two middle values for an
/// even count) and the result is translated so its minimum is 0.
LayoutResult balance(std::span<const CoordinateAssignment> layouts,
                     std::span<const Orientation> orientations);

/// With `balance_layouts` and more than one orientation the layouts are
/// balanced; otherwise the first orientation's layout is returned as is.
/// Throws std::invalid_argument for an empty orientation list.
LayoutResult assign_coordinates(const LayeredGraph& graph, CompactionStrategy strategy,
                                bool balance_layouts,
                                std::span<const Orientation> orientations = kAllOrientations);

}  // namespace bkcoord
