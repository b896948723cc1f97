#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bkcoord/graph.hpp"

namespace bkcoord {

enum class VerticalDirection { top_to_bottom, bottom_to_top };
enum class HorizontalDirection { left_to_right, right_to_left };

/// One of the four vertical x horizontal sweep combinations.
struct Orientation {
    VerticalDirection vertical = VerticalDirection::top_to_bottom;
    HorizontalDirection horizontal = HorizontalDirection::left_to_right;

    bool operator==(const Orientation&) const = default;

    bool left_biased() const { return horizontal == HorizontalDirection::left_to_right; }

    /// "ul", "ur", "ll" or "lr": upper/lower (sweep from the top or the
    /// bottom), then left/right bias.
    std::string_view code() const;
    static std::optional<Orientation> parse(std::string_view code);
};

inline constexpr Orientation kUpperLeft{VerticalDirection::top_to_bottom,
                                        HorizontalDirection::left_to_right};
inline constexpr Orientation kUpperRight{VerticalDirection::top_to_bottom,
                                         HorizontalDirection::right_to_left};
inline constexpr Orientation kLowerLeft{VerticalDirection::bottom_to_top,
                                        HorizontalDirection::left_to_right};
inline constexpr Orientation kLowerRight{VerticalDirection::bottom_to_top,
                                         HorizontalDirection::right_to_left};
inline constexpr std::array<Orientation, 4> kAllOrientations{kUpperLeft, kUpperRight, kLowerLeft,
                                                             kLowerRight};

/// Blocks as cyclic `align` lists. Indices refer to the graph that was
/// aligned; for a non-canonical orientation that is `mirror(graph, o)`,
/// which shares vertex indices with the original.
struct BlockStructure {
    std::vector<Vertex> align;
    std::vector<Vertex> root;
    /// Crossing inner segments found in the input (resolved for the
    /// earlier-scanned segment).
    std::vector<std::string> warnings;

    std::size_t block_count() const;
    /// Members of the block rooted at `r`, in align order starting at r.
    std::vector<Vertex> members(Vertex r) const;
};

/// Rearranges layers so that every orientation can be handled by the
/// top-to-bottom, left-to-right algorithms: reverses the layer sequence for
/// bottom-to-top and each layer for right-to-left. An involution.
LayeredGraph mirror(const LayeredGraph& graph, Orientation orientation);

/// Maps coordinates computed on `mirror(graph, o)` back to `graph`.
void restore_orientation(CoordinateAssignment& coords, Orientation orientation);

/// Median-based vertical alignment. The result refers to
/// `mirror(graph, orientation)`.
BlockStructure vertical_align(const LayeredGraph& graph, Orientation orientation);

/// Vertical alignment of an already canonical (top-to-bottom,
/// left-to-right) graph.
BlockStructure vertical_align_canonical(const LayeredGraph& graph);

/// Per-slot flags (see LayeredGraph::upper_slot) for upper segments that
/// cross an inner segment and therefore must not be aligned.
std::vector<char> mark_type1_conflicts(const LayeredGraph& graph,
                                       std::vector<std::string>* warnings = nullptr);

}  // namespace bkcoord
