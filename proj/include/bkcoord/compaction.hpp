#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "bkcoord/alignment.hpp"
#include "bkcoord/graph.hpp"

namespace bkcoord {

/// A real number or +infinity. The infinite state is a tag, never a float,
/// so arithmetic on an unconstrained shift fails loudly instead of silently
/// producing garbage.
class ExtendedReal {
public:
    static constexpr ExtendedReal infinity() { return ExtendedReal{}; }
    constexpr ExtendedReal(double value) : finite_(true), value_(value) {}

    constexpr bool is_infinite() const { return !finite_; }
    constexpr bool is_finite() const { return finite_; }

    /// Throws std::logic_error when infinite.
    double value() const {
        if (!finite_) throw std::logic_error("read of an infinite shift value");
        return value_;
    }

    friend constexpr ExtendedReal min(ExtendedReal a, ExtendedReal b) {
        if (!a.finite_) return b;
        if (!b.finite_) return a;
        return a.value_ <= b.value_ ? a : b;
    }

    friend constexpr bool operator==(ExtendedReal a, ExtendedReal b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }

    /// Infinity compares greater than every finite value.
    friend constexpr bool operator<(ExtendedReal a, ExtendedReal b) {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.value_ < b.value_;
    }

private:
    constexpr ExtendedReal() = default;

    bool finite_ = false;
    double value_ = 0.0;
};

/// Per-vertex working arrays of one compaction run.
struct CompactionState {
    explicit CompactionState(std::size_t vertex_count);

    /// Class representative (leftmost root of the class's highest layer).
    std::vector<Vertex> sink;
    /// Class offset; meaningful at sinks.
    std::vector<ExtendedReal> shift;
    /// Coordinate relative to the class sink until the final absolute pass.
    std::vector<std::optional<double>> x;
};

/// Horizontally adjacent vertices in different classes.
struct Neighboring {
    Vertex left;
    Vertex right;

    bool operator==(const Neighboring&) const = default;
};

enum class CompactionStrategy { contour, neighborlist, legacy_buggy };

/// "contour", "neighborlist" or "legacy-buggy".
std::string_view to_string(CompactionStrategy strategy);
/// Accepts the names above; "legacy_buggy" is accepted as well.
std::optional<CompactionStrategy> parse_strategy(std::string_view name);

inline bool is_conforming(CompactionStrategy strategy) {
    return strategy != CompactionStrategy::legacy_buggy;
}

struct ShiftUpdate {
    Vertex sink;
    ExtendedReal before;
    ExtendedReal after;
};
using ShiftObserver = std::function<void(const ShiftUpdate&)>;

// All functions below take the canonical (possibly mirrored) graph that the
// blocks were computed on.

/// Places the block rooted at `root` and, transitively, every block it
/// depends on, relative to the sinks of their classes. Afterwards every
/// member of each placed block carries the root's x and sink.
void place_block(Vertex root, CompactionState& state, const LayeredGraph& graph,
                 const BlockStructure& blocks);

/// Fresh state with every block placed.
CompactionState place_blocks(const LayeredGraph& graph, const BlockStructure& blocks);

/// Class offsets by tracing the lower contour of each class, classes taken
/// top to bottom by sink layer.
void class_offsets_contour(CompactionState& state, const LayeredGraph& graph,
                           const BlockStructure& blocks, const ShiftObserver& observer = {});

/// Every Neighboring, bucketed by the layer of the right vertex's sink.
/// Within a layer, pairs are scanned right to left.
std::vector<std::vector<Neighboring>> collect_neighborings(const CompactionState& state,
                                                           const LayeredGraph& graph);

/// Class offsets from an explicit list of class adjacencies.
void class_offsets_neighborlist(CompactionState& state, const LayeredGraph& graph,
                                const BlockStructure& blocks, const ShiftObserver& observer = {});

/// Full compaction of one orientation. Coordinates are indexed like the
/// graph's vertices and are not yet mirrored back.
CoordinateAssignment compact(const LayeredGraph& graph, const BlockStructure& blocks,
                             CompactionStrategy strategy);

enum class LegacyFinalPass {
    /// Adds the class shift on top of a root that may already be shifted.
    original,
    /// Adds the shift exactly once; only the offset flaw remains.
    single_shift,
};

/// Block placement of the original, flawed compaction: x and sink are only
/// written at roots, and cross-class shifts are recorded inline without
/// accounting for the shift of the current class.
CompactionState legacy_place_blocks(const LayeredGraph& graph, const BlockStructure& blocks);

/// Unmodified reproduction of the original compaction, both flaws
/// included. Non-conforming: exists for regression and differential tests.
CoordinateAssignment compact_legacy_buggy(const LayeredGraph& graph, const BlockStructure& blocks,
                                          LegacyFinalPass final_pass = LegacyFinalPass::original);

}  // namespace bkcoord
