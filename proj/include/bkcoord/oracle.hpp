#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bkcoord/alignment.hpp"
#include "bkcoord/compaction.hpp"
#include "bkcoord/graph.hpp"

namespace bkcoord::oracle {

/// Raised when the class graph has a cycle, which cannot happen for a
/// crossing-free alignment.
class CyclicClassDagError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Classes of blocks and the adjacencies between them.
struct ClassDag {
    /// Sink vertex of each class; class ids index this vector. Sorted by
    /// sink layer, top first.
    std::vector<Vertex> sinks;
    std::vector<std::size_t> class_of;  // per vertex
    std::vector<std::vector<Vertex>> block_roots;  // per class
    /// Every horizontally adjacent pair with differing classes (parallel
    /// edges kept). Edge direction: class_of[right] -> class_of[left].
    std::vector<Neighboring> edges;
    /// Kahn order over classes.
    std::vector<std::size_t> topological_order;
};

struct Solution {
    ClassDag dag;
    std::vector<double> relative_x;  // per vertex, relative to its class sink
    std::vector<double> class_shift;  // per class
    CoordinateAssignment coordinates;
};

struct Options {
    /// Shuffles the constraint relaxation order; the fixed point must not
    /// depend on it.
    std::optional<std::uint64_t> shuffle_seed;
};

/// Reference solution built from first principles: classes from
/// reachability in the block graph, positions inside a class by relaxing
/// separation constraints to a fixed point, class shifts by a longest-path
/// pass over the class DAG in topological order.
Solution solve(const LayeredGraph& graph, const BlockStructure& blocks, const Options& options = {});

CoordinateAssignment oracle_compact(const LayeredGraph& graph, const BlockStructure& blocks);

}  // namespace bkcoord::oracle
