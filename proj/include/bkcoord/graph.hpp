#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bkcoord {

/// Dense vertex index, valid for a graph and every mirror of it.
using Vertex = std::uint32_t;
using VertexId = std::string;

/// Raw layered graph as it appears on the wire.
///
/// Edges are unordered pairs; layers are ordered top to bottom and each
/// layer is ordered left to right.
struct GraphDescription {
    double delta = 1.0;
    std::vector<std::vector<VertexId>> layers;
    std::vector<VertexId> dummies;
    std::vector<std::pair<VertexId, VertexId>> edges;

    bool operator==(const GraphDescription&) const = default;
};

enum class ViolationCode {
    duplicate_vertex,
    empty_id,
    unknown_vertex,
    duplicate_dummy,
    self_loop,
    duplicate_edge,
    flat_edge,
    non_neighboring_edge,
    invalid_delta,
};

const char* to_string(ViolationCode code);

struct Violation {
    ViolationCode code;
    std::string message;
    std::vector<VertexId> ids;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

/// Lists every partition, properness and delta problem. Never throws on
/// malformed content.
ValidationReport validate(const GraphDescription& graph);

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidGraphError : public std::runtime_error {
public:
    explicit InvalidGraphError(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

class LookupError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Per-vertex horizontal coordinates, indexed by Vertex.
struct CoordinateAssignment {
    std::vector<double> x;

    bool operator==(const CoordinateAssignment&) const = default;
};

/// Validated, immutable layered graph with index-based access.
///
/// Internally layers and ranks are 0-based. The id-based accessors
/// (`pred`, `pos`, `layer_of`) are 1-based, matching the usual v_k^(i)
/// notation for "k-th vertex of the i-th layer".
class LayeredGraph {
public:
    LayeredGraph();

    /// Throws InvalidGraphError carrying the report when validation fails.
    static LayeredGraph from_description(const GraphDescription& description);
    GraphDescription to_description() const;

    /// Same graph with the layer order and/or the order inside every layer
    /// reversed. Vertex indices are kept.
    LayeredGraph mirrored(bool reverse_layers, bool reverse_ranks) const;

    std::size_t vertex_count() const { return layer_index_.size(); }
    std::size_t layer_count() const { return layers_.size(); }
    double delta() const { return delta_; }

    std::span<const Vertex> layer(std::size_t i) const { return layers_[i]; }
    std::size_t layer_index(Vertex v) const { return layer_index_[v]; }
    std::size_t rank(Vertex v) const { return rank_[v]; }
    bool is_dummy(Vertex v) const { return dummy_[v] != 0; }

    std::optional<Vertex> predecessor(Vertex v) const;

    /// Neighbors in the layer above / below, sorted by rank.
    std::span<const Vertex> upper_neighbors(Vertex v) const;
    std::span<const Vertex> lower_neighbors(Vertex v) const;
    /// Slot of the first upper neighbor of v in a flat array of all upper
    /// adjacencies; slot + k addresses upper_neighbors(v)[k].
    std::size_t upper_slot(Vertex v) const { return upper_begin_[v]; }
    std::size_t upper_slot_count() const { return upper_adjacency_.size(); }

    /// Edges as (upper, lower) pairs in input order.
    std::span<const std::pair<Vertex, Vertex>> edges() const { return edges_; }

    const VertexId& id(Vertex v) const { return names_->ids[v]; }
    std::optional<Vertex> find(const VertexId& id) const;
    /// Throws LookupError for unknown ids.
    Vertex index(const VertexId& id) const;

    std::optional<VertexId> pred(const VertexId& id) const;
    std::size_t pos(const VertexId& id) const;
    std::size_t layer_of(const VertexId& id) const;

private:
    struct Names {
        std::vector<VertexId> ids;
        std::unordered_map<VertexId, Vertex> index;
    };

    void rebuild_topology();

    std::shared_ptr<const Names> names_;
    std::vector<std::vector<Vertex>> layers_;
    std::vector<char> dummy_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    double delta_ = 1.0;

    std::vector<std::uint32_t> layer_index_;
    std::vector<std::uint32_t> rank_;
    std::vector<std::uint32_t> upper_begin_;
    std::vector<Vertex> upper_adjacency_;
    std::vector<std::uint32_t> lower_begin_;
    std::vector<Vertex> lower_adjacency_;
};

/// Builds a proper layered graph from a layer assignment (1-based layer
/// indices, vertex order within a layer = input order). Every edge spanning
/// k > 1 layers becomes a path through k - 1 fresh dummies named
/// "__dummy_<n>", appended at the right end of their layers.
///
/// Throws InputError for flat edges, self-loops, unknown or duplicate
/// vertices and layer indices below 1.
LayeredGraph normalize(const std::vector<std::pair<VertexId, long long>>& layer_assignment,
                       const std::vector<std::pair<VertexId, VertexId>>& edges,
                       double delta);

}  // namespace bkcoord
