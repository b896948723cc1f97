#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bkcoord/alignment.hpp"
#include "bkcoord/compaction.hpp"
#include "bkcoord/graph.hpp"
#include "bkcoord/invariants.hpp"

namespace bkcoord {

// Graph format:
//   { "delta": 1.0, "layers": [["a","b"],["c"]], "dummies": ["b"],
//     "edges": [["a","c"],["b","c"]] }
// "delta", "dummies" and "edges" are optional. Parse errors throw
// InputError; the content is not validated here.
GraphDescription parse_graph_json(std::string_view text);
std::string graph_to_json(const GraphDescription& graph);

/// Layer assignment for `normalize`:
///   { "delta": 1.0, "layer_of": {"a": 1, "b": 3}, "edges": [["a","b"]] }
/// Vertex order within a layer follows the order of "layer_of".
struct LayerAssignment {
    double delta = 1.0;
    std::vector<std::pair<VertexId, long long>> layer_of;
    std::vector<std::pair<VertexId, VertexId>> edges;
};
LayerAssignment parse_layer_assignment_json(std::string_view text);

struct CoordinateMetadata {
    std::string strategy = "contour";
    std::vector<std::string> orientations;
    bool balanced = false;
    double delta = 1.0;
    bool conforming = true;

    bool operator==(const CoordinateMetadata&) const = default;
};

/// Coordinate output; keys are emitted sorted.
struct CoordinateDocument {
    std::map<VertexId, double> coordinates;
    CoordinateMetadata metadata;

    bool operator==(const CoordinateDocument&) const = default;
};

CoordinateDocument make_document(const LayeredGraph& graph, const CoordinateAssignment& coords,
                                 CompactionStrategy strategy,
                                 std::span<const Orientation> orientations, bool balanced);
/// Sorted keys, shortest round-trip numbers, newline terminated.
std::string document_to_json(const CoordinateDocument& document);
CoordinateDocument parse_document_json(std::string_view text);

/// Coordinates of `document` in the graph's vertex order. Throws InputError
/// when a vertex is missing or an id is unknown to the graph.
CoordinateAssignment coordinates_for(const LayeredGraph& graph, const CoordinateDocument& document);

std::string report_to_json(const ValidationReport& report);
std::string violations_to_json(const std::vector<InvariantViolation>& violations);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace bkcoord
