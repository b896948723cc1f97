#include "bkcoord/invariants.hpp"

#include <sstream>

namespace bkcoord {

namespace {

std::string number(double value) {
    std::ostringstream out;
    out.precision(17);
    out << value;
    return out.str();
}

}  // namespace

std::vector<InvariantViolation> check_separation(const LayeredGraph& g,
                                                 const CoordinateAssignment& coords, double delta) {
    std::vector<InvariantViolation> out;
    for (std::size_t i = 0; i < g.layer_count(); ++i) {
        auto layer = g.layer(i);
        for (std::size_t k = 1; k < layer.size(); ++k) {
            const Vertex u = layer[k - 1];
            const Vertex v = layer[k];
            const double gap = coords.x[v] - coords.x[u];
            if (gap >= delta) continue;
            const std::string pair = g.id(u) + " (" + number(coords.x[u]) + ") and " + g.id(v) +
                                     " (" + number(coords.x[v]) + ")";
            if (coords.x[v] <= coords.x[u]) {
                out.push_back({"order", "layer " + std::to_string(i + 1) + ": " + pair +
                                            " are out of order",
                               {g.id(u), g.id(v)}});
            } else {
                out.push_back({"separation", "layer " + std::to_string(i + 1) + ": " + pair +
                                                 " closer than " + number(delta),
                               {g.id(u), g.id(v)}});
            }
        }
    }
    return out;
}

std::vector<InvariantViolation> check_block_alignment(const LayeredGraph& g,
                                                      const BlockStructure& blocks,
                                                      const CoordinateAssignment& coords) {
    std::vector<InvariantViolation> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const Vertex r = blocks.root[v];
        if (coords.x[v] != coords.x[r]) {
            out.push_back({"block",
                           g.id(v) + " (" + number(coords.x[v]) + ") differs from its block root " +
                               g.id(r) + " (" + number(coords.x[r]) + ")",
                           {g.id(r), g.id(v)}});
        }
    }
    return out;
}

std::vector<InvariantViolation> check_sink_monotonicity(const LayeredGraph& g,
                                                        std::span<const Vertex> sink_of) {
    std::vector<InvariantViolation> out;
    for (std::size_t i = 0; i < g.layer_count(); ++i) {
        auto layer = g.layer(i);
        for (std::size_t k = 1; k < layer.size(); ++k) {
            const Vertex u = layer[k - 1];
            const Vertex v = layer[k];
            const std::size_t hu = g.layer_index(sink_of[u]);
            const std::size_t hv = g.layer_index(sink_of[v]);
            if (hv > hu) {
                out.push_back({"sink_order",
                               "layer " + std::to_string(i + 1) + ": sink of " + g.id(v) +
                                   " is in layer " + std::to_string(hv + 1) + ", below the sink of " +
                                   g.id(u) + " in layer " + std::to_string(hu + 1),
                               {g.id(u), g.id(v)}});
            }
        }
    }
    return out;
}

}  // namespace bkcoord
