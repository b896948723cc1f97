#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bkcoord/graph.hpp"

namespace bkcoord {

struct GeneratorParams {
    std::size_t max_vertices = 200;
    std::size_t max_layers = 12;
    /// Longest edge before subdivision, in layers.
    std::size_t max_span = 4;
    /// Edge attempts per original vertex.
    double edge_density = 1.5;
    /// Candidate separations, one picked per instance.
    std::vector<double> deltas{0.5, 1.0, 2.0};
    /// Orders layers by one top-down barycenter sweep instead of randomly,
    /// which gives few crossings and long blocks.
    bool barycenter_order = false;
    /// Fixed layer and original vertex counts instead of random ones.
    std::optional<std::size_t> layers;
    std::optional<std::size_t> originals;
};

/// Random proper layered graph: original vertices on random layers, random
/// edges subdivided by dummies (one upper and one lower neighbor each),
/// random order inside every layer (or barycenter order). Deterministic for
/// a given seed.
GraphDescription random_layered_graph(std::uint64_t seed, const GeneratorParams& params = {});

}  // namespace bkcoord
