#include "bkcoord/balancing.hpp"

#include <algorithm>
#include <stdexcept>

namespace bkcoord {

CoordinateAssignment assign_single(const LayeredGraph& graph, Orientation orientation,
                                   CompactionStrategy strategy) {
    std::optional<LayeredGraph> mirrored;
    if (orientation != kUpperLeft) mirrored = mirror(graph, orientation);
    const LayeredGraph& canonical = mirrored ? *mirrored : graph;
    const BlockStructure blocks = vertical_align_canonical(canonical);
    CoordinateAssignment coords = compact(canonical, blocks, strategy);
    restore_orientation(coords, orientation);
    return coords;
}

LayoutResult balance(std::span<const CoordinateAssignment> layouts,
                     std::span<const Orientation> orientations) {
    if (layouts.empty() || layouts.size() != orientations.size()) {
        throw std::invalid_argument("balance: need one orientation per layout");
    }
    const std::size_t count = layouts.size();
    const std::size_t n = layouts.front().x.size();

    LayoutResult result;
    result.coordinates.x.assign(n, 0.0);
    CandidateSet candidates{{orientations.begin(), orientations.end()},
                            {layouts.begin(), layouts.end()}};
    if (n == 0) {
        result.candidates = std::move(candidates);
        return result;
    }

    std::vector<double> lo(count), hi(count);
    std::size_t narrowest = 0;
    for (std::size_t k = 0; k < count; ++k) {
        const auto [min_it, max_it] = std::ranges::minmax_element(layouts[k].x);
        lo[k] = *min_it;
        hi[k] = *max_it;
        if (hi[k] - lo[k] < hi[narrowest] - lo[narrowest]) narrowest = k;
    }
    for (std::size_t k = 0; k < count; ++k) {
        const double offset = orientations[k].left_biased() ? lo[narrowest] - lo[k]
                                                            : hi[narrowest] - hi[k];
        for (double& x : candidates.layouts[k].x) x += offset;
    }

    std::vector<double> row(count);
    for (Vertex v = 0; v < n; ++v) {
        for (std::size_t k = 0; k < count; ++k) row[k] = candidates.layouts[k].x[v];
        std::ranges::sort(row);
        result.coordinates.x[v] =
            count % 2 == 1 ? row[count / 2] : (row[count / 2 - 1] + row[count / 2]) / 2.0;
    }

    const double origin = std::ranges::min(result.coordinates.x);
    for (double& x : result.coordinates.x) x -= origin;
    for (auto& layout : candidates.layouts) {
        for (double& x : layout.x) x -= origin;
    }
    result.candidates = std::move(candidates);
    return result;
}

LayoutResult assign_coordinates(const LayeredGraph& graph, CompactionStrategy strategy,
                                bool balance_layouts, std::span<const Orientation> orientations) {
    if (orientations.empty()) throw std::invalid_argument("no orientation selected");
    if (!balance_layouts || orientations.size() == 1) {
        return {assign_single(graph, orientations.front(), strategy), std::nullopt};
    }
    std::vector<CoordinateAssignment> layouts;
    layouts.reserve(orientations.size());
    for (const auto& o : orientations) layouts.push_back(assign_single(graph, o, strategy));
    return balance(layouts, orientations);
}

}  // namespace bkcoord
