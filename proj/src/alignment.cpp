#include "bkcoord/alignment.hpp"

#include <algorithm>

namespace bkcoord {

std::string_view Orientation::code() const {
    const bool top = vertical == VerticalDirection::top_to_bottom;
    if (left_biased()) return top ? "ul" : "ll";
    return top ? "ur" : "lr";
}

std::optional<Orientation> Orientation::parse(std::string_view code) {
    for (const auto& o : kAllOrientations) {
        if (o.code() == code) return o;
    }
    return std::nullopt;
}

std::size_t BlockStructure::block_count() const {
    std::size_t count = 0;
    for (Vertex v = 0; v < root.size(); ++v) count += root[v] == v ? 1 : 0;
    return count;
}

std::vector<Vertex> BlockStructure::members(Vertex r) const {
    std::vector<Vertex> out{r};
    for (Vertex w = align[r]; w != r; w = align[w]) out.push_back(w);
    return out;
}

LayeredGraph mirror(const LayeredGraph& graph, Orientation orientation) {
    return graph.mirrored(orientation.vertical == VerticalDirection::bottom_to_top,
                          !orientation.left_biased());
}

void restore_orientation(CoordinateAssignment& coords, Orientation orientation) {
    if (orientation.left_biased()) return;
    for (double& x : coords.x) x = 0.0 - x;  // no negative zeros
}

namespace {

bool is_inner_segment(const LayeredGraph& g, Vertex upper, Vertex lower) {
    return g.is_dummy(upper) && g.is_dummy(lower);
}

std::optional<Vertex> inner_upper_neighbor(const LayeredGraph& g, Vertex v) {
    if (!g.is_dummy(v)) return std::nullopt;
    for (Vertex u : g.upper_neighbors(v)) {
        if (g.is_dummy(u)) return u;
    }
    return std::nullopt;
}

}  // namespace

std::vector<char> mark_type1_conflicts(const LayeredGraph& g, std::vector<std::string>* warnings) {
    std::vector<char> marked(g.upper_slot_count(), 0);
    for (std::size_t i = 1; i < g.layer_count(); ++i) {
        auto upper = g.layer(i - 1);
        auto lower = g.layer(i);
        if (upper.empty() || lower.empty()) continue;

        std::size_t k0 = 0;
        std::size_t l = 0;
        for (std::size_t l1 = 0; l1 < lower.size(); ++l1) {
            auto inner = inner_upper_neighbor(g, lower[l1]);
            if (l1 + 1 != lower.size() && !inner) continue;

            const std::size_t k1 = inner ? g.rank(*inner) : upper.size() - 1;
            for (; l <= l1; ++l) {
                const Vertex w = lower[l];
                auto ups = g.upper_neighbors(w);
                for (std::size_t s = 0; s < ups.size(); ++s) {
                    const std::size_t k = g.rank(ups[s]);
                    if (k >= k0 && k <= k1) continue;
                    if (is_inner_segment(g, ups[s], w)) {
                        // Two crossing inner segments: left unmarked so the
                        // alignment sweep keeps whichever it meets first.
                        if (warnings) {
                            warnings->push_back("crossing inner segments at " + g.id(ups[s]) +
                                                "-" + g.id(w));
                        }
                        continue;
                    }
                    marked[g.upper_slot(w) + s] = 1;
                }
            }
            k0 = k1;
        }
    }
    return marked;
}

BlockStructure vertical_align_canonical(const LayeredGraph& g) {
    const std::size_t n = g.vertex_count();
    BlockStructure blocks;
    blocks.align.resize(n);
    blocks.root.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        blocks.align[v] = v;
        blocks.root[v] = v;
    }
    const auto marked = mark_type1_conflicts(g, &blocks.warnings);

    for (std::size_t i = 1; i < g.layer_count(); ++i) {
        // Rank of the last upper vertex taken in this layer, plus one.
        std::size_t taken = 0;
        for (Vertex v : g.layer(i)) {
            auto ups = g.upper_neighbors(v);
            if (ups.empty()) continue;
            const std::size_t lower_median = (ups.size() - 1) / 2;
            const std::size_t upper_median = ups.size() / 2;
            for (std::size_t m : {lower_median, upper_median}) {
                if (blocks.align[v] != v) break;
                const Vertex u = ups[m];
                if (marked[g.upper_slot(v) + m] || taken > g.rank(u)) continue;
                blocks.align[u] = v;
                blocks.root[v] = blocks.root[u];
                blocks.align[v] = blocks.root[v];
                taken = g.rank(u) + 1;
            }
        }
    }
    return blocks;
}

BlockStructure vertical_align(const LayeredGraph& graph, Orientation orientation) {
    if (orientation == kUpperLeft) return vertical_align_canonical(graph);
    return vertical_align_canonical(mirror(graph, orientation));
}

}  // namespace bkcoord
