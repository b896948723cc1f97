#include "bkcoord/compaction.hpp"

#include <algorithm>

namespace bkcoord {

CompactionState::CompactionState(std::size_t vertex_count)
    : sink(vertex_count), shift(vertex_count, ExtendedReal::infinity()), x(vertex_count) {
    for (Vertex v = 0; v < vertex_count; ++v) sink[v] = v;
}

std::string_view to_string(CompactionStrategy strategy) {
    switch (strategy) {
    case CompactionStrategy::contour: return "contour";
    case CompactionStrategy::neighborlist: return "neighborlist";
    case CompactionStrategy::legacy_buggy: return "legacy-buggy";
    }
    return "unknown";
}

std::optional<CompactionStrategy> parse_strategy(std::string_view name) {
    if (name == "contour") return CompactionStrategy::contour;
    if (name == "neighborlist") return CompactionStrategy::neighborlist;
    if (name == "legacy-buggy" || name == "legacy_buggy") return CompactionStrategy::legacy_buggy;
    return std::nullopt;
}

namespace {

/// Depth-first block placement on an explicit stack. The recursion depth of
/// the textbook formulation is bounded only by the number of blocks.
///
/// `Rule` decides what happens for each (block root v, predecessor block
/// root u) pair once u is placed; `Finish` runs when v's block is done.
template <typename Rule, typename Finish>
class BlockPlacer {
public:
    BlockPlacer(CompactionState& state, const LayeredGraph& graph, const BlockStructure& blocks,
                Rule rule, Finish finish)
        : state_(state), graph_(graph), blocks_(blocks), rule_(rule), finish_(finish) {}

    void place(Vertex root) {
        if (state_.x[root]) return;
        enter(root);
        while (!stack_.empty()) {
            Frame& f = stack_.back();
            if (auto p = graph_.predecessor(f.w)) {
                const Vertex u = blocks_.root[*p];
                if (!f.resumed && !state_.x[u]) {
                    f.resumed = true;
                    enter(u);
                    continue;
                }
                f.resumed = false;
                rule_(f.v, u);
            }
            f.w = blocks_.align[f.w];
            if (f.w == f.v) {
                finish_(f.v);
                stack_.pop_back();
            }
        }
    }

private:
    struct Frame {
        Vertex v;
        Vertex w;
        bool resumed;
    };

    void enter(Vertex v) {
        state_.x[v] = 0.0;
        stack_.push_back({v, v, false});
    }

    CompactionState& state_;
    const LayeredGraph& graph_;
    const BlockStructure& blocks_;
    Rule rule_;
    Finish finish_;
    std::vector<Frame> stack_;
};

auto corrected_placer(CompactionState& s, const LayeredGraph& g, const BlockStructure& b) {
    const double delta = g.delta();
    auto rule = [&s, delta](Vertex v, Vertex u) {
        if (s.sink[v] == v) s.sink[v] = s.sink[u];
        // Cross-class pairs are left to the offset pass.
        if (s.sink[v] == s.sink[u]) s.x[v] = std::max(*s.x[v], *s.x[u] + delta);
    };
    auto finish = [&s, &b](Vertex v) {
        for (Vertex w = b.align[v]; w != v; w = b.align[w]) {
            s.x[w] = s.x[v];
            s.sink[w] = s.sink[v];
        }
    };
    return BlockPlacer(s, g, b, rule, finish);
}

void update_shift(CompactionState& s, Vertex sink, ExtendedReal candidate,
                  const ShiftObserver& observer) {
    const ExtendedReal before = s.shift[sink];
    s.shift[sink] = min(before, candidate);
    if (observer) observer({sink, before, s.shift[sink]});
}

void separate(CompactionState& s, Vertex u, Vertex v, double delta,
              const ShiftObserver& observer) {
    const ExtendedReal own = s.shift[s.sink[v]];
    update_shift(s, s.sink[u], own.value() + *s.x[v] - (*s.x[u] + delta), observer);
}

void zero_if_unconstrained(CompactionState& s, Vertex sink, const ShiftObserver& observer) {
    if (s.shift[sink].is_infinite()) update_shift(s, sink, 0.0, observer);
}

void absolute_coordinates(CompactionState& s, CoordinateAssignment& out) {
    out.x.resize(s.x.size());
    for (Vertex v = 0; v < s.x.size(); ++v) out.x[v] = *s.x[v] + s.shift[s.sink[v]].value();
}

}  // namespace

void place_block(Vertex root, CompactionState& state, const LayeredGraph& graph,
                 const BlockStructure& blocks) {
    corrected_placer(state, graph, blocks).place(root);
}

CompactionState place_blocks(const LayeredGraph& graph, const BlockStructure& blocks) {
    CompactionState state(graph.vertex_count());
    auto placer = corrected_placer(state, graph, blocks);
    for (std::size_t i = 0; i < graph.layer_count(); ++i) {
        for (Vertex v : graph.layer(i)) {
            if (blocks.root[v] == v) placer.place(v);
        }
    }
    return state;
}

void class_offsets_contour(CompactionState& s, const LayeredGraph& g, const BlockStructure& b,
                           const ShiftObserver& observer) {
    const double delta = g.delta();
    for (std::size_t i = 0; i < g.layer_count(); ++i) {
        if (g.layer(i).empty()) continue;
        const Vertex first = g.layer(i).front();
        if (s.sink[first] != first) continue;
        zero_if_unconstrained(s, first, observer);

        std::size_t j = i;
        std::size_t k = 0;
        Vertex v;
        do {
            v = g.layer(j)[k];
            while (b.align[v] != b.root[v]) {
                v = b.align[v];
                ++j;
                if (auto u = g.predecessor(v)) separate(s, *u, v, delta, observer);
            }
            k = g.rank(v) + 1;
        } while (k < g.layer(j).size() && s.sink[v] == s.sink[g.layer(j)[k]]);
    }
}

std::vector<std::vector<Neighboring>> collect_neighborings(const CompactionState& s,
                                                           const LayeredGraph& g) {
    std::vector<std::vector<Neighboring>> buckets(g.layer_count());
    for (std::size_t i = 0; i < g.layer_count(); ++i) {
        auto layer = g.layer(i);
        for (std::size_t j = layer.size(); j-- > 1;) {
            const Vertex left = layer[j - 1];
            const Vertex right = layer[j];
            if (s.sink[left] != s.sink[right]) {
                buckets[g.layer_index(s.sink[right])].push_back({left, right});
            }
        }
    }
    return buckets;
}

void class_offsets_neighborlist(CompactionState& s, const LayeredGraph& g,
                                const BlockStructure& /*blocks*/, const ShiftObserver& observer) {
    const double delta = g.delta();
    const auto buckets = collect_neighborings(s, g);
    for (std::size_t i = 0; i < g.layer_count(); ++i) {
        if (!g.layer(i).empty()) zero_if_unconstrained(s, s.sink[g.layer(i).front()], observer);
        for (const auto& [u, v] : buckets[i]) separate(s, u, v, delta, observer);
    }
}

CoordinateAssignment compact(const LayeredGraph& graph, const BlockStructure& blocks,
                             CompactionStrategy strategy) {
    if (strategy == CompactionStrategy::legacy_buggy) return compact_legacy_buggy(graph, blocks);

    CompactionState state = place_blocks(graph, blocks);
    if (strategy == CompactionStrategy::contour) {
        class_offsets_contour(state, graph, blocks);
    } else {
        class_offsets_neighborlist(state, graph, blocks);
    }
    CoordinateAssignment out;
    absolute_coordinates(state, out);
    return out;
}

CompactionState legacy_place_blocks(const LayeredGraph& graph, const BlockStructure& blocks) {
    CompactionState state(graph.vertex_count());
    const double delta = graph.delta();
    auto& s = state;
    auto rule = [&s, delta](Vertex v, Vertex u) {
        if (s.sink[v] == v) s.sink[v] = s.sink[u];
        if (s.sink[v] != s.sink[u]) {
            s.shift[s.sink[u]] = min(s.shift[s.sink[u]], *s.x[v] - *s.x[u] - delta);
        } else {
            s.x[v] = std::max(*s.x[v], *s.x[u] + delta);
        }
    };
    auto finish = [](Vertex) {};
    BlockPlacer placer(state, graph, blocks, rule, finish);
    for (std::size_t i = 0; i < graph.layer_count(); ++i) {
        for (Vertex v : graph.layer(i)) {
            if (blocks.root[v] == v) placer.place(v);
        }
    }
    return state;
}

CoordinateAssignment compact_legacy_buggy(const LayeredGraph& graph, const BlockStructure& blocks,
                                          LegacyFinalPass final_pass) {
    CompactionState s = legacy_place_blocks(graph, blocks);
    CoordinateAssignment out;
    out.x.assign(graph.vertex_count(), 0.0);

    if (final_pass == LegacyFinalPass::single_shift) {
        for (Vertex v = 0; v < graph.vertex_count(); ++v) {
            const Vertex r = blocks.root[v];
            const ExtendedReal shift = s.shift[s.sink[r]];
            out.x[v] = *s.x[r] + (shift.is_finite() ? shift.value() : 0.0);
        }
        return out;
    }

    // The original pass writes x in place, so a member visited after its
    // root inherits the root's already shifted coordinate.
    for (std::size_t i = 0; i < graph.layer_count(); ++i) {
        for (Vertex v : graph.layer(i)) {
            const Vertex r = blocks.root[v];
            s.x[v] = s.x[r];
            const ExtendedReal shift = s.shift[s.sink[r]];
            if (shift.is_finite()) s.x[v] = *s.x[v] + shift.value();
        }
    }
    for (Vertex v = 0; v < graph.vertex_count(); ++v) out.x[v] = *s.x[v];
    return out;
}

}  // namespace bkcoord
