#include "bkcoord/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>

namespace bkcoord::oracle {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct BlockGraph {
    std::vector<Vertex> roots;
    std::vector<std::size_t> block_of;         // per vertex
    std::vector<std::vector<std::size_t>> out;  // block -> blocks of predecessors
};

BlockGraph build_block_graph(const LayeredGraph& g, const BlockStructure& b) {
    BlockGraph bg;
    bg.block_of.assign(g.vertex_count(), kUnset);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (b.root[v] == v) {
            bg.block_of[v] = bg.roots.size();
            bg.roots.push_back(v);
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) bg.block_of[v] = bg.block_of[b.root[v]];
    bg.out.resize(bg.roots.size());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (auto p = g.predecessor(v)) bg.out[bg.block_of[v]].push_back(bg.block_of[*p]);
    }
    return bg;
}

/// For each block, the block-graph sink with the smallest layer index that
/// is reachable from it (the block itself counts when it is a sink).
std::vector<Vertex> highest_reachable_sinks(const LayeredGraph& g, const BlockGraph& bg) {
    const std::size_t m = bg.roots.size();
    std::vector<Vertex> best(m, kNoVertex);
    std::vector<char> state(m, 0);  // 0 new, 1 open, 2 done
    auto higher = [&](Vertex a, Vertex b) {
        if (a == kNoVertex) return b;
        if (b == kNoVertex) return a;
        return g.layer_index(a) <= g.layer_index(b) ? a : b;
    };

    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t start = 0; start < m; ++start) {
        if (state[start]) continue;
        stack.emplace_back(start, 0);
        state[start] = 1;
        while (!stack.empty()) {
            auto& [block, next] = stack.back();
            if (next < bg.out[block].size()) {
                const std::size_t succ = bg.out[block][next++];
                if (state[succ] == 1) throw CyclicClassDagError("block graph has a cycle");
                if (state[succ] == 0) {
                    state[succ] = 1;
                    stack.emplace_back(succ, 0);
                }
                continue;
            }
            if (bg.out[block].empty()) {
                best[block] = bg.roots[block];
            } else {
                for (std::size_t succ : bg.out[block]) best[block] = higher(best[block], best[succ]);
            }
            state[block] = 2;
            stack.pop_back();
        }
    }
    return best;
}

}  // namespace

Solution solve(const LayeredGraph& g, const BlockStructure& b, const Options& options) {
    const double delta = g.delta();
    const std::size_t n = g.vertex_count();
    const BlockGraph bg = build_block_graph(g, b);
    const auto block_sink = highest_reachable_sinks(g, bg);

    Solution sol;
    ClassDag& dag = sol.dag;

    // Classes, numbered by sink layer from the top.
    std::vector<std::size_t> class_of_block(bg.roots.size(), kUnset);
    std::vector<Vertex> sinks(block_sink.begin(), block_sink.end());
    std::ranges::sort(sinks, [&](Vertex a, Vertex c) { return g.layer_index(a) < g.layer_index(c); });
    sinks.erase(std::unique(sinks.begin(), sinks.end()), sinks.end());
    dag.sinks = sinks;
    std::vector<std::size_t> class_of_sink(n, kUnset);
    for (std::size_t c = 0; c < sinks.size(); ++c) class_of_sink[sinks[c]] = c;
    dag.block_roots.resize(sinks.size());
    for (std::size_t blk = 0; blk < bg.roots.size(); ++blk) {
        class_of_block[blk] = class_of_sink[block_sink[blk]];
        dag.block_roots[class_of_block[blk]].push_back(bg.roots[blk]);
    }
    dag.class_of.resize(n);
    for (Vertex v = 0; v < n; ++v) dag.class_of[v] = class_of_block[bg.block_of[v]];

    // Positions inside each class: relax x(block(v)) >= x(block(pred v)) + delta
    // for same-class pairs until nothing changes.
    std::vector<std::pair<std::size_t, std::size_t>> constraints;  // (left block, right block)
    for (Vertex v = 0; v < n; ++v) {
        auto p = g.predecessor(v);
        if (p && dag.class_of[*p] == dag.class_of[v]) {
            constraints.emplace_back(bg.block_of[*p], bg.block_of[v]);
        }
    }
    if (options.shuffle_seed) {
        std::mt19937_64 rng(*options.shuffle_seed);
        std::ranges::shuffle(constraints, rng);
    }
    std::vector<double> block_x(bg.roots.size(), 0.0);
    for (std::size_t round = 0;; ++round) {
        if (round > bg.roots.size() + 1) {
            throw CyclicClassDagError("separation constraints inside a class are cyclic");
        }
        bool changed = false;
        for (const auto& [left, right] : constraints) {
            if (block_x[right] < block_x[left] + delta) {
                block_x[right] = block_x[left] + delta;
                changed = true;
            }
        }
        if (!changed) break;
    }
    sol.relative_x.resize(n);
    for (Vertex v = 0; v < n; ++v) sol.relative_x[v] = block_x[bg.block_of[v]];

    // Class DAG over neighborings, edges from the right (higher) class to the
    // left one.
    const std::size_t classes = sinks.size();
    std::vector<std::vector<std::size_t>> incoming(classes);  // edge indices
    std::vector<std::size_t> indegree(classes, 0);
    std::vector<std::vector<std::size_t>> outgoing(classes);
    for (std::size_t i = 0; i < g.layer_count(); ++i) {
        auto layer = g.layer(i);
        for (std::size_t k = 1; k < layer.size(); ++k) {
            const Vertex u = layer[k - 1];
            const Vertex v = layer[k];
            if (dag.class_of[u] == dag.class_of[v]) continue;
            if (g.layer_index(sinks[dag.class_of[v]]) >= g.layer_index(sinks[dag.class_of[u]])) {
                throw CyclicClassDagError("class of " + g.id(v) + " is not above the class of " +
                                          g.id(u) + " although it lies to its right");
            }
            const std::size_t e = dag.edges.size();
            dag.edges.push_back({u, v});
            incoming[dag.class_of[u]].push_back(e);
            outgoing[dag.class_of[v]].push_back(e);
            ++indegree[dag.class_of[u]];
        }
    }

    std::deque<std::size_t> ready;
    for (std::size_t c = 0; c < classes; ++c) {
        if (indegree[c] == 0) ready.push_back(c);
    }
    while (!ready.empty()) {
        const std::size_t c = ready.front();
        ready.pop_front();
        dag.topological_order.push_back(c);
        for (std::size_t e : outgoing[c]) {
            if (--indegree[dag.class_of[dag.edges[e].left]] == 0) {
                ready.push_back(dag.class_of[dag.edges[e].left]);
            }
        }
    }
    if (dag.topological_order.size() != classes) {
        throw CyclicClassDagError("class DAG has a cycle");
    }

    sol.class_shift.assign(classes, 0.0);
    for (std::size_t c : dag.topological_order) {
        if (incoming[c].empty()) continue;
        double shift = std::numeric_limits<double>::infinity();
        for (std::size_t e : incoming[c]) {
            const auto [u, v] = dag.edges[e];
            shift = std::min(shift, sol.class_shift[dag.class_of[v]] + sol.relative_x[v] -
                                        sol.relative_x[u] - delta);
        }
        sol.class_shift[c] = shift;
    }

    sol.coordinates.x.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        sol.coordinates.x[v] = sol.relative_x[v] + sol.class_shift[dag.class_of[v]];
    }
    return sol;
}

CoordinateAssignment oracle_compact(const LayeredGraph& graph, const BlockStructure& blocks) {
    return solve(graph, blocks).coordinates;
}

}  // namespace bkcoord::oracle
