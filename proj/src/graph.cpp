#include "bkcoord/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <unordered_set>

namespace bkcoord {

const char* to_string(ViolationCode code) {
    switch (code) {
    case ViolationCode::duplicate_vertex: return "duplicate_vertex";
    case ViolationCode::empty_id: return "empty_id";
    case ViolationCode::unknown_vertex: return "unknown_vertex";
    case ViolationCode::duplicate_dummy: return "duplicate_dummy";
    case ViolationCode::self_loop: return "self_loop";
    case ViolationCode::duplicate_edge: return "duplicate_edge";
    case ViolationCode::flat_edge: return "flat_edge";
    case ViolationCode::non_neighboring_edge: return "non_neighboring_edge";
    case ViolationCode::invalid_delta: return "invalid_delta";
    }
    return "unknown";
}

ValidationReport validate(const GraphDescription& graph) {
    ValidationReport report;
    auto add = [&](ViolationCode code, std::string message, std::vector<VertexId> ids) {
        report.violations.push_back({code, std::move(message), std::move(ids)});
    };

    if (!std::isfinite(graph.delta) || graph.delta <= 0.0) {
        add(ViolationCode::invalid_delta, "delta must be a finite positive number", {});
    }

    std::unordered_map<VertexId, std::size_t> layer_of;
    for (std::size_t i = 0; i < graph.layers.size(); ++i) {
        for (const auto& id : graph.layers[i]) {
            if (id.empty()) {
                add(ViolationCode::empty_id, "vertex id must not be empty", {id});
                continue;
            }
            auto [it, inserted] = layer_of.emplace(id, i);
            if (!inserted) {
                add(ViolationCode::duplicate_vertex,
                    "duplicate vertex '" + id + "' (layers " + std::to_string(it->second + 1) +
                        " and " + std::to_string(i + 1) + ")",
                    {id});
            }
        }
    }

    std::unordered_set<VertexId> dummies;
    for (const auto& id : graph.dummies) {
        if (!layer_of.contains(id)) {
            add(ViolationCode::unknown_vertex, "dummy '" + id + "' is not in any layer", {id});
        } else if (!dummies.insert(id).second) {
            add(ViolationCode::duplicate_dummy, "dummy '" + id + "' listed twice", {id});
        }
    }

    std::set<std::pair<VertexId, VertexId>> seen_edges;
    for (const auto& [a, b] : graph.edges) {
        auto la = layer_of.find(a);
        auto lb = layer_of.find(b);
        if (la == layer_of.end() || lb == layer_of.end()) {
            std::vector<VertexId> missing;
            if (la == layer_of.end()) missing.push_back(a);
            if (lb == layer_of.end()) missing.push_back(b);
            add(ViolationCode::unknown_vertex, "edge endpoint is not in any layer", missing);
            continue;
        }
        if (a == b) {
            add(ViolationCode::self_loop, "self-loop on '" + a + "'", {a});
            continue;
        }
        auto key = a < b ? std::pair{a, b} : std::pair{b, a};
        if (!seen_edges.insert(key).second) {
            add(ViolationCode::duplicate_edge, "duplicate edge " + a + "-" + b, {a, b});
            continue;
        }
        const std::size_t ia = la->second;
        const std::size_t ib = lb->second;
        if (ia == ib) {
            add(ViolationCode::flat_edge, "edge " + a + "-" + b + " joins vertices of the same layer",
                {a, b});
        } else if ((ia > ib ? ia - ib : ib - ia) > 1) {
            add(ViolationCode::non_neighboring_edge,
                "edge " + a + "-" + b + " spans non-neighboring layers", {a, b});
        }
    }
    return report;
}

namespace {

std::string summarize(const ValidationReport& report) {
    std::string text = "invalid layered graph";
    if (!report.violations.empty()) {
        text += ": " + report.violations.front().message;
        if (report.violations.size() > 1) {
            text += " (+" + std::to_string(report.violations.size() - 1) + " more)";
        }
    }
    return text;
}

}  // namespace

InvalidGraphError::InvalidGraphError(ValidationReport report)
    : std::runtime_error(summarize(report)), report_(std::move(report)) {}

LayeredGraph::LayeredGraph() : names_(std::make_shared<Names>()) {}

LayeredGraph LayeredGraph::from_description(const GraphDescription& description) {
    auto report = validate(description);
    if (!report.ok()) throw InvalidGraphError(std::move(report));
    std::size_t vertices = 0;
    for (const auto& layer : description.layers) vertices += layer.size();
    if (std::max(vertices, description.edges.size()) >= std::numeric_limits<Vertex>::max()) {
        throw InputError("graph too large: vertex and edge counts must stay below 2^32 - 1");
    }

    auto names = std::make_shared<Names>();
    LayeredGraph g;
    g.delta_ = description.delta;
    g.layers_.resize(description.layers.size());
    for (std::size_t i = 0; i < description.layers.size(); ++i) {
        for (const auto& id : description.layers[i]) {
            const Vertex v = names->ids.size();
            names->ids.push_back(id);
            names->index.emplace(id, v);
            g.layers_[i].push_back(v);
        }
    }
    g.dummy_.assign(names->ids.size(), 0);
    for (const auto& id : description.dummies) g.dummy_[names->index.at(id)] = 1;
    g.edges_.reserve(description.edges.size());
    for (const auto& [a, b] : description.edges) {
        g.edges_.emplace_back(names->index.at(a), names->index.at(b));
    }
    g.names_ = std::move(names);
    g.rebuild_topology();
    return g;
}

GraphDescription LayeredGraph::to_description() const {
    GraphDescription d;
    d.delta = delta_;
    d.layers.reserve(layers_.size());
    for (const auto& layer : layers_) {
        auto& out = d.layers.emplace_back();
        for (Vertex v : layer) out.push_back(id(v));
    }
    for (Vertex v = 0; v < vertex_count(); ++v) {
        if (dummy_[v]) d.dummies.push_back(id(v));
    }
    for (const auto& [u, w] : edges_) d.edges.emplace_back(id(u), id(w));
    return d;
}

LayeredGraph LayeredGraph::mirrored(bool reverse_layers, bool reverse_ranks) const {
    LayeredGraph g;
    g.names_ = names_;
    g.dummy_ = dummy_;
    g.delta_ = delta_;
    g.layers_ = layers_;
    g.edges_ = edges_;
    g.layer_index_ = layer_index_;
    g.rank_ = rank_;
    g.upper_begin_ = upper_begin_;
    g.upper_adjacency_ = upper_adjacency_;
    g.lower_begin_ = lower_begin_;
    g.lower_adjacency_ = lower_adjacency_;

    const std::size_t h = layers_.size();
    if (reverse_layers) {
        std::ranges::reverse(g.layers_);
        for (auto& li : g.layer_index_) li = h - 1 - li;
        for (auto& [u, w] : g.edges_) std::swap(u, w);
        std::swap(g.upper_begin_, g.lower_begin_);
        std::swap(g.upper_adjacency_, g.lower_adjacency_);
    }
    if (reverse_ranks) {
        for (auto& layer : g.layers_) std::ranges::reverse(layer);
        for (Vertex v = 0; v < g.rank_.size(); ++v) {
            g.rank_[v] = layers_[layer_index_[v]].size() - 1 - g.rank_[v];
        }
        // Neighbor lists are sorted by rank, so reversing restores the order.
        for (Vertex v = 0; v < g.rank_.size(); ++v) {
            std::reverse(g.upper_adjacency_.begin() + g.upper_begin_[v],
                         g.upper_adjacency_.begin() + g.upper_begin_[v + 1]);
            std::reverse(g.lower_adjacency_.begin() + g.lower_begin_[v],
                         g.lower_adjacency_.begin() + g.lower_begin_[v + 1]);
        }
    }
    return g;
}

void LayeredGraph::rebuild_topology() {
    const std::size_t n = names_->ids.size();
    layer_index_.assign(n, 0);
    rank_.assign(n, 0);
    for (std::size_t i = 0; i < layers_.size(); ++i) {
        for (std::size_t k = 0; k < layers_[i].size(); ++k) {
            layer_index_[layers_[i][k]] = i;
            rank_[layers_[i][k]] = k;
        }
    }
    for (auto& [u, w] : edges_) {
        if (layer_index_[u] > layer_index_[w]) std::swap(u, w);
    }

    // Counting sort by rank keeps construction linear.
    upper_begin_.assign(n + 1, 0);
    lower_begin_.assign(n + 1, 0);
    for (const auto& [u, w] : edges_) {
        ++upper_begin_[w + 1];
        ++lower_begin_[u + 1];
    }
    for (std::size_t v = 0; v < n; ++v) {
        upper_begin_[v + 1] += upper_begin_[v];
        lower_begin_[v + 1] += lower_begin_[v];
    }
    upper_adjacency_.assign(edges_.size(), 0);
    lower_adjacency_.assign(edges_.size(), 0);
    std::vector<std::size_t> upper_fill(upper_begin_.begin(), upper_begin_.end() - 1);
    std::vector<std::size_t> lower_fill(lower_begin_.begin(), lower_begin_.end() - 1);
    // Visiting endpoints layer by layer in rank order leaves every list sorted.
    std::vector<std::size_t> incident_begin(n + 1, 0);
    for (const auto& [u, w] : edges_) {
        ++incident_begin[u + 1];
        ++incident_begin[w + 1];
    }
    for (std::size_t v = 0; v < n; ++v) incident_begin[v + 1] += incident_begin[v];
    std::vector<Vertex> incident(2 * edges_.size());
    std::vector<std::size_t> incident_fill(incident_begin.begin(), incident_begin.end() - 1);
    for (const auto& [u, w] : edges_) {
        incident[incident_fill[u]++] = w;
        incident[incident_fill[w]++] = u;
    }
    for (const auto& layer : layers_) {
        for (Vertex a : layer) {
            for (std::size_t e = incident_begin[a]; e < incident_begin[a + 1]; ++e) {
                const Vertex b = incident[e];
                if (layer_index_[a] < layer_index_[b]) {
                    upper_adjacency_[upper_fill[b]++] = a;
                } else {
                    lower_adjacency_[lower_fill[b]++] = a;
                }
            }
        }
    }
}

std::optional<Vertex> LayeredGraph::predecessor(Vertex v) const {
    const std::size_t k = rank_[v];
    if (k == 0) return std::nullopt;
    return layers_[layer_index_[v]][k - 1];
}

std::span<const Vertex> LayeredGraph::upper_neighbors(Vertex v) const {
    return std::span<const Vertex>(upper_adjacency_).subspan(upper_begin_[v],
                                                             upper_begin_[v + 1] - upper_begin_[v]);
}

std::span<const Vertex> LayeredGraph::lower_neighbors(Vertex v) const {
    return std::span<const Vertex>(lower_adjacency_).subspan(lower_begin_[v],
                                                             lower_begin_[v + 1] - lower_begin_[v]);
}

std::optional<Vertex> LayeredGraph::find(const VertexId& id) const {
    auto it = names_->index.find(id);
    if (it == names_->index.end()) return std::nullopt;
    return it->second;
}

Vertex LayeredGraph::index(const VertexId& id) const {
    auto v = find(id);
    if (!v) throw LookupError("unknown vertex '" + id + "'");
    return *v;
}

std::optional<VertexId> LayeredGraph::pred(const VertexId& id) const {
    auto p = predecessor(index(id));
    if (!p) return std::nullopt;
    return this->id(*p);
}

std::size_t LayeredGraph::pos(const VertexId& id) const { return rank(index(id)) + 1; }

std::size_t LayeredGraph::layer_of(const VertexId& id) const {
    return layer_index(index(id)) + 1;
}

LayeredGraph normalize(const std::vector<std::pair<VertexId, long long>>& layer_assignment,
                       const std::vector<std::pair<VertexId, VertexId>>& edges,
                       double delta) {
    std::unordered_map<VertexId, long long> layer_of;
    long long height = 0;
    for (const auto& [id, layer] : layer_assignment) {
        if (layer < 1) {
            throw InputError("vertex '" + id + "' has layer index " + std::to_string(layer) +
                             " (must be >= 1)");
        }
        if (!layer_of.emplace(id, layer).second) {
            throw InputError("vertex '" + id + "' assigned twice");
        }
        height = std::max(height, layer);
    }

    GraphDescription d;
    d.delta = delta;
    d.layers.resize(static_cast<std::size_t>(height));
    for (const auto& [id, layer] : layer_assignment) {
        d.layers[static_cast<std::size_t>(layer - 1)].push_back(id);
    }

    std::size_t next_dummy = 0;
    auto fresh_id = [&] {
        VertexId id;
        do {
            id = "__dummy_" + std::to_string(next_dummy++);
        } while (layer_of.contains(id));
        return id;
    };

    for (const auto& [a, b] : edges) {
        auto la = layer_of.find(a);
        auto lb = layer_of.find(b);
        if (la == layer_of.end()) throw InputError("edge endpoint '" + a + "' has no layer");
        if (lb == layer_of.end()) throw InputError("edge endpoint '" + b + "' has no layer");
        if (a == b) throw InputError("self-loop on '" + a + "'");
        if (la->second == lb->second) {
            throw InputError("flat edge " + a + "-" + b + " (both in layer " +
                             std::to_string(la->second) + ")");
        }
        const bool a_upper = la->second < lb->second;
        const VertexId& upper = a_upper ? a : b;
        const VertexId& lower = a_upper ? b : a;
        const long long top = std::min(la->second, lb->second);
        const long long bottom = std::max(la->second, lb->second);

        VertexId previous = upper;
        for (long long layer = top + 1; layer < bottom; ++layer) {
            VertexId dummy = fresh_id();
            d.layers[static_cast<std::size_t>(layer - 1)].push_back(dummy);
            d.dummies.push_back(dummy);
            d.edges.emplace_back(previous, dummy);
            previous = std::move(dummy);
        }
        d.edges.emplace_back(previous, lower);
    }

    // Duplicate input edges surface here as validation failures.
    auto report = validate(d);
    if (!report.ok()) throw InputError(report.violations.front().message);
    return LayeredGraph::from_description(d);
}

}  // namespace bkcoord
