#include "bkcoord/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace bkcoord {

GraphDescription random_layered_graph(std::uint64_t seed, const GeneratorParams& params) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };

    const double delta =
        params.deltas.empty() ? 1.0 : params.deltas[uniform(0, params.deltas.size() - 1)];
    const std::size_t height = params.layers
                                   ? std::max<std::size_t>(1, *params.layers)
                                   : uniform(1, std::max<std::size_t>(1, params.max_layers));
    const std::size_t budget = std::max<std::size_t>(1, params.max_vertices);
    const std::size_t originals = params.originals
                                      ? std::clamp<std::size_t>(*params.originals, 1, budget)
                                      : uniform(1, std::max<std::size_t>(1, budget * 2 / 3));

    // Vertices 0..originals-1 are original, the rest dummies.
    std::vector<std::size_t> layer_of(originals);
    std::vector<std::vector<std::size_t>> layers(height);
    for (std::size_t k = 0; k < originals; ++k) {
        layer_of[k] = uniform(0, height - 1);
        layers[layer_of[k]].push_back(k);
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    const auto attempts =
        static_cast<std::size_t>(params.edge_density * static_cast<double>(originals));
    for (std::size_t t = 0; t < attempts && height > 1; ++t) {
        std::size_t a = uniform(0, originals - 1);
        std::size_t b = uniform(0, originals - 1);
        if (layer_of[a] == layer_of[b]) continue;
        if (layer_of[a] > layer_of[b]) std::swap(a, b);
        const std::size_t span = layer_of[b] - layer_of[a];
        if (span > params.max_span || layer_of.size() + span - 1 > budget) continue;
        if (!seen.emplace(a, b).second) continue;

        std::size_t previous = a;
        for (std::size_t layer = layer_of[a] + 1; layer < layer_of[b]; ++layer) {
            const std::size_t dummy = layer_of.size();
            layer_of.push_back(layer);
            layers[layer].push_back(dummy);
            edges.emplace_back(previous, dummy);
            previous = dummy;
        }
        edges.emplace_back(previous, b);
    }

    for (auto& layer : layers) std::ranges::shuffle(layer, rng);
    if (params.barycenter_order) {
        std::vector<std::vector<std::size_t>> upper(layer_of.size());
        for (const auto& [a, b] : edges) upper[b].push_back(a);
        std::vector<double> rank(layer_of.size(), 0.0);
        for (auto& layer : layers) {
            std::vector<double> key(layer.size());
            for (std::size_t k = 0; k < layer.size(); ++k) {
                const auto& ups = upper[layer[k]];
                double sum = 0.0;
                for (std::size_t u : ups) sum += rank[u];
                key[k] = ups.empty() ? static_cast<double>(k) : sum / static_cast<double>(ups.size());
            }
            std::vector<std::size_t> order(layer.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::ranges::stable_sort(order, [&](std::size_t p, std::size_t q) { return key[p] < key[q]; });
            std::vector<std::size_t> sorted;
            sorted.reserve(layer.size());
            for (std::size_t k : order) sorted.push_back(layer[k]);
            layer = std::move(sorted);
            for (std::size_t k = 0; k < layer.size(); ++k) rank[layer[k]] = static_cast<double>(k);
        }
    }

    auto name = [originals](std::size_t v) {
        return v < originals ? "v" + std::to_string(v) : "d" + std::to_string(v - originals);
    };
    GraphDescription d;
    d.delta = delta;
    for (const auto& layer : layers) {
        auto& out = d.layers.emplace_back();
        for (std::size_t v : layer) out.push_back(name(v));
    }
    for (std::size_t v = originals; v < layer_of.size(); ++v) d.dummies.push_back(name(v));
    for (const auto& [a, b] : edges) d.edges.emplace_back(name(a), name(b));
    return d;
}

}  // namespace bkcoord
