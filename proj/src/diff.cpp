#include "bkcoord/diff.hpp"

#include <json.hpp>

#include "bkcoord/compaction.hpp"

namespace bkcoord {

std::string_view to_string(DiffClass c) {
    switch (c) {
    case DiffClass::none: return "none";
    case DiffClass::double_shift: return "double_shift";
    case DiffClass::missing_accumulation: return "missing_accumulation";
    }
    return "unknown";
}

namespace {

std::vector<InvariantViolation> side_violations(const LayeredGraph& original,
                                                const LayeredGraph& canonical,
                                                const BlockStructure& blocks,
                                                const CoordinateAssignment& coords,
                                                std::span<const Vertex> sinks) {
    auto out = check_separation(original, coords, original.delta());
    for (auto& v : check_block_alignment(canonical, blocks, coords)) out.push_back(std::move(v));
    for (auto& v : check_sink_monotonicity(canonical, sinks)) out.push_back(std::move(v));
    return out;
}

}  // namespace

DiffReport diff_legacy(const LayeredGraph& graph, Orientation orientation) {
    const LayeredGraph canonical = mirror(graph, orientation);
    const BlockStructure blocks = vertical_align_canonical(canonical);

    auto legacy = compact_legacy_buggy(canonical, blocks);
    auto single_shift = compact_legacy_buggy(canonical, blocks, LegacyFinalPass::single_shift);
    auto corrected = compact(canonical, blocks, CompactionStrategy::contour);
    for (auto* c : {&legacy, &single_shift, &corrected}) restore_orientation(*c, orientation);

    DiffReport report;
    report.orientation = orientation;
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        report.deltas.emplace(graph.id(v), legacy.x[v] - corrected.x[v]);
    }

    const auto corrected_state = place_blocks(canonical, blocks);
    const auto legacy_state = legacy_place_blocks(canonical, blocks);
    std::vector<Vertex> legacy_sinks(graph.vertex_count());
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        legacy_sinks[v] = legacy_state.sink[blocks.root[v]];
    }
    report.legacy_violations = side_violations(graph, canonical, blocks, legacy, legacy_sinks);
    report.corrected_violations =
        side_violations(graph, canonical, blocks, corrected, corrected_state.sink);

    if (legacy == corrected) {
        report.classification = DiffClass::none;
    } else if (single_shift == corrected) {
        report.classification = DiffClass::double_shift;
    } else {
        report.classification = DiffClass::missing_accumulation;
    }
    return report;
}

std::string diff_to_json(const DiffReport& report) {
    using json = nlohmann::json;
    auto violations = [](const std::vector<InvariantViolation>& list) {
        json out = json::array();
        for (const auto& v : list) {
            out.push_back({{"kind", v.kind}, {"message", v.message}, {"ids", v.ids}});
        }
        return out;
    };
    json j;
    j["orientation"] = std::string(report.orientation.code());
    j["classification"] = std::string(to_string(report.classification));
    j["deltas"] = json::object();
    for (const auto& [id, d] : report.deltas) j["deltas"][id] = d + 0.0;
    j["legacy_violations"] = violations(report.legacy_violations);
    j["corrected_violations"] = violations(report.corrected_violations);
    return j.dump(2) + "\n";
}

std::vector<InvariantViolation> check_document(const LayeredGraph& graph,
                                               const CoordinateDocument& document) {
    const CoordinateAssignment coords = coordinates_for(graph, document);
    auto out = check_separation(graph, coords, document.metadata.delta);

    const auto& names = document.metadata.orientations;
    if (!document.metadata.balanced && names.size() == 1) {
        auto orientation = Orientation::parse(names.front());
        if (!orientation) throw InputError("unknown orientation '" + names.front() + "'");
        const BlockStructure blocks = vertical_align(graph, *orientation);
        for (auto& v : check_block_alignment(graph, blocks, coords)) out.push_back(std::move(v));
    }
    return out;
}

}  // namespace bkcoord
