#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bkcoord/alignment.hpp"
#include "bkcoord/graph.hpp"
#include "bkcoord/invariants.hpp"
#include "bkcoord/io.hpp"

namespace bkcoord {

/// Which flaw of the original compaction shows up on an instance.
enum class DiffClass {
    none,
    /// Only the final pass differs: members re-shifted on top of a shifted root.
    double_shift,
    /// Class offsets differ: shifts not accumulated across classes.
    missing_accumulation,
};

std::string_view to_string(DiffClass c);

struct DiffReport {
    Orientation orientation;
    /// legacy - corrected, per vertex id.
    std::map<VertexId, double> deltas;
    std::vector<InvariantViolation> legacy_violations;
    std::vector<InvariantViolation> corrected_violations;
    DiffClass classification = DiffClass::none;
};

/// Runs the legacy and the contour compaction for one orientation and
/// classifies the discrepancy.
DiffReport diff_legacy(const LayeredGraph& graph, Orientation orientation = kUpperLeft);

std::string diff_to_json(const DiffReport& report);

/// Separation (with the document's delta) for every document; block
/// alignment too when the document holds a single, unbalanced orientation.
/// Throws InputError when the document does not cover the graph.
std::vector<InvariantViolation> check_document(const LayeredGraph& graph,
                                               const CoordinateDocument& document);

}  // namespace bkcoord
