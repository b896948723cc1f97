#include "bkcoord/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bkcoord {

using json = nlohmann::json;

namespace {

json parse_text(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

template <typename T>
T field(const json& object, const char* key, const char* what) {
    try {
        return object.at(key).get<T>();
    } catch (const json::exception&) {
        throw InputError(std::string("field '") + key + "' must be " + what);
    }
}

std::pair<VertexId, VertexId> edge_from(const json& item) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string()) {
        throw InputError("each edge must be a pair of vertex ids");
    }
    return {item[0].get<std::string>(), item[1].get<std::string>()};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

GraphDescription parse_graph_json(std::string_view text) {
    const json j = parse_text(text);
    if (!j.is_object()) throw InputError("graph document must be a JSON object");
    if (!j.contains("layers")) throw InputError("graph document has no 'layers'");

    GraphDescription g;
    if (j.contains("delta")) g.delta = field<double>(j, "delta", "a number");
    g.layers = field<std::vector<std::vector<std::string>>>(j, "layers",
                                                            "an array of arrays of strings");
    if (j.contains("dummies")) {
        g.dummies = field<std::vector<std::string>>(j, "dummies", "an array of strings");
    }
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw InputError("field 'edges' must be an array");
        for (const auto& item : j["edges"]) g.edges.push_back(edge_from(item));
    }
    return g;
}

std::string graph_to_json(const GraphDescription& g) {
    json j;
    j["delta"] = g.delta;
    j["layers"] = g.layers;
    j["dummies"] = g.dummies;
    j["edges"] = json::array();
    for (const auto& [a, b] : g.edges) j["edges"].push_back({a, b});
    return dump(j);
}

LayerAssignment parse_layer_assignment_json(std::string_view text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::ordered_json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("layer_of") || !j["layer_of"].is_object()) {
        throw InputError("layer assignment needs an object 'layer_of'");
    }
    LayerAssignment a;
    if (j.contains("delta")) {
        if (!j["delta"].is_number()) throw InputError("field 'delta' must be a number");
        a.delta = j["delta"].get<double>();
    }
    for (const auto& [id, layer] : j["layer_of"].items()) {
        if (!layer.is_number_integer()) throw InputError("layer of '" + id + "' must be an integer");
        a.layer_of.emplace_back(id, layer.get<long long>());
    }
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw InputError("field 'edges' must be an array");
        for (const auto& item : j["edges"]) {
            if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
                !item[1].is_string()) {
                throw InputError("each edge must be a pair of vertex ids");
            }
            a.edges.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
        }
    }
    return a;
}

CoordinateDocument make_document(const LayeredGraph& graph, const CoordinateAssignment& coords,
                                 CompactionStrategy strategy,
                                 std::span<const Orientation> orientations, bool balanced) {
    CoordinateDocument doc;
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        doc.coordinates.emplace(graph.id(v), coords.x[v] + 0.0);
    }
    doc.metadata.strategy = std::string(to_string(strategy));
    for (const auto& o : orientations) doc.metadata.orientations.emplace_back(o.code());
    doc.metadata.balanced = balanced;
    doc.metadata.delta = graph.delta();
    doc.metadata.conforming = is_conforming(strategy);
    return doc;
}

std::string document_to_json(const CoordinateDocument& doc) {
    json j;
    j["coordinates"] = json::object();
    for (const auto& [id, x] : doc.coordinates) j["coordinates"][id] = x;
    j["metadata"] = {
        {"strategy", doc.metadata.strategy},
        {"orientations", doc.metadata.orientations},
        {"balanced", doc.metadata.balanced},
        {"delta", doc.metadata.delta},
        {"conforming", doc.metadata.conforming},
    };
    return dump(j);
}

CoordinateDocument parse_document_json(std::string_view text) {
    const json j = parse_text(text);
    if (!j.is_object() || !j.contains("coordinates") || !j["coordinates"].is_object()) {
        throw InputError("coordinate document needs an object 'coordinates'");
    }
    CoordinateDocument doc;
    for (const auto& [id, x] : j["coordinates"].items()) {
        if (!x.is_number()) throw InputError("coordinate of '" + id + "' must be a number");
        doc.coordinates.emplace(id, x.get<double>());
    }
    if (j.contains("metadata")) {
        const json& m = j["metadata"];
        if (!m.is_object()) throw InputError("field 'metadata' must be an object");
        auto& meta = doc.metadata;
        if (m.contains("strategy")) meta.strategy = field<std::string>(m, "strategy", "a string");
        if (m.contains("orientations")) {
            meta.orientations =
                field<std::vector<std::string>>(m, "orientations", "an array of strings");
        }
        if (m.contains("balanced")) meta.balanced = field<bool>(m, "balanced", "a boolean");
        if (m.contains("delta")) meta.delta = field<double>(m, "delta", "a number");
        if (m.contains("conforming")) meta.conforming = field<bool>(m, "conforming", "a boolean");
    }
    return doc;
}

CoordinateAssignment coordinates_for(const LayeredGraph& graph, const CoordinateDocument& doc) {
    CoordinateAssignment out;
    out.x.resize(graph.vertex_count());
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        auto it = doc.coordinates.find(graph.id(v));
        if (it == doc.coordinates.end()) {
            throw InputError("no coordinate for vertex '" + graph.id(v) + "'");
        }
        out.x[v] = it->second;
    }
    for (const auto& [id, x] : doc.coordinates) {
        if (!graph.find(id)) throw InputError("coordinate for unknown vertex '" + id + "'");
    }
    return out;
}

std::string report_to_json(const ValidationReport& report) {
    json j;
    j["ok"] = report.ok();
    j["violations"] = json::array();
    for (const auto& v : report.violations) {
        j["violations"].push_back({{"code", to_string(v.code)}, {"message", v.message}, {"ids", v.ids}});
    }
    return dump(j);
}

std::string violations_to_json(const std::vector<InvariantViolation>& violations) {
    json j;
    j["ok"] = violations.empty();
    j["violations"] = json::array();
    for (const auto& v : violations) {
        j["violations"].push_back({{"kind", v.kind}, {"message", v.message}, {"ids", v.ids}});
    }
    return dump(j);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << content;
    if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace bkcoord
