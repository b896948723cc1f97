#include "cli.hpp"

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "bkcoord/balancing.hpp"
#include "bkcoord/diff.hpp"
#include "bkcoord/generator.hpp"
#include "bkcoord/io.hpp"
#include "bkcoord/svg.hpp"

namespace bkcoord::cli {

namespace {

struct Options {
    std::string input;
    std::string output;
    std::string coords;
    std::optional<double> delta;
    std::string strategy = "contour";
    std::string orientations = "all";
    std::string diff_orientation = "ul";
    bool no_balance = false;
    bool overlays = false;
    std::optional<std::uint64_t> seed;
    std::size_t max_vertices = 200;
    std::size_t max_layers = 12;
    bool barycenter = false;
};

/// Failure that maps to a specific exit code; the message goes to stderr.
struct CommandError {
    int code;
    std::string message;
};

void emit(const Options& opt, const std::string& document, std::ostream& out) {
    if (opt.output.empty()) {
        out << document;
    } else {
        write_file(opt.output, document);
    }
}

LayeredGraph load_graph(const Options& opt, std::ostream& err) {
    GraphDescription description = parse_graph_json(read_file(opt.input));
    if (opt.delta) description.delta = *opt.delta;
    try {
        return LayeredGraph::from_description(description);
    } catch (const InvalidGraphError& e) {
        err << report_to_json(e.report());
        throw CommandError{kValidationFailure, e.what()};
    }
}

std::vector<Orientation> selected_orientations(const std::string& name) {
    if (name == "all") return {kAllOrientations.begin(), kAllOrientations.end()};
    return {*Orientation::parse(name)};
}

int cmd_assign(const Options& opt, std::ostream& out, std::ostream& err) {
    const LayeredGraph graph = load_graph(opt, err);
    const CompactionStrategy strategy = *parse_strategy(opt.strategy);
    auto orientations = selected_orientations(opt.orientations);
    const bool balanced = !opt.no_balance && orientations.size() > 1;
    if (!balanced) orientations.resize(1);

    const LayoutResult result = assign_coordinates(graph, strategy, balanced, orientations);
    emit(opt, document_to_json(make_document(graph, result.coordinates, strategy, orientations, balanced)),
         out);
    return kOk;
}

int cmd_check(const Options& opt, std::ostream& out, std::ostream& err) {
    const LayeredGraph graph = load_graph(opt, err);
    const CoordinateDocument doc = parse_document_json(read_file(opt.coords));
    const auto violations = check_document(graph, doc);
    emit(opt, violations_to_json(violations), out);
    for (const auto& v : violations) err << v.kind << ": " << v.message << '\n';
    return violations.empty() ? kOk : kInvariantViolation;
}

int cmd_diff(const Options& opt, std::ostream& out, std::ostream& err) {
    std::optional<LayeredGraph> graph;
    if (!opt.input.empty()) {
        graph = load_graph(opt, err);
    } else if (opt.seed) {
        GeneratorParams params;
        params.max_vertices = opt.max_vertices;
        params.max_layers = opt.max_layers;
        params.barycenter_order = opt.barycenter;
        GraphDescription description = random_layered_graph(*opt.seed, params);
        if (opt.delta) description.delta = *opt.delta;
        graph = LayeredGraph::from_description(description);
    } else {
        throw CommandError{kInputError, "diff needs --input or --seed"};
    }
    const Orientation orientation = opt.diff_orientation == "all"
                                        ? kUpperLeft
                                        : *Orientation::parse(opt.diff_orientation);
    emit(opt, diff_to_json(diff_legacy(*graph, orientation)), out);
    return kOk;
}

int cmd_svg(const Options& opt, std::ostream& out, std::ostream& err) {
    const LayeredGraph graph = load_graph(opt, err);
    SvgOptions svg;
    svg.overlays = opt.overlays;
    CoordinateAssignment coords;
    if (opt.coords.empty()) {
        coords = assign_coordinates(graph, CompactionStrategy::contour, true).coordinates;
    } else {
        const CoordinateDocument doc = parse_document_json(read_file(opt.coords));
        coords = coordinates_for(graph, doc);
        const auto& names = doc.metadata.orientations;
        if (names.size() == 1) {
            if (auto o = Orientation::parse(names.front())) svg.overlay_orientation = *o;
        }
    }
    emit(opt, render_svg(graph, coords, svg), out);
    return kOk;
}

int cmd_validate(const Options& opt, std::ostream& out) {
    GraphDescription description = parse_graph_json(read_file(opt.input));
    if (opt.delta) description.delta = *opt.delta;
    const ValidationReport report = validate(description);
    emit(opt, report_to_json(report), out);
    return report.ok() ? kOk : kValidationFailure;
}

int cmd_normalize(const Options& opt, std::ostream& out) {
    LayerAssignment assignment = parse_layer_assignment_json(read_file(opt.input));
    if (opt.delta) assignment.delta = *opt.delta;
    const LayeredGraph graph = normalize(assignment.layer_of, assignment.edges, assignment.delta);
    emit(opt, graph_to_json(graph.to_description()), out);
    return kOk;
}

int cmd_generate(const Options& opt, std::ostream& out) {
    GeneratorParams params;
    params.max_vertices = opt.max_vertices;
    params.max_layers = opt.max_layers;
    params.barycenter_order = opt.barycenter;
    GraphDescription description = random_layered_graph(opt.seed.value_or(0), params);
    if (opt.delta) description.delta = *opt.delta;
    emit(opt, graph_to_json(description), out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Horizontal coordinate assignment for layered graph drawings"};
    app.name(args.empty() ? "bkcoord" : args.front());
    app.require_subcommand(1);

    const std::vector<std::string> strategies{"contour", "neighborlist", "legacy-buggy"};
    const std::vector<std::string> orientation_names{"all", "ul", "ur", "ll", "lr"};
    auto add_input = [&](CLI::App* cmd, bool required) {
        auto* o = cmd->add_option("-i,--input", opt.input, "Graph JSON file");
        if (required) o->required();
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", opt.output, "Write the document here instead of stdout");
    };
    auto add_delta = [&](CLI::App* cmd) {
        cmd->add_option("--delta", opt.delta, "Minimum separation (overrides the graph's value)");
    };

    auto* assign = app.add_subcommand("assign", "Compute coordinates");
    add_input(assign, true);
    add_output(assign);
    add_delta(assign);
    assign->add_option("--strategy", opt.strategy, "Compaction strategy")
        ->check(CLI::IsMember(strategies));
    assign->add_option("--orientations", opt.orientations, "Orientation(s) to run")
        ->check(CLI::IsMember(orientation_names));
    assign->add_flag("--no-balance", opt.no_balance, "Return the first orientation unbalanced");

    auto* check = app.add_subcommand("check", "Check a coordinate document against a graph");
    add_input(check, true);
    add_output(check);
    check->add_option("--coords", opt.coords, "Coordinate JSON file")->required();

    auto* diff = app.add_subcommand("diff", "Compare the legacy compaction with the corrected one");
    add_input(diff, false);
    add_output(diff);
    add_delta(diff);
    diff->add_option("--orientations", opt.diff_orientation, "Orientation to compare (all = ul)")
        ->check(CLI::IsMember(orientation_names));
    diff->add_option("--seed", opt.seed, "Generate a random instance instead of reading one");
    diff->add_option("--max-vertices", opt.max_vertices, "Generator vertex budget");
    diff->add_option("--max-layers", opt.max_layers, "Generator layer limit");
    diff->add_flag("--barycenter", opt.barycenter, "Generator: barycenter layer order");

    auto* svg = app.add_subcommand("svg", "Render an SVG preview");
    add_input(svg, true);
    add_output(svg);
    svg->add_option("--coords", opt.coords, "Coordinate JSON file (default: compute)");
    svg->add_flag("--overlays", opt.overlays, "Draw blocks and classes");

    auto* validate_cmd = app.add_subcommand("validate", "Validate a graph");
    add_input(validate_cmd, true);
    add_output(validate_cmd);
    add_delta(validate_cmd);

    auto* normalize_cmd =
        app.add_subcommand("normalize", "Subdivide long edges of a layer assignment");
    add_input(normalize_cmd, true);
    add_output(normalize_cmd);
    add_delta(normalize_cmd);

    auto* generate = app.add_subcommand("generate", "Write a random proper layered graph");
    add_output(generate);
    add_delta(generate);
    generate->add_option("--seed", opt.seed, "Random seed");
    generate->add_option("--max-vertices", opt.max_vertices, "Vertex budget");
    generate->add_option("--max-layers", opt.max_layers, "Layer limit");
    generate->add_flag("--barycenter", opt.barycenter, "Barycenter layer order");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (assign->parsed()) return cmd_assign(opt, out, err);
        if (check->parsed()) return cmd_check(opt, out, err);
        if (diff->parsed()) return cmd_diff(opt, out, err);
        if (svg->parsed()) return cmd_svg(opt, out, err);
        if (validate_cmd->parsed()) return cmd_validate(opt, out);
        if (normalize_cmd->parsed()) return cmd_normalize(opt, out);
        if (generate->parsed()) return cmd_generate(opt, out);
    } catch (const CommandError& e) {
        err << "error: " << e.message << '\n';
        return e.code;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const InvalidGraphError& e) {
        err << report_to_json(e.report());
        err << "error: " << e.what() << '\n';
        return kValidationFailure;
    }
    return kInputError;
}

}  // namespace bkcoord::cli
