#include "hyperchroma/cli/commands.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hyperchroma/cli/report.hpp"
#include "hyperchroma/coloring/io.hpp"
#include "hyperchroma/coloring/oracle.hpp"
#include "hyperchroma/core/io.hpp"
#include "hyperchroma/core/line_graph.hpp"
#include "hyperchroma/instances/generators.hpp"

namespace hyperchroma::cli {

using nlohmann::ordered_json;

const char* const kBenchColumns = "n,edges,rho,P,i,eps,k,Q,seed,colors_used,target,success,failure,runtime_ms";

namespace {

ordered_json report_header(const RunConfig& config)
{
    ordered_json out;
    out["version"] = HYPERCHROMA_VERSION;
    out["command"] = config.command;
    if (!config.input.empty()) {
        out["input"] = config.input;
    }
    return out;
}

void emit_report(const RunConfig& config, const ordered_json& report, std::ostream& stream)
{
    if (config.format == ReportFormat::Json) {
        stream << report.dump(2) << '\n';
    } else {
        stream << to_key_values(report);
    }
}

// Where the report goes: `out` when the artifact went to a file, else `err`.
std::ostream& report_stream(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    return config.output.empty() ? err : out;
}

template <typename Writer>
void write_artifact(const RunConfig& config, std::ostream& out, Writer&& writer)
{
    if (config.output.empty()) {
        writer(out);
        return;
    }
    std::ofstream file(config.output);
    if (!file) {
        throw std::runtime_error("cannot write " + config.output);
    }
    writer(file);
    if (!file) {
        throw std::runtime_error("failed writing " + config.output);
    }
}

Hypergraph load_input(const RunConfig& config)
{
    if (config.input.empty()) {
        throw std::invalid_argument("--input is required");
    }
    return read_hypergraph_file(config.input);
}

std::string format_number(double value)
{
    std::ostringstream s;
    s.precision(10);
    s << value;
    return s.str();
}

ordered_json dyadic_summary(const DyadicPartition& partition)
{
    ordered_json out = ordered_json::object();
    for (const auto& [index, ids] : partition.classes) {
        out["A_" + std::to_string(index)] = ids.size();
    }
    return out;
}

ordered_json triangle_summary(const Hypergraph& h)
{
    const LineGraph lg = build_line_graph(h);
    const TriangleStats stats = count_triangles(h, lg);
    std::size_t type1 = 0;
    std::size_t type2 = 0;
    std::size_t max1 = 0;
    std::size_t max2 = 0;
    for (std::size_t e = 0; e < stats.total.size(); ++e) {
        type1 += stats.type1[e];
        type2 += stats.type2[e];
        max1 = std::max(max1, stats.type1[e]);
        max2 = std::max(max2, stats.type2[e]);
    }
    ordered_json out;
    out["edges"] = h.edge_count();
    out["d"] = stats.max_degree;
    out["f"] = stats.max_triangles;
    out["triangles"] = stats.triangle_count;
    out["type1_triangles"] = type1 / 3;
    out["type2_triangles"] = type2 / 3;
    out["max_type1_per_edge"] = max1;
    out["max_type2_per_edge"] = max2;
    const double d = static_cast<double>(stats.max_degree);
    const double f = static_cast<double>(stats.max_triangles);
    if (stats.max_degree == 0 || stats.max_triangles == 0) {
        out["budget"] = nullptr;
        out["degenerate"] = true;
    } else {
        out["budget"] = d / truncated_log(d * d / f);
        out["degenerate"] = false;
    }
    return out;
}

} // namespace

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream&)
{
    const Hypergraph h = load_input(config);
    ordered_json report = report_header(config);
    report["n"] = h.n;
    report["edges"] = h.edge_count();
    if (h.edge_count() == 0) {
        report["ok"] = false;
        report["diagnostic"] = "no edges";
        emit_report(config, report, out);
        return kInvalidInput;
    }
    const ValidationReport validation = validate_linear(h);
    bool ok = validation.ok();
    report["ok"] = ok;
    report["linear"] = to_json(validation);
    report["min_rank"] = min_rank(h);
    report["max_rank"] = max_rank(h);
    if (validation.ok()) {
        const std::size_t delta = max_vertex_degree(h);
        const double bound = degree_bound(h);
        report["max_degree"] = delta;
        report["degree_bound"] = bound;
        report["degree_bound_holds"] = static_cast<double>(delta) <= bound;
        report["classes"] = dyadic_summary(partition_dyadic(h));
    }
    if (!config.coloring.empty()) {
        const EdgeColoring coloring = read_coloring_file(config.coloring, h.edge_count());
        VerificationReport verification;
        if (!config.palettes.empty()) {
            const PaletteAssignment palettes = read_palettes_file(config.palettes, h.edge_count());
            verification = verify_coloring(h, coloring, palettes);
        } else {
            verification = verify_coloring(h, coloring);
        }
        report["coloring"] = to_json(verification);
        report["coloring"]["colors_used"] = coloring.colors_used();
        ok = ok && verification.ok();
        report["ok"] = ok;
    }
    emit_report(config, report, out);
    return ok ? kSuccess : kInvalidInput;
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream&)
{
    const Hypergraph h = load_input(config);
    ordered_json report = report_header(config);
    if (h.edge_count() == 0) {
        report["diagnostic"] = "no edges";
        emit_report(config, report, out);
        return kInvalidInput;
    }
    const ValidationReport validation = validate_linear(h);
    if (!validation.ok()) {
        report["linear"] = to_json(validation);
        emit_report(config, report, out);
        return kInvalidInput;
    }
    report["n"] = h.n;
    report["edges"] = h.edge_count();
    report["min_rank"] = min_rank(h);
    report["max_rank"] = max_rank(h);
    report["max_degree"] = max_vertex_degree(h);
    report["degree_bound"] = degree_bound(h);
    report["overall"] = triangle_summary(h);
    ordered_json classes = ordered_json::object();
    for (const auto& [index, ids] : partition_dyadic(h).classes) {
        ordered_json entry = triangle_summary(sub_hypergraph(h, ids));
        entry["index"] = index;
        classes["A_" + std::to_string(index)] = std::move(entry);
    }
    report["classes"] = std::move(classes);
    emit_report(config, report, out);
    return kSuccess;
}

int cmd_color(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const Hypergraph h = load_input(config);
    if (h.edge_count() == 0) {
        throw EmptyHypergraphError();
    }
    const ValidationReport validation = validate_linear(h);
    if (!validation.ok()) {
        ordered_json report = report_header(config);
        report["linear"] = to_json(validation);
        emit_report(config, report, err);
        return kInvalidInput;
    }
    config.pipeline.validate();
    const std::size_t q = config.pipeline.palette_size.value_or(default_palette_size(h.n, config.pipeline.i,
                                                                                     config.pipeline.eps));
    const PaletteAssignment palettes = config.palettes.empty() ? PaletteAssignment::uniform(h.edge_count(), q)
                                                               : read_palettes_file(config.palettes, h.edge_count());
    PipelineParams params = config.pipeline;
    params.palette_size = q;
    const PipelineResult result = full_pipeline(h, palettes, params);

    EdgeColoring coloring = result.outcome.coloring;
    if (coloring.edge_count() != h.edge_count()) {
        coloring = EdgeColoring(h.edge_count());
    }
    std::vector<EdgeId> all(h.edge_count());
    for (EdgeId e = 0; e < all.size(); ++e) {
        all[e] = e;
    }
    coloring.set_scope(all);
    const VerificationReport verification = verify_coloring(h, coloring, palettes);
    const bool proper = result.ok() && verification.ok();
    write_artifact(config, out, [&](std::ostream& stream) { write_coloring(stream, coloring, proper); });

    ordered_json report = report_header(config);
    report["seed"] = params.seed;
    report["ok"] = proper;
    report["pipeline"] = to_json(result.report);
    report["failure"] = result.outcome.failure ? to_json(*result.outcome.failure) : ordered_json(nullptr);
    emit_report(config, report, report_stream(config, out, err));
    return proper ? kSuccess : kColoringFailed;
}

int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream&)
{
    const Hypergraph h = load_input(config);
    if (h.edge_count() == 0) {
        throw EmptyHypergraphError();
    }
    const ValidationReport validation = validate_linear(h);
    ordered_json report = report_header(config);
    if (!validation.ok()) {
        report["linear"] = to_json(validation);
        emit_report(config, report, out);
        return kInvalidInput;
    }
    report["edges"] = h.edge_count();
    const ChromaticIndexResult chi = brute_force_chromatic_index(h, config.cap_edges);
    report["chromatic_index"] = chi.colors;
    report["clique_bound"] = chi.clique_bound;
    report["witness_proper"] = verify_coloring(h, chi.witness).ok();

    ListOracleOptions options;
    options.cap_edges = config.list_cap_edges;
    options.max_assignments = config.list_budget;
    try {
        const ListChromaticIndexResult list = brute_force_list_chromatic_index(h, options);
        report["list_chromatic_index"] = list.value;
        report["line_degree_plus_one"] = list.degree_bound;
        report["assignments_checked"] = list.assignments_checked;
    } catch (const OracleRefused& refused) {
        report["list_chromatic_index"] = nullptr;
        report["list_refused"] = refused.what();
    }
    emit_report(config, report, out);
    return kSuccess;
}

int cmd_generate(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    ordered_json report = report_header(config);
    report["kind"] = config.kind;
    Hypergraph h;
    if (config.kind == "plane") {
        h = projective_plane(config.q);
        report["q"] = config.q;
        if (config.pad_to) {
            h = pad_isolated(h, *config.pad_to);
        }
    } else if (config.kind == "random") {
        RandomLinearSpec spec;
        spec.n = config.n;
        spec.rank_min = config.rank_min;
        spec.rank_max = config.rank_max;
        spec.target_edges = config.target_edges;
        spec.failure_budget = config.failure_budget;
        spec.seed = config.pipeline.seed;
        const RandomInstance instance = random_linear_hypergraph(spec);
        h = instance.hypergraph;
        report["rank_min"] = spec.rank_min;
        report["rank_max"] = spec.rank_max;
        report["target_edges"] = spec.target_edges ? ordered_json(*spec.target_edges) : ordered_json(nullptr);
        report["failure_budget"] = spec.failure_budget;
        report["seed"] = spec.seed;
        report["draws"] = instance.draws;
        report["shortfall"] = instance.shortfall ? ordered_json(*instance.shortfall) : ordered_json(nullptr);
    } else {
        throw std::invalid_argument("unknown --kind '" + config.kind + "' (expected plane or random)");
    }
    if (!validate_linear(h).ok()) {
        throw std::logic_error("generator produced a non-linear hypergraph");
    }
    report["n"] = h.n;
    report["edges"] = h.edge_count();
    write_artifact(config, out, [&](std::ostream& stream) { write_hypergraph(stream, h); });
    emit_report(config, report, report_stream(config, out, err));
    return kSuccess;
}

int cmd_lowerbound(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const LowerBoundInstance instance = lower_bound_instance({config.x, config.delta, config.n});
    const LowerBoundCertificate& c = instance.certificate;
    write_artifact(config, out, [&](std::ostream& stream) { write_hypergraph(stream, instance.hypergraph); });
    ordered_json report = report_header(config);
    report["certificate"] = to_json(c);
    report["certificate"]["inequality"] = std::to_string(c.plane_size) + " > " + format_number(c.xn);
    emit_report(config, report, report_stream(config, out, err));
    return kSuccess;
}

namespace {

struct BenchRow {
    std::size_t n = 0;
    std::size_t edges = 0;
    std::size_t rho = 0;
    std::size_t big_p = 0;
    std::size_t q = 0;
    std::uint64_t seed = 0;
    std::size_t colors_used = 0;
    double target = 0;
    bool success = false;
    std::string failure;
    long long runtime_ms = 0;
};

std::string csv_field(const std::string& text)
{
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c == '\n' ? ' ' : c;
    }
    return quoted + '"';
}

BenchRow bench_cell(const RunConfig& config, std::size_t n, std::uint64_t seed)
{
    BenchRow row;
    row.n = n;
    row.seed = seed;
    const auto start = std::chrono::steady_clock::now();
    try {
        RandomLinearSpec spec;
        spec.n = n;
        spec.rank_min = config.rank_min;
        spec.rank_max = config.rank_max;
        spec.target_edges = config.target_edges;
        spec.failure_budget = config.failure_budget;
        spec.seed = seed;
        const Hypergraph h = random_linear_hypergraph(spec).hypergraph;
        row.edges = h.edge_count();
        PipelineParams params = config.pipeline;
        params.seed = seed;
        row.q = params.palette_size.value_or(default_palette_size(n, params.i, params.eps));
        row.target = (1.0 + params.eps) * static_cast<double>(n) / (params.i - 1);
        if (h.edge_count() == 0) {
            row.failure = "no edges";
        } else {
            row.rho = min_rank(h);
            row.big_p = max_rank(h);
            const PipelineResult result = full_pipeline(h, params);
            row.colors_used = result.report.colors_used;
            row.success = result.ok();
            if (result.outcome.failure) {
                row.failure = result.outcome.failure->phase + ": " + result.outcome.failure->message;
            }
        }
    } catch (const std::exception& e) {
        row.success = false;
        row.failure = e.what();
    }
    if (!config.timing) {
        return row;
    }
    row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                         .count();
    return row;
}

} // namespace

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    config.pipeline.validate();
    const std::uint64_t base_seed = config.pipeline.seed;
    std::vector<std::pair<std::size_t, std::uint64_t>> cells;
    for (std::size_t n : config.bench_sizes) {
        for (std::size_t s = 0; s < config.seed_count; ++s) {
            cells.emplace_back(n, base_seed + s);
        }
    }
    std::vector<BenchRow> rows(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t c = next++; c < cells.size(); c = next++) {
            rows[c] = bench_cell(config, cells[c].first, cells[c].second);
        }
    };
    const unsigned jobs = std::max(1u, config.jobs);
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < jobs; ++t) {
        threads.emplace_back(worker);
    }
    worker();
    for (auto& t : threads) {
        t.join();
    }

    std::size_t successes = 0;
    write_artifact(config, out, [&](std::ostream& stream) {
        stream << "# hyperchroma-bench schema=1 version=" << HYPERCHROMA_VERSION << '\n' << kBenchColumns << '\n';
        for (const BenchRow& row : rows) {
            stream << row.n << ',' << row.edges << ',' << row.rho << ',' << row.big_p << ',' << config.pipeline.i
                   << ',' << format_number(config.pipeline.eps) << ',' << config.pipeline.k << ',' << row.q << ','
                   << row.seed << ',' << row.colors_used << ',' << format_number(row.target) << ','
                   << (row.success ? "true" : "false") << ',' << csv_field(row.failure) << ',' << row.runtime_ms
                   << '\n';
        }
    });
    for (const BenchRow& row : rows) {
        successes += row.success ? 1 : 0;
    }
    ordered_json report = report_header(config);
    report["cells"] = rows.size();
    report["successes"] = successes;
    report["seed"] = base_seed;
    report["jobs"] = jobs;
    emit_report(config, report, report_stream(config, out, err));
    return successes == rows.size() ? kSuccess : kColoringFailed;
}

namespace {

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    if (config.command == "validate") {
        return cmd_validate(config, out, err);
    }
    if (config.command == "analyze") {
        return cmd_analyze(config, out, err);
    }
    if (config.command == "color") {
        return cmd_color(config, out, err);
    }
    if (config.command == "oracle") {
        return cmd_oracle(config, out, err);
    }
    if (config.command == "generate") {
        return cmd_generate(config, out, err);
    }
    if (config.command == "lowerbound") {
        return cmd_lowerbound(config, out, err);
    }
    if (config.command == "bench") {
        return cmd_bench(config, out, err);
    }
    throw std::invalid_argument("unknown command '" + config.command + "'");
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"List edge coloring of linear hypergraphs", "hyperchroma"};
    app.set_version_flag("--version", std::string(HYPERCHROMA_VERSION));
    app.require_subcommand(1);

    RunConfig config;
    std::string format = "text";
    std::string order = "degree";
    std::size_t palette_size = 0;
    double subclass_threshold = 0;
    std::size_t target_edges = 0;
    std::size_t pad_to = 0;
    std::vector<std::size_t> sizes;

    struct Handles {
        CLI::Option* palette_size = nullptr;
        CLI::Option* subclass_threshold = nullptr;
        CLI::Option* target_edges = nullptr;
        CLI::Option* pad_to = nullptr;
    };
    std::vector<Handles> handles;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--output", config.output, "Write the artifact here instead of stdout");
    };
    auto pipeline_options = [&](CLI::App* sub, Handles& h) {
        sub->add_option("--i", config.pipeline.i, "Rank lower bound the pipeline assumes");
        sub->add_option("--eps", config.pipeline.eps, "Slack above n/(i-1)");
        sub->add_option("--k", config.pipeline.k, "First big dyadic class");
        h.palette_size = sub->add_option("--palette-size", palette_size, "Colors per palette (Q)");
        sub->add_option("--retries", config.pipeline.retries, "Palette split retries");
        h.subclass_threshold =
            sub->add_option("--subclass-threshold", subclass_threshold, "Minimum per subclass of class I");
        sub->add_option("--order", order, "Greedy edge order")->check(CLI::IsMember({"degree", "input", "random"}));
    };
    auto seed_option = [&](CLI::App* sub) {
        sub->add_option("--seed", config.pipeline.seed, "Random seed")->envname("HYPERCHROMA_SEED");
    };
    handles.reserve(8);

    auto* validate = app.add_subcommand("validate", "Check linearity and report structure");
    validate->add_option("--input", config.input, "Hypergraph file")->required();
    validate->add_option("--coloring", config.coloring, "Coloring file to verify");
    validate->add_option("--palettes", config.palettes, "Palette file the coloring must respect");
    common(validate);

    auto* analyze = app.add_subcommand("analyze", "Line-graph degrees and triangle statistics");
    analyze->add_option("--input", config.input, "Hypergraph file")->required();
    common(analyze);

    auto* color = app.add_subcommand("color", "Run the coloring pipeline");
    color->add_option("--input", config.input, "Hypergraph file")->required();
    color->add_option("--palettes", config.palettes, "Palette file (default: uniform {0..Q-1})");
    common(color);
    pipeline_options(color, handles.emplace_back());
    seed_option(color);

    auto* oracle = app.add_subcommand("oracle", "Exact chromatic and list chromatic index of small instances");
    oracle->add_option("--input", config.input, "Hypergraph file")->required();
    oracle->add_option("--cap-edges", config.cap_edges, "Edge cap of the chromatic-index oracle");
    oracle->add_option("--list-cap-edges", config.list_cap_edges, "Edge cap of the list oracle");
    oracle->add_option("--list-budget", config.list_budget, "Palette assignments the list oracle may try");
    common(oracle);

    auto* generate = app.add_subcommand("generate", "Write a projective plane or a random linear hypergraph");
    generate->add_option("--kind", config.kind, "plane or random")->check(CLI::IsMember({"plane", "random"}));
    generate->add_option("--q", config.q, "Plane order (prime)");
    generate->add_option("--n", config.n, "Vertices (random)");
    generate->add_option("--rank-min", config.rank_min, "Smallest edge rank (random)");
    generate->add_option("--rank-max", config.rank_max, "Largest edge rank (random)");
    generate->add_option("--budget", config.failure_budget, "Consecutive rejections before stopping");
    common(generate);
    seed_option(generate);
    Handles& generate_handles = handles.emplace_back();
    generate_handles.target_edges = generate->add_option("--edges", target_edges, "Stop after this many edges");
    generate_handles.pad_to = generate->add_option("--pad-to", pad_to, "Pad the plane with isolated vertices");

    auto* lowerbound = app.add_subcommand("lowerbound", "Padded projective plane beating x n");
    lowerbound->add_option("--x", config.x, "Target fraction of n")->required();
    lowerbound->add_option("--delta", config.delta, "Rank window slack");
    lowerbound->add_option("--n", config.n, "Vertices")->required();
    common(lowerbound);

    auto* bench = app.add_subcommand("bench", "Pipeline sweep over random instances, CSV out");
    bench->add_option("--n", sizes, "Instance sizes");
    bench->add_option("--rank-min", config.rank_min, "Smallest edge rank");
    bench->add_option("--rank-max", config.rank_max, "Largest edge rank");
    bench->add_option("--budget", config.failure_budget, "Consecutive rejections before stopping");
    bench->add_option("--seeds", config.seed_count, "Seeds per size");
    bench->add_option("--jobs", config.jobs, "Worker threads");
    bench->add_flag("!--no-timing", config.timing, "Write runtime_ms as 0");
    common(bench);
    pipeline_options(bench, handles.emplace_back());
    seed_option(bench);
    Handles& bench_handles = handles.back();
    bench_handles.target_edges = bench->add_option("--edges", target_edges, "Stop each instance after this many edges");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kSuccess : kInvalidInput;
    }

    for (CLI::App* sub : app.get_subcommands()) {
        config.command = sub->get_name();
    }
    config.format = format == "json" ? ReportFormat::Json : ReportFormat::Text;
    config.pipeline.greedy.order = *parse_order_policy(order);
    config.pipeline.greedy.seed = config.pipeline.seed;
    for (const Handles& h : handles) {
        if (h.palette_size && h.palette_size->count() > 0) {
            config.pipeline.palette_size = palette_size;
        }
        if (h.subclass_threshold && h.subclass_threshold->count() > 0) {
            config.pipeline.subclass_threshold = subclass_threshold;
        }
        if (h.target_edges && h.target_edges->count() > 0) {
            config.target_edges = target_edges;
        }
        if (h.pad_to && h.pad_to->count() > 0) {
            config.pad_to = pad_to;
        }
    }
    if (!sizes.empty()) {
        config.bench_sizes = sizes;
    }

    try {
        return dispatch(config, out, err);
    } catch (const InfeasibleSpec& e) {
        err << "infeasible: " << e.what() << '\n';
        return kInfeasibleSpec;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const EmptyHypergraphError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const OracleRefused& e) {
        err << "refused: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInvalidInput;
    }
}

} // namespace hyperchroma::cli
