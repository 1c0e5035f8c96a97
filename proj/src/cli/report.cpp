#include "hyperchroma/cli/report.hpp"

#include <sstream>

namespace hyperchroma {

using nlohmann::ordered_json;

ordered_json to_json(const ValidationReport& report)
{
    ordered_json out;
    out["ok"] = report.ok();
    out["violations"] = ordered_json::array();
    for (const auto& v : report.violations) {
        ordered_json item;
        item["kind"] = to_string(v.kind);
        item["edge"] = v.edge;
        if (v.other) {
            item["other"] = *v.other;
        }
        if (v.vertex) {
            item["vertex"] = *v.vertex;
        }
        if (v.kind == ViolationKind::SharedPair || v.kind == ViolationKind::DuplicateEdge) {
            item["shared"] = v.shared;
        }
        out["violations"].push_back(std::move(item));
    }
    return out;
}

ordered_json to_json(const VerificationReport& report)
{
    ordered_json out;
    out["ok"] = report.ok();
    out["violations"] = ordered_json::array();
    for (const auto& v : report.violations) {
        ordered_json item;
        item["kind"] = to_string(v.kind);
        item["edge"] = v.edge;
        if (v.other) {
            item["other"] = *v.other;
        }
        if (v.vertex) {
            item["vertex"] = *v.vertex;
        }
        if (v.color) {
            item["color"] = *v.color;
        }
        out["violations"].push_back(std::move(item));
    }
    return out;
}

ordered_json to_json(const ColoringFailure& failure)
{
    ordered_json out;
    out["phase"] = failure.phase;
    out["class_index"] = failure.class_index ? ordered_json(*failure.class_index) : ordered_json(nullptr);
    out["edge"] = failure.edge;
    out["palette_size"] = failure.palette.size();
    out["blocked"] = failure.blocked.size();
    out["message"] = failure.message;
    return out;
}

namespace {

ordered_json optional_number(const std::optional<double>& value)
{
    return value ? ordered_json(*value) : ordered_json(nullptr);
}

ordered_json optional_number(const std::optional<std::size_t>& value)
{
    return value ? ordered_json(*value) : ordered_json(nullptr);
}

} // namespace

ordered_json to_json(const PipelineReport& report)
{
    ordered_json out;
    out["instance"] = {{"n", report.n}, {"edges", report.edges}, {"min_rank", report.min_rank},
                       {"max_rank", report.max_rank}};
    out["params"] = {{"i", report.i},
                     {"eps", report.eps},
                     {"k", report.k},
                     {"palette_size", report.palette_size},
                     {"seed", report.seed},
                     {"retries", report.retries},
                     {"order", report.order}};
    out["split"] = {{"p", report.plan.p},
                    {"class_one_threshold", report.plan.class_one_threshold},
                    {"class_two_threshold", report.plan.class_two_threshold},
                    {"attempts", report.split_attempts},
                    {"min_class_one", report.min_class_one},
                    {"min_class_two", report.min_class_two}};
    out["subsplit"] = {{"classes", report.subclasses},
                       {"threshold", report.subclass_threshold},
                       {"attempts", report.subsplit_attempts},
                       {"min_sizes", report.min_subclass_sizes}};
    ordered_json families = ordered_json::array();
    for (const auto& family : report.families) {
        ordered_json layers = ordered_json::array();
        for (const auto& layer : family.layers) {
            layers.push_back({{"class", layer.class_index},
                              {"edges", layer.edges},
                              {"colored_above", layer.colored_above},
                              {"contact_bound", optional_number(layer.contact_bound)},
                              {"max_contacts", layer.max_contacts},
                              {"min_residual", optional_number(layer.min_residual)}});
        }
        families.push_back(
            {{"base", family.base}, {"subclass", family.subclass}, {"edges", family.edges}, {"layers", layers}});
    }
    out["phases"] = {{"small_edges", report.small_edges}, {"big_edges", report.big_edges}, {"families", families}};
    out["preconditions"] = {{"min_rank_at_least_i", report.min_rank_holds},
                            {"palettes_at_least_q", report.palettes_hold},
                            {"rank_ceiling", report.rank_ceiling},
                            {"max_rank_within_ceiling", report.rank_ceiling_holds}};
    out["result"] = {{"colors_used", report.colors_used}, {"target", report.target}, {"verified", report.verified}};
    out["warnings"] = report.warnings;
    return out;
}

ordered_json to_json(const LowerBoundCertificate& c)
{
    ordered_json out;
    out["x"] = c.x;
    out["delta"] = c.delta;
    out["n"] = c.n;
    out["u"] = c.u;
    out["q"] = c.q;
    out["r"] = c.r;
    out["plane_size"] = c.plane_size;
    out["xn"] = c.xn;
    out["plane_size_exceeds_xn"] = c.exceeds_xn;
    out["r_at_least_sqrt_xn"] = c.rank_at_least_sqrt;
    out["r_within_delta_window"] = c.rank_within_window;
    out["min_rank"] = c.min_rank;
    out["max_rank"] = c.max_rank;
    out["chromatic_index_lower_bound"] = c.plane_size;
    return out;
}

namespace {

void flatten(const ordered_json& node, const std::string& prefix, std::ostringstream& out)
{
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            flatten(value, prefix.empty() ? key : prefix + "." + key, out);
        }
    } else if (node.is_array() && !node.empty() && (node.front().is_object() || node.front().is_array())) {
        for (std::size_t j = 0; j < node.size(); ++j) {
            flatten(node[j], prefix + "." + std::to_string(j), out);
        }
    } else if (node.is_string()) {
        out << prefix << '=' << node.get<std::string>() << '\n';
    } else {
        out << prefix << '=' << node.dump() << '\n';
    }
}

} // namespace

std::string to_key_values(const ordered_json& tree)
{
    std::ostringstream out;
    flatten(tree, "", out);
    return out.str();
}

} // namespace hyperchroma
