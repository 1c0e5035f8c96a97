#include "hyperchroma/coloring/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hyperchroma/coloring/greedy.hpp"
#include "hyperchroma/coloring/split.hpp"
#include "hyperchroma/util/rng.hpp"

namespace hyperchroma {

void PipelineParams::validate() const
{
    if (i < 2) {
        throw std::invalid_argument("pipeline needs i >= 2");
    }
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        throw std::invalid_argument("pipeline needs eps > 0");
    }
    if (k < 1) {
        throw std::invalid_argument("pipeline needs k >= 1");
    }
    if (retries == 0) {
        throw std::invalid_argument("retry budget must be at least 1");
    }
    if (subclass_threshold && !(*subclass_threshold > 0.0)) {
        throw std::invalid_argument("subclass threshold must be positive");
    }
}

std::size_t default_palette_size(std::size_t n, int i, double eps)
{
    return static_cast<std::size_t>(std::ceil((1.0 + 3.0 * eps) * static_cast<double>(n) / (i - 1)));
}

TwoClassPlan two_class_plan(std::size_t n, int i, double eps, std::size_t palette_size)
{
    const double nn = static_cast<double>(n);
    TwoClassPlan plan;
    plan.p = 1.5 * nn * eps / ((i - 1) * static_cast<double>(palette_size));
    plan.class_one_threshold = nn * eps / (i - 1);
    plan.class_two_threshold = nn * (1.0 + eps) / (i - 1);
    return plan;
}

int subclass_count(int k)
{
    return k <= 2 ? 1 : static_cast<int>(std::bit_width(static_cast<unsigned>(k - 1)));
}

namespace {

PipelineResult fail(PipelineResult result, ColoringFailure failure)
{
    result.outcome.failure = std::move(failure);
    return result;
}

} // namespace

PipelineResult full_pipeline(const Hypergraph& h, const PaletteAssignment& palettes, const PipelineParams& params)
{
    params.validate();
    if (h.edges.empty()) {
        throw EmptyHypergraphError();
    }
    if (const auto check = validate_linear(h); !check.ok()) {
        throw std::invalid_argument(std::string("pipeline input is not a valid linear hypergraph: ") +
                                    to_string(check.violations.front().kind) + " at edge " +
                                    std::to_string(check.violations.front().edge));
    }

    const std::size_t m = h.edge_count();
    PipelineResult result;
    result.outcome.coloring = EdgeColoring(m);
    auto& report = result.report;
    report.n = h.n;
    report.edges = m;
    report.min_rank = min_rank(h);
    report.max_rank = max_rank(h);
    report.i = params.i;
    report.eps = params.eps;
    report.k = params.k;
    report.palette_size = params.palette_size.value_or(default_palette_size(h.n, params.i, params.eps));
    report.seed = params.seed;
    report.retries = params.retries;
    report.order = to_string(params.greedy.order);
    report.target = (1.0 + params.eps) * static_cast<double>(h.n) / (params.i - 1);

    report.min_rank_holds = report.min_rank >= static_cast<std::size_t>(params.i);
    if (!report.min_rank_holds) {
        report.warnings.push_back("minimum rank " + std::to_string(report.min_rank) + " is below i = " +
                                  std::to_string(params.i));
    }
    report.palettes_hold = true;
    for (EdgeId e = 0; e < m; ++e) {
        if (!palettes.has(e) || palettes.at(e).size() < report.palette_size) {
            report.palettes_hold = false;
            report.warnings.push_back("edge " + std::to_string(e) + " has fewer than Q = " +
                                      std::to_string(report.palette_size) + " colors");
            break;
        }
    }
    report.rank_ceiling = std::sqrt(static_cast<double>(h.n) * std::exp(-static_cast<double>(params.k)));
    report.rank_ceiling_holds = static_cast<double>(report.max_rank) <= report.rank_ceiling;
    if (!report.rank_ceiling_holds) {
        report.warnings.push_back("max rank " + std::to_string(report.max_rank) + " exceeds sqrt(n e^-k) = " +
                                  std::to_string(report.rank_ceiling));
    }

    // Phase 1: class I / class II.
    report.plan = two_class_plan(h.n, params.i, params.eps, report.palette_size);
    if (!(report.plan.p > 0.0 && report.plan.p < 1.0)) {
        return fail(std::move(result), ColoringFailure{"split", {}, 0, {}, {},
                                                       "class-I probability " + std::to_string(report.plan.p) +
                                                           " is outside (0, 1); palette size too small"});
    }
    const SplitResult split = split_palette_random(
        palettes, SplitParams::two_class(report.plan.p, report.plan.class_one_threshold,
                                         report.plan.class_two_threshold, params.seed, params.retries));
    report.split_attempts = split.attempts;
    if (!split.ok()) {
        const auto& f = *split.failure;
        return fail(std::move(result), ColoringFailure{"split", {}, f.edge, {}, {}, f.message});
    }
    report.min_class_one = split.min_sizes[0];
    report.min_class_two = split.min_sizes[1];

    const DyadicPartition partition = partition_dyadic(h);
    std::vector<EdgeId> small;
    std::vector<EdgeId> big;
    for (const auto& [index, ids] : partition.classes) {
        auto& into = index < params.k ? small : big;
        into.insert(into.end(), ids.begin(), ids.end());
    }
    std::sort(small.begin(), small.end());
    std::sort(big.begin(), big.end());
    report.small_edges = small.size();
    report.big_edges = big.size();

    // Phase 2: small classes from class II.
    ColoringOutcome small_run = greedy_list_color(h, small, split.classes[1], params.greedy);
    result.outcome.coloring.merge(small_run.coloring);
    if (small_run.failure) {
        small_run.failure->phase = "small_classes";
        return fail(std::move(result), std::move(*small_run.failure));
    }

    // Phase 3: big classes from class-I subclasses, one residue family each.
    const int x = subclass_count(params.k);
    report.subclasses = x;
    if (!big.empty()) {
        PaletteAssignment class_one(m);
        std::size_t smallest = std::numeric_limits<std::size_t>::max();
        for (EdgeId e : big) {
            class_one.set(e, split.classes[0].at(e));
            smallest = std::min(smallest, class_one.at(e).size());
        }
        report.subclass_threshold =
            params.subclass_threshold.value_or(std::max(1.0, std::floor(static_cast<double>(smallest) / (2.0 * x))));
        const SplitResult sub = split_palette_random(
            class_one, SplitParams::uniform(static_cast<std::size_t>(x), report.subclass_threshold,
                                            derive_seed(params.seed, 1), params.retries));
        report.subsplit_attempts = sub.attempts;
        if (!sub.ok()) {
            const auto& f = *sub.failure;
            return fail(std::move(result), ColoringFailure{"subsplit", {}, f.edge, {}, {}, f.message});
        }
        report.min_subclass_sizes = sub.min_sizes;

        for (int base = params.k; base < params.k + x; ++base) {
            const auto cls = static_cast<std::size_t>(base - params.k);
            const LayerSchedule schedule = make_layer_schedule(base, x, h.n, partition);
            LayeredRun layered = layered_color(h, partition, schedule, sub.classes[cls], params.greedy);

            FamilyReport family;
            family.base = base;
            family.subclass = cls;
            family.layers = layered.layers;
            for (const auto& layer : layered.layers) {
                family.edges += layer.edges;
            }
            report.families.push_back(std::move(family));
            result.outcome.coloring.merge(layered.outcome.coloring);
            if (layered.outcome.failure) {
                return fail(std::move(result), std::move(*layered.outcome.failure));
            }
        }
    }

    std::vector<EdgeId> all(m);
    for (EdgeId e = 0; e < m; ++e) {
        all[e] = e;
    }
    result.outcome.coloring.set_scope(std::move(all));
    const auto check = verify_coloring(h, result.outcome.coloring, palettes);
    if (!check.ok()) {
        throw std::logic_error(std::string("full_pipeline produced an invalid coloring (") +
                               to_string(check.violations.front().kind) + ")");
    }
    report.verified = true;
    report.colors_used = result.outcome.coloring.colors_used();
    return result;
}

PipelineResult full_pipeline(const Hypergraph& h, const PipelineParams& params)
{
    const std::size_t q = params.palette_size.value_or(default_palette_size(h.n, params.i, params.eps));
    return full_pipeline(h, PaletteAssignment::uniform(h.edge_count(), q), params);
}

} // namespace hyperchroma
