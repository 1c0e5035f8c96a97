#include "hyperchroma/coloring/split.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hyperchroma/util/rng.hpp"

namespace hyperchroma {

SplitParams SplitParams::uniform(std::size_t classes, double threshold, std::uint64_t seed, std::size_t retries)
{
    SplitParams params;
    params.mode = Mode::Uniform;
    params.classes = classes;
    params.thresholds = {threshold};
    params.seed = seed;
    params.retries = retries;
    return params;
}

SplitParams SplitParams::two_class(double p, double threshold_one, double threshold_two, std::uint64_t seed,
                                   std::size_t retries)
{
    SplitParams params;
    params.mode = Mode::TwoClass;
    params.p = p;
    params.thresholds = {threshold_one, threshold_two};
    params.seed = seed;
    params.retries = retries;
    return params;
}

double SplitParams::threshold(std::size_t cls) const
{
    return thresholds.size() == 1 ? thresholds.front() : thresholds.at(cls);
}

void SplitParams::validate() const
{
    if (mode == Mode::TwoClass && !(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("two-class split needs p in (0, 1)");
    }
    if (mode == Mode::Uniform && classes == 0) {
        throw std::invalid_argument("split needs at least one class");
    }
    if (thresholds.size() != 1 && thresholds.size() != class_count()) {
        throw std::invalid_argument("expected 1 or " + std::to_string(class_count()) + " thresholds");
    }
    for (double t : thresholds) {
        if (!(t > 0.0) || !std::isfinite(t)) {
            throw std::invalid_argument("split thresholds must be positive");
        }
    }
    if (retries == 0) {
        throw std::invalid_argument("retry budget must be at least 1");
    }
}

SplitResult split_palette_random(const PaletteAssignment& palettes, const SplitParams& params)
{
    params.validate();
    const std::size_t k = params.class_count();
    const std::vector<EdgeId> edges = palettes.edges();
    const std::vector<Color> universe = palettes.universe();

    SplitResult result;
    result.min_sizes.assign(k, 0);

    // Pigeonhole: the sub-palettes of one edge sum to its size.
    double needed = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
        needed += std::ceil(params.threshold(c));
    }
    for (EdgeId e : edges) {
        if (static_cast<double>(palettes.at(e).size()) < needed) {
            result.failure = SplitFailure{0, e, 0, palettes.at(e).size(), needed, true,
                                          "thresholds sum to " + std::to_string(static_cast<long long>(needed)) +
                                              " but edge " + std::to_string(e) + " has only " +
                                              std::to_string(palettes.at(e).size()) + " colors"};
            return result;
        }
    }

    Rng rng(params.seed);
    std::vector<std::size_t> assignment(universe.size());
    std::vector<std::size_t> count(k);
    for (std::size_t attempt = 1; attempt <= params.retries; ++attempt) {
        for (std::size_t j = 0; j < universe.size(); ++j) {
            if (params.mode == SplitParams::Mode::TwoClass) {
                assignment[j] = bernoulli(rng, params.p) ? 0 : 1;
            } else {
                assignment[j] = static_cast<std::size_t>(uniform_below(rng, k));
            }
        }
        auto class_of = [&](Color c) {
            return assignment[static_cast<std::size_t>(std::lower_bound(universe.begin(), universe.end(), c) -
                                                       universe.begin())];
        };

        // Worst deficit threshold - count over all (edge, class) pairs.
        double worst = -std::numeric_limits<double>::infinity();
        SplitFailure candidate;
        std::vector<std::size_t> min_sizes(k, std::numeric_limits<std::size_t>::max());
        for (EdgeId e : edges) {
            std::fill(count.begin(), count.end(), 0);
            for (Color c : palettes.at(e)) {
                ++count[class_of(c)];
            }
            for (std::size_t c = 0; c < k; ++c) {
                min_sizes[c] = std::min(min_sizes[c], count[c]);
                const double deficit = params.threshold(c) - static_cast<double>(count[c]);
                if (deficit > worst) {
                    worst = deficit;
                    candidate = SplitFailure{attempt, e, c, count[c], params.threshold(c), false, {}};
                }
            }
        }
        result.attempts = attempt;
        if (edges.empty()) {
            std::fill(min_sizes.begin(), min_sizes.end(), 0);
        }
        result.min_sizes = min_sizes;
        if (worst <= 0.0) {
            break;
        }
        if (attempt == params.retries) {
            candidate.message = "class " + std::to_string(candidate.class_index) + " of edge " +
                                std::to_string(candidate.edge) + " kept " + std::to_string(candidate.count) +
                                " colors, below threshold after " + std::to_string(attempt) + " attempts";
            result.failure = candidate;
            return result;
        }
    }

    result.classes.assign(k, PaletteAssignment(palettes.edge_count()));
    for (std::size_t j = 0; j < universe.size(); ++j) {
        result.color_class[universe[j]] = assignment[j];
    }
    std::vector<std::vector<Color>> parts(k);
    for (EdgeId e : edges) {
        for (auto& part : parts) {
            part.clear();
        }
        for (Color c : palettes.at(e)) {
            parts[result.color_class[c]].push_back(c);
        }
        for (std::size_t c = 0; c < k; ++c) {
            result.classes[c].set(e, parts[c]);
        }
    }
    return result;
}

} // namespace hyperchroma
