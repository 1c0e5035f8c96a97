#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperchroma/coloring/coloring.hpp"

namespace hyperchroma {

/// How split_palette_random assigns colors to classes.
///
/// Uniform: every color independently lands in one of `classes` classes
/// uniformly. TwoClass: a color lands in class 0 ("class I") with probability
/// `p`, else class 1 ("class II").
///
/// `thresholds[c]` is the minimum number of class-c colors every palette must
/// keep for the split to be accepted; a single value applies to all classes.
struct SplitParams {
    enum class Mode { Uniform, TwoClass };

    Mode mode = Mode::Uniform;
    std::size_t classes = 1;
    double p = 0.5;
    std::vector<double> thresholds;
    std::size_t retries = 100;
    std::uint64_t seed = 0;

    static SplitParams uniform(std::size_t classes, double threshold, std::uint64_t seed, std::size_t retries = 100);
    static SplitParams two_class(double p, double threshold_one, double threshold_two, std::uint64_t seed,
                                 std::size_t retries = 100);

    std::size_t class_count() const { return mode == Mode::TwoClass ? 2 : classes; }
    double threshold(std::size_t cls) const;

    /// Throws std::invalid_argument on p outside (0,1), zero classes,
    /// non-positive thresholds, a threshold list of the wrong length, or
    /// retries == 0.
    void validate() const;
};

struct SplitFailure {
    std::size_t attempts = 0;
    EdgeId edge = 0;           // worst edge of the last attempt
    std::size_t class_index = 0;
    std::size_t count = 0;     // its class-c sub-palette size
    double threshold = 0;
    bool infeasible = false;   // thresholds exceed the palette, no draw can succeed
    std::string message;
};

struct SplitResult {
    /// One assignment per class; class c holds palette(e) restricted to class-c colors.
    std::vector<PaletteAssignment> classes;
    std::map<Color, std::size_t> color_class;
    std::size_t attempts = 0;
    std::vector<std::size_t> min_sizes; // per class, over all edges with a palette
    std::optional<SplitFailure> failure;

    bool ok() const { return !failure.has_value(); }
};

/// Randomly partitions the color universe (one class per color, shared by all
/// palettes) and accepts the first draw where every edge meets every class
/// threshold, resampling up to `retries` times. Deterministic in the seed.
SplitResult split_palette_random(const PaletteAssignment& palettes, const SplitParams& params);

} // namespace hyperchroma
