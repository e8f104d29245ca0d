#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace radseg {

// Shape parameters that define one semantic category.
struct CategorySpec {
    std::uint32_t category_id = 0;  // 1-based label
    int vertex_count = 3;
    double base_radius = 0.0;       // px, already scaled to the target canvas
    double resize_lo = 1.0;
    double resize_hi = 1.0;
    double noise_amplitude = 0.0;   // fraction of the radius
    int noise_frequency = 1;        // gradient-noise cycles per revolution
};

// Parameter grids the category draws come from. Draws are quantized so
// pairwise distinctness is checkable; a grid collision with an earlier
// category triggers a re-draw under an incremented sub-counter.
struct TaxonomyRanges {
    int vertex_min = 3;
    int vertex_max = 32;
    double radius_min = 16.0;       // px on a 512-px canvas
    double radius_step = 0.5;
    int radius_steps = 161;         // [16, 96]
    double resize_lo = 0.75;
    double resize_hi = 1.5;
    double amplitude_step = 0.01;
    int amplitude_steps = 41;       // [0, 0.4]
    int frequency_min = 1;
    int frequency_max = 8;
};

inline constexpr std::uint32_t kMaxCategories = 65535;  // 16-bit mask encoding limit

// Deterministic map from category labels {1..C} to shape parameters.
// The spec for category c depends only on (taxonomy_seed, categories < c),
// so the table for a smaller C is a prefix of the table for a larger C.
class CategoryTable {
public:
    std::uint32_t num_categories() const { return static_cast<std::uint32_t>(specs_.size()); }
    std::uint64_t taxonomy_seed() const { return taxonomy_seed_; }

    // Total for c in {1..C}; throws std::out_of_range otherwise (including
    // c == 0: the background has no spec).
    const CategorySpec& lookup(std::uint32_t category_id) const;

    // One spec per line, fixed field order; embedded in the dataset config
    // record for provenance.
    std::vector<std::string> to_text() const;

    friend CategoryTable build_taxonomy(std::uint32_t num_categories, std::uint64_t taxonomy_seed,
                                        double radius_scale, const TaxonomyRanges& ranges);

private:
    std::uint64_t taxonomy_seed_ = 0;
    std::vector<CategorySpec> specs_;
};

// radius_scale rescales the canonical 512-px-canvas radius grid
// (pass min(W, H) / 512 for other canvases). Throws ConfigError for
// C == 0 or C > 65535.
CategoryTable build_taxonomy(std::uint32_t num_categories, std::uint64_t taxonomy_seed,
                             double radius_scale = 1.0,
                             const TaxonomyRanges& ranges = TaxonomyRanges{});

}  // namespace radseg
