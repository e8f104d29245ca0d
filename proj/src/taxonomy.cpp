#include "radseg/taxonomy.hpp"

#include <cstdio>
#include <stdexcept>
#include <unordered_set>

#include "radseg/errors.hpp"
#include "radseg/rng.hpp"

namespace radseg {

namespace {

// Quantized draw, packed for collision detection. All fields are grid
// indices, so two categories with different keys differ in at least one
// spec field regardless of the radius scale.
std::uint32_t pack_key(int vertex_count, int radius_idx, int amplitude_idx, int frequency) {
    return (static_cast<std::uint32_t>(vertex_count) << 24) |
           (static_cast<std::uint32_t>(radius_idx) << 16) |
           (static_cast<std::uint32_t>(amplitude_idx) << 8) |
           static_cast<std::uint32_t>(frequency);
}

}  // namespace

CategoryTable build_taxonomy(std::uint32_t num_categories, std::uint64_t taxonomy_seed,
                             double radius_scale, const TaxonomyRanges& ranges) {
    if (num_categories == 0 || num_categories > kMaxCategories) {
        throw ConfigError("num_categories must be in [1, 65535], got " +
                          std::to_string(num_categories));
    }

    CategoryTable table;
    table.taxonomy_seed_ = taxonomy_seed;
    table.specs_.reserve(num_categories);

    std::unordered_set<std::uint32_t> used;
    used.reserve(num_categories * 2);

    for (std::uint32_t c = 1; c <= num_categories; ++c) {
        const std::uint64_t category_seed = derive_seed(taxonomy_seed, c);
        for (std::uint64_t attempt = 0;; ++attempt) {
            Rng rng(derive_seed(category_seed, attempt));
            const int vertex_count = rng.next_int(ranges.vertex_min, ranges.vertex_max);
            const int radius_idx = static_cast<int>(rng.next_below(ranges.radius_steps));
            const int amplitude_idx = static_cast<int>(rng.next_below(ranges.amplitude_steps));
            const int frequency = rng.next_int(ranges.frequency_min, ranges.frequency_max);

            if (!used.insert(pack_key(vertex_count, radius_idx, amplitude_idx, frequency)).second) {
                continue;  // grid collision with an earlier category; re-draw
            }

            CategorySpec spec;
            spec.category_id = c;
            spec.vertex_count = vertex_count;
            spec.base_radius = (ranges.radius_min + ranges.radius_step * radius_idx) * radius_scale;
            spec.resize_lo = ranges.resize_lo;
            spec.resize_hi = ranges.resize_hi;
            spec.noise_amplitude = ranges.amplitude_step * amplitude_idx;
            spec.noise_frequency = frequency;
            table.specs_.push_back(spec);
            break;
        }
    }
    return table;
}

const CategorySpec& CategoryTable::lookup(std::uint32_t category_id) const {
    if (category_id == 0 || category_id > specs_.size()) {
        throw std::out_of_range("category_id " + std::to_string(category_id) +
                                " outside {1.." + std::to_string(specs_.size()) + "}");
    }
    return specs_[category_id - 1];
}

std::vector<std::string> CategoryTable::to_text() const {
    std::vector<std::string> lines;
    lines.reserve(specs_.size());
    char buf[160];
    for (const CategorySpec& s : specs_) {
        std::snprintf(buf, sizeof(buf), "%u %d %.3f %.2f %.2f %.2f %d", s.category_id,
                      s.vertex_count, s.base_radius, s.resize_lo, s.resize_hi,
                      s.noise_amplitude, s.noise_frequency);
        lines.emplace_back(buf);
    }
    return lines;
}

}  // namespace radseg
