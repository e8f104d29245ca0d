#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "radseg/perturb.hpp"
#include "radseg/raster.hpp"
#include "radseg/taxonomy.hpp"

namespace radseg {

enum class ColorMode { gray, random_rgb };

// Full parameter set of one dataset. Every output byte is a pure function
// of these fields; output_dir only says where the bytes go.
struct GenerationConfig {
    std::uint64_t num_images = 20000;    // N
    int instances_per_image = 1;         // M
    MaskType mask_type = MaskType::skeleton;
    ColorMode color_mode = ColorMode::gray;
    int occlusion_radius = 512;          // r: side of the central placement square, px
    int polygons_min = 1;                // K range, inclusive
    int polygons_max = 50;
    int line_width = 1;                  // d
    std::uint32_t num_categories = 255;  // C
    int canvas_width = 512;
    int canvas_height = 512;
    std::uint64_t master_seed = 1;
    std::uint64_t taxonomy_seed = 1;
    PerturbSpec perturb;
    std::string output_dir = "dataset";

    double taxonomy_radius_scale() const {
        return static_cast<double>(std::min(canvas_width, canvas_height)) / 512.0;
    }
};

// Throws ConfigError on the first violated bound.
void validate_config(const GenerationConfig& config);

GenerationConfig baseline_preset();
GenerationConfig best_preset();

const char* mask_type_name(MaskType type);       // "m1" / "m2" / "m3"
const char* color_mode_name(ColorMode mode);     // "gray" / "random-rgb"
const char* perturb_mode_name(PerturbMode mode); // "none" / "shift" / "inflation"

// Machine-readable echo of the resolved configuration, taxonomy included.
// Field order is fixed; runtime knobs (output dir, workers, resume) are
// not content and are not echoed.
nlohmann::ordered_json config_to_json(const GenerationConfig& config,
                                      const CategoryTable& taxonomy);

// Parses a config.json back. output_dir is left at its default; callers
// set it to wherever the file came from.
GenerationConfig config_from_json(const nlohmann::json& j);

}  // namespace radseg
