#include "radseg/config.hpp"

#include <string>

#include "radseg/errors.hpp"

namespace radseg {

void validate_config(const GenerationConfig& c) {
    if (c.num_images < 1) throw ConfigError("num_images must be >= 1");
    if (c.instances_per_image < 1) throw ConfigError("instances_per_image must be >= 1");
    if (c.polygons_min < 1 || c.polygons_min > c.polygons_max || c.polygons_max > 50) {
        throw ConfigError("polygon range must satisfy 1 <= min <= max <= 50, got [" +
                          std::to_string(c.polygons_min) + ", " + std::to_string(c.polygons_max) +
                          "]");
    }
    if (c.line_width < 1 || c.line_width > 3) {
        throw ConfigError("line_width must be in {1, 2, 3}, got " + std::to_string(c.line_width));
    }
    if (c.num_categories == 0 || c.num_categories > kMaxCategories) {
        throw ConfigError("num_categories must be in [1, 65535], got " +
                          std::to_string(c.num_categories));
    }
    if (c.occlusion_radius < 1) throw ConfigError("occlusion_radius must be >= 1 px");
    if (c.canvas_width < 1 || c.canvas_height < 1) {
        throw ConfigError("canvas must be at least 1x1, got " + std::to_string(c.canvas_width) +
                          "x" + std::to_string(c.canvas_height));
    }
    if (c.perturb.magnitude < 0) throw ConfigError("perturbation magnitude must be >= 0");
    if (c.perturb.mode == PerturbMode::none && c.perturb.magnitude != 0) {
        throw ConfigError("perturbation magnitude given without a mode");
    }
}

GenerationConfig baseline_preset() {
    GenerationConfig c;
    c.num_images = 20000;
    c.instances_per_image = 1;
    c.mask_type = MaskType::skeleton;
    c.color_mode = ColorMode::gray;
    c.occlusion_radius = 512;
    c.polygons_min = 1;
    c.polygons_max = 50;
    c.line_width = 1;
    c.num_categories = 255;
    c.canvas_width = 512;
    c.canvas_height = 512;
    return c;
}

GenerationConfig best_preset() {
    GenerationConfig c = baseline_preset();
    c.num_images = 118000;
    c.instances_per_image = 32;
    c.polygons_max = 25;
    c.occlusion_radius = 400;
    return c;
}

const char* mask_type_name(MaskType type) {
    switch (type) {
        case MaskType::skeleton: return "m1";
        case MaskType::ring: return "m2";
        case MaskType::fill: return "m3";
    }
    return "m1";
}

const char* color_mode_name(ColorMode mode) {
    return mode == ColorMode::gray ? "gray" : "random-rgb";
}

const char* perturb_mode_name(PerturbMode mode) {
    switch (mode) {
        case PerturbMode::none: return "none";
        case PerturbMode::shift: return "shift";
        case PerturbMode::inflation: return "inflation";
    }
    return "none";
}

namespace {

MaskType mask_type_from_name(const std::string& name) {
    if (name == "m1") return MaskType::skeleton;
    if (name == "m2") return MaskType::ring;
    if (name == "m3") return MaskType::fill;
    throw ConfigError("unknown mask type: " + name);
}

ColorMode color_mode_from_name(const std::string& name) {
    if (name == "gray") return ColorMode::gray;
    if (name == "random-rgb") return ColorMode::random_rgb;
    throw ConfigError("unknown color mode: " + name);
}

PerturbMode perturb_mode_from_name(const std::string& name) {
    if (name == "none") return PerturbMode::none;
    if (name == "shift") return PerturbMode::shift;
    if (name == "inflation") return PerturbMode::inflation;
    throw ConfigError("unknown perturbation mode: " + name);
}

}  // namespace

nlohmann::ordered_json config_to_json(const GenerationConfig& c, const CategoryTable& taxonomy) {
    nlohmann::ordered_json j;
    j["num_images"] = c.num_images;
    j["instances_per_image"] = c.instances_per_image;
    j["mask_type"] = mask_type_name(c.mask_type);
    j["color_mode"] = color_mode_name(c.color_mode);
    j["occlusion_radius"] = c.occlusion_radius;
    j["polygons_min"] = c.polygons_min;
    j["polygons_max"] = c.polygons_max;
    j["line_width"] = c.line_width;
    j["num_categories"] = c.num_categories;
    j["canvas_width"] = c.canvas_width;
    j["canvas_height"] = c.canvas_height;
    j["master_seed"] = c.master_seed;
    j["taxonomy_seed"] = c.taxonomy_seed;
    j["perturb"] = {{"mode", perturb_mode_name(c.perturb.mode)},
                    {"magnitude", c.perturb.magnitude}};
    j["taxonomy"] = taxonomy.to_text();
    return j;
}

GenerationConfig config_from_json(const nlohmann::json& j) {
    GenerationConfig c;
    try {
        c.num_images = j.at("num_images").get<std::uint64_t>();
        c.instances_per_image = j.at("instances_per_image").get<int>();
        c.mask_type = mask_type_from_name(j.at("mask_type").get<std::string>());
        c.color_mode = color_mode_from_name(j.at("color_mode").get<std::string>());
        c.occlusion_radius = j.at("occlusion_radius").get<int>();
        c.polygons_min = j.at("polygons_min").get<int>();
        c.polygons_max = j.at("polygons_max").get<int>();
        c.line_width = j.at("line_width").get<int>();
        c.num_categories = j.at("num_categories").get<std::uint32_t>();
        c.canvas_width = j.at("canvas_width").get<int>();
        c.canvas_height = j.at("canvas_height").get<int>();
        c.master_seed = j.at("master_seed").get<std::uint64_t>();
        c.taxonomy_seed = j.at("taxonomy_seed").get<std::uint64_t>();
        c.perturb.mode = perturb_mode_from_name(j.at("perturb").at("mode").get<std::string>());
        c.perturb.magnitude = j.at("perturb").at("magnitude").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("malformed config: ") + e.what());
    }
    validate_config(c);
    return c;
}

}  // namespace radseg
