#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "radseg/config.hpp"
#include "radseg/contour.hpp"
#include "radseg/raster.hpp"

namespace radseg {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    bool operator==(const Rgb&) const = default;
};

inline constexpr Rgb kWhite{255, 255, 255};

// One placed object. mask_geometry, when set, is the annotation-side copy
// of the contour (perturbed); the image is always rendered from `contour`.
struct Instance {
    RadialContour contour;
    std::optional<RadialContour> mask_geometry;
    int x = 0, y = 0;            // contour center, pixels
    std::uint32_t category_id = 0;
    int depth = 0;               // 1-based, back to front
    Rgb color = kWhite;

    const RadialContour& annotation() const { return mask_geometry ? *mask_geometry : contour; }
};

// W*H category labels in {0..C}; 0 is background.
struct LabelMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint16_t> labels;

    std::uint16_t at(int x, int y) const { return labels[static_cast<std::size_t>(y) * width + x]; }
};

// W*H RGB triples; background black, grayscale stored as equal channels.
struct ImageCanvas {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb;  // 3 bytes per pixel

    Rgb at(int x, int y) const {
        const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
        return {rgb[i], rgb[i + 1], rgb[i + 2]};
    }
};

// Everything needed to regenerate one instance exactly.
struct InstanceRecord {
    std::uint32_t category_id = 0;
    int depth = 0;
    int x = 0, y = 0;
    int polygons = 0;       // K
    double resize = 1.0;
    Rgb color = kWhite;
    std::uint64_t seed = 0;

    bool operator==(const InstanceRecord&) const = default;
};

struct SceneRecord {
    std::uint64_t image_seed = 0;
    std::vector<InstanceRecord> instances;
};

struct SceneBuild {
    ImageCanvas image;
    LabelMask mask;
    SceneRecord record;
};

// M centers drawn independently and uniformly from the integer pixels of
// the side-r square centered on the canvas, clipped to the canvas. The
// sequence order is the depth order (first = backmost).
std::vector<std::pair<int, int>> sample_placements(int count, int occlusion_radius,
                                                   CanvasSize canvas, Rng& rng);

// gray: all white. random_rgb: channels drawn uniformly from {0..255},
// R then G then B per instance.
std::vector<Rgb> assign_colors(int count, ColorMode mode, Rng& rng);

// Front-most-wins composition: each mask pixel takes the category of the
// highest-depth instance whose annotation support covers it (0 if none);
// the image gets the same composition of skeleton strokes in the instance
// colors, regardless of mask_type.
void compose_scene(std::span<const Instance> instances, MaskType mask_type,
                   int line_width, CanvasSize canvas, ImageCanvas& image, LabelMask& mask);

// Derives the image seed from (master_seed, image_index), draws all
// per-scene randomness, composes, and reports the draws. Pure in
// (config, table, image_index).
SceneBuild build_scene(const GenerationConfig& config, const CategoryTable& table,
                       std::uint64_t image_index);

// Rebuilds one instance's annotation-side geometry (perturbation included)
// from its manifest record.
RadialContour regenerate_annotation(const GenerationConfig& config, const CategoryTable& table,
                                    const InstanceRecord& record);

}  // namespace radseg
