#include "radseg/scene.hpp"

#include <algorithm>

#include "radseg/errors.hpp"
#include "radseg/perturb.hpp"

namespace radseg {

namespace {

// Sub-stream tags under an image seed. Stable contract: the manifest's
// recorded seeds only regenerate scenes as long as these do not move.
constexpr std::uint64_t kStreamPlacement = 1;
constexpr std::uint64_t kStreamColor = 2;
constexpr std::uint64_t kStreamCategory = 3;
constexpr std::uint64_t kStreamPolygonCount = 4;
constexpr std::uint64_t kStreamInstanceBase = 16;  // + depth index
constexpr std::uint64_t kStreamPerturb = 1;        // under the instance seed

// Inclusive integer interval of the side-r placement square along one
// axis, clipped to [0, extent).
std::pair<int, int> placement_interval(int extent, int occlusion_radius) {
    const int lo = (extent - occlusion_radius) / 2;
    const int hi = lo + occlusion_radius - 1;
    return {std::max(0, lo), std::min(extent - 1, hi)};
}

void paint(const BinaryMask& support, std::uint32_t label, Rgb color, bool paint_image,
           bool paint_mask, ImageCanvas& image, LabelMask& mask) {
    for (int y = support.bound_y0; y < support.bound_y1; ++y) {
        const std::uint8_t* row = support.bits.data() + static_cast<std::size_t>(y) * support.width;
        for (int x = support.bound_x0; x < support.bound_x1; ++x) {
            if (!row[x]) continue;
            const std::size_t idx = static_cast<std::size_t>(y) * support.width + x;
            if (paint_mask) mask.labels[idx] = static_cast<std::uint16_t>(label);
            if (paint_image) {
                std::uint8_t* px = image.rgb.data() + idx * 3;
                px[0] = color.r;
                px[1] = color.g;
                px[2] = color.b;
            }
        }
    }
}

BinaryMask rasterize(const RadialContour& contour, int x, int y, MaskType type, int line_width,
                     CanvasSize canvas) {
    switch (type) {
        case MaskType::skeleton: return raster_skeleton(contour, x, y, line_width, canvas);
        case MaskType::ring: return raster_ring(contour, x, y, line_width, canvas);
        case MaskType::fill: return raster_fill(contour, x, y, line_width, canvas);
    }
    return raster_skeleton(contour, x, y, line_width, canvas);
}

}  // namespace

std::vector<std::pair<int, int>> sample_placements(int count, int occlusion_radius,
                                                   CanvasSize canvas, Rng& rng) {
    if (count < 1) throw ConfigError("placement count must be >= 1");
    if (occlusion_radius < 1) throw ConfigError("occlusion_radius must be >= 1 px");

    const auto [x_lo, x_hi] = placement_interval(canvas.width, occlusion_radius);
    const auto [y_lo, y_hi] = placement_interval(canvas.height, occlusion_radius);
    if (x_lo > x_hi || y_lo > y_hi) {
        throw ConfigError("placement region is empty on this canvas");
    }

    std::vector<std::pair<int, int>> positions;
    positions.reserve(count);
    for (int i = 0; i < count; ++i) {
        const int x = rng.next_int(x_lo, x_hi);
        const int y = rng.next_int(y_lo, y_hi);
        positions.emplace_back(x, y);
    }
    return positions;
}

std::vector<Rgb> assign_colors(int count, ColorMode mode, Rng& rng) {
    std::vector<Rgb> colors(count, kWhite);
    if (mode == ColorMode::random_rgb) {
        for (Rgb& c : colors) {
            c.r = static_cast<std::uint8_t>(rng.next_below(256));
            c.g = static_cast<std::uint8_t>(rng.next_below(256));
            c.b = static_cast<std::uint8_t>(rng.next_below(256));
        }
    }
    return colors;
}

void compose_scene(std::span<const Instance> instances, MaskType mask_type, int line_width,
                   CanvasSize canvas, ImageCanvas& image, LabelMask& mask) {
    image.width = canvas.width;
    image.height = canvas.height;
    image.rgb.assign(static_cast<std::size_t>(canvas.width) * canvas.height * 3, 0);
    mask.width = canvas.width;
    mask.height = canvas.height;
    mask.labels.assign(static_cast<std::size_t>(canvas.width) * canvas.height, 0);

    // Painting back-to-front overwrites with the highest depth index that
    // covers a pixel — exactly the max-selection composition.
    for (const Instance& inst : instances) {
        const BinaryMask strokes =
            raster_skeleton(inst.contour, inst.x, inst.y, line_width, canvas);
        if (mask_type == MaskType::skeleton && !inst.mask_geometry) {
            paint(strokes, inst.category_id, inst.color, true, true, image, mask);
            continue;
        }
        paint(strokes, inst.category_id, inst.color, true, false, image, mask);
        const BinaryMask support =
            rasterize(inst.annotation(), inst.x, inst.y, mask_type, line_width, canvas);
        paint(support, inst.category_id, inst.color, false, true, image, mask);
    }
}

SceneBuild build_scene(const GenerationConfig& config, const CategoryTable& table,
                       std::uint64_t image_index) {
    const CanvasSize canvas{config.canvas_width, config.canvas_height};
    const std::uint64_t image_seed = derive_seed(config.master_seed, image_index);
    const int m = config.instances_per_image;

    Rng placement_rng(derive_seed(image_seed, kStreamPlacement));
    Rng color_rng(derive_seed(image_seed, kStreamColor));
    Rng category_rng(derive_seed(image_seed, kStreamCategory));
    Rng polygons_rng(derive_seed(image_seed, kStreamPolygonCount));

    const auto positions = sample_placements(m, config.occlusion_radius, canvas, placement_rng);
    const auto colors = assign_colors(m, config.color_mode, color_rng);

    SceneBuild out;
    out.record.image_seed = image_seed;
    out.record.instances.reserve(m);

    std::vector<Instance> instances;
    instances.reserve(m);
    for (int j = 1; j <= m; ++j) {
        Instance inst;
        inst.depth = j;
        inst.x = positions[j - 1].first;
        inst.y = positions[j - 1].second;
        inst.color = colors[j - 1];
        inst.category_id =
            1 + static_cast<std::uint32_t>(category_rng.next_below(table.num_categories()));
        const int polygons = polygons_rng.next_int(config.polygons_min, config.polygons_max);
        const std::uint64_t instance_seed = derive_seed(image_seed, kStreamInstanceBase + j);

        inst.contour = build_radial_contour(table.lookup(inst.category_id), polygons, instance_seed);
        if (config.perturb.mode != PerturbMode::none) {
            inst.mask_geometry = apply_perturbation(inst.contour, config.perturb,
                                                    derive_seed(instance_seed, kStreamPerturb));
        }

        out.record.instances.push_back({inst.category_id, j, inst.x, inst.y, polygons,
                                        inst.contour.resize, inst.color, instance_seed});
        instances.push_back(std::move(inst));
    }

    compose_scene(instances, config.mask_type, config.line_width, canvas, out.image, out.mask);
    return out;
}

RadialContour regenerate_annotation(const GenerationConfig& config, const CategoryTable& table,
                                    const InstanceRecord& record) {
    RadialContour contour =
        build_radial_contour(table.lookup(record.category_id), record.polygons, record.seed);
    if (config.perturb.mode == PerturbMode::none) return contour;
    return apply_perturbation(contour, config.perturb, derive_seed(record.seed, kStreamPerturb));
}

}  // namespace radseg
