#include <algorithm>
#include <limits>

#include "radseg/dataset.hpp"
#include "radseg/errors.hpp"
#include "radseg/png_io.hpp"
#include "radseg/raster.hpp"

namespace radseg {

namespace fs = std::filesystem;

namespace {

BinaryMask rasterize_support(const RadialContour& contour, int x, int y, MaskType type,
                             int line_width, CanvasSize canvas) {
    switch (type) {
        case MaskType::skeleton: return raster_skeleton(contour, x, y, line_width, canvas);
        case MaskType::ring: return raster_ring(contour, x, y, line_width, canvas);
        case MaskType::fill: return raster_fill(contour, x, y, line_width, canvas);
    }
    return raster_skeleton(contour, x, y, line_width, canvas);
}

}  // namespace

StatsReport dataset_stats(const fs::path& root) {
    const LoadedDataset ds = load_dataset(root);
    const GenerationConfig& config = ds.config;
    const CanvasSize canvas{config.canvas_width, config.canvas_height};
    const CategoryTable table = build_taxonomy(config.num_categories, config.taxonomy_seed,
                                               config.taxonomy_radius_scale());

    StatsReport stats;
    stats.num_images = ds.manifest.entries.size();
    stats.num_categories = config.num_categories;
    stats.category_pixels.assign(config.num_categories + 1, 0);
    stats.category_instances.assign(config.num_categories + 1, 0);
    stats.foreground_ratio_min = std::numeric_limits<double>::infinity();
    stats.foreground_ratio_max = 0.0;

    const std::size_t pixels_per_image =
        static_cast<std::size_t>(canvas.width) * canvas.height;
    std::vector<std::uint8_t> coverage(pixels_per_image);
    double ratio_sum = 0.0;
    std::uint64_t covered_total = 0;
    std::uint64_t multi_covered_total = 0;

    for (const ManifestEntry& entry : ds.manifest.entries) {
        const LabelMask mask = decode_label_png(read_file(root / entry.mask_path));
        std::uint64_t foreground = 0;
        for (const std::uint16_t label : mask.labels) {
            if (label > config.num_categories) {
                throw DataError("label above C in " + entry.mask_path);
            }
            ++stats.category_pixels[label];
            foreground += label != 0;
        }
        const double ratio = static_cast<double>(foreground) / pixels_per_image;
        ratio_sum += ratio;
        stats.foreground_ratio_min = std::min(stats.foreground_ratio_min, ratio);
        stats.foreground_ratio_max = std::max(stats.foreground_ratio_max, ratio);

        const ImageCanvas image = decode_image_png(read_file(root / entry.image_path));
        bool zero_chroma = true;
        for (std::size_t i = 0; i < image.rgb.size(); i += 3) {
            if (image.rgb[i] != image.rgb[i + 1] || image.rgb[i] != image.rgb[i + 2]) {
                zero_chroma = false;
                break;
            }
        }
        stats.zero_chroma_images += zero_chroma;

        // Overlap is measured on supports regenerated from the records —
        // the same geometry path that produced the stored masks.
        std::fill(coverage.begin(), coverage.end(), 0);
        for (const InstanceRecord& rec : entry.record.instances) {
            ++stats.category_instances[std::min<std::uint32_t>(rec.category_id,
                                                               config.num_categories)];
            const RadialContour geometry = regenerate_annotation(config, table, rec);
            const BinaryMask support = rasterize_support(geometry, rec.x, rec.y,
                                                         config.mask_type, config.line_width,
                                                         canvas);
            for (int y = support.bound_y0; y < support.bound_y1; ++y) {
                const std::size_t row = static_cast<std::size_t>(y) * canvas.width;
                for (int x = support.bound_x0; x < support.bound_x1; ++x) {
                    if (support.bits[row + x] && coverage[row + x] < 2) ++coverage[row + x];
                }
            }
        }
        for (const std::uint8_t c : coverage) {
            covered_total += c >= 1;
            multi_covered_total += c >= 2;
        }
    }

    if (stats.num_images > 0) {
        stats.foreground_ratio_mean = ratio_sum / static_cast<double>(stats.num_images);
    } else {
        stats.foreground_ratio_min = 0.0;
    }
    stats.overlap_rate =
        covered_total > 0 ? static_cast<double>(multi_covered_total) / covered_total : 0.0;
    return stats;
}

nlohmann::ordered_json stats_to_json(const StatsReport& stats) {
    nlohmann::ordered_json j;
    j["num_images"] = stats.num_images;
    j["num_categories"] = stats.num_categories;
    j["overlap_rate"] = stats.overlap_rate;
    j["foreground_ratio"] = {{"mean", stats.foreground_ratio_mean},
                             {"min", stats.foreground_ratio_min},
                             {"max", stats.foreground_ratio_max}};
    j["zero_chroma_images"] = stats.zero_chroma_images;

    std::uint32_t categories_seen = 0;
    std::uint64_t min_instances = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t max_instances = 0;
    for (std::size_t c = 1; c < stats.category_instances.size(); ++c) {
        const std::uint64_t count = stats.category_instances[c];
        categories_seen += count > 0;
        min_instances = std::min(min_instances, count);
        max_instances = std::max(max_instances, count);
    }
    j["categories_with_instances"] = categories_seen;
    j["instances_per_category"] = {{"min", stats.category_instances.size() > 1 ? min_instances : 0},
                                   {"max", max_instances}};
    j["category_pixels"] = stats.category_pixels;
    j["category_instances"] = stats.category_instances;
    return j;
}

}  // namespace radseg
