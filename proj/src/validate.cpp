#include <algorithm>
#include <string>

#include "radseg/dataset.hpp"
#include "radseg/errors.hpp"
#include "radseg/png_io.hpp"

namespace radseg {

namespace fs = std::filesystem;

namespace {

void add(ValidationReport& report, std::int64_t index, std::string kind, std::string detail) {
    report.violations.push_back({index, std::move(kind), std::move(detail)});
}

}  // namespace

ValidationReport validate_dataset(const fs::path& root, std::uint64_t regen_samples) {
    const LoadedDataset ds = load_dataset(root);
    const GenerationConfig& config = ds.config;
    const std::uint64_t n = config.num_images;

    ValidationReport report;

    const CategoryTable table = build_taxonomy(config.num_categories, config.taxonomy_seed,
                                               config.taxonomy_radius_scale());
    if (ds.taxonomy_echo != table.to_text()) {
        add(report, -1, "taxonomy-mismatch",
            "config.json taxonomy does not match the seed-rebuilt table");
    }

    if (ds.manifest.entries.size() != n) {
        add(report, -1, "entry-count",
            "manifest has " + std::to_string(ds.manifest.entries.size()) + " entries, config says " +
                std::to_string(n));
    }
    for (std::size_t i = 0; i < ds.manifest.entries.size(); ++i) {
        if (ds.manifest.entries[i].index != i) {
            add(report, static_cast<std::int64_t>(i), "index-gap",
                "expected index " + std::to_string(i) + ", found " +
                    std::to_string(ds.manifest.entries[i].index));
            break;
        }
    }

    const int expected_depth = config.num_categories <= 255 ? 8 : 16;
    for (const ManifestEntry& entry : ds.manifest.entries) {
        const std::int64_t idx = static_cast<std::int64_t>(entry.index);
        ++report.entries_checked;

        if (entry.image_seed != derive_seed(config.master_seed, entry.index)) {
            add(report, idx, "seed-mismatch", "recorded image seed is not derived from the master seed");
        }
        if (static_cast<int>(entry.record.instances.size()) != config.instances_per_image) {
            add(report, idx, "record-size",
                "expected " + std::to_string(config.instances_per_image) + " instance records, found " +
                    std::to_string(entry.record.instances.size()));
        }

        const fs::path image_path = root / entry.image_path;
        const fs::path mask_path = root / entry.mask_path;
        if (!fs::exists(image_path)) {
            add(report, idx, "missing-file", entry.image_path);
            continue;
        }
        if (!fs::exists(mask_path)) {
            add(report, idx, "missing-file", entry.mask_path);
            continue;
        }

        try {
            int bit_depth = 0;
            const LabelMask mask = decode_label_png(read_file(mask_path), &bit_depth);
            if (mask.width != config.canvas_width || mask.height != config.canvas_height) {
                add(report, idx, "mask-dims",
                    std::to_string(mask.width) + "x" + std::to_string(mask.height));
            }
            if (bit_depth != expected_depth) {
                add(report, idx, "bit-depth",
                    "mask is " + std::to_string(bit_depth) + "-bit, expected " +
                        std::to_string(expected_depth) + "-bit for C=" +
                        std::to_string(config.num_categories));
            }
            std::uint64_t bad_labels = 0;
            for (const std::uint16_t label : mask.labels) {
                if (label > config.num_categories) ++bad_labels;
            }
            if (bad_labels > 0) {
                add(report, idx, "label-domain",
                    std::to_string(bad_labels) + " pixel(s) above C=" +
                        std::to_string(config.num_categories));
            }

            const ImageCanvas image = decode_image_png(read_file(image_path));
            if (image.width != config.canvas_width || image.height != config.canvas_height) {
                add(report, idx, "image-dims",
                    std::to_string(image.width) + "x" + std::to_string(image.height));
            }
        } catch (const DataError& e) {
            add(report, idx, "unreadable-file", e.what());
        }
    }

    // Regenerate a deterministic sample of scenes from their recorded
    // seeds and require byte-identical files and records.
    if (regen_samples > 0 && !ds.manifest.entries.empty() &&
        ds.manifest.entries.size() == n) {
        const std::uint64_t samples = std::min<std::uint64_t>(regen_samples, n);
        const std::uint64_t stride = std::max<std::uint64_t>(1, n / samples);
        for (std::uint64_t s = 0; s < samples; ++s) {
            const std::uint64_t i = std::min(n - 1, s * stride);
            const ManifestEntry& entry = ds.manifest.entries[i];
            ++report.scenes_regenerated;
            try {
                const SceneBuild scene = build_scene(config, table, i);
                if (scene.record.instances != entry.record.instances) {
                    add(report, static_cast<std::int64_t>(i), "regen-mismatch",
                        "manifest record differs from regenerated scene");
                    continue;
                }
                if (encode_image_png(scene.image) != read_file(root / entry.image_path)) {
                    add(report, static_cast<std::int64_t>(i), "regen-mismatch",
                        "stored image differs from regenerated bytes");
                }
                if (encode_label_png(scene.mask, config.num_categories) !=
                    read_file(root / entry.mask_path)) {
                    add(report, static_cast<std::int64_t>(i), "regen-mismatch",
                        "stored mask differs from regenerated bytes");
                }
            } catch (const DataError& e) {
                add(report, static_cast<std::int64_t>(i), "regen-mismatch", e.what());
            }
        }
    }

    return report;
}

}  // namespace radseg
