#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "radseg/config.hpp"
#include "radseg/scene.hpp"

namespace radseg {

struct ManifestEntry {
    std::uint64_t index = 0;
    std::uint64_t image_seed = 0;
    std::string image_path;  // relative to the dataset root
    std::string mask_path;
    SceneRecord record;
};

struct Manifest {
    std::vector<ManifestEntry> entries;
};

using ProgressFn = std::function<void(std::uint64_t done, std::uint64_t total)>;

// Writes images/<8-digit>.png, masks/<8-digit>.png, config.json and
// manifest.jsonl under config.output_dir. Workers generate disjoint index
// sets; every byte is a pure function of the config, so any worker count
// produces identical files. With resume = true, manifest entries whose
// seed checks out and whose files exist are kept as-is and only the rest
// are generated.
Manifest generate_dataset(const GenerationConfig& config, int workers,
                          bool resume = false, const ProgressFn& progress = nullptr);

// Serialization used by generate_dataset; exposed for tests and tools.
std::string manifest_entry_to_line(const ManifestEntry& entry);
ManifestEntry manifest_entry_from_line(const std::string& line);

struct LoadedDataset {
    GenerationConfig config;   // output_dir = dataset root
    std::vector<std::string> taxonomy_echo;  // taxonomy lines from config.json
    Manifest manifest;
};

// Reads config.json + manifest.jsonl; throws DataError if unreadable.
LoadedDataset load_dataset(const std::filesystem::path& root);

struct Violation {
    std::int64_t index = -1;   // -1: dataset-level
    std::string kind;          // stable machine token, e.g. "label-domain"
    std::string detail;
};

struct ValidationReport {
    std::uint64_t entries_checked = 0;
    std::uint64_t scenes_regenerated = 0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

// Per-entry checks: file existence, mask dimensions and bit depth, label
// domain, seed derivation; plus byte-exact regeneration of
// `regen_samples` evenly spaced entries.
ValidationReport validate_dataset(const std::filesystem::path& root,
                                  std::uint64_t regen_samples = 16);

struct StatsReport {
    std::uint64_t num_images = 0;
    std::uint32_t num_categories = 0;
    std::vector<std::uint64_t> category_pixels;     // index 0 = background
    std::vector<std::uint64_t> category_instances;  // index 0 unused
    double foreground_ratio_mean = 0.0;
    double foreground_ratio_min = 0.0;
    double foreground_ratio_max = 0.0;
    // Fraction of foreground pixels covered by >= 2 instance supports,
    // measured on supports regenerated from the SceneRecords.
    double overlap_rate = 0.0;
    std::uint64_t zero_chroma_images = 0;  // pixels with R==G==B everywhere
};

StatsReport dataset_stats(const std::filesystem::path& root);
nlohmann::ordered_json stats_to_json(const StatsReport& stats);

// n-by-n grid of [image | colorized mask] cells rendered to one PNG.
void render_preview(const std::filesystem::path& root, const std::filesystem::path& out_png,
                    int grid);

}  // namespace radseg
