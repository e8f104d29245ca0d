#include "radseg/dataset.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <thread>

#include "radseg/errors.hpp"
#include "radseg/png_io.hpp"

namespace radseg {

namespace fs = std::filesystem;

namespace {

std::string index_file_name(std::uint64_t index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%08llu.png", static_cast<unsigned long long>(index));
    return buf;
}

bool file_has_bytes(const fs::path& path) {
    std::error_code ec;
    const auto size = fs::file_size(path, ec);
    return !ec && size > 0;
}

}  // namespace

std::string manifest_entry_to_line(const ManifestEntry& entry) {
    nlohmann::ordered_json j;
    j["index"] = entry.index;
    j["seed"] = entry.image_seed;
    j["image"] = entry.image_path;
    j["mask"] = entry.mask_path;
    nlohmann::ordered_json instances = nlohmann::ordered_json::array();
    for (const InstanceRecord& r : entry.record.instances) {
        nlohmann::ordered_json ji;
        ji["category"] = r.category_id;
        ji["depth"] = r.depth;
        ji["x"] = r.x;
        ji["y"] = r.y;
        ji["polygons"] = r.polygons;
        ji["resize"] = r.resize;
        ji["color"] = {r.color.r, r.color.g, r.color.b};
        ji["seed"] = r.seed;
        instances.push_back(std::move(ji));
    }
    j["instances"] = std::move(instances);
    return j.dump();
}

ManifestEntry manifest_entry_from_line(const std::string& line) {
    ManifestEntry entry;
    try {
        const auto j = nlohmann::json::parse(line);
        entry.index = j.at("index").get<std::uint64_t>();
        entry.image_seed = j.at("seed").get<std::uint64_t>();
        entry.image_path = j.at("image").get<std::string>();
        entry.mask_path = j.at("mask").get<std::string>();
        entry.record.image_seed = entry.image_seed;
        for (const auto& ji : j.at("instances")) {
            InstanceRecord r;
            r.category_id = ji.at("category").get<std::uint32_t>();
            r.depth = ji.at("depth").get<int>();
            r.x = ji.at("x").get<int>();
            r.y = ji.at("y").get<int>();
            r.polygons = ji.at("polygons").get<int>();
            r.resize = ji.at("resize").get<double>();
            const auto& color = ji.at("color");
            r.color = {color.at(0).get<std::uint8_t>(), color.at(1).get<std::uint8_t>(),
                       color.at(2).get<std::uint8_t>()};
            r.seed = ji.at("seed").get<std::uint64_t>();
            entry.record.instances.push_back(r);
        }
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("malformed manifest line: ") + e.what());
    }
    return entry;
}

Manifest generate_dataset(const GenerationConfig& config, int workers, bool resume,
                          const ProgressFn& progress) {
    validate_config(config);
    const CategoryTable table = build_taxonomy(config.num_categories, config.taxonomy_seed,
                                               config.taxonomy_radius_scale());

    const fs::path root(config.output_dir);
    fs::create_directories(root / "images");
    fs::create_directories(root / "masks");

    {
        std::ofstream out(root / "config.json", std::ios::trunc);
        if (!out) throw DataError("cannot write config.json under " + root.string());
        out << config_to_json(config, table).dump(2) << "\n";
    }

    const std::uint64_t n = config.num_images;
    std::vector<std::optional<ManifestEntry>> entries(n);

    if (resume && fs::exists(root / "manifest.jsonl")) {
        std::ifstream in(root / "manifest.jsonl");
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            ManifestEntry entry = manifest_entry_from_line(line);
            if (entry.index >= n) continue;
            if (entry.image_seed != derive_seed(config.master_seed, entry.index)) continue;
            if (!file_has_bytes(root / entry.image_path) || !file_has_bytes(root / entry.mask_path))
                continue;
            entries[entry.index] = std::move(entry);
        }
    }

    workers = std::max(1, workers);
    constexpr std::uint64_t kChunk = 8;
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> done{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto run_worker = [&] {
        for (;;) {
            if (failed.load(std::memory_order_relaxed)) return;
            const std::uint64_t begin = next_chunk.fetch_add(kChunk);
            if (begin >= n) return;
            const std::uint64_t end = std::min(begin + kChunk, n);
            for (std::uint64_t i = begin; i < end; ++i) {
                if (entries[i]) {
                    done.fetch_add(1, std::memory_order_relaxed);
                    continue;
                }
                try {
                    SceneBuild scene = build_scene(config, table, i);
                    ManifestEntry entry;
                    entry.index = i;
                    entry.image_seed = scene.record.image_seed;
                    entry.image_path = "images/" + index_file_name(i);
                    entry.mask_path = "masks/" + index_file_name(i);
                    entry.record = std::move(scene.record);
                    write_file(root / entry.image_path, encode_image_png(scene.image));
                    write_file(root / entry.mask_path,
                               encode_label_png(scene.mask, config.num_categories));
                    entries[i] = std::move(entry);
                    done.fetch_add(1, std::memory_order_relaxed);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    failed.store(true, std::memory_order_relaxed);
                    return;
                }
            }
            if (progress) progress(done.load(std::memory_order_relaxed), n);
        }
    };

    if (workers == 1) {
        run_worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker);
        for (std::thread& t : pool) t.join();
    }

    if (first_error) {
        std::uint64_t written = 0;
        for (const auto& e : entries) written += e.has_value();
        try {
            std::rethrow_exception(first_error);
        } catch (const std::exception& e) {
            throw DataError("generation aborted after " + std::to_string(written) + "/" +
                            std::to_string(n) + " entries: " + e.what());
        }
    }

    // Manifest is assembled in index order after all workers complete, so
    // its bytes do not depend on scheduling.
    Manifest manifest;
    manifest.entries.reserve(n);
    {
        std::ofstream out(root / "manifest.jsonl", std::ios::trunc);
        if (!out) throw DataError("cannot write manifest.jsonl under " + root.string());
        for (std::uint64_t i = 0; i < n; ++i) {
            out << manifest_entry_to_line(*entries[i]) << "\n";
            manifest.entries.push_back(std::move(*entries[i]));
        }
        if (!out) throw DataError("manifest write failed under " + root.string());
    }
    if (progress) progress(n, n);
    return manifest;
}

LoadedDataset load_dataset(const fs::path& root) {
    LoadedDataset ds;

    std::ifstream config_in(root / "config.json");
    if (!config_in) throw DataError("missing config.json under " + root.string());
    nlohmann::json config_json;
    try {
        config_in >> config_json;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("unreadable config.json: ") + e.what());
    }
    ds.config = config_from_json(config_json);
    ds.config.output_dir = root.string();
    if (config_json.contains("taxonomy")) {
        ds.taxonomy_echo = config_json.at("taxonomy").get<std::vector<std::string>>();
    }

    std::ifstream manifest_in(root / "manifest.jsonl");
    if (!manifest_in) throw DataError("missing manifest.jsonl under " + root.string());
    std::string line;
    while (std::getline(manifest_in, line)) {
        if (line.empty()) continue;
        ds.manifest.entries.push_back(manifest_entry_from_line(line));
    }
    return ds;
}

}  // namespace radseg
