#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "radseg/dataset.hpp"
#include "radseg/errors.hpp"

namespace {

using radseg::GenerationConfig;

int parse_positive_int(const std::string& text, const char* what) {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size() || value < 1) {
        throw radseg::ConfigError(std::string("bad ") + what + ": " + text);
    }
    return value;
}

// "LO-HI" or a single constant "K".
std::pair<int, int> parse_polygon_range(const std::string& text) {
    const auto dash = text.find('-');
    if (dash == std::string::npos) {
        const int k = parse_positive_int(text, "polygon count");
        return {k, k};
    }
    return {parse_positive_int(text.substr(0, dash), "polygon range"),
            parse_positive_int(text.substr(dash + 1), "polygon range")};
}

// "512" (square) or "WxH".
std::pair<int, int> parse_canvas(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos) {
        const int side = parse_positive_int(text, "canvas");
        return {side, side};
    }
    return {parse_positive_int(text.substr(0, x), "canvas width"),
            parse_positive_int(text.substr(x + 1), "canvas height")};
}

radseg::MaskType parse_mask_type(const std::string& name) {
    if (name == "m1") return radseg::MaskType::skeleton;
    if (name == "m2") return radseg::MaskType::ring;
    if (name == "m3") return radseg::MaskType::fill;
    throw radseg::ConfigError("unknown mask type: " + name);
}

void print_progress(std::uint64_t done, std::uint64_t total) {
    std::fprintf(stderr, "\r%llu/%llu images", static_cast<unsigned long long>(done),
                 static_cast<unsigned long long>(total));
    if (done == total) std::fprintf(stderr, "\n");
    std::fflush(stderr);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic generator of radial-contour semantic-segmentation datasets"};
    app.require_subcommand(1);

    // ---- generate ----------------------------------------------------
    auto* generate = app.add_subcommand("generate", "Generate a dataset");
    std::string preset = "baseline";
    std::optional<std::uint64_t> num_images;
    std::optional<int> instances;
    std::optional<std::string> mask_type;
    std::optional<std::string> color;
    std::optional<int> occlusion_radius;
    std::optional<std::string> polygons;
    std::optional<int> line_width;
    std::optional<std::uint32_t> categories;
    std::optional<std::string> canvas;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> taxonomy_seed;
    std::optional<int> perturb_shift;
    std::optional<int> perturb_inflate;
    int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    bool resume = false;
    std::string out = "dataset";

    generate->add_option("--preset", preset, "Parameter preset")
        ->check(CLI::IsMember({"baseline", "best"}));
    generate->add_option("--num-images", num_images, "Number of images (N)");
    generate->add_option("--instances", instances, "Instances per image (M)");
    generate->add_option("--mask-type", mask_type, "Mask granularity: m1, m2 or m3");
    generate->add_option("--color", color, "Color mode: gray or random-rgb");
    generate->add_option("--occlusion-radius", occlusion_radius,
                         "Side of the central placement square, px (r)");
    generate->add_option("--polygons", polygons, "Polygons per instance: LO-HI or a constant (K)");
    generate->add_option("--line-width", line_width, "Stroke width in px, one of 1/2/3 (d)");
    generate->add_option("--categories", categories, "Number of categories (C)");
    generate->add_option("--canvas", canvas, "Canvas size: WxH or a square side");
    generate->add_option("--seed", seed, "Master seed");
    generate->add_option("--taxonomy-seed", taxonomy_seed, "Taxonomy seed");
    auto* shift_opt =
        generate->add_option("--perturb-shift", perturb_shift, "Vertex-shift magnitude, px");
    auto* inflate_opt =
        generate->add_option("--perturb-inflate", perturb_inflate, "Inflation magnitude, px");
    shift_opt->excludes(inflate_opt);
    inflate_opt->excludes(shift_opt);
    generate->add_option("--workers", workers, "Worker threads");
    generate->add_flag("--resume", resume, "Keep valid entries of an interrupted run");
    generate->add_option("--out", out, "Output directory");

    // ---- validate -----------------------------------------------------
    auto* validate = app.add_subcommand("validate", "Check an existing dataset");
    std::string validate_path;
    std::uint64_t regen_samples = 16;
    validate->add_option("path", validate_path, "Dataset directory")->required();
    validate->add_option("--regen-sample", regen_samples,
                         "Entries to regenerate and compare byte-for-byte");

    // ---- stats --------------------------------------------------------
    auto* stats = app.add_subcommand("stats", "Print dataset statistics as JSON");
    std::string stats_path;
    stats->add_option("path", stats_path, "Dataset directory")->required();

    // ---- preview ------------------------------------------------------
    auto* preview = app.add_subcommand("preview", "Render a grid of image/mask pairs");
    std::string preview_path;
    std::string preview_out = "preview.png";
    int grid = 4;
    preview->add_option("path", preview_path, "Dataset directory")->required();
    preview->add_option("--grid", grid, "Grid side length");
    preview->add_option("--out", preview_out, "Output PNG");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) {
            GenerationConfig config =
                preset == "best" ? radseg::best_preset() : radseg::baseline_preset();
            if (num_images) config.num_images = *num_images;
            if (instances) config.instances_per_image = *instances;
            if (mask_type) config.mask_type = parse_mask_type(*mask_type);
            if (color) {
                if (*color == "gray") {
                    config.color_mode = radseg::ColorMode::gray;
                } else if (*color == "random-rgb") {
                    config.color_mode = radseg::ColorMode::random_rgb;
                } else {
                    throw radseg::ConfigError("unknown color mode: " + *color);
                }
            }
            if (occlusion_radius) config.occlusion_radius = *occlusion_radius;
            if (polygons) {
                std::tie(config.polygons_min, config.polygons_max) = parse_polygon_range(*polygons);
            }
            if (line_width) config.line_width = *line_width;
            if (categories) config.num_categories = *categories;
            if (canvas) std::tie(config.canvas_width, config.canvas_height) = parse_canvas(*canvas);
            if (seed) config.master_seed = *seed;
            if (taxonomy_seed) config.taxonomy_seed = *taxonomy_seed;
            if (perturb_shift) config.perturb = {radseg::PerturbMode::shift, *perturb_shift};
            if (perturb_inflate) config.perturb = {radseg::PerturbMode::inflation, *perturb_inflate};
            config.output_dir = out;

            radseg::generate_dataset(config, workers, resume, print_progress);
            std::fprintf(stderr, "dataset written to %s\n", out.c_str());
            return 0;
        }

        if (validate->parsed()) {
            const radseg::ValidationReport report =
                radseg::validate_dataset(validate_path, regen_samples);
            for (const radseg::Violation& v : report.violations) {
                if (v.index >= 0) {
                    std::printf("VIOLATION %-16s entry %lld: %s\n", v.kind.c_str(),
                                static_cast<long long>(v.index), v.detail.c_str());
                } else {
                    std::printf("VIOLATION %-16s %s\n", v.kind.c_str(), v.detail.c_str());
                }
            }
            std::printf("%llu entries checked, %llu regenerated, %zu violation(s)\n",
                        static_cast<unsigned long long>(report.entries_checked),
                        static_cast<unsigned long long>(report.scenes_regenerated),
                        report.violations.size());
            return report.ok() ? 0 : 1;
        }

        if (stats->parsed()) {
            std::printf("%s\n", radseg::stats_to_json(radseg::dataset_stats(stats_path)).dump(2).c_str());
            return 0;
        }

        if (preview->parsed()) {
            radseg::render_preview(preview_path, preview_out, grid);
            std::fprintf(stderr, "preview written to %s\n", preview_out.c_str());
            return 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
