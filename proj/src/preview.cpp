#include <algorithm>

#include "radseg/dataset.hpp"
#include "radseg/errors.hpp"
#include "radseg/png_io.hpp"
#include "radseg/rng.hpp"

namespace radseg {

namespace fs = std::filesystem;

namespace {

Rgb label_color(std::uint16_t label) {
    if (label == 0) return {0, 0, 0};
    const std::uint64_t h = mix64(label);
    // Keep every channel off the floor so categories stay distinguishable
    // against the black background.
    return {static_cast<std::uint8_t>(0x30 | (h & 0xFF)),
            static_cast<std::uint8_t>(0x30 | ((h >> 8) & 0xFF)),
            static_cast<std::uint8_t>(0x30 | ((h >> 16) & 0xFF))};
}

}  // namespace

void render_preview(const fs::path& root, const fs::path& out_png, int grid) {
    if (grid < 1) throw ConfigError("preview grid must be >= 1");
    const LoadedDataset ds = load_dataset(root);
    const int w = ds.config.canvas_width;
    const int h = ds.config.canvas_height;
    const int cells = std::min<std::uint64_t>(static_cast<std::uint64_t>(grid) * grid,
                                              ds.manifest.entries.size());

    ImageCanvas sheet;
    sheet.width = grid * w * 2;  // image | mask per cell
    sheet.height = grid * h;
    sheet.rgb.assign(static_cast<std::size_t>(sheet.width) * sheet.height * 3, 0);

    for (int cell = 0; cell < cells; ++cell) {
        const ManifestEntry& entry = ds.manifest.entries[cell];
        const ImageCanvas image = decode_image_png(read_file(root / entry.image_path));
        const LabelMask mask = decode_label_png(read_file(root / entry.mask_path));
        const int ox = (cell % grid) * w * 2;
        const int oy = (cell / grid) * h;
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                const std::size_t src = (static_cast<std::size_t>(y) * w + x) * 3;
                std::size_t dst =
                    ((static_cast<std::size_t>(oy + y)) * sheet.width + ox + x) * 3;
                sheet.rgb[dst] = image.rgb[src];
                sheet.rgb[dst + 1] = image.rgb[src + 1];
                sheet.rgb[dst + 2] = image.rgb[src + 2];

                const Rgb c = label_color(mask.at(x, y));
                dst = ((static_cast<std::size_t>(oy + y)) * sheet.width + ox + w + x) * 3;
                sheet.rgb[dst] = c.r;
                sheet.rgb[dst + 1] = c.g;
                sheet.rgb[dst + 2] = c.b;
            }
        }
    }

    write_file(out_png, encode_image_png(sheet));
}

}  // namespace radseg
