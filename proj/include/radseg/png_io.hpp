#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "radseg/scene.hpp"

namespace radseg {

// Minimal PNG codec over zlib: 8/16-bit grayscale and 8-bit RGB, no
// interlacing, fixed compression settings so identical pixels give
// identical bytes. Decoding handles exactly what encoding can produce
// (all five row filters are accepted).

std::vector<std::uint8_t> encode_png_gray8(int width, int height,
                                           const std::vector<std::uint8_t>& pixels);
std::vector<std::uint8_t> encode_png_gray16(int width, int height,
                                            const std::vector<std::uint16_t>& pixels);
std::vector<std::uint8_t> encode_png_rgb8(int width, int height,
                                          const std::vector<std::uint8_t>& pixels);

struct DecodedPng {
    int width = 0;
    int height = 0;
    int bit_depth = 0;   // 8 or 16
    int channels = 0;    // 1 (gray) or 3 (rgb)
    // Native-endian samples; 16-bit grays are widened into `gray16`.
    std::vector<std::uint8_t> bytes;     // 8-bit payloads
    std::vector<std::uint16_t> gray16;   // 16-bit payload
};

// Throws DataError on anything this codec does not produce.
DecodedPng decode_png(const std::vector<std::uint8_t>& file);

// Label masks are single-channel PNGs: 8-bit when C <= 255, 16-bit
// otherwise; label 0 is background.
std::vector<std::uint8_t> encode_label_png(const LabelMask& mask, std::uint32_t num_categories);
LabelMask decode_label_png(const std::vector<std::uint8_t>& file, int* bit_depth = nullptr);

std::vector<std::uint8_t> encode_image_png(const ImageCanvas& image);
ImageCanvas decode_image_png(const std::vector<std::uint8_t>& file);

void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);

}  // namespace radseg
