#include "radseg/png_io.hpp"

#include <zlib.h>

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>

#include "radseg/errors.hpp"

namespace radseg {

namespace {

constexpr std::uint8_t kSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
constexpr int kZlibLevel = 6;  // fixed: identical pixels must give identical bytes

void put_be32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

std::uint32_t get_be32(const std::uint8_t* p) {
    return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) |
           (std::uint32_t(p[2]) << 8) | std::uint32_t(p[3]);
}

void append_chunk(std::vector<std::uint8_t>& out, const char type[4],
                  const std::uint8_t* data, std::size_t size) {
    put_be32(out, static_cast<std::uint32_t>(size));
    const std::size_t type_at = out.size();
    out.insert(out.end(), type, type + 4);
    if (size > 0) out.insert(out.end(), data, data + size);
    std::uint32_t crc = crc32(0L, Z_NULL, 0);
    crc = crc32(crc, out.data() + type_at, static_cast<uInt>(4 + size));
    put_be32(out, crc);
}

// One PNG for `height` rows of `row_bytes` samples: filter byte 0 per row,
// one zlib stream, no interlacing.
std::vector<std::uint8_t> encode(int width, int height, int bit_depth, int color_type,
                                 const std::uint8_t* rows, std::size_t row_bytes) {
    std::vector<std::uint8_t> raw;
    raw.reserve(static_cast<std::size_t>(height) * (row_bytes + 1));
    for (int y = 0; y < height; ++y) {
        raw.push_back(0);  // filter: none
        raw.insert(raw.end(), rows + y * row_bytes, rows + (y + 1) * row_bytes);
    }

    uLongf compressed_size = compressBound(static_cast<uLong>(raw.size()));
    std::vector<std::uint8_t> compressed(compressed_size);
    if (compress2(compressed.data(), &compressed_size, raw.data(),
                  static_cast<uLong>(raw.size()), kZlibLevel) != Z_OK) {
        throw DataError("zlib compression failed");
    }
    compressed.resize(compressed_size);

    std::vector<std::uint8_t> out;
    out.reserve(compressed.size() + 128);
    out.insert(out.end(), kSignature, kSignature + 8);
    std::uint8_t ihdr[13];
    ihdr[0] = static_cast<std::uint8_t>(width >> 24);
    ihdr[1] = static_cast<std::uint8_t>(width >> 16);
    ihdr[2] = static_cast<std::uint8_t>(width >> 8);
    ihdr[3] = static_cast<std::uint8_t>(width);
    ihdr[4] = static_cast<std::uint8_t>(height >> 24);
    ihdr[5] = static_cast<std::uint8_t>(height >> 16);
    ihdr[6] = static_cast<std::uint8_t>(height >> 8);
    ihdr[7] = static_cast<std::uint8_t>(height);
    ihdr[8] = static_cast<std::uint8_t>(bit_depth);
    ihdr[9] = static_cast<std::uint8_t>(color_type);
    ihdr[10] = 0;  // compression
    ihdr[11] = 0;  // filter method
    ihdr[12] = 0;  // no interlace
    append_chunk(out, "IHDR", ihdr, sizeof(ihdr));
    append_chunk(out, "IDAT", compressed.data(), compressed.size());
    append_chunk(out, "IEND", nullptr, 0);
    return out;
}

int paeth(int a, int b, int c) {
    const int p = a + b - c;
    const int pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
    if (pa <= pb && pa <= pc) return a;
    if (pb <= pc) return b;
    return c;
}

void unfilter(std::vector<std::uint8_t>& raw, int height, std::size_t row_bytes, int bpp) {
    std::vector<std::uint8_t> prev(row_bytes, 0);
    for (int y = 0; y < height; ++y) {
        std::uint8_t* row = raw.data() + static_cast<std::size_t>(y) * (row_bytes + 1);
        const int filter = row[0];
        std::uint8_t* cur = row + 1;
        for (std::size_t i = 0; i < row_bytes; ++i) {
            const int left = i >= static_cast<std::size_t>(bpp) ? cur[i - bpp] : 0;
            const int up = prev[i];
            const int up_left = i >= static_cast<std::size_t>(bpp) ? prev[i - bpp] : 0;
            int add = 0;
            switch (filter) {
                case 0: add = 0; break;
                case 1: add = left; break;
                case 2: add = up; break;
                case 3: add = (left + up) / 2; break;
                case 4: add = paeth(left, up, up_left); break;
                default: throw DataError("unsupported PNG filter " + std::to_string(filter));
            }
            cur[i] = static_cast<std::uint8_t>((cur[i] + add) & 0xFF);
        }
        std::memcpy(prev.data(), cur, row_bytes);
    }
}

}  // namespace

std::vector<std::uint8_t> encode_png_gray8(int width, int height,
                                           const std::vector<std::uint8_t>& pixels) {
    return encode(width, height, 8, 0, pixels.data(), static_cast<std::size_t>(width));
}

std::vector<std::uint8_t> encode_png_gray16(int width, int height,
                                            const std::vector<std::uint16_t>& pixels) {
    std::vector<std::uint8_t> be(static_cast<std::size_t>(width) * height * 2);
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        be[2 * i] = static_cast<std::uint8_t>(pixels[i] >> 8);
        be[2 * i + 1] = static_cast<std::uint8_t>(pixels[i]);
    }
    return encode(width, height, 16, 0, be.data(), static_cast<std::size_t>(width) * 2);
}

std::vector<std::uint8_t> encode_png_rgb8(int width, int height,
                                          const std::vector<std::uint8_t>& pixels) {
    return encode(width, height, 8, 2, pixels.data(), static_cast<std::size_t>(width) * 3);
}

DecodedPng decode_png(const std::vector<std::uint8_t>& file) {
    if (file.size() < 8 || std::memcmp(file.data(), kSignature, 8) != 0) {
        throw DataError("not a PNG file");
    }

    DecodedPng png;
    std::vector<std::uint8_t> idat;
    bool saw_ihdr = false;
    std::size_t at = 8;
    while (at + 12 <= file.size()) {
        const std::uint32_t size = get_be32(file.data() + at);
        if (at + 12 + size > file.size()) throw DataError("truncated PNG chunk");
        const char* type = reinterpret_cast<const char*>(file.data() + at + 4);
        const std::uint8_t* data = file.data() + at + 8;
        if (std::memcmp(type, "IHDR", 4) == 0) {
            if (size != 13) throw DataError("bad IHDR");
            png.width = static_cast<int>(get_be32(data));
            png.height = static_cast<int>(get_be32(data + 4));
            png.bit_depth = data[8];
            const int color_type = data[9];
            if (data[10] != 0 || data[11] != 0 || data[12] != 0) {
                throw DataError("unsupported PNG encoding options");
            }
            if (color_type == 0) {
                png.channels = 1;
            } else if (color_type == 2) {
                png.channels = 3;
            } else {
                throw DataError("unsupported PNG color type " + std::to_string(color_type));
            }
            if (png.bit_depth != 8 && !(png.bit_depth == 16 && png.channels == 1)) {
                throw DataError("unsupported PNG bit depth " + std::to_string(png.bit_depth));
            }
            if (png.width < 1 || png.height < 1) throw DataError("bad PNG dimensions");
            saw_ihdr = true;
        } else if (std::memcmp(type, "IDAT", 4) == 0) {
            idat.insert(idat.end(), data, data + size);
        } else if (std::memcmp(type, "IEND", 4) == 0) {
            break;
        }
        at += 12 + size;
    }
    if (!saw_ihdr || idat.empty()) throw DataError("missing PNG chunks");

    const int bpp = png.channels * png.bit_depth / 8;
    const std::size_t row_bytes = static_cast<std::size_t>(png.width) * bpp;
    std::vector<std::uint8_t> raw(static_cast<std::size_t>(png.height) * (row_bytes + 1));
    uLongf raw_size = static_cast<uLongf>(raw.size());
    if (uncompress(raw.data(), &raw_size, idat.data(), static_cast<uLong>(idat.size())) != Z_OK ||
        raw_size != raw.size()) {
        throw DataError("corrupt PNG pixel stream");
    }
    unfilter(raw, png.height, row_bytes, bpp);

    if (png.bit_depth == 16) {
        png.gray16.resize(static_cast<std::size_t>(png.width) * png.height);
        for (int y = 0; y < png.height; ++y) {
            const std::uint8_t* row = raw.data() + static_cast<std::size_t>(y) * (row_bytes + 1) + 1;
            for (int x = 0; x < png.width; ++x) {
                png.gray16[static_cast<std::size_t>(y) * png.width + x] =
                    static_cast<std::uint16_t>((row[2 * x] << 8) | row[2 * x + 1]);
            }
        }
    } else {
        png.bytes.resize(static_cast<std::size_t>(png.width) * png.height * png.channels);
        for (int y = 0; y < png.height; ++y) {
            const std::uint8_t* row = raw.data() + static_cast<std::size_t>(y) * (row_bytes + 1) + 1;
            std::memcpy(png.bytes.data() + static_cast<std::size_t>(y) * row_bytes, row, row_bytes);
        }
    }
    return png;
}

std::vector<std::uint8_t> encode_label_png(const LabelMask& mask, std::uint32_t num_categories) {
    if (num_categories <= 255) {
        std::vector<std::uint8_t> narrow(mask.labels.size());
        for (std::size_t i = 0; i < mask.labels.size(); ++i) {
            narrow[i] = static_cast<std::uint8_t>(mask.labels[i]);
        }
        return encode_png_gray8(mask.width, mask.height, narrow);
    }
    return encode_png_gray16(mask.width, mask.height, mask.labels);
}

LabelMask decode_label_png(const std::vector<std::uint8_t>& file, int* bit_depth) {
    const DecodedPng png = decode_png(file);
    if (png.channels != 1) throw DataError("label mask is not single-channel");
    if (bit_depth) *bit_depth = png.bit_depth;

    LabelMask mask;
    mask.width = png.width;
    mask.height = png.height;
    if (png.bit_depth == 16) {
        mask.labels = png.gray16;
    } else {
        mask.labels.assign(png.bytes.begin(), png.bytes.end());
    }
    return mask;
}

std::vector<std::uint8_t> encode_image_png(const ImageCanvas& image) {
    return encode_png_rgb8(image.width, image.height, image.rgb);
}

ImageCanvas decode_image_png(const std::vector<std::uint8_t>& file) {
    const DecodedPng png = decode_png(file);
    if (png.channels != 3 || png.bit_depth != 8) throw DataError("image is not 8-bit RGB");
    ImageCanvas image;
    image.width = png.width;
    image.height = png.height;
    image.rgb = png.bytes;
    return image;
}

void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot open for writing: " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw DataError("write failed: " + path.string());
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw DataError("cannot open: " + path.string());
    const std::streamsize size = in.tellg();
    in.seekg(0);
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(size));
    in.read(reinterpret_cast<char*>(bytes.data()), size);
    if (!in) throw DataError("read failed: " + path.string());
    return bytes;
}

}  // namespace radseg
