#include "radseg/raster.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "radseg/errors.hpp"

namespace radseg {

namespace {

void check_args(int line_width, CanvasSize canvas) {
    if (canvas.width < 1 || canvas.height < 1) {
        throw ConfigError("zero-area canvas: " + std::to_string(canvas.width) + "x" +
                          std::to_string(canvas.height));
    }
    if (line_width < 1 || line_width > 3) {
        throw ConfigError("line_width must be in {1, 2, 3}, got " + std::to_string(line_width));
    }
}

BinaryMask make_mask(CanvasSize canvas) {
    BinaryMask m;
    m.width = canvas.width;
    m.height = canvas.height;
    m.bits.assign(static_cast<std::size_t>(canvas.width) * canvas.height, 0);
    return m;
}

// Half-open pixel box covering all centers whose local coordinates can
// fall inside the given local extents; conservative by a pixel.
struct PixelBox {
    int x0, y0, x1, y1;
    bool empty() const { return x0 >= x1 || y0 >= y1; }
};

PixelBox clip_box(double min_x, double min_y, double max_x, double max_y, int pos_x, int pos_y,
                  CanvasSize canvas) {
    PixelBox box;
    box.x0 = std::max(0, static_cast<int>(std::floor(min_x + pos_x)) - 1);
    box.y0 = std::max(0, static_cast<int>(std::floor(min_y + pos_y)) - 1);
    box.x1 = std::min(canvas.width, static_cast<int>(std::ceil(max_x + pos_x)) + 2);
    box.y1 = std::min(canvas.height, static_cast<int>(std::ceil(max_y + pos_y)) + 2);
    return box;
}

void grow_bounds(BinaryMask& m, const PixelBox& box) {
    if (box.empty()) return;
    if (m.bound_x0 == m.bound_x1) {  // first non-empty box
        m.bound_x0 = box.x0;
        m.bound_y0 = box.y0;
        m.bound_x1 = box.x1;
        m.bound_y1 = box.y1;
        return;
    }
    m.bound_x0 = std::min(m.bound_x0, box.x0);
    m.bound_y0 = std::min(m.bound_y0, box.y0);
    m.bound_x1 = std::max(m.bound_x1, box.x1);
    m.bound_y1 = std::max(m.bound_y1, box.y1);
}

// Marks every pixel whose center lies within `radius` of some edge of the
// ring range [first, last).
void stroke_rings(BinaryMask& m, const RadialContour& contour, std::size_t first,
                  std::size_t last, int pos_x, int pos_y, double radius, CanvasSize canvas) {
    const double rr = radius * radius;
    for (std::size_t r = first; r < last; ++r) {
        const Polygon& poly = contour.rings[r];
        const std::size_t n = poly.size();
        for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
            const Vec2 a = poly[j];
            const Vec2 b = poly[i];
            const PixelBox box =
                clip_box(std::min(a.x, b.x) - radius, std::min(a.y, b.y) - radius,
                         std::max(a.x, b.x) + radius, std::max(a.y, b.y) + radius, pos_x, pos_y,
                         canvas);
            grow_bounds(m, box);
            for (int y = box.y0; y < box.y1; ++y) {
                const double ly = (y + 0.5) - pos_y;
                std::uint8_t* row = m.bits.data() + static_cast<std::size_t>(y) * m.width;
                for (int x = box.x0; x < box.x1; ++x) {
                    const double lx = (x + 0.5) - pos_x;
                    if (dist_sq_to_segment({lx, ly}, a, b) <= rr) row[x] = 1;
                }
            }
        }
    }
}

// Visits every pixel whose center is even-odd interior to the polygon.
// Crossing abscissas per row come from edge_crosses_row, so the decisions
// match point_in_polygon bit for bit.
template <typename Visit>
void scan_interior(const Polygon& poly, int pos_x, int pos_y, CanvasSize canvas, Visit&& visit) {
    const Bounds b = polygon_bounds(poly);
    const PixelBox box = clip_box(b.min_x, b.min_y, b.max_x, b.max_y, pos_x, pos_y, canvas);
    if (box.empty()) return;

    std::vector<double> crossings;
    crossings.reserve(poly.size());
    const std::size_t n = poly.size();
    for (int y = box.y0; y < box.y1; ++y) {
        const double ly = (y + 0.5) - pos_y;
        crossings.clear();
        for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
            double xc;
            if (edge_crosses_row(poly[j], poly[i], ly, &xc)) crossings.push_back(xc);
        }
        if (crossings.empty()) continue;
        std::sort(crossings.begin(), crossings.end());

        std::size_t k = 0;
        for (int x = box.x0; x < box.x1; ++x) {
            const double lx = (x + 0.5) - pos_x;
            while (k < crossings.size() && crossings[k] < lx) ++k;
            if (k & 1) visit(x, y);
        }
    }
}

BinaryMask fill_impl(const RadialContour& contour, int pos_x, int pos_y, int line_width,
                     CanvasSize canvas) {
    BinaryMask m = make_mask(canvas);
    const Polygon& outer = contour.rings.back();
    const Bounds b = polygon_bounds(outer);
    grow_bounds(m, clip_box(b.min_x, b.min_y, b.max_x, b.max_y, pos_x, pos_y, canvas));
    scan_interior(outer, pos_x, pos_y, canvas, [&](int x, int y) {
        m.bits[static_cast<std::size_t>(y) * m.width + x] = 1;
    });
    stroke_rings(m, contour, contour.rings.size() - 1, contour.rings.size(), pos_x, pos_y,
                 line_width * 0.5, canvas);
    return m;
}

}  // namespace

BinaryMask raster_skeleton(const RadialContour& contour, int pos_x, int pos_y, int line_width,
                           CanvasSize canvas) {
    check_args(line_width, canvas);
    BinaryMask m = make_mask(canvas);
    stroke_rings(m, contour, 0, contour.rings.size(), pos_x, pos_y, line_width * 0.5, canvas);
    return m;
}

BinaryMask raster_fill(const RadialContour& contour, int pos_x, int pos_y, int line_width,
                       CanvasSize canvas) {
    check_args(line_width, canvas);
    return fill_impl(contour, pos_x, pos_y, line_width, canvas);
}

BinaryMask raster_ring(const RadialContour& contour, int pos_x, int pos_y, int line_width,
                       CanvasSize canvas) {
    check_args(line_width, canvas);
    BinaryMask m = fill_impl(contour, pos_x, pos_y, line_width, canvas);

    // Carve out the strict interior of the innermost ring, keeping its
    // stroke band. For a single ring this leaves exactly the band.
    const Polygon& inner = contour.rings.front();
    BinaryMask band = make_mask(canvas);
    stroke_rings(band, contour, 0, 1, pos_x, pos_y, line_width * 0.5, canvas);
    scan_interior(inner, pos_x, pos_y, canvas, [&](int x, int y) {
        const std::size_t idx = static_cast<std::size_t>(y) * m.width + x;
        if (!band.bits[idx]) m.bits[idx] = 0;
    });
    return m;
}

BinaryMask oracle_rasterize(const RadialContour& contour, int pos_x, int pos_y, MaskType type,
                            int line_width, CanvasSize canvas) {
    check_args(line_width, canvas);
    BinaryMask m = make_mask(canvas);
    m.bound_x1 = canvas.width;
    m.bound_y1 = canvas.height;

    const double rr = (line_width * 0.5) * (line_width * 0.5);
    const Polygon& outer = contour.rings.back();
    const Polygon& inner = contour.rings.front();

    for (int y = 0; y < canvas.height; ++y) {
        const double ly = (y + 0.5) - pos_y;
        for (int x = 0; x < canvas.width; ++x) {
            const Vec2 p{(x + 0.5) - pos_x, ly};
            bool hit = false;
            switch (type) {
                case MaskType::skeleton:
                    for (const Polygon& ring : contour.rings) {
                        if (dist_sq_to_polygon(p, ring) <= rr) {
                            hit = true;
                            break;
                        }
                    }
                    break;
                case MaskType::fill:
                    hit = point_in_polygon(p, outer) || dist_sq_to_polygon(p, outer) <= rr;
                    break;
                case MaskType::ring:
                    hit = (point_in_polygon(p, outer) || dist_sq_to_polygon(p, outer) <= rr) &&
                          (!point_in_polygon(p, inner) || dist_sq_to_polygon(p, inner) <= rr);
                    break;
            }
            if (hit) m.bits[static_cast<std::size_t>(y) * m.width + x] = 1;
        }
    }
    return m;
}

}  // namespace radseg
