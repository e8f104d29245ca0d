#pragma once

#include <cstdint>
#include <vector>

#include "radseg/contour.hpp"

namespace radseg {

// Annotation granularities, fine to coarse.
enum class MaskType {
    skeleton,  // m1: stroked outlines of every ring
    ring,      // m2: filled band between the innermost and outermost ring
    fill,      // m3: filled interior of the outermost ring
};

struct CanvasSize {
    int width = 0;
    int height = 0;
};

// Per-instance binary coverage on the scene canvas. bound_* is the
// half-open pixel box the rasterizer may have written inside (everything
// outside is guaranteed zero); it exists to keep compositing cheap and is
// not part of value identity.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;
    int bound_x0 = 0, bound_y0 = 0, bound_x1 = 0, bound_y1 = 0;

    std::uint8_t at(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x]; }
};

// A pixel is on the stroke iff its center is within line_width/2 of some
// ring edge (round caps and joins). Pixel centers sit at (x+0.5, y+0.5);
// all predicates are evaluated in the instance-local frame so integer
// translation is exact. The contour may extend off-canvas; output is
// clipped. line_width must be one of {1, 2, 3}.
BinaryMask raster_skeleton(const RadialContour& contour, int pos_x, int pos_y,
                           int line_width, CanvasSize canvas);

// Filled interior of the outermost ring under the pixel-center even-odd
// rule, plus that ring's stroke band (rendered boundaries are part of the
// region).
BinaryMask raster_fill(const RadialContour& contour, int pos_x, int pos_y,
                       int line_width, CanvasSize canvas);

// fill minus the strict interior of the innermost ring (its stroke band
// stays in). For a single-ring contour this degenerates to the stroked
// outline, i.e. exactly the skeleton mask.
BinaryMask raster_ring(const RadialContour& contour, int pos_x, int pos_y,
                       int line_width, CanvasSize canvas);

// Exhaustive per-pixel evaluation of the same predicates straight off the
// vertex lists: every pixel against every edge, no bounding boxes, no
// scanlines. Bit-identical contract with the fast rasterizers; O(W*H*K*V),
// intended for small canvases.
BinaryMask oracle_rasterize(const RadialContour& contour, int pos_x, int pos_y,
                            MaskType type, int line_width, CanvasSize canvas);

}  // namespace radseg
