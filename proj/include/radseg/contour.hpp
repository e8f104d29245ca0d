#pragma once

#include <cstdint>
#include <vector>

#include "radseg/geom.hpp"
#include "radseg/rng.hpp"
#include "radseg/taxonomy.hpp"

namespace radseg {

// One object instance's geometry: nested polygons, innermost first.
// Builder output satisfies rings[k] == rings.back() * ((k+1) / K) exactly,
// so every ring is strictly inside the next. Perturbed copies (see
// perturb.hpp) may break that relation on purpose.
struct RadialContour {
    std::vector<Polygon> rings;
    std::uint32_t category_id = 0;
    std::uint64_t shape_seed = 0;  // regenerates the instance exactly
    double resize = 1.0;           // resize factor drawn for this instance
};

// Vertex v sits at angle 2*pi*v/V with radius
//   base_radius * resize * (1 + noise_amplitude * noise(v/V)),
// resize drawn once from [resize_lo, resize_hi). Radii are strictly
// positive and angles strictly increasing, so the polygon is simple.
Polygon sample_base_polygon(const CategorySpec& spec, Rng& rng);

// K concentric copies of one base polygon, scaled by k/K about the center.
// Throws ConfigError for ring_count < 1.
RadialContour build_radial_contour(const CategorySpec& spec, int ring_count,
                                   std::uint64_t shape_seed);

}  // namespace radseg
