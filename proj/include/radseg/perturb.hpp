#pragma once

#include <cstdint>

#include "radseg/contour.hpp"
#include "radseg/rng.hpp"

namespace radseg {

// Annotation-corruption models, applied to the mask-generation geometry
// only; the rendered image never sees them.
enum class PerturbMode { none, shift, inflation };

struct PerturbSpec {
    PerturbMode mode = PerturbMode::none;
    int magnitude = 0;  // px
};

// Displaces each base-shape vertex by an independent uniform draw from
// [-magnitude, magnitude]^2, then rebuilds the concentric rings, so all
// rings shift coherently. magnitude 0 is a bit-exact identity.
RadialContour shift_vertices(const RadialContour& contour, int magnitude, Rng& rng);

// Moves every vertex of every ring radially outward by exactly magnitude
// pixels. Deterministic; magnitude 0 is a bit-exact identity; the enclosed
// region grows monotonically with magnitude.
RadialContour inflate_region(const RadialContour& contour, int magnitude);

RadialContour apply_perturbation(const RadialContour& contour, PerturbSpec spec,
                                 std::uint64_t seed);

}  // namespace radseg
