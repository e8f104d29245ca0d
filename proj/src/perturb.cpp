#include "radseg/perturb.hpp"

#include <cmath>

namespace radseg {

RadialContour shift_vertices(const RadialContour& contour, int magnitude, Rng& rng) {
    if (magnitude == 0) return contour;

    RadialContour out = contour;
    const int ring_count = static_cast<int>(out.rings.size());
    Polygon base = contour.rings.back();
    for (Vec2& v : base) {
        // dx then dy per vertex.
        const double dx = rng.next_range(-magnitude, magnitude);
        const double dy = rng.next_range(-magnitude, magnitude);
        v.x += dx;
        v.y += dy;
    }
    for (int k = 1; k <= ring_count; ++k) {
        const double scale = static_cast<double>(k) / ring_count;
        Polygon& ring = out.rings[k - 1];
        for (std::size_t i = 0; i < ring.size(); ++i) ring[i] = base[i] * scale;
    }
    return out;
}

RadialContour inflate_region(const RadialContour& contour, int magnitude) {
    if (magnitude == 0) return contour;

    RadialContour out = contour;
    for (Polygon& ring : out.rings) {
        for (Vec2& v : ring) {
            const double len = std::sqrt(v.x * v.x + v.y * v.y);
            if (len > 0.0) v = v * ((len + magnitude) / len);
        }
    }
    return out;
}

RadialContour apply_perturbation(const RadialContour& contour, PerturbSpec spec,
                                 std::uint64_t seed) {
    switch (spec.mode) {
        case PerturbMode::none:
            return contour;
        case PerturbMode::shift: {
            Rng rng(seed);
            return shift_vertices(contour, spec.magnitude, rng);
        }
        case PerturbMode::inflation:
            return inflate_region(contour, spec.magnitude);
    }
    return contour;
}

}  // namespace radseg
