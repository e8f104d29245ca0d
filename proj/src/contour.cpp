#include "radseg/contour.hpp"

#include <cmath>
#include <numbers>

#include "radseg/errors.hpp"
#include "radseg/noise.hpp"

namespace radseg {

namespace {

Polygon make_base(const CategorySpec& spec, Rng& rng, double& resize_out) {
    // Draw order is a compatibility contract: resize first, then the
    // noise gradients.
    const double resize = rng.next_range(spec.resize_lo, spec.resize_hi);
    const PeriodicGradientNoise noise(spec.noise_frequency, rng);

    const int n = spec.vertex_count;
    Polygon verts;
    verts.reserve(n);
    for (int v = 0; v < n; ++v) {
        const double t = static_cast<double>(v) / n;
        const double theta = 2.0 * std::numbers::pi * t;
        const double radius =
            spec.base_radius * resize * (1.0 + spec.noise_amplitude * noise(t));
        verts.push_back({radius * std::cos(theta), radius * std::sin(theta)});
    }
    resize_out = resize;
    return verts;
}

}  // namespace

Polygon sample_base_polygon(const CategorySpec& spec, Rng& rng) {
    double resize = 1.0;
    return make_base(spec, rng, resize);
}

RadialContour build_radial_contour(const CategorySpec& spec, int ring_count,
                                   std::uint64_t shape_seed) {
    if (ring_count < 1) {
        throw ConfigError("ring_count must be >= 1, got " + std::to_string(ring_count));
    }

    RadialContour contour;
    contour.category_id = spec.category_id;
    contour.shape_seed = shape_seed;

    Rng rng(shape_seed);
    const Polygon base = make_base(spec, rng, contour.resize);

    contour.rings.reserve(ring_count);
    for (int k = 1; k <= ring_count; ++k) {
        const double scale = static_cast<double>(k) / ring_count;  // k == K gives exactly 1.0
        Polygon ring;
        ring.reserve(base.size());
        for (const Vec2& v : base) ring.push_back(v * scale);
        contour.rings.push_back(std::move(ring));
    }
    return contour;
}

}  // namespace radseg
