#pragma once

#include <vector>

#include "radseg/rng.hpp"

namespace radseg {

// 1-D gradient noise on a periodic lattice, for radial perturbation of
// contour vertices. `frequency` lattice cells cover one revolution, so the
// function is seamless at t = 0/1. Values lie in [-1, 1]; lattice points
// evaluate to 0.
class PeriodicGradientNoise {
public:
    PeriodicGradientNoise(int frequency, Rng& rng) : gradients_(frequency) {
        for (double& g : gradients_) g = rng.next_range(-1.0, 1.0);
    }

    // t in [0, 1).
    double operator()(double t) const {
        const int n = static_cast<int>(gradients_.size());
        const double x = t * n;
        const int cell = static_cast<int>(x);
        const double u = x - cell;
        const double g0 = gradients_[cell];
        const double g1 = gradients_[(cell + 1) % n];
        const double f = u * u * u * (u * (u * 6.0 - 15.0) + 10.0);
        // Interpolated ramp product peaks at 1/2; rescale to [-1, 1].
        return 2.0 * ((1.0 - f) * (g0 * u) + f * (g1 * (u - 1.0)));
    }

private:
    std::vector<double> gradients_;
};

}  // namespace radseg
