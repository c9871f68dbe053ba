#pragma once

#include "fpplab/vec2.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpplab {

/// Square simulation window [-R, R]^2. Statistics only use the inner
/// window [-(1-f)R, (1-f)R]^2; the outer margin absorbs boundary-distorted
/// tiles.
struct SimWindow {
    double half_width = 50.0;
    double buffer_fraction = 0.2;

    SimWindow() = default;
    SimWindow(double half_width_, double buffer_fraction_ = 0.2)
        : half_width(half_width_), buffer_fraction(buffer_fraction_) {
        validate();
    }

    void validate() const {
        if (!(half_width > 0.0)) throw std::invalid_argument("window half_width must be > 0");
        if (!(buffer_fraction > 0.0 && buffer_fraction < 1.0))
            throw std::invalid_argument("window buffer_fraction must be in (0,1)");
    }

    double area() const { return 4.0 * half_width * half_width; }
    double inner_half_width() const { return (1.0 - buffer_fraction) * half_width; }

    bool contains(Vec2 p) const {
        return std::max(std::fabs(p.x), std::fabs(p.y)) <= half_width;
    }
    bool inner_contains(Vec2 p) const {
        return std::max(std::fabs(p.x), std::fabs(p.y)) <= inner_half_width();
    }

    /// Chebyshev annulus just inside the inner window, one buffer width
    /// thick. "Survives to the boundary" surrogates test tile ownership here.
    bool in_boundary_annulus(Vec2 p) const {
        const double r = std::max(std::fabs(p.x), std::fabs(p.y));
        return r <= inner_half_width() &&
               r >= inner_half_width() - buffer_fraction * half_width;
    }

    /// Largest radius s such that s*e^{i alpha} stays in the inner window.
    double max_ray_radius(double alpha) const {
        const double m = std::max(std::fabs(std::cos(alpha)), std::fabs(std::sin(alpha)));
        return inner_half_width() / m;
    }
};

} // namespace fpplab
