#pragma once

#include "fpplab/rng.hpp"
#include "fpplab/vec2.hpp"
#include "fpplab/window.hpp"

#include <stdexcept>
#include <vector>

namespace fpplab {

/// Raised when a sampled or supplied configuration cannot support the
/// requested construction (no points, all collinear, ...). Callers running
/// Monte Carlo campaigns catch it and move to the next replicate index.
struct DegenerateConfiguration : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PointSet {
    std::vector<Vec2> points;
    double intensity = 1.0;
    SimWindow window;
    SeedRecord seed;
};

/// Homogeneous Poisson process on the window: Poisson count, then i.i.d.
/// uniform positions. Deterministic given the seed record.
inline PointSet sample_poisson(const SimWindow& window, double intensity,
                               const SeedRecord& seed) {
    window.validate();
    if (!(intensity > 0.0)) throw std::invalid_argument("intensity must be > 0");

    RngStream stream(seed);
    const double mean = intensity * window.area();
    const std::uint64_t count = stream.next_poisson(mean);
    if (count == 0) throw DegenerateConfiguration("degenerate configuration: zero points sampled");

    PointSet ps;
    ps.intensity = intensity;
    ps.window = window;
    ps.seed = seed;
    ps.points.reserve(count);
    const double r = window.half_width;
    for (std::uint64_t i = 0; i < count; ++i) {
        const double x = stream.next_uniform(-r, r);
        const double y = stream.next_uniform(-r, r);
        ps.points.push_back({x, y});
    }
    return ps;
}

} // namespace fpplab
