#pragma once

// Full-box renormalization grid: a box of side L is "full" when each of its
// 36 congruent sub-boxes (a 6x6 split) holds at least one point. Circuits of
// full boxes confine Voronoi tiles, which the audit below checks directly.

#include "fpplab/point_set.hpp"
#include "fpplab/voronoi.hpp"
#include "fpplab/segment_walk.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fpplab {

struct FullBoxGrid {
    double box_side = 0.0;
    int zx0 = 0, zy0 = 0; // lattice index of grid[0]
    int nx = 0, ny = 0;
    std::vector<char> full;
    double full_fraction = 0.0;

    bool is_full(int zx, int zy) const {
        const int i = zx - zx0, j = zy - zy0;
        if (i < 0 || j < 0 || i >= nx || j >= ny) return false;
        return full[static_cast<std::size_t>(j) * nx + i] != 0;
    }
};

inline FullBoxGrid full_box_grid(const PointSet& ps, double L) {
    if (!(L > 0.0)) throw std::invalid_argument("full_box_grid: L must be > 0");
    const double R = ps.window.half_width;
    // boxes L*z + [-L/2, L/2]^2 fully inside the window
    const int zmax = static_cast<int>(std::floor((R - L / 2.0) / L));
    const int zmin = -zmax;
    FullBoxGrid grid;
    grid.box_side = L;
    grid.zx0 = zmin;
    grid.zy0 = zmin;
    grid.nx = grid.ny = zmax - zmin + 1;
    if (grid.nx <= 0) throw std::invalid_argument("full_box_grid: no box of side L fits the window");

    std::vector<std::uint64_t> occupancy(static_cast<std::size_t>(grid.nx) * grid.ny, 0);
    const double h = L / 6.0;
    for (const Vec2& p : ps.points) {
        const int zx = static_cast<int>(std::floor(p.x / L + 0.5));
        const int zy = static_cast<int>(std::floor(p.y / L + 0.5));
        const int i = zx - grid.zx0, j = zy - grid.zy0;
        if (i < 0 || j < 0 || i >= grid.nx || j >= grid.ny) continue;
        int si = static_cast<int>(std::floor((p.x - (L * zx - L / 2.0)) / h));
        int sj = static_cast<int>(std::floor((p.y - (L * zy - L / 2.0)) / h));
        si = std::min(std::max(si, 0), 5);
        sj = std::min(std::max(sj, 0), 5);
        occupancy[static_cast<std::size_t>(j) * grid.nx + i] |= 1ULL << (sj * 6 + si);
    }
    constexpr std::uint64_t kAll36 = (1ULL << 36) - 1;
    grid.full.resize(occupancy.size());
    std::size_t n_full = 0;
    for (std::size_t k = 0; k < occupancy.size(); ++k) {
        grid.full[k] = occupancy[k] == kAll36 ? 1 : 0;
        n_full += grid.full[k];
    }
    grid.full_fraction = static_cast<double>(n_full) / static_cast<double>(occupancy.size());
    return grid;
}

struct BoxCircuit {
    int i0, i1, j0, j1; // lattice index range; the perimeter boxes form the circuit
};

/// First rectangular circuit of full boxes, scanning smallest rings first.
inline std::optional<BoxCircuit> find_full_rect_circuit(const FullBoxGrid& grid) {
    auto ring_full = [&](int i0, int i1, int j0, int j1) {
        for (int i = i0; i <= i1; ++i) {
            if (!grid.is_full(i, j0) || !grid.is_full(i, j1)) return false;
        }
        for (int j = j0; j <= j1; ++j) {
            if (!grid.is_full(i0, j) || !grid.is_full(i1, j)) return false;
        }
        return true;
    };
    const int lo = grid.zx0, hi = grid.zx0 + grid.nx - 1;
    for (int size = 2; size <= hi - lo; ++size) {
        for (int i0 = lo; i0 + size <= hi; ++i0) {
            for (int j0 = lo; j0 + size <= hi; ++j0) {
                if (ring_full(i0, i0 + size, j0, j0 + size))
                    return BoxCircuit{i0, i0 + size, j0, j0 + size};
            }
        }
    }
    return std::nullopt;
}

struct CircuitAudit {
    int tiles_checked = 0;
    int violations = 0;
    bool pass() const { return tiles_checked > 0 && violations == 0; }
};

/// Confinement property of a circuit of full boxes: every tile meeting the
/// inner open region between the boxes lies inside the polygon through the
/// box centers.
inline CircuitAudit audit_circuit_confinement(const FullBoxGrid& grid, const BoxCircuit& c,
                                              const DelaunayGraph& g,
                                              const VoronoiTessellation& vor) {
    const double L = grid.box_side;
    const Vec2 lam_lo{L * c.i0 + L / 2.0, L * c.j0 + L / 2.0};
    const Vec2 lam_hi{L * c.i1 - L / 2.0, L * c.j1 - L / 2.0};
    const Vec2 center_lo{L * c.i0, L * c.j0};
    const Vec2 center_hi{L * c.i1, L * c.j1};

    CircuitAudit audit;
    for (std::size_t v = 0; v < vor.tiles.size(); ++v) {
        if (!vor.tiles[v].bounded) continue;
        const auto poly = vor.tile_polygon(static_cast<int>(v));
        if (!detail::convex_meets_rect(poly, lam_lo, lam_hi)) continue;
        ++audit.tiles_checked;
        for (const Vec2& p : poly) {
            if (p.x < center_lo.x - 1e-9 || p.x > center_hi.x + 1e-9 || p.y < center_lo.y - 1e-9 ||
                p.y > center_hi.y + 1e-9) {
                ++audit.violations;
                break;
            }
        }
    }
    return audit;
}

} // namespace fpplab
