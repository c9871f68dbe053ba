#pragma once

// k-species competition: every vertex is conquered by the species whose
// seed reaches it first. Seeds landing in an occupied tile get an empty
// region (only the earliest-indexed seed of a tile competes).

#include "fpplab/shortest_path.hpp"
#include "fpplab/window.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace fpplab {

struct SeedSet {
    enum class Layout { free_form, regular_polygon };

    std::vector<Vec2> seeds;
    Layout layout = Layout::free_form;
    double polygon_radius = 0.0;

    int k() const { return static_cast<int>(seeds.size()); }

    /// Vertices of a regular k-gon of radius r with the first seed at (0, r).
    static SeedSet polygon(int k, double r) {
        if (k < 1) throw std::invalid_argument("seed polygon needs k >= 1");
        if (!(r > 0.0)) throw std::invalid_argument("seed polygon needs r > 0");
        SeedSet s;
        s.layout = Layout::regular_polygon;
        s.polygon_radius = r;
        for (int j = 0; j < k; ++j) {
            const double a = M_PI / 2.0 + 2.0 * M_PI * j / k;
            s.seeds.push_back({r * std::cos(a), r * std::sin(a)});
        }
        return s;
    }

    static SeedSet free_form(std::vector<Vec2> pts) {
        SeedSet s;
        s.seeds = std::move(pts);
        return s;
    }

    void validate(const SimWindow& w) const {
        if (seeds.empty()) throw std::invalid_argument("seed set is empty");
        for (const Vec2& p : seeds) {
            if (!w.inner_contains(p))
                throw std::invalid_argument("seed outside the inner window");
        }
        for (std::size_t i = 0; i < seeds.size(); ++i) {
            for (std::size_t j = i + 1; j < seeds.size(); ++j) {
                if (seeds[i] == seeds[j]) throw std::invalid_argument("seeds must be distinct");
            }
        }
    }
};

struct CompetitionLabeling {
    int k = 0;
    std::vector<int> label;       // winning species per vertex
    std::vector<double> arrival;  // min_l T(x_l, v)
    std::vector<char> tie;        // exact argmin tie (smallest index wins)
    std::vector<int> seed_vertex; // locate(x_j)
    std::vector<char> collided;   // species whose seed shares a tile with an earlier one
    std::vector<FppField> fields; // per-species first-passage fields
};

inline CompetitionLabeling compete(const DelaunayGraph& g, const EdgeWeights& w,
                                   const SeedSet& seeds) {
    seeds.validate(g.window);
    CompetitionLabeling lab;
    lab.k = seeds.k();
    lab.seed_vertex.resize(lab.k);
    lab.collided.assign(lab.k, 0);
    for (int j = 0; j < lab.k; ++j) {
        lab.seed_vertex[j] = g.locate(seeds.seeds[j]);
        for (int i = 0; i < j; ++i) {
            if (lab.seed_vertex[i] == lab.seed_vertex[j]) lab.collided[j] = 1;
        }
    }

    const ShortestPathEngine engine(g, w);
    lab.fields.reserve(lab.k);
    for (int j = 0; j < lab.k; ++j) lab.fields.push_back(engine.run(lab.seed_vertex[j]));

    const int n = static_cast<int>(g.points.size());
    lab.label.assign(n, -1);
    lab.arrival.assign(n, 0.0);
    lab.tie.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        int best = -1;
        double bt = std::numeric_limits<double>::infinity();
        bool tie = false;
        for (int j = 0; j < lab.k; ++j) {
            if (lab.collided[j]) continue;
            const double t = lab.fields[j].dist[v];
            if (t < bt) {
                bt = t;
                best = j;
                tie = false;
            } else if (t == bt) {
                tie = true; // measure-zero for continuous laws; fixtures only
            }
        }
        lab.label[v] = best;
        lab.arrival[v] = bt;
        lab.tie[v] = tie ? 1 : 0;
    }
    return lab;
}

/// Finite-window survival surrogate: the species owns a tile whose vertex
/// falls in the boundary annulus of the inner window.
inline std::vector<bool> coexistence(const CompetitionLabeling& lab, const DelaunayGraph& g) {
    std::vector<bool> survives(lab.k, false);
    for (std::size_t v = 0; v < g.points.size(); ++v) {
        if (g.window.in_boundary_annulus(g.points[v])) survives[lab.label[v]] = true;
    }
    return survives;
}

/// Finite surrogate of "the species sector is eventually owned": species j
/// covers its epsilon-reduced sector when every probe ray in the sector has
/// its outermost inner-window tile labeled j.
inline std::vector<bool> sector_coverage(const CompetitionLabeling& lab, const DelaunayGraph& g,
                                         const SeedSet& seeds, double epsilon,
                                         double grid_step_rad = M_PI / 180.0) {
    if (seeds.layout != SeedSet::Layout::regular_polygon)
        throw std::invalid_argument("sector_coverage needs the regular polygon layout");
    const int k = seeds.k();
    if (!(epsilon >= 0.0 && epsilon < M_PI / k))
        throw std::invalid_argument("sector_coverage needs 0 <= epsilon < pi/k");

    std::vector<bool> covered(k, true);
    const double half = M_PI / k - epsilon;
    for (int j = 0; j < k; ++j) {
        const double axis = std::atan2(seeds.seeds[j].y, seeds.seeds[j].x);
        const int steps = std::max(1, static_cast<int>(std::floor(half / grid_step_rad)));
        for (int s = -steps; s <= steps && covered[j]; ++s) {
            const double beta = axis + s * grid_step_rad;
            const double radius = g.window.max_ray_radius(beta);
            const int tile = g.locate(radius * unit_vector(beta));
            if (lab.label[tile] != j) covered[j] = false;
        }
    }
    return covered;
}

} // namespace fpplab
