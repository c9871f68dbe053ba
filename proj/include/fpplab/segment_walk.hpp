#pragma once

// Tile walk along a straight segment and the edge census around it.

#include "fpplab/delaunay.hpp"
#include "fpplab/voronoi.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace fpplab {

struct SegmentPath {
    std::vector<int> vertices; // tiles traversed by [x, y], in order
    int perturbations = 0;     // times the target was nudged off a degeneracy
    Vec2 effective_target;
};

/// Sequence of Voronoi tiles crossed by the segment [x, y]: starts at
/// locate(x), ends at locate(y), consecutive tiles are Delaunay neighbors.
/// When the segment hits a Voronoi vertex exactly the target is perturbed
/// by a declared epsilon and the walk restarts, with the retry recorded.
inline SegmentPath segment_path(Vec2 x, Vec2 y, const DelaunayGraph& g) {
    SegmentPath out;
    const double seg_len = dist(x, y);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Vec2 target = y;
        if (attempt > 0) {
            const Vec2 d = y - x;
            const Vec2 perp = seg_len > 0 ? Vec2{-d.y / seg_len, d.x / seg_len} : Vec2{1.0, 0.0};
            target = y + (1e-9 * std::max(seg_len, 1.0) * attempt) * perp;
        }
        out.vertices.clear();
        out.effective_target = target;
        int v = g.locate(x);
        const int end = g.locate(target);
        out.vertices.push_back(v);
        if (v == end) return out;

        const Vec2 dir = target - x;
        double t_cur = 0.0;
        bool degenerate = false;
        const std::size_t cap = g.points.size() * 4 + 16;
        while (v != end && out.vertices.size() < cap) {
            double best_t = std::numeric_limits<double>::infinity();
            double second_t = best_t;
            int best_u = -1;
            for (int u : g.adjacency[v]) {
                const Vec2 uv = g.points[u] - g.points[v];
                const double a = dot(dir, uv);
                if (a <= 0.0) continue; // bisector never crossed forward
                const Vec2 mid = 0.5 * (g.points[u] + g.points[v]);
                const double t = dot(mid - x, uv) / a;
                if (t < t_cur - 1e-15) continue;
                if (t < best_t) {
                    second_t = best_t;
                    best_t = t;
                    best_u = u;
                } else if (t < second_t) {
                    second_t = t;
                }
            }
            if (best_u < 0) {
                degenerate = true; // numerically stuck short of the target tile
                break;
            }
            if (std::isfinite(second_t) && second_t - best_t < 1e-12 * (1.0 + std::fabs(best_t))) {
                degenerate = true; // passes through (or near) a Voronoi vertex
                break;
            }
            v = best_u;
            t_cur = best_t;
            out.vertices.push_back(v);
        }
        if (!degenerate && v == end) {
            out.perturbations = attempt;
            return out;
        }
    }
    throw std::runtime_error("segment_path: degenerate crossing persisted after perturbation");
}

namespace detail {

inline bool point_in_rect(Vec2 p, Vec2 lo, Vec2 hi) {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
}

inline bool point_in_convex(const std::vector<Vec2>& poly, Vec2 p) {
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2 a = poly[i], b = poly[(i + 1) % m];
        if (cross(b - a, p - a) < -1e-12 * (norm(b - a) + 1.0)) return false;
    }
    return true;
}

inline bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    auto side = [](Vec2 p, Vec2 q, Vec2 r) {
        const double v = cross(q - p, r - p);
        return (v > 0) - (v < 0);
    };
    const int s1 = side(a, b, c), s2 = side(a, b, d);
    const int s3 = side(c, d, a), s4 = side(c, d, b);
    if (s1 * s2 < 0 && s3 * s4 < 0) return true;
    auto on_seg = [](Vec2 p, Vec2 q, Vec2 r) {
        return std::fabs(cross(q - p, r - p)) <= 1e-12 * (norm(q - p) + 1.0) &&
               std::min(p.x, q.x) - 1e-12 <= r.x && r.x <= std::max(p.x, q.x) + 1e-12 &&
               std::min(p.y, q.y) - 1e-12 <= r.y && r.y <= std::max(p.y, q.y) + 1e-12;
    };
    return on_seg(a, b, c) || on_seg(a, b, d) || on_seg(c, d, a) || on_seg(c, d, b);
}

inline bool convex_meets_rect(const std::vector<Vec2>& poly, Vec2 lo, Vec2 hi) {
    for (Vec2 p : poly) {
        if (point_in_rect(p, lo, hi)) return true;
    }
    const Vec2 corners[4] = {lo, {hi.x, lo.y}, hi, {lo.x, hi.y}};
    for (Vec2 c : corners) {
        if (point_in_convex(poly, c)) return true;
    }
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (int k = 0; k < 4; ++k) {
            if (segments_intersect(poly[i], poly[(i + 1) % m], corners[k], corners[(k + 1) % 4]))
                return true;
        }
    }
    return false;
}

/// Does the tile of v meet the rectangle? Works for unbounded tiles too:
/// the tile is exactly the intersection of the bisector halfplanes toward
/// the Delaunay neighbors, so clip the rectangle by them and test for a
/// nonempty remainder.
inline bool tile_meets_rect_by_clipping(const DelaunayGraph& g, int v, Vec2 lo, Vec2 hi) {
    std::vector<Vec2> poly = {lo, {hi.x, lo.y}, hi, {lo.x, hi.y}};
    std::vector<Vec2> next;
    const Vec2 pv = g.points[v];
    for (int u : g.adjacency[v]) {
        const Vec2 pu = g.points[u];
        // keep p with |p-pv|^2 <= |p-pu|^2, i.e. f(p) = 2 p.(pu-pv) - (|pu|^2-|pv|^2) <= 0
        const Vec2 n = pu - pv;
        const double c = norm2(pu) - norm2(pv);
        auto f = [&](Vec2 p) { return 2.0 * dot(p, n) - c; };
        next.clear();
        const std::size_t m = poly.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Vec2 a = poly[i], b = poly[(i + 1) % m];
            const double fa = f(a), fb = f(b);
            if (fa <= 0) next.push_back(a);
            if ((fa < 0 && fb > 0) || (fa > 0 && fb < 0)) {
                const double t = fa / (fa - fb);
                next.push_back(a + t * (b - a));
            }
        }
        poly = next;
        if (poly.empty()) return false;
    }
    return true;
}

} // namespace detail

struct EdgeCensus {
    std::vector<int> edge_ids;
    std::size_t count() const { return edge_ids.size(); }
};

/// Edges with an endpoint tile meeting the unit-thickened segment
/// [0, n e1]: the union of unit boxes centered on the segment, i.e. the
/// rectangle [-1/2, n+1/2] x [-1/2, 1/2].
inline EdgeCensus edge_census(double n, const DelaunayGraph& g, const VoronoiTessellation& vor) {
    if (n < 0) throw std::invalid_argument("edge_census: n must be >= 0");
    const Vec2 lo{-0.5, -0.5}, hi{n + 0.5, 0.5};
    if (!g.window.inner_contains({n, 0.0}) || !g.window.inner_contains({0.0, 0.0}))
        throw std::invalid_argument("edge_census: segment leaves the inner window");

    const int nv = static_cast<int>(g.points.size());
    std::vector<char> meets(nv, 0);
    for (int v = 0; v < nv; ++v) {
        if (vor.tiles[v].bounded)
            meets[v] = detail::convex_meets_rect(vor.tile_polygon(v), lo, hi) ? 1 : 0;
        else
            meets[v] = detail::tile_meets_rect_by_clipping(g, v, lo, hi) ? 1 : 0;
    }

    EdgeCensus out;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (meets[g.edges[e].first] || meets[g.edges[e].second])
            out.edge_ids.push_back(static_cast<int>(e));
    }
    return out;
}

} // namespace fpplab
