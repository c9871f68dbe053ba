#pragma once

// Voronoi tessellation as the dual of the Delaunay triangulation: one
// Voronoi vertex per finite triangle (its circumcenter), one Voronoi edge
// per interior Delaunay edge, one tile per Delaunay vertex. Hull-vertex
// tiles are unbounded; they are flagged and excluded from tile statistics
// rather than clipped.

#include "fpplab/delaunay.hpp"

#include <vector>

namespace fpplab {

struct VoronoiTile {
    std::vector<int> ring; // triangle ids, counterclockwise around the vertex
    bool bounded = false;
};

struct VoronoiEdge {
    int delaunay_edge = -1;
    int t1 = -1;
    int t2 = -1; // -1: dual of a hull edge, unbounded
    bool bounded() const { return t2 >= 0; }
};

struct VoronoiTessellation {
    std::vector<Vec2> vertices; // circumcenter per triangle id
    std::vector<VoronoiTile> tiles;
    std::vector<VoronoiEdge> edges; // indexed like DelaunayGraph::edges

    std::vector<Vec2> tile_polygon(int v) const {
        std::vector<Vec2> poly;
        poly.reserve(tiles[v].ring.size());
        for (int t : tiles[v].ring) poly.push_back(vertices[t]);
        return poly;
    }
};

inline VoronoiTessellation voronoi_dual(const DelaunayGraph& g) {
    VoronoiTessellation vor;
    vor.vertices.reserve(g.triangles.size());
    for (const auto& t : g.triangles) vor.vertices.push_back(t.circumcenter);

    vor.edges.resize(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        vor.edges[e].delaunay_edge = static_cast<int>(e);
        vor.edges[e].t1 = g.edge_tris[e].first;
        vor.edges[e].t2 = g.edge_tris[e].second;
    }

    const int n = static_cast<int>(g.points.size());
    vor.tiles.resize(n);
    for (int v = 0; v < n; ++v) {
        if (g.on_hull[v] || g.vertex_tri[v] < 0) continue; // unbounded, ring left partial
        VoronoiTile& tile = vor.tiles[v];
        const int start = g.vertex_tri[v];
        int cur = start;
        do {
            tile.ring.push_back(cur);
            const auto& tv = g.triangles[cur].v;
            int local = tv[0] == v ? 0 : (tv[1] == v ? 1 : 2);
            // counterclockwise around v: cross the edge (v, tv[local+2]),
            // which is the edge opposite tv[local+1]
            cur = g.tri_nbr[cur][(local + 1) % 3];
        } while (cur >= 0 && cur != start && tile.ring.size() <= g.triangles.size());
        tile.bounded = (cur == start);
        if (!tile.bounded) tile.ring.clear();
    }
    return vor;
}

/// Convexity audit over bounded tiles: consecutive edge cross products must
/// not go negative beyond rounding noise in the circumcenters.
inline bool audit_tile_convexity(const VoronoiTessellation& vor) {
    for (const auto& tile : vor.tiles) {
        if (!tile.bounded) continue;
        const std::size_t m = tile.ring.size();
        if (m < 3) return false;
        for (std::size_t i = 0; i < m; ++i) {
            const Vec2 a = vor.vertices[tile.ring[i]];
            const Vec2 b = vor.vertices[tile.ring[(i + 1) % m]];
            const Vec2 c = vor.vertices[tile.ring[(i + 2) % m]];
            const Vec2 e1 = b - a, e2 = c - b;
            const double cr = cross(e1, e2);
            if (cr < -1e-9 * (norm(e1) * norm(e2) + 1e-300)) return false;
        }
    }
    return true;
}

} // namespace fpplab
