#pragma once

// Incremental Delaunay triangulation (Bowyer-Watson cavity insertion) with
// exact predicates. The triangulation is closed into a topological sphere
// with one ghost vertex: every convex-hull edge carries a ghost triangle,
// so cavity insertion needs no special hull cases. Cocircular ties resolve
// by symbolic perturbation on point index, which makes the output a pure
// function of the point set (independent of insertion order).

#include "fpplab/point_set.hpp"
#include "fpplab/predicates.hpp"
#include "fpplab/vec2.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace fpplab {

constexpr int kGhostVertex = -1;

struct Triangle {
    std::array<int, 3> v; // counterclockwise
    Vec2 circumcenter;
    double circumradius = 0.0;
};

struct DelaunayGraph {
    std::vector<Vec2> points;
    SimWindow window;
    SeedRecord seed;

    std::vector<std::pair<int, int>> edges; // u < v, lexicographically sorted
    std::vector<Triangle> triangles;
    std::vector<std::array<int, 3>> tri_nbr; // finite neighbor per edge opposite v[i], -1 outside
    std::vector<std::vector<int>> adjacency; // sorted vertex neighbors
    std::vector<std::vector<int>> incident_edges;
    std::vector<std::pair<int, int>> edge_tris; // finite triangles flanking each edge, second -1 on hull
    std::vector<char> on_hull;
    std::vector<int> vertex_tri; // one incident finite triangle per vertex

    std::size_t vertex_count() const { return points.size(); }
    std::size_t edge_count() const { return edges.size(); }

    int edge_id(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = edge_lookup_.find(edge_key(u, v));
        return it == edge_lookup_.end() ? -1 : it->second;
    }

    /// Nearest vertex to x (the Voronoi tile containing x). Greedy descent
    /// over Delaunay neighbors with exact distance comparisons; exact ties
    /// go to the smallest index.
    int locate(Vec2 x, int hint = 0) const {
        if (!window.contains(x)) throw std::invalid_argument("locate: point outside window");
        int v = hint >= 0 && hint < static_cast<int>(points.size()) ? hint : 0;
        for (;;) {
            bool improved = false;
            for (int u : adjacency[v]) {
                if (closer(x, points[u], points[v]) < 0) {
                    v = u;
                    improved = true;
                    break;
                }
            }
            if (!improved) break;
        }
        for (bool changed = true; changed;) {
            changed = false;
            for (int u : adjacency[v]) {
                if (u < v && closer(x, points[u], points[v]) == 0) {
                    v = u;
                    changed = true;
                }
            }
        }
        return v;
    }

    std::unordered_map<std::uint64_t, int> edge_lookup_;
    static std::uint64_t edge_key(int u, int v) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
               static_cast<std::uint32_t>(v);
    }
};

inline Vec2 triangle_circumcenter(Vec2 a, Vec2 b, Vec2 c) {
    const Vec2 d0 = b - a;
    const Vec2 d1 = c - a;
    const double den = 2.0 * cross(d0, d1);
    const double n0 = norm2(d0);
    const double n1 = norm2(d1);
    return {a.x + (d1.y * n0 - d0.y * n1) / den, a.y + (d0.x * n1 - d1.x * n0) / den};
}

namespace detail {

class DelaunayBuilder {
public:
    explicit DelaunayBuilder(const std::vector<Vec2>& pts) : pts_(pts) {}

    // order: processing sequence over point indices (any permutation).
    void run(const std::vector<int>& order) {
        if (pts_.size() < 3) throw DegenerateConfiguration("degenerate configuration: need at least 3 points");
        std::vector<char> used(pts_.size(), 0);
        init_first_triangle(order, used);
        for (int idx : order) {
            if (!used[idx]) insert(idx);
        }
    }

    struct BTri {
        std::array<int, 3> v;
        std::array<int, 3> nbr;
        bool alive = true;
    };
    std::vector<BTri> tris;

private:
    const std::vector<Vec2>& pts_;
    int hint_ = 0;
    std::vector<std::uint32_t> mark_;
    std::uint32_t epoch_ = 0;
    std::vector<int> cavity_;
    std::vector<int> free_;

    bool is_ghost(const BTri& t) const { return t.v[2] == kGhostVertex; }

    int new_tri(int a, int b, int c) {
        int id;
        if (!free_.empty()) {
            id = free_.back();
            free_.pop_back();
            tris[id] = BTri{{a, b, c}, {-1, -1, -1}, true};
        } else {
            id = static_cast<int>(tris.size());
            tris.push_back(BTri{{a, b, c}, {-1, -1, -1}, true});
            mark_.push_back(0);
        }
        return id;
    }

    void init_first_triangle(const std::vector<int>& order, std::vector<char>& used) {
        const int i0 = order[0];
        int i1 = -1, i2 = -1;
        for (std::size_t k = 1; k < order.size() && i1 < 0; ++k) {
            if (pts_[order[k]] != pts_[i0]) i1 = order[k];
        }
        if (i1 < 0) throw DegenerateConfiguration("degenerate configuration: all points coincide");
        for (std::size_t k = 1; k < order.size() && i2 < 0; ++k) {
            const int c = order[k];
            if (c == i1) continue;
            if (orient2d(pts_[i0], pts_[i1], pts_[c]) != 0) i2 = c;
        }
        if (i2 < 0) throw DegenerateConfiguration("degenerate configuration: all points collinear");

        int a = i0, b = i1, c = i2;
        if (orient2d(pts_[a], pts_[b], pts_[c]) < 0) std::swap(b, c);
        const int t = new_tri(a, b, c);
        const int gab = new_tri(b, a, kGhostVertex);
        const int gbc = new_tri(c, b, kGhostVertex);
        const int gca = new_tri(a, c, kGhostVertex);
        // finite: nbr[i] across edge opposite v[i]
        tris[t].nbr = {gbc, gca, gab};
        // ghost (q,p,G) of hull edge (p,q): nbr[2] is the finite triangle,
        // nbr[0] across (p,G) is the ghost entering p, nbr[1] across (G,q)
        // is the ghost leaving q.
        tris[gab].nbr = {gca, gbc, t};
        tris[gbc].nbr = {gab, gca, t};
        tris[gca].nbr = {gbc, gab, t};
        used[a] = used[b] = used[c] = 1;
        hint_ = t;
    }

    bool conflicts(const BTri& t, Vec2 p, int ip) const {
        if (!is_ghost(t)) {
            return incircle_perturbed(pts_[t.v[0]], t.v[0], pts_[t.v[1]], t.v[1],
                                      pts_[t.v[2]], t.v[2], p, ip) > 0;
        }
        // ghost (q,p,G) covers the open halfplane beyond hull edge (p,q)
        const Vec2 q = pts_[t.v[0]];
        const Vec2 pp = pts_[t.v[1]];
        const int o = orient2d(q, pp, p);
        if (o > 0) return true;
        if (o < 0) return false;
        return strictly_inside_segment(pp, q, p);
    }

    // Visibility walk through finite triangles; returns a finite triangle
    // containing p (possibly on its boundary) or the ghost first entered
    // when p is outside the hull.
    int walk(Vec2 p) const {
        int cur = hint_;
        if (is_ghost(tris[cur])) cur = tris[cur].nbr[2];
        int from = -1;
        const std::size_t cap = tris.size() * 4 + 64;
        for (std::size_t steps = 0; steps < cap; ++steps) {
            const BTri& t = tris[cur];
            int next = -1;
            for (int i = 0; i < 3; ++i) {
                const int n = t.nbr[i];
                if (n == from) continue;
                const Vec2 ea = pts_[t.v[(i + 1) % 3]];
                const Vec2 eb = pts_[t.v[(i + 2) % 3]];
                if (orient2d(ea, eb, p) < 0) {
                    next = n;
                    break;
                }
            }
            if (next < 0) return cur;
            if (is_ghost(tris[next])) return next;
            from = cur;
            cur = next;
        }
        throw std::runtime_error("delaunay walk failed to terminate");
    }

    int find_conflict(Vec2 p, int ip) {
        const int t0 = walk(p);
        for (int k = 0; k < 3; ++k) {
            const int v = tris[t0].v[k];
            if (v != kGhostVertex && pts_[v] == p && v != ip)
                throw DegenerateConfiguration("degenerate configuration: duplicate point");
        }
        if (conflicts(tris[t0], p, ip)) return t0;
        // p can sit in a blind spot of the located triangle (e.g. collinear
        // beyond a hull edge); scan outward for the conflict seed.
        ++epoch_;
        std::vector<int> queue{t0};
        mark_[t0] = epoch_;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const BTri& t = tris[queue[qi]];
            for (int n : t.nbr) {
                if (n < 0 || mark_[n] == epoch_ || !tris[n].alive) continue;
                if (conflicts(tris[n], p, ip)) return n;
                mark_[n] = epoch_;
                queue.push_back(n);
            }
        }
        throw std::runtime_error("no conflicting triangle found");
    }

    void insert(int ip) {
        const Vec2 p = pts_[ip];
        const int seed = find_conflict(p, ip);

        ++epoch_;
        cavity_.clear();
        cavity_.push_back(seed);
        mark_[seed] = epoch_;
        for (std::size_t qi = 0; qi < cavity_.size(); ++qi) {
            for (int n : tris[cavity_[qi]].nbr) {
                if (mark_[n] == epoch_) continue;
                if (conflicts(tris[n], p, ip)) {
                    mark_[n] = epoch_;
                    cavity_.push_back(n);
                }
            }
        }

        struct Boundary {
            int a, b, outside;
        };
        std::vector<Boundary> boundary;
        for (int tid : cavity_) {
            const BTri& t = tris[tid];
            for (int i = 0; i < 3; ++i) {
                const int n = t.nbr[i];
                if (mark_[n] == epoch_) continue;
                boundary.push_back({t.v[(i + 1) % 3], t.v[(i + 2) % 3], n});
            }
        }

        for (int tid : cavity_) {
            tris[tid].alive = false;
            free_.push_back(tid);
        }

        std::unordered_map<int, int> by_second, by_third;
        std::vector<int> created;
        created.reserve(boundary.size());
        for (const Boundary& e : boundary) {
            const int id = new_tri(ip, e.a, e.b);
            created.push_back(id);
            by_second[e.a] = id;
            by_third[e.b] = id;
        }
        for (std::size_t k = 0; k < created.size(); ++k) {
            const int id = created[k];
            BTri& t = tris[id];
            const int outside = boundary[k].outside;
            t.nbr[0] = outside;
            // the outside triangle holds the reversed edge (b, a)
            BTri& out = tris[outside];
            for (int i = 0; i < 3; ++i) {
                if (out.v[(i + 1) % 3] == t.v[2] && out.v[(i + 2) % 3] == t.v[1]) {
                    out.nbr[i] = id;
                    break;
                }
            }
            t.nbr[1] = by_second.at(t.v[2]); // across (b, p)
            t.nbr[2] = by_third.at(t.v[1]);  // across (p, a)
        }
        // canonicalize: the ghost vertex always sits at local slot 2. A new
        // triangle (p, G, q) arises when the cavity boundary enters through
        // the ghost; rotate it (and its neighbor slots) into place.
        for (int id : created) {
            BTri& t = tris[id];
            if (t.v[1] == kGhostVertex) {
                t.v = {t.v[2], t.v[0], t.v[1]};
                t.nbr = {t.nbr[2], t.nbr[0], t.nbr[1]};
            }
        }
        for (int id : created) {
            if (!is_ghost(tris[id])) {
                hint_ = id;
                return;
            }
        }
        hint_ = created.front();
    }
};

} // namespace detail

/// Morton (Z-order) processing sequence: spatially coherent insertions keep
/// the locate walk short.
inline std::vector<int> morton_order(const std::vector<Vec2>& pts, const SimWindow& w) {
    std::vector<std::pair<std::uint64_t, int>> keys(pts.size());
    const double scale = 65535.0 / (2.0 * w.half_width);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto q = [&](double c) {
            double t = (c + w.half_width) * scale;
            if (t < 0) t = 0;
            if (t > 65535) t = 65535;
            return static_cast<std::uint32_t>(t);
        };
        std::uint32_t xi = q(pts[i].x), yi = q(pts[i].y);
        std::uint64_t m = 0;
        for (int b = 0; b < 16; ++b) {
            m |= static_cast<std::uint64_t>((xi >> b) & 1u) << (2 * b);
            m |= static_cast<std::uint64_t>((yi >> b) & 1u) << (2 * b + 1);
        }
        keys[i] = {m, static_cast<int>(i)};
    }
    std::sort(keys.begin(), keys.end());
    std::vector<int> order(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) order[i] = keys[i].second;
    return order;
}

inline DelaunayGraph build_delaunay(const PointSet& ps, std::vector<int> order = {}) {
    if (order.empty()) order = morton_order(ps.points, ps.window);
    detail::DelaunayBuilder builder(ps.points);
    builder.run(order);

    DelaunayGraph g;
    g.points = ps.points;
    g.window = ps.window;
    g.seed = ps.seed;
    const int n = static_cast<int>(ps.points.size());
    g.adjacency.resize(n);
    g.incident_edges.resize(n);
    g.on_hull.assign(n, 0);
    g.vertex_tri.assign(n, -1);

    // compact finite triangles
    std::vector<int> remap(builder.tris.size(), -1);
    for (std::size_t i = 0; i < builder.tris.size(); ++i) {
        const auto& t = builder.tris[i];
        if (!t.alive) continue;
        if (t.v[2] == kGhostVertex) {
            g.on_hull[t.v[0]] = 1;
            g.on_hull[t.v[1]] = 1;
            continue;
        }
        remap[i] = static_cast<int>(g.triangles.size());
        Triangle tri;
        tri.v = t.v;
        tri.circumcenter = triangle_circumcenter(ps.points[t.v[0]], ps.points[t.v[1]], ps.points[t.v[2]]);
        tri.circumradius = dist(tri.circumcenter, ps.points[t.v[0]]);
        g.triangles.push_back(tri);
    }
    g.tri_nbr.resize(g.triangles.size());
    for (std::size_t i = 0; i < builder.tris.size(); ++i) {
        if (remap[i] < 0) continue;
        const auto& t = builder.tris[i];
        for (int k = 0; k < 3; ++k) {
            const int nb = t.nbr[k];
            g.tri_nbr[remap[i]][k] = nb >= 0 ? remap[nb] : -1;
            g.vertex_tri[t.v[k]] = remap[i];
        }
    }

    // canonical edge list from triangles
    std::vector<std::pair<int, int>> raw;
    raw.reserve(g.triangles.size() * 3 / 2 + 8);
    for (const auto& t : g.triangles) {
        for (int k = 0; k < 3; ++k) {
            int u = t.v[k], v = t.v[(k + 1) % 3];
            if (u > v) std::swap(u, v);
            raw.emplace_back(u, v);
        }
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    g.edges = std::move(raw);
    g.edge_lookup_.reserve(g.edges.size() * 2);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        g.edge_lookup_[DelaunayGraph::edge_key(g.edges[e].first, g.edges[e].second)] =
            static_cast<int>(e);
        g.adjacency[g.edges[e].first].push_back(g.edges[e].second);
        g.adjacency[g.edges[e].second].push_back(g.edges[e].first);
        g.incident_edges[g.edges[e].first].push_back(static_cast<int>(e));
        g.incident_edges[g.edges[e].second].push_back(static_cast<int>(e));
    }
    for (auto& a : g.adjacency) std::sort(a.begin(), a.end());

    g.edge_tris.assign(g.edges.size(), {-1, -1});
    for (std::size_t ti = 0; ti < g.triangles.size(); ++ti) {
        const auto& t = g.triangles[ti];
        for (int k = 0; k < 3; ++k) {
            const int e = g.edge_id(t.v[k], t.v[(k + 1) % 3]);
            auto& slot = g.edge_tris[e];
            if (slot.first < 0)
                slot.first = static_cast<int>(ti);
            else
                slot.second = static_cast<int>(ti);
        }
    }
    return g;
}

/// Exhaustive empty-circumcircle audit: every (triangle, other vertex) pair
/// must test outside-or-on. Intended for n <= a few thousand.
inline bool audit_empty_circumcircle(const DelaunayGraph& g) {
    const int n = static_cast<int>(g.points.size());
    for (const auto& t : g.triangles) {
        for (int d = 0; d < n; ++d) {
            if (d == t.v[0] || d == t.v[1] || d == t.v[2]) continue;
            if (incircle(g.points[t.v[0]], g.points[t.v[1]], g.points[t.v[2]], g.points[d]) > 0)
                return false;
        }
    }
    return true;
}

} // namespace fpplab
