#pragma once

// First-passage distances: label-setting shortest paths on nonnegative
// weights, geodesics via parent pointers, the geodesic tree, and the
// unit-weight graph metric.

#include "fpplab/delaunay.hpp"
#include "fpplab/passage_time.hpp"

#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace fpplab {

struct FppField {
    int source = -1;
    std::vector<double> dist;
    std::vector<int> parent_vertex; // -1 at the source
    std::vector<int> parent_edge;
    std::vector<char> tie_flag; // an exactly equal alternative parent existed
    bool any_tie = false;
};

/// CSR adjacency over an edge list; reusable across sources.
class ShortestPathEngine {
public:
    ShortestPathEngine(int n, const std::vector<std::pair<int, int>>& edges,
                       const std::vector<double>& weights)
        : n_(n), weights_(weights) {
        if (edges.size() != weights.size())
            throw std::invalid_argument("weight count must equal edge count");
        std::vector<int> deg(n_, 0);
        for (const auto& [u, v] : edges) {
            ++deg[u];
            ++deg[v];
        }
        offset_.assign(n_ + 1, 0);
        for (int v = 0; v < n_; ++v) offset_[v + 1] = offset_[v] + deg[v];
        head_.resize(offset_[n_]);
        edge_id_.resize(offset_[n_]);
        std::vector<int> cursor(offset_.begin(), offset_.end() - 1);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const auto [u, v] = edges[e];
            head_[cursor[u]] = v;
            edge_id_[cursor[u]++] = static_cast<int>(e);
            head_[cursor[v]] = u;
            edge_id_[cursor[v]++] = static_cast<int>(e);
        }
    }

    ShortestPathEngine(const DelaunayGraph& g, const EdgeWeights& w)
        : ShortestPathEngine(static_cast<int>(g.points.size()), g.edges, w.weight) {}

    FppField run(int source) const {
        if (source < 0 || source >= n_) throw std::invalid_argument("source out of range");
        FppField f;
        f.source = source;
        f.dist.assign(n_, std::numeric_limits<double>::infinity());
        f.parent_vertex.assign(n_, -1);
        f.parent_edge.assign(n_, -1);
        f.tie_flag.assign(n_, 0);

        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        f.dist[source] = 0.0;
        heap.push({0.0, source});
        std::vector<char> done(n_, 0);
        while (!heap.empty()) {
            const auto [d, u] = heap.top();
            heap.pop();
            if (done[u]) continue;
            done[u] = 1;
            for (int k = offset_[u]; k < offset_[u + 1]; ++k) {
                const int v = head_[k];
                if (done[v]) continue;
                const int e = edge_id_[k];
                const double nd = d + weights_[e];
                if (nd < f.dist[v]) {
                    f.dist[v] = nd;
                    f.parent_vertex[v] = u;
                    f.parent_edge[v] = e;
                    heap.push({nd, v});
                } else if (nd == f.dist[v] && e != f.parent_edge[v]) {
                    // ties cannot happen under a continuous law; fixtures may
                    // produce them, resolved toward the smaller edge id
                    f.tie_flag[v] = 1;
                    f.any_tie = true;
                    if (e < f.parent_edge[v]) {
                        f.parent_vertex[v] = u;
                        f.parent_edge[v] = e;
                        heap.push({nd, v});
                    }
                }
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (!done[v]) throw std::runtime_error("single_source: graph is disconnected");
        }
        return f;
    }

    int vertex_count() const { return n_; }

private:
    int n_;
    std::vector<double> weights_;
    std::vector<int> offset_, head_, edge_id_;
};

inline FppField single_source(const DelaunayGraph& g, const EdgeWeights& w, int source) {
    return ShortestPathEngine(g, w).run(source);
}

/// Geodesic from the field's source to target, source first.
inline std::vector<int> geodesic(const FppField& f, int target) {
    std::vector<int> path;
    for (int v = target; v >= 0; v = f.parent_vertex[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

inline double path_time(const std::vector<int>& path, const DelaunayGraph& g,
                        const EdgeWeights& w) {
    double t = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const int e = g.edge_id(path[i], path[i + 1]);
        if (e < 0) throw std::invalid_argument("path_time: not an edge path");
        t += w.weight[e];
    }
    return t;
}

/// Geodesic tree with O(1) subtree membership (Euler intervals).
struct GeodesicTree {
    int source = -1;
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    std::vector<int> tin, tout;

    /// True when the geodesic from the source to v passes through anchor.
    bool passes_through(int anchor, int v) const {
        return tin[anchor] <= tin[v] && tout[v] <= tout[anchor];
    }

    /// R_out(source, anchor): all vertices whose geodesic passes anchor.
    std::vector<int> subtree(int anchor) const {
        std::vector<int> out;
        std::vector<int> stack{anchor};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            out.push_back(v);
            for (int c : children[v]) stack.push_back(c);
        }
        return out;
    }
};

inline GeodesicTree geodesic_tree(const FppField& f) {
    const int n = static_cast<int>(f.dist.size());
    GeodesicTree t;
    t.source = f.source;
    t.parent = f.parent_vertex;
    t.children.assign(n, {});
    for (int v = 0; v < n; ++v) {
        if (f.parent_vertex[v] >= 0) t.children[f.parent_vertex[v]].push_back(v);
    }
    t.tin.assign(n, 0);
    t.tout.assign(n, 0);
    int clock = 0;
    // iterative DFS: (vertex, child cursor)
    std::vector<std::pair<int, std::size_t>> stack{{f.source, 0}};
    t.tin[f.source] = clock++;
    while (!stack.empty()) {
        auto& [v, cur] = stack.back();
        if (cur < t.children[v].size()) {
            const int c = t.children[v][cur++];
            t.tin[c] = clock++;
            stack.push_back({c, 0});
        } else {
            t.tout[v] = clock++;
            stack.pop_back();
        }
    }
    return t;
}

/// Maximal root-to-leaf tree paths whose leaf leaves the inner window (the
/// finite-window surrogate of a semi-infinite path).
inline std::vector<std::vector<int>> boundary_reaching_paths(const GeodesicTree& t,
                                                             const DelaunayGraph& g) {
    std::vector<std::vector<int>> paths;
    const double inner = g.window.inner_half_width();
    for (std::size_t v = 0; v < t.children.size(); ++v) {
        if (!t.children[v].empty()) continue; // leaves only
        const Vec2 p = g.points[v];
        if (std::max(std::fabs(p.x), std::fabs(p.y)) < inner) continue;
        std::vector<int> path;
        for (int u = static_cast<int>(v); u >= 0; u = t.parent[u]) path.push_back(u);
        std::reverse(path.begin(), path.end());
        paths.push_back(std::move(path));
    }
    return paths;
}

/// Unit-weight graph metric between point sets: minimum hop count between a
/// tile meeting A and a tile meeting B (breadth-first search).
inline int graph_distance(const DelaunayGraph& g, const std::vector<Vec2>& a,
                          const std::vector<Vec2>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("graph_distance: empty point set");
    const int n = static_cast<int>(g.points.size());
    std::vector<int> hops(n, -1);
    std::vector<int> frontier;
    for (const Vec2& p : a) {
        const int v = g.locate(p);
        if (hops[v] < 0) {
            hops[v] = 0;
            frontier.push_back(v);
        }
    }
    std::vector<char> is_target(n, 0);
    for (const Vec2& p : b) {
        const int v = g.locate(p);
        is_target[v] = 1;
        if (hops[v] == 0) return 0;
    }
    for (int depth = 1; !frontier.empty(); ++depth) {
        std::vector<int> next;
        for (int u : frontier) {
            for (int v : g.adjacency[u]) {
                if (hops[v] >= 0) continue;
                if (is_target[v]) return depth;
                hops[v] = depth;
                next.push_back(v);
            }
        }
        frontier = std::move(next);
    }
    throw std::runtime_error("graph_distance: target unreachable");
}

} // namespace fpplab
