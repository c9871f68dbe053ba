#pragma once

// The competition interface: Voronoi edges whose two tiles belong to
// different species, decomposed into self-avoiding branches, plus the
// branch direction and straightness estimators.

#include "fpplab/competition.hpp"
#include "fpplab/stats.hpp"
#include "fpplab/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace fpplab {

struct InterfaceGraph {
    struct Edge {
        int delaunay_edge = -1;
        int t1 = -1, t2 = -1; // Voronoi endpoints (triangle ids)
    };
    std::vector<Edge> edges;
    std::map<int, std::vector<int>> incidence; // Voronoi vertex -> incident interface edges

    int degree(int tri) const {
        auto it = incidence.find(tri);
        return it == incidence.end() ? 0 : static_cast<int>(it->second.size());
    }
};

/// Interface = duals of bichromatic Delaunay edges. Duals truncated by the
/// hull (unbounded) are dropped; the missing edges surface as degree-1
/// branch endpoints at the window boundary.
inline InterfaceGraph extract_interface(const CompetitionLabeling& lab, const DelaunayGraph& g,
                                        const VoronoiTessellation& vor) {
    InterfaceGraph iface;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto [u, v] = g.edges[e];
        if (lab.label[u] == lab.label[v]) continue;
        if (!vor.edges[e].bounded()) continue;
        const int id = static_cast<int>(iface.edges.size());
        iface.edges.push_back({static_cast<int>(e), vor.edges[e].t1, vor.edges[e].t2});
        iface.incidence[vor.edges[e].t1].push_back(id);
        iface.incidence[vor.edges[e].t2].push_back(id);
    }
    return iface;
}

struct Branch {
    std::vector<int> tri_path; // Voronoi vertex sequence (no repeats; loops omit the closing vertex)
    std::vector<int> edge_ids; // interface edge ids, one per step
    bool closed = false;
    bool starts_at_junction = false;
    bool boundary_terminated = false; // far end leaves the inner window or is hull-truncated
};

namespace detail {

inline int other_end(const InterfaceGraph::Edge& e, int tri) { return e.t1 == tri ? e.t2 : e.t1; }

} // namespace detail

/// Decompose the interface into maximal self-avoiding paths. Branches stop
/// at junction vertices (interface degree >= 3). Chains whose both ends hit
/// the window are split at their closest-to-origin vertex so each branch
/// runs outward, matching the one-sided branch notion.
inline std::vector<Branch> trace_branches(const InterfaceGraph& iface,
                                          const VoronoiTessellation& vor, const SimWindow& w) {
    std::vector<char> used(iface.edges.size(), 0);
    struct Chain {
        std::vector<int> tris;
        std::vector<int> edges;
        bool closed = false;
    };
    std::vector<Chain> chains;

    auto walk_chain = [&](int start_tri, int first_edge) {
        Chain c;
        c.tris.push_back(start_tri);
        int tri = start_tri;
        int edge = first_edge;
        while (true) {
            used[edge] = 1;
            c.edges.push_back(edge);
            tri = detail::other_end(iface.edges[edge], tri);
            c.tris.push_back(tri);
            if (iface.degree(tri) != 2) break; // junction or truncation endpoint
            const auto& inc = iface.incidence.at(tri);
            const int next = inc[0] == edge ? inc[1] : inc[0];
            if (used[next]) break; // closed back onto the start
            edge = next;
        }
        c.closed = c.tris.front() == c.tris.back();
        if (c.closed) c.tris.pop_back();
        chains.push_back(std::move(c));
    };

    for (const auto& [tri, inc] : iface.incidence) {
        if (inc.size() == 2) continue;
        for (int e : inc) {
            if (!used[e]) walk_chain(tri, e);
        }
    }
    for (const auto& [tri, inc] : iface.incidence) { // leftover: pure cycles
        for (int e : inc) {
            if (!used[e]) walk_chain(tri, e);
        }
    }

    std::vector<Branch> branches;
    auto truncated = [&](int tri) { return iface.degree(tri) == 1; };
    auto outside_inner = [&](int tri) { return !w.inner_contains(vor.vertices[tri]); };
    auto window_end = [&](int tri) { return truncated(tri) || outside_inner(tri); };

    for (Chain& c : chains) {
        if (c.closed) {
            Branch b;
            b.tri_path = std::move(c.tris);
            b.edge_ids = std::move(c.edges);
            b.closed = true;
            branches.push_back(std::move(b));
            continue;
        }
        const bool front_junction = iface.degree(c.tris.front()) >= 3;
        const bool back_junction = iface.degree(c.tris.back()) >= 3;

        if (!front_junction && !back_junction && c.tris.size() >= 3) {
            // free chain across the window: split where it comes closest to
            // the origin, yielding two outward-running branches
            std::size_t pivot = 0;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < c.tris.size(); ++i) {
                const double r = norm(vor.vertices[c.tris[i]]);
                if (r < best) {
                    best = r;
                    pivot = i;
                }
            }
            if (pivot > 0) {
                Branch b; // pivot .. front, walking backward
                for (std::size_t i = pivot + 1; i-- > 0;) b.tri_path.push_back(c.tris[i]);
                for (std::size_t i = pivot; i-- > 0;) b.edge_ids.push_back(c.edges[i]);
                b.boundary_terminated = window_end(c.tris.front());
                branches.push_back(std::move(b));
            }
            if (pivot + 1 < c.tris.size()) {
                Branch b; // pivot .. back
                b.tri_path.assign(c.tris.begin() + pivot, c.tris.end());
                b.edge_ids.assign(c.edges.begin() + pivot, c.edges.end());
                b.boundary_terminated = window_end(c.tris.back());
                branches.push_back(std::move(b));
            }
            continue;
        }

        // orient away from the junction, or outward when there is none
        const bool flip = (back_junction && !front_junction) ||
                          (front_junction == back_junction &&
                           norm(vor.vertices[c.tris.front()]) > norm(vor.vertices[c.tris.back()]));
        if (flip) {
            std::reverse(c.tris.begin(), c.tris.end());
            std::reverse(c.edges.begin(), c.edges.end());
        }
        Branch b;
        b.starts_at_junction = iface.degree(c.tris.front()) >= 3;
        b.boundary_terminated = window_end(c.tris.back());
        b.tri_path = std::move(c.tris);
        b.edge_ids = std::move(c.edges);
        branches.push_back(std::move(b));
    }
    return branches;
}

struct DegreeHistogram {
    int deg1 = 0, deg2 = 0, deg3plus = 0;
};

inline DegreeHistogram interface_degree_histogram(const InterfaceGraph& iface) {
    DegreeHistogram h;
    for (const auto& [tri, inc] : iface.incidence) {
        if (inc.size() == 1)
            ++h.deg1;
        else if (inc.size() == 2)
            ++h.deg2;
        else
            ++h.deg3plus;
    }
    return h;
}

struct InsufficientBranch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BranchDirection {
    double theta_hat = 0.0; // [0, 2pi)
    Vec2 mean_direction;    // unnormalized circular-mean vector
    std::vector<std::pair<double, double>> straightness; // (|x|, ang(x, e^{i theta}))
    double fitted_exponent = 0.0;
    bool exponent_valid = false;
    int samples_used = 0;
};

/// Direction and straightness of one branch given its vertex coordinates
/// (ordered inner to outer). The direction is the circular mean over the
/// outer half of the arc length; straightness samples cover everything past
/// radius R/4.
inline BranchDirection estimate_direction(const std::vector<Vec2>& path, const SimWindow& w) {
    const double quarter = w.half_width / 4.0;
    int far_count = 0;
    for (const Vec2& p : path) {
        if (norm(p) >= quarter) ++far_count;
    }
    if (far_count < 20)
        throw InsufficientBranch("insufficient branch: needs >= 20 vertices beyond R/4");

    std::vector<double> cumlen(path.size(), 0.0);
    for (std::size_t i = 1; i < path.size(); ++i)
        cumlen[i] = cumlen[i - 1] + dist(path[i - 1], path[i]);
    const double half_len = cumlen.back() / 2.0;

    BranchDirection out;
    Vec2 acc{0.0, 0.0};
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (cumlen[i] < half_len) continue;
        const double r = norm(path[i]);
        if (r == 0.0) continue;
        acc = acc + (1.0 / r) * path[i];
        ++out.samples_used;
    }
    out.mean_direction = acc;
    out.theta_hat = wrap_angle(std::atan2(acc.y, acc.x));

    const Vec2 axis = unit_vector(out.theta_hat);
    for (const Vec2& p : path) {
        const double r = norm(p);
        if (r < quarter) continue;
        out.straightness.push_back({r, ang(p, axis)});
    }
    std::vector<double> lx, ly;
    for (const auto& [r, a] : out.straightness) {
        if (a > 1e-12) {
            lx.push_back(std::log(r));
            ly.push_back(std::log(a));
        }
    }
    if (lx.size() >= 5) {
        out.fitted_exponent = linear_fit(lx, ly).slope;
        out.exponent_valid = true;
    }
    return out;
}

inline std::vector<Vec2> branch_coordinates(const Branch& b, const VoronoiTessellation& vor) {
    std::vector<Vec2> pts;
    pts.reserve(b.tri_path.size());
    for (int t : b.tri_path) pts.push_back(vor.vertices[t]);
    return pts;
}

} // namespace fpplab
