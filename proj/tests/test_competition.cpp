#include "fpplab/interface_graph.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace fpplab;

namespace {

struct Arena {
    PointSet ps;
    DelaunayGraph g;
    VoronoiTessellation vor;
    EdgeWeights w;
    Arena(double R, std::uint64_t seed, std::uint64_t rep = 0)
        : ps(sample_poisson(SimWindow(R), 1.0, {seed, rng_stream::kGeometry, rep})),
          g(build_delaunay(ps)),
          vor(voronoi_dual(g)),
          w(assign_weights(g, PassageTimeLaw::exponential(1.0), {seed, rng_stream::kWeights, rep})) {}
};

} // namespace

TEST_CASE("single species owns everything") {
    Arena a(20.0, 301);
    const auto seeds = SeedSet::free_form({{0.0, 0.0}});
    const auto lab = compete(a.g, a.w, seeds);
    for (int l : lab.label) REQUIRE(l == 0);
    CHECK(coexistence(lab, a.g) == std::vector<bool>{true});
    const auto iface = extract_interface(lab, a.g, a.vor);
    CHECK(iface.edges.empty());
}

TEST_CASE("seeds sharing a tile: the later species gets the empty region") {
    Arena a(20.0, 302);
    const Vec2 base = a.g.points[a.g.locate({0, 0})];
    // both seeds inside the same tile
    const auto seeds = SeedSet::free_form({base, {base.x + 1e-6, base.y}});
    const auto lab = compete(a.g, a.w, seeds);
    REQUIRE(lab.collided[1]);
    for (int l : lab.label) REQUIRE(l == 0);
    const auto alive = coexistence(lab, a.g);
    CHECK(alive[0]);
    CHECK(!alive[1]);
}

TEST_CASE("labels minimize the arrival time, exhaustively") {
    Arena a(30.0, 303);
    const auto seeds = SeedSet::polygon(3, 8.0);
    const auto lab = compete(a.g, a.w, seeds);
    for (std::size_t v = 0; v < a.g.points.size(); ++v) {
        const int j = lab.label[v];
        REQUIRE(lab.arrival[v] == lab.fields[j].dist[v]);
        for (int l = 0; l < lab.k; ++l) {
            REQUIRE(lab.fields[j].dist[v] <= lab.fields[l].dist[v]);
        }
    }
    // seed tiles belong to their own species
    for (int j = 0; j < lab.k; ++j) REQUIRE(lab.label[lab.seed_vertex[j]] == j);
}

TEST_CASE("interface equals the bichromatic dual, hand-checked on five points") {
    PointSet ps;
    ps.points = {{0, 0}, {4, 0}, {0, 4}, {4, 4}, {2, 2}};
    ps.window = SimWindow(10.0, 0.2);
    const auto g = build_delaunay(ps);
    const auto vor = voronoi_dual(g);
    REQUIRE(g.triangles.size() == 4);
    REQUIRE(g.edges.size() == 8);

    CompetitionLabeling lab;
    lab.k = 2;
    lab.label = {0, 0, 0, 0, 1}; // center vs corners
    const auto iface = extract_interface(lab, g, vor);

    // the four spokes are bichromatic with bounded duals; the rim is
    // bichromatic-free and hull-truncated anyway
    std::set<std::pair<int, int>> expected = {{0, 4}, {1, 4}, {2, 4}, {3, 4}};
    std::set<std::pair<int, int>> got;
    for (const auto& e : iface.edges) got.insert(g.edges[e.delaunay_edge]);
    CHECK(got == expected);

    // the center tile boundary is one closed branch through all four duals
    const auto branches = trace_branches(iface, vor, ps.window);
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].closed);
    CHECK(branches[0].edge_ids.size() == 4);
    CHECK(branches[0].tri_path.size() == 4);
}

TEST_CASE("interface recomputation and branch partition on a random replicate") {
    Arena a(50.0, 304);
    const auto seeds = SeedSet::polygon(2, 10.0);
    const auto lab = compete(a.g, a.w, seeds);
    const auto iface = extract_interface(lab, a.g, a.vor);
    REQUIRE(!iface.edges.empty());

    // independent recomputation from labels
    std::set<int> expected;
    for (std::size_t e = 0; e < a.g.edges.size(); ++e) {
        if (lab.label[a.g.edges[e].first] != lab.label[a.g.edges[e].second] &&
            a.vor.edges[e].bounded())
            expected.insert(static_cast<int>(e));
    }
    std::set<int> got;
    for (const auto& e : iface.edges) got.insert(e.delaunay_edge);
    REQUIRE(got == expected);

    // every interface edge separates different labels
    for (const auto& e : iface.edges) {
        const auto [u, v] = a.g.edges[e.delaunay_edge];
        REQUIRE(lab.label[u] != lab.label[v]);
    }

    const auto branches = trace_branches(iface, a.vor, a.g.window);
    // partition of interface edges
    std::vector<int> seen(iface.edges.size(), 0);
    for (const auto& b : branches) {
        for (int e : b.edge_ids) ++seen[e];
        REQUIRE(b.edge_ids.size() == b.tri_path.size() - (b.closed ? 0 : 1));
        // self-avoiding
        auto sorted = b.tri_path;
        std::sort(sorted.begin(), sorted.end());
        REQUIRE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
    for (int s : seen) REQUIRE(s == 1);

    // interior vertices of open branches have interface degree 2
    for (const auto& b : branches) {
        if (b.closed) continue;
        for (std::size_t i = 1; i + 1 < b.tri_path.size(); ++i)
            REQUIRE(iface.degree(b.tri_path[i]) == 2);
    }
}

TEST_CASE("two well-separated species usually leave two boundary branches") {
    int good = 0;
    const int reps = 9;
    for (int rep = 0; rep < reps; ++rep) {
        Arena a(50.0, 305, static_cast<std::uint64_t>(rep));
        const auto lab = compete(a.g, a.w, SeedSet::polygon(2, 10.0));
        const auto iface = extract_interface(lab, a.g, a.vor);
        const auto branches = trace_branches(iface, a.vor, a.g.window);
        int boundary = 0;
        for (const auto& b : branches) boundary += b.boundary_terminated ? 1 : 0;
        if (boundary == 2) ++good;
    }
    INFO("replicates with exactly 2 boundary branches: " << good << "/" << reps);
    CHECK(good > reps / 2);
}

TEST_CASE("direction estimator: exact ray") {
    const SimWindow w(60.0);
    std::vector<Vec2> ray;
    for (int s = 1; s <= 45; ++s) ray.push_back(static_cast<double>(s) * unit_vector(M_PI / 3.0));
    const auto dir = estimate_direction(ray, w);
    CHECK(std::fabs(dir.theta_hat - M_PI / 3.0) < 1e-9);
    for (const auto& [r, a] : dir.straightness) CHECK(a < 1e-9);
    CHECK(!dir.exponent_valid); // nothing to fit on an exact ray
}

TEST_CASE("direction estimator: power-law wobble recovers the exponent") {
    const SimWindow w(200.0);
    const double theta = 1.1;
    std::vector<Vec2> path;
    int sign = 1;
    for (double r = 10.0; r <= 160.0; r += 1.0) {
        const double phi = theta + sign * std::pow(r, -0.25);
        path.push_back(r * unit_vector(phi));
        sign = -sign;
    }
    const auto dir = estimate_direction(path, w);
    CHECK(std::fabs(dir.theta_hat - theta) < 0.02);
    REQUIRE(dir.exponent_valid);
    CHECK(dir.fitted_exponent == Catch::Approx(-0.25).margin(0.05));
}

TEST_CASE("direction estimator: short branches are rejected") {
    const SimWindow w(100.0);
    std::vector<Vec2> tiny = {{30.0, 0.0}, {31.0, 0.0}, {32.0, 0.0}};
    CHECK_THROWS_AS(estimate_direction(tiny, w), InsufficientBranch);
}

TEST_CASE("theta estimates vary across replicates (no deterministic direction)") {
    std::vector<double> thetas;
    for (int rep = 0; rep < 8; ++rep) {
        Arena a(50.0, 306, static_cast<std::uint64_t>(rep));
        const auto lab = compete(a.g, a.w, SeedSet::polygon(2, 10.0));
        const auto branches = trace_branches(extract_interface(lab, a.g, a.vor), a.vor, a.g.window);
        for (const auto& b : branches) {
            if (!b.boundary_terminated) continue;
            try {
                thetas.push_back(estimate_direction(branch_coordinates(b, a.vor), a.g.window).theta_hat);
                break;
            } catch (const InsufficientBranch&) {
            }
        }
    }
    REQUIRE(thetas.size() >= 6);
    std::sort(thetas.begin(), thetas.end());
    CHECK(std::adjacent_find(thetas.begin(), thetas.end()) == thetas.end());
}

TEST_CASE("sector coverage: single species covers the circle; mirrored fixture is symmetric") {
    Arena a(40.0, 307);
    {
        const auto seeds = SeedSet::polygon(1, 8.0);
        const auto lab = compete(a.g, a.w, seeds);
        const auto cov = sector_coverage(lab, a.g, seeds, M_PI / 16.0);
        CHECK(cov == std::vector<bool>{true});
    }

    // mirror the configuration across the x axis; weights ride along by
    // edge identity, so labels swap between the two antipodal species
    const auto seeds2 = SeedSet::polygon(2, 8.0);
    const auto lab = compete(a.g, a.w, seeds2);

    PointSet mirrored = a.ps;
    for (auto& p : mirrored.points) p.y = -p.y;
    const auto g2 = build_delaunay(mirrored);
    REQUIRE(g2.edges == a.g.edges); // same combinatorics, same edge ids
    const EdgeWeights w2{a.w.weight, a.w.law, a.w.seed};
    const auto lab2 = compete(g2, w2, seeds2);

    const double eps = M_PI / 8.0;
    const auto cov = sector_coverage(lab, a.g, seeds2, eps);
    const auto cov2 = sector_coverage(lab2, g2, seeds2, eps);
    CHECK(cov[0] == cov2[1]);
    CHECK(cov[1] == cov2[0]);

    for (std::size_t v = 0; v < a.g.points.size(); ++v)
        REQUIRE(lab.label[v] == 1 - lab2.label[v]);
}

TEST_CASE("coexistence: colliding seeds leave one survivor; separated seeds often coexist") {
    Arena a(40.0, 308);
    const auto lab = compete(a.g, a.w, SeedSet::polygon(3, 10.0));
    const auto alive = coexistence(lab, a.g);
    int survivors = 0;
    for (bool s : alive) survivors += s ? 1 : 0;
    CHECK(survivors >= 1);
    // every species owning an annulus tile is marked, and vice versa
    for (int j = 0; j < lab.k; ++j) {
        bool owns = false;
        for (std::size_t v = 0; v < a.g.points.size(); ++v) {
            if (lab.label[v] == j && a.g.window.in_boundary_annulus(a.g.points[v])) owns = true;
        }
        REQUIRE(owns == alive[j]);
    }
}
