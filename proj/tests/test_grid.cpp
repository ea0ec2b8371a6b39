#include "heesch/error.hpp"
#include "heesch/grid.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <set>
#include <vector>

using namespace heesch;

namespace {

constexpr GridKind kGrids[3] = {GridKind::Square, GridKind::Hex, GridKind::Iamond};

std::set<Cell> as_set(const std::vector<Cell>& v) { return {v.begin(), v.end()}; }

Cell random_cell(GridKind grid, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-20, 20);
    Cell c{d(rng), d(rng)};
    if (grid == GridKind::Iamond) {
        c = {c.x * 3, c.y * 3};
        if (d(rng) & 1) c = c + Cell{1, 1};
    }
    return c;
}

Transform random_transform(GridKind grid, std::mt19937& rng) {
    std::uniform_int_distribution<int> o(0, orientation_count(grid) - 1);
    std::uniform_int_distribution<int> t(-10, 10);
    Transform r{o(rng), t(rng), t(rng)};
    if (grid == GridKind::Iamond) {
        r.tx *= 3;
        r.ty *= 3;
    }
    return r;
}

// Triangle corners in a 3x-scaled lattice, derived from the geometry of
// the embedding: an up triangle at (x,y) has corners (x,y), (x+3,y),
// (x,y+3); the down triangle at (x,y) has corners (x+2,y-1), (x-1,y+2),
// (x+2,y+2).
std::array<Cell, 3> triangle_corners(Cell c) {
    if (iamond_color(c) == 0)
        return {Cell{c.x, c.y}, Cell{c.x + 3, c.y}, Cell{c.x, c.y + 3}};
    return {Cell{c.x + 2, c.y - 1}, Cell{c.x - 1, c.y + 2}, Cell{c.x + 2, c.y + 2}};
}

int shared_corner_count(Cell a, Cell b) {
    int n = 0;
    for (Cell u : triangle_corners(a))
        for (Cell v : triangle_corners(b))
            if (u == v) ++n;
    return n;
}

} // namespace

TEST_SUITE("grid") {

TEST_CASE("orientation counts and identity") {
    CHECK(orientation_count(GridKind::Square) == 8);
    CHECK(orientation_count(GridKind::Hex) == 12);
    CHECK(orientation_count(GridKind::Iamond) == 12);
    for (GridKind g : kGrids) {
        const auto os = orientations(g);
        CHECK(int(os.size()) == orientation_count(g));
        CHECK(os[0].m == std::array<std::int32_t, 4>{1, 0, 0, 1});
        CHECK(os[0].offset == Cell{0, 0});
    }
}

TEST_CASE("square orientations are the signed permutation matrices") {
    std::set<std::array<std::int32_t, 4>> mats;
    for (const Orientation& o : orientations(GridKind::Square)) {
        CHECK(std::abs(o.m[0] * o.m[3] - o.m[1] * o.m[2]) == 1);
        CHECK(o.offset == Cell{0, 0});
        mats.insert(o.m);
    }
    CHECK(mats.size() == 8);
}

TEST_CASE("hex orientation set contains the 60-degree rotation") {
    const auto os = orientations(GridKind::Hex);
    const std::array<std::int32_t, 4> a{0, -1, 1, 1};
    CHECK(std::any_of(os.begin(), os.end(),
                      [&](const Orientation& o) { return o.m == a; }));
    CHECK(os[1].m == a);
}

TEST_CASE("hex 60-degree rotation has order six") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Cell p = random_cell(GridKind::Hex, rng);
        Cell q = p;
        for (int i = 0; i < 6; ++i)
            q = apply(GridKind::Hex, Transform{1, 0, 0}, q);
        CHECK(q == p);
    }
}

TEST_CASE("apply basics") {
    CHECK(apply(GridKind::Square, kIdentity, Cell{3, -2}) == Cell{3, -2});
    CHECK(apply(GridKind::Hex, Transform{1, 0, 0}, Cell{1, 0}) == Cell{0, 1});
    // Color-swapping Iamond orientation: B followed by translation (1,-2).
    const Cell img = apply(GridKind::Iamond, Transform{6, 0, 0}, Cell{0, 0});
    CHECK(img == Cell{1, -2});
    CHECK(cell_valid(GridKind::Iamond, img));
    CHECK(iamond_color(img) == 1);
}

TEST_CASE("apply rejects invalid input") {
    CHECK_THROWS_AS(apply(GridKind::Iamond, kIdentity, Cell{2, 0}), invalid_input);
    CHECK_THROWS_AS(apply(GridKind::Iamond, Transform{0, 1, 0}, Cell{0, 0}),
                    invalid_input);
    CHECK_THROWS_AS(apply(GridKind::Square, Transform{9, 0, 0}, Cell{0, 0}),
                    invalid_input);
}

TEST_CASE("compose laws") {
    std::mt19937 rng(11);
    for (GridKind g : kGrids) {
        const Transform t = random_transform(g, rng);
        CHECK(compose(g, kIdentity, t) == t);
        CHECK(compose(g, t, kIdentity) == t);
    }
    const Transform r90{1, 0, 0};
    CHECK(compose(GridKind::Square, r90, r90) == Transform{2, 0, 0});
    Transform acc = kIdentity;
    for (int i = 0; i < 6; ++i) acc = compose(GridKind::Hex, Transform{1, 0, 0}, acc);
    CHECK(acc == kIdentity);
}

TEST_CASE("apply/compose coherence") {
    std::mt19937 rng(13);
    for (GridKind g : kGrids) {
        for (int trial = 0; trial < 300; ++trial) {
            const Transform t1 = random_transform(g, rng);
            const Transform t2 = random_transform(g, rng);
            const Transform t12 = compose(g, t1, t2);
            CHECK(transform_valid(g, t12));
            const Cell p = random_cell(g, rng);
            CHECK(apply(g, t12, p) == apply(g, t1, apply(g, t2, p)));
        }
    }
}

TEST_CASE("inverse undoes a transform") {
    std::mt19937 rng(17);
    for (GridKind g : kGrids) {
        for (int trial = 0; trial < 100; ++trial) {
            const Transform t = random_transform(g, rng);
            const Transform ti = inverse(g, t);
            const Cell p = random_cell(g, rng);
            CHECK(apply(g, ti, apply(g, t, p)) == p);
            CHECK(compose(g, ti, t) == kIdentity);
        }
    }
}

TEST_CASE("orientation set is closed under composition") {
    std::mt19937 rng(19);
    for (GridKind g : kGrids) {
        const int n = orientation_count(g);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                const int c = compose_orientations(g, a, b);
                CHECK(c >= 0);
                CHECK(c < n);
                // Offset handling: composing as transforms must agree with
                // sequential application.
                const Transform ta{a, 0, 0}, tb{b, 0, 0};
                const Transform tc = compose(g, ta, tb);
                CHECK(tc.orient == c);
                const Cell p = random_cell(g, rng);
                CHECK(apply(g, tc, p) == apply(g, ta, apply(g, tb, p)));
            }
        }
    }
}

TEST_CASE("halo neighborhood contents") {
    const auto sq = as_set(halo_neighbors(GridKind::Square, {0, 0}));
    CHECK(sq.size() == 8);
    for (int x = -1; x <= 1; ++x)
        for (int y = -1; y <= 1; ++y)
            if (x || y) CHECK(sq.count(Cell{x, y}) == 1);

    const auto hex = as_set(halo_neighbors(GridKind::Hex, {0, 0}));
    const std::set<Cell> ring{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    CHECK(hex == ring);

    const auto ia = halo_neighbors(GridKind::Iamond, {0, 0});
    CHECK(ia.size() == 12);
    for (Cell c : ia) CHECK(cell_valid(GridKind::Iamond, c));
    CHECK(as_set(ia).count(Cell{-2, 4}) == 1);
}

TEST_CASE("edge neighborhood contents") {
    const auto sq = as_set(edge_neighbors(GridKind::Square, {0, 0}));
    CHECK(sq == std::set<Cell>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    CHECK(as_set(edge_neighbors(GridKind::Hex, {0, 0})) ==
          as_set(halo_neighbors(GridKind::Hex, {0, 0})));

    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const Cell p = random_cell(GridKind::Iamond, rng);
        const auto en = edge_neighbors(GridKind::Iamond, p);
        CHECK(en.size() == 3);
        for (Cell q : en) CHECK(iamond_color(q) == 1 - iamond_color(p));
    }
}

TEST_CASE("neighborhoods are symmetric and edge is a subset of halo") {
    std::mt19937 rng(29);
    for (GridKind g : kGrids) {
        for (int trial = 0; trial < 60; ++trial) {
            const Cell p = random_cell(g, rng);
            const auto halo = halo_neighbors(g, p);
            const auto edge = as_set(edge_neighbors(g, p));
            const auto halo_set = as_set(halo);
            for (Cell q : edge) CHECK(halo_set.count(q) == 1);
            for (Cell q : halo) {
                CHECK(cell_valid(g, q));
                CHECK(as_set(halo_neighbors(g, q)).count(p) == 1);
            }
            for (Cell q : edge) CHECK(as_set(edge_neighbors(g, q)).count(p) == 1);
        }
    }
}

TEST_CASE("iamond neighbor tables match the triangle geometry") {
    // Independent derivation: two triangles are halo neighbors iff they
    // share at least one corner, edge neighbors iff they share two.
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const Cell p = random_cell(GridKind::Iamond, rng);
        std::set<Cell> expect_halo, expect_edge;
        for (int dx = -6; dx <= 6; ++dx) {
            for (int dy = -6; dy <= 6; ++dy) {
                const Cell q = p + Cell{dx, dy};
                if (q == p || !cell_valid(GridKind::Iamond, q)) continue;
                const int shared = shared_corner_count(p, q);
                if (shared >= 1) expect_halo.insert(q);
                if (shared >= 2) expect_edge.insert(q);
            }
        }
        CHECK(as_set(halo_neighbors(GridKind::Iamond, p)) == expect_halo);
        CHECK(as_set(edge_neighbors(GridKind::Iamond, p)) == expect_edge);
    }
}

TEST_CASE("iamond orientations respect the coloring") {
    std::mt19937 rng(37);
    for (int o = 0; o < 12; ++o) {
        for (int trial = 0; trial < 40; ++trial) {
            const Cell p = random_cell(GridKind::Iamond, rng);
            const Cell q = apply(GridKind::Iamond, Transform{o, 0, 0}, p);
            CHECK(cell_valid(GridKind::Iamond, q));
            if (o < 6)
                CHECK(iamond_color(q) == iamond_color(p));
            else
                CHECK(iamond_color(q) == 1 - iamond_color(p));
        }
    }
}

TEST_CASE("exactly six hex orientations preserve the up sublattice") {
    int preserving = 0;
    for (const Orientation& o : orientations(GridKind::Hex)) {
        const Cell img = o.map(Cell{1, 1});
        const auto m3 = [](int v) { return ((v % 3) + 3) % 3; };
        if (m3(img.x) == 1 && m3(img.y) == 1) ++preserving;
    }
    CHECK(preserving == 6);
    // Those six are the color-preserving Iamond orientations.
    const auto ia = orientations(GridKind::Iamond);
    int matched = 0;
    for (const Orientation& h : orientations(GridKind::Hex))
        for (int i = 0; i < 6; ++i)
            if (ia[std::size_t(i)].m == h.m) ++matched;
    CHECK(matched == 6);
}

TEST_CASE("to_cartesian") {
    const Vec2 a = to_cartesian(GridKind::Square, {2, 3});
    CHECK(a.x == doctest::Approx(2.0));
    CHECK(a.y == doctest::Approx(3.0));
    const Vec2 b = to_cartesian(GridKind::Hex, {0, 1});
    CHECK(b.x == doctest::Approx(0.5));
    CHECK(b.y == doctest::Approx(std::sqrt(3.0) / 2.0));
    const Vec2 c = to_cartesian(GridKind::Hex, {1, 0});
    CHECK(c.x == doctest::Approx(1.0));
    CHECK(c.y == doctest::Approx(0.0));
}

TEST_CASE("transform packing") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> o(0, 15), t(-128, 127);
    for (int trial = 0; trial < 500; ++trial) {
        const Transform x{o(rng), t(rng), t(rng)};
        CHECK(unpack(pack(x)) == x);
    }
    CHECK_THROWS_AS(pack(Transform{0, 128, 0}), heesch::range_error);
    CHECK_THROWS_AS(pack(Transform{0, 0, -129}), heesch::range_error);
    CHECK(packable(Transform{15, -128, 127}));
}

} // TEST_SUITE
