#include "heesch/error.hpp"
#include "heesch/shape.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <vector>

using namespace heesch;

namespace {

std::set<Cell> as_set(std::span<const Cell> v) { return {v.begin(), v.end()}; }

Shape grow_random_shape(GridKind grid, int n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<Cell> cells{{0, 0}};
    while (int(cells.size()) < n) {
        std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
        const Cell base = cells[pick(rng)];
        const auto offs = edge_offsets(grid, base);
        std::uniform_int_distribution<std::size_t> po(0, offs.size() - 1);
        const Cell cand = base + offs[po(rng)];
        if (std::find(cells.begin(), cells.end(), cand) == cells.end())
            cells.push_back(cand);
    }
    return Shape::from_cells(grid, cells);
}

} // namespace

TEST_SUITE("shape") {

TEST_CASE("from_cells validates and normalizes") {
    const Shape s = Shape::from_cells(GridKind::Square, {{5, 7}, {6, 7}, {5, 8}});
    CHECK(as_set(s.cells()) == std::set<Cell>{{0, 0}, {1, 0}, {0, 1}});

    CHECK_THROWS_AS(Shape::from_cells(GridKind::Square, {}), invalid_input);
    CHECK_THROWS_AS(Shape::from_cells(GridKind::Square, {{0, 0}, {2, 0}}),
                    invalid_input);
    CHECK_THROWS_AS(Shape::from_cells(GridKind::Square, {{0, 0}, {0, 0}}),
                    invalid_input);
    CHECK_THROWS_AS(Shape::from_cells(GridKind::Iamond, {{2, 0}}), invalid_input);
}

TEST_CASE("iamond normalization anchors the least up cell") {
    const Shape s = Shape::from_cells(GridKind::Iamond, {{3, 3}, {4, 4}});
    CHECK(as_set(s.cells()) == std::set<Cell>{{0, 0}, {1, 1}});
    const Shape g = Shape::from_cells(GridKind::Iamond, {{4, 4}});
    CHECK(as_set(g.cells()) == std::set<Cell>{{1, 1}});
}

TEST_CASE("halo of small shapes") {
    const Shape mono = Shape::from_cells(GridKind::Square, {{0, 0}});
    CHECK(halo_of(mono.grid(), mono.cells()).size() == 8);

    const Shape hex1 = Shape::from_cells(GridKind::Hex, {{0, 0}});
    CHECK(halo_of(hex1.grid(), hex1.cells()).size() == 6);

    const Shape ell = Shape::from_cells(GridKind::Square, {{0, 0}, {1, 0}, {0, 1}});
    const std::set<Cell> expect{{-1, -1}, {0, -1}, {1, -1}, {2, -1},
                                {-1, 0},  {2, 0},  {-1, 1}, {1, 1},
                                {2, 1},   {-1, 2}, {0, 2},  {1, 2}};
    const auto halo = halo_of(ell.grid(), ell.cells());
    CHECK(as_set(halo) == expect);
    // No halo cell is in the shape; each touches the shape.
    for (Cell h : halo) {
        CHECK(!ell.contains(h));
        bool touches = false;
        for (Cell d : halo_offsets(ell.grid(), h))
            touches = touches || ell.contains(h + d);
        CHECK(touches);
    }
}

TEST_CASE("adjacency") {
    const Shape mono = Shape::from_cells(GridKind::Square, {{0, 0}});
    const Placement a = place(mono, kIdentity);
    const Placement diag = place(mono, Transform{0, 1, 1});
    const Placement far = place(mono, Transform{0, 3, 0});
    CHECK(adjacent(GridKind::Square, a, diag));
    CHECK(adjacent(GridKind::Square, diag, a));
    CHECK(!adjacent(GridKind::Square, a, a));
    CHECK(!adjacent(GridKind::Square, a, far));
}

TEST_CASE("pair of U pentominoes enclosing a hole") {
    const Shape u =
        Shape::from_cells(GridKind::Square, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}});
    const Placement base = place(u, kIdentity);
    const Placement flipped = place(u, Transform{2, 2, 3});
    CHECK(as_set(flipped.cells) ==
          std::set<Cell>{{0, 2}, {2, 2}, {0, 3}, {1, 3}, {2, 3}});
    CHECK(adjacent(GridKind::Square, base, flipped));
    CHECK(pair_encloses_hole(GridKind::Square, base, flipped));

    // The enclosed cells are exactly (1,1) and (1,2).
    std::vector<Cell> both(base.cells.begin(), base.cells.end());
    both.insert(both.end(), flipped.cells.begin(), flipped.cells.end());
    CHECK(!simply_connected(GridKind::Square, both));
    both.push_back({1, 1});
    both.push_back({1, 2});
    CHECK(simply_connected(GridKind::Square, both));
}

TEST_CASE("side-by-side dominoes enclose nothing") {
    const Shape domino = Shape::from_cells(GridKind::Square, {{0, 0}, {1, 0}});
    const Placement a = place(domino, kIdentity);
    const Placement b = place(domino, Transform{0, 0, 1});
    CHECK(adjacent(GridKind::Square, a, b));
    CHECK(!pair_encloses_hole(GridKind::Square, a, b));
}

TEST_CASE("pair_encloses_hole requires adjacency") {
    const Shape mono = Shape::from_cells(GridKind::Square, {{0, 0}});
    const Placement a = place(mono, kIdentity);
    const Placement far = place(mono, Transform{0, 5, 5});
    CHECK_THROWS_AS(pair_encloses_hole(GridKind::Square, a, far), invalid_input);
}

TEST_CASE("simply_connected detects rings") {
    std::vector<Cell> ring;
    for (int x = -1; x <= 1; ++x)
        for (int y = -1; y <= 1; ++y)
            if (x || y) ring.push_back({x, y});
    CHECK(!simply_connected(GridKind::Square, ring));
    ring.push_back({0, 0});
    CHECK(simply_connected(GridKind::Square, ring));
}

TEST_CASE("canonical form is idempotent and identifies mirrors") {
    const Shape ell = Shape::from_cells(GridKind::Square, {{0, 0}, {1, 0}, {0, 1}});
    const Shape mirror = Shape::from_cells(GridKind::Square, {{0, 0}, {1, 0}, {1, 1}});
    CHECK(canonical_form(ell) == canonical_form(mirror));
    CHECK(canonical_form(canonical_form(ell)) == canonical_form(ell));
}

TEST_CASE("all orientation images share one canonical form") {
    for (GridKind grid : {GridKind::Square, GridKind::Hex, GridKind::Iamond}) {
        const Shape s = grow_random_shape(grid, 9, 1234u + unsigned(grid));
        const Shape canon = canonical_form(s);
        for (int o = 0; o < orientation_count(grid); ++o) {
            const Placement p = place(s, Transform{o, 0, 0});
            const Shape img = Shape::from_cells(grid, p.cells);
            CHECK(canonical_form(img) == canon);
        }
    }
}

} // TEST_SUITE
