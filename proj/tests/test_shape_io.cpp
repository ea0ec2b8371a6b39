#include "heesch/enumerate.hpp"
#include "heesch/error.hpp"
#include "heesch/shape_io.hpp"

#include <doctest.h>

#include <set>

using namespace heesch;

namespace {
std::set<Cell> as_set(std::span<const Cell> v) { return {v.begin(), v.end()}; }
}

TEST_SUITE("shape_io") {

TEST_CASE("parse cell lists") {
    const Shape ell = parse_shape("0,0 1,0 0,1", GridKind::Square);
    CHECK(as_set(ell.cells()) == std::set<Cell>{{0, 0}, {1, 0}, {0, 1}});

    auto labeled = parse_shape_line("t42: 0,0 1,0", GridKind::Square);
    REQUIRE(labeled.has_value());
    CHECK(labeled->id == "t42");
    CHECK(labeled->shape.size() == 2);

    CHECK(!parse_shape_line("# comment", GridKind::Square).has_value());
    CHECK(!parse_shape_line("   ", GridKind::Square).has_value());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_shape("0,0 2,0", GridKind::Square), parse_error);
    CHECK_THROWS_AS(parse_shape("0,0 2,0", GridKind::Iamond), parse_error);
    CHECK_THROWS_AS(parse_shape("0,0 1,zz", GridKind::Square), parse_error);
    CHECK_THROWS_AS(parse_shape("0 0", GridKind::Square), parse_error);
    CHECK_THROWS_WITH_AS(parse_shape("0,0 0,0", GridKind::Square),
                         doctest::Contains("duplicate"), parse_error);
}

TEST_CASE("round trip over enumerated shapes") {
    for (GridKind g : {GridKind::Square, GridKind::Hex, GridKind::Iamond})
        for (const Shape& s : enumerate_free(g, 5, false))
            CHECK(parse_shape(serialize_shape(s), g) == s);
}

TEST_CASE("square boundary words") {
    const Shape sq22 = parse_boundary_word("EENNWWSS", GridKind::Square);
    CHECK(as_set(sq22.cells()) == std::set<Cell>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});

    CHECK_THROWS_AS(parse_boundary_word("EN", GridKind::Square), parse_error);
    CHECK_THROWS_AS(parse_boundary_word("ENWSENWS", GridKind::Square), parse_error);
    CHECK_THROWS_AS(parse_boundary_word("EEXX", GridKind::Square), parse_error);
}

TEST_CASE("heptomino boundary word of length sixteen") {
    // A 1x7 bar: 16 unit steps around it.  The signed (shoelace) area of
    // the vertex circuit is the independent check on the enclosed count.
    const std::string word = "EEEEEEENWWWWWWWS";
    long area2 = 0;
    int x = 0, y = 0;
    for (char c : word) {
        int nx = x + (c == 'E') - (c == 'W');
        int ny = y + (c == 'N') - (c == 'S');
        area2 += long(x) * ny - long(nx) * y;
        x = nx;
        y = ny;
    }
    CHECK(std::abs(area2) == 2 * 7);

    const Shape bar = parse_boundary_word(word, GridKind::Square);
    CHECK(bar.size() == 7);
    CHECK(bar == parse_shape("0,0 1,0 2,0 3,0 4,0 5,0 6,0", GridKind::Square));
}

TEST_CASE("hex and iamond boundary words") {
    const Shape hex1 = parse_boundary_word("234501", GridKind::Hex);
    CHECK(hex1.size() == 1);
    CHECK(hex1.cells()[0] == Cell{0, 0});

    const Shape up = parse_boundary_word("024", GridKind::Iamond);
    CHECK(up.size() == 1);
    CHECK(up.cells()[0] == Cell{0, 0});

    // Down triangle: walk its corners; normalization maps it to (1,1).
    const Shape down = parse_boundary_word("135", GridKind::Iamond);
    CHECK(down.size() == 1);

    CHECK_THROWS_AS(parse_boundary_word("2345", GridKind::Hex), parse_error);
    CHECK_THROWS_AS(parse_boundary_word("224", GridKind::Hex), parse_error);
}

} // TEST_SUITE
