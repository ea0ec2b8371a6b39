#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace heesch {

// The three ambient grids. Square and Hex cells take any integer pair.
// Iamond cells live on a sparse subset of the hex lattice: up-pointing
// triangles at coordinates congruent to (0,0) mod 3, down-pointing
// triangles at coordinates congruent to (1,1) mod 3.
enum class GridKind : std::uint8_t { Square, Hex, Iamond };

std::string_view grid_name(GridKind grid);

struct Cell {
    std::int32_t x = 0;
    std::int32_t y = 0;

    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

constexpr Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y}; }
constexpr Cell operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y}; }

constexpr std::uint64_t cell_key(Cell c) {
    return (std::uint64_t(std::uint32_t(c.x)) << 32) | std::uint32_t(c.y);
}

constexpr Cell cell_from_key(std::uint64_t k) {
    return {std::int32_t(std::uint32_t(k >> 32)), std::int32_t(std::uint32_t(k))};
}

struct CellHash {
    std::size_t operator()(const Cell& c) const {
        std::uint64_t k = cell_key(c);
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdULL;
        k ^= k >> 33;
        return std::size_t(k);
    }
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// One element of a grid's orientation set: a 2x2 integer matrix (row
// major) plus a translation baked into the orientation.  The offset is
// zero except for the six Iamond orientations that exchange up and down
// triangles.
struct Orientation {
    std::array<std::int32_t, 4> m{1, 0, 0, 1};
    Cell offset{};

    constexpr Cell map(Cell p) const {
        return {m[0] * p.x + m[1] * p.y + offset.x,
                m[2] * p.x + m[3] * p.y + offset.y};
    }
};

// Number of orientations: 8 for Square, 12 for Hex and Iamond.
int orientation_count(GridKind grid);

// Full orientation set in a fixed order; index 0 is the identity.
// Square: rotations counterclockwise by 0/90/180/270 degrees, then the
// same rotations composed with the mirror across the x axis.
// Hex: powers of the 60-degree rotation A, then each power times the
// reflection B across the first basis vector.
// Iamond: the six hex orientations that preserve the triangle coloring,
// then their compositions with the color-swapping map (B followed by a
// translation by (1,-2)).
std::span<const Orientation> orientations(GridKind grid);

// Rigid motion of the grid: orientation index plus integer translation.
// For Iamond both translation components must be divisible by 3.
struct Transform {
    std::int32_t orient = 0;
    std::int32_t tx = 0;
    std::int32_t ty = 0;

    friend constexpr auto operator<=>(const Transform&, const Transform&) = default;
};

inline constexpr Transform kIdentity{};

bool cell_valid(GridKind grid, Cell p);
bool transform_valid(GridKind grid, const Transform& t);
void require_cell(GridKind grid, Cell p);             // throws invalid_input
void require_transform(GridKind grid, const Transform& t);

// 0 for an up triangle, 1 for a down triangle.
int iamond_color(Cell p);

Cell apply_orientation(GridKind grid, int orient, Cell p);
Cell apply(GridKind grid, const Transform& t, Cell p);

// apply(compose(t1,t2), p) == apply(t1, apply(t2, p)).
Transform compose(GridKind grid, const Transform& t1, const Transform& t2);
Transform inverse(GridKind grid, const Transform& t);
int compose_orientations(GridKind grid, int o1, int o2);
int inverse_orientation(GridKind grid, int o);

// Vertex-inclusive neighborhood offsets: 8 cells for Square, 6 for Hex,
// 12 for Iamond.  The Iamond tables depend on the color of p.
std::span<const Cell> halo_offsets(GridKind grid, Cell p);
// Edge-sharing neighborhood offsets: 4 / 6 / 3 cells.
std::span<const Cell> edge_offsets(GridKind grid, Cell p);

std::vector<Cell> halo_neighbors(GridKind grid, Cell p);
std::vector<Cell> edge_neighbors(GridKind grid, Cell p);

// Square: (x, y).  Hex/Iamond: x*(1,0) + y*(1/2, sqrt(3)/2).
Vec2 to_cartesian(GridKind grid, Cell p);

// 32-bit packing: orientation in four bits, each translation component a
// signed byte.  Out-of-range transforms raise range_error.
bool packable(const Transform& t);
std::uint32_t pack(const Transform& t);
Transform unpack(std::uint32_t word);

} // namespace heesch
