#pragma once

#include "heesch/grid.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace heesch {

// Bounded paint-and-fill raster over a grid region: paint cell sets,
// flood the exterior inward from the frame band, then read off the
// enclosed empty regions.  Fill moves only across shared edges.
class Raster {
public:
    static constexpr std::int32_t kEmpty = -1;
    static constexpr std::int32_t kOutside = -2;
    static constexpr std::int32_t kHoleSeen = -3;

    // Sized to the bounding box of `cells` plus a margin wide enough
    // that no single edge step can jump over the frame band.
    Raster(GridKind grid, std::span<const Cell> cells);

    GridKind grid() const { return grid_; }
    bool in_bounds(Cell c) const;

    // False if the cell is already owned by a different id.
    bool paint(Cell c, std::int32_t owner);

    void flood_exterior();

    // Owner id, or kEmpty / kOutside.  Out-of-bounds reads as kOutside.
    std::int32_t at(Cell c) const;

    // Edge-connected components of enclosed empty cells.  Call after
    // flood_exterior; consumes the empty marks.
    std::vector<std::vector<Cell>> extract_holes();

private:
    std::size_t index(Cell c) const;

    GridKind grid_;
    std::int32_t min_x_ = 0, min_y_ = 0;
    std::int32_t width_ = 0, height_ = 0;
    std::int32_t margin_ = 0;
    std::vector<std::int32_t> data_;
};

} // namespace heesch
