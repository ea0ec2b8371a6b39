#include "heesch/raster.hpp"

#include "heesch/error.hpp"

#include <algorithm>
#include <limits>

namespace heesch {

Raster::Raster(GridKind grid, std::span<const Cell> cells) : grid_(grid) {
    std::int32_t lo_x = 0, lo_y = 0, hi_x = 0, hi_y = 0;
    bool first = true;
    for (Cell c : cells) {
        if (first) {
            lo_x = hi_x = c.x;
            lo_y = hi_y = c.y;
            first = false;
        } else {
            lo_x = std::min(lo_x, c.x);
            hi_x = std::max(hi_x, c.x);
            lo_y = std::min(lo_y, c.y);
            hi_y = std::max(hi_y, c.y);
        }
    }
    // Iamond edge steps move a coordinate by up to 2, so a band of
    // width 3 cannot be jumped; 2 suffices for the unit-step grids.
    margin_ = grid == GridKind::Iamond ? 3 : 2;
    min_x_ = lo_x - margin_;
    min_y_ = lo_y - margin_;
    width_ = hi_x - lo_x + 1 + 2 * margin_;
    height_ = hi_y - lo_y + 1 + 2 * margin_;
    data_.assign(std::size_t(width_) * std::size_t(height_), kEmpty);
}

std::size_t Raster::index(Cell c) const {
    return std::size_t(c.x - min_x_) +
           std::size_t(c.y - min_y_) * std::size_t(width_);
}

bool Raster::in_bounds(Cell c) const {
    return c.x >= min_x_ && c.x < min_x_ + width_ && c.y >= min_y_ &&
           c.y < min_y_ + height_;
}

bool Raster::paint(Cell c, std::int32_t owner) {
    if (!in_bounds(c))
        throw integrity_error("raster paint outside bounds");
    std::int32_t& slot = data_[index(c)];
    if (slot != kEmpty && slot != owner) return false;
    slot = owner;
    return true;
}

std::int32_t Raster::at(Cell c) const {
    if (!in_bounds(c)) return kOutside;
    return data_[index(c)];
}

void Raster::flood_exterior() {
    std::vector<Cell> stack;
    // Seed every valid empty cell in the frame band.
    for (std::int32_t y = 0; y < height_; ++y) {
        for (std::int32_t x = 0; x < width_; ++x) {
            const bool frame = x < margin_ || x >= width_ - margin_ ||
                               y < margin_ || y >= height_ - margin_;
            if (!frame) continue;
            const Cell c{min_x_ + x, min_y_ + y};
            if (!cell_valid(grid_, c)) continue;
            std::int32_t& slot = data_[index(c)];
            if (slot == kEmpty) {
                slot = kOutside;
                stack.push_back(c);
            }
        }
    }
    while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        for (Cell d : edge_offsets(grid_, c)) {
            const Cell n = c + d;
            if (!in_bounds(n)) continue;
            std::int32_t& slot = data_[index(n)];
            if (slot == kEmpty) {
                slot = kOutside;
                stack.push_back(n);
            }
        }
    }
}

std::vector<std::vector<Cell>> Raster::extract_holes() {
    std::vector<std::vector<Cell>> holes;
    std::vector<Cell> stack;
    for (std::int32_t y = 0; y < height_; ++y) {
        for (std::int32_t x = 0; x < width_; ++x) {
            const Cell c{min_x_ + x, min_y_ + y};
            if (!cell_valid(grid_, c) || data_[index(c)] != kEmpty) continue;
            std::vector<Cell> region;
            data_[index(c)] = kHoleSeen;
            stack.assign(1, c);
            while (!stack.empty()) {
                const Cell p = stack.back();
                stack.pop_back();
                region.push_back(p);
                for (Cell d : edge_offsets(grid_, p)) {
                    const Cell n = p + d;
                    if (!in_bounds(n)) continue;
                    std::int32_t& slot = data_[index(n)];
                    if (slot == kEmpty) {
                        slot = kHoleSeen;
                        stack.push_back(n);
                    }
                }
            }
            std::sort(region.begin(), region.end());
            holes.push_back(std::move(region));
        }
    }
    return holes;
}

} // namespace heesch
