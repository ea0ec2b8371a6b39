#include "heesch/shape.hpp"

#include "heesch/error.hpp"
#include "heesch/raster.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace heesch {

namespace {

int mod3(std::int32_t v) { return int(((v % 3) + 3) % 3); }

std::string cell_text(Cell c) {
    return std::to_string(c.x) + "," + std::to_string(c.y);
}

} // namespace

Cell normalization_anchor(GridKind grid, std::span<const Cell> sorted_cells) {
    if (sorted_cells.empty()) return {};
    if (grid != GridKind::Iamond) return sorted_cells.front();
    for (Cell c : sorted_cells)
        if (mod3(c.x) == 0) return c;
    return sorted_cells.front() - Cell{1, 1};
}

bool edge_connected(GridKind grid, std::span<const Cell> cells) {
    if (cells.empty()) return false;
    std::unordered_set<std::uint64_t> todo;
    for (Cell c : cells) todo.insert(cell_key(c));
    std::vector<Cell> stack{cells.front()};
    todo.erase(cell_key(cells.front()));
    while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        for (Cell d : edge_offsets(grid, c)) {
            const Cell n = c + d;
            auto it = todo.find(cell_key(n));
            if (it != todo.end()) {
                todo.erase(it);
                stack.push_back(n);
            }
        }
    }
    return todo.empty();
}

Shape Shape::from_cells(GridKind grid, std::vector<Cell> cells) {
    if (cells.empty()) throw invalid_input("shape has no cells");
    for (Cell c : cells)
        if (!cell_valid(grid, c))
            throw invalid_input("invalid cell " + cell_text(c) + " for grid " +
                                std::string(grid_name(grid)));
    std::sort(cells.begin(), cells.end());
    for (std::size_t i = 1; i < cells.size(); ++i)
        if (cells[i] == cells[i - 1])
            throw invalid_input("duplicate cell " + cell_text(cells[i]));
    if (!edge_connected(grid, cells))
        throw invalid_input("disconnected cell set");
    const Cell a = normalization_anchor(grid, cells);
    for (Cell& c : cells) c = c - a;
    Shape s;
    s.grid_ = grid;
    s.cells_ = std::move(cells);
    return s;
}

bool Shape::contains(Cell p) const {
    return std::binary_search(cells_.begin(), cells_.end(), p);
}

Placement place(const Shape& shape, const Transform& t) {
    require_transform(shape.grid(), t);
    Placement p;
    p.transform = t;
    p.cells.reserve(shape.cells().size());
    for (Cell c : shape.cells()) p.cells.push_back(apply(shape.grid(), t, c));
    std::sort(p.cells.begin(), p.cells.end());
    return p;
}

std::vector<Cell> halo_of(GridKind grid, std::span<const Cell> cells) {
    std::vector<Cell> sorted(cells.begin(), cells.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Cell> out;
    out.reserve(sorted.size() * 8);
    for (Cell c : sorted)
        for (Cell d : halo_offsets(grid, c)) out.push_back(c + d);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::erase_if(out, [&](Cell c) {
        return std::binary_search(sorted.begin(), sorted.end(), c);
    });
    return out;
}

bool cells_overlap(std::span<const Cell> a, std::span<const Cell> b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

bool cells_contact(GridKind grid, std::span<const Cell> a, std::span<const Cell> b) {
    const std::span<const Cell>& small = a.size() <= b.size() ? a : b;
    const std::span<const Cell>& big = a.size() <= b.size() ? b : a;
    for (Cell c : small)
        for (Cell d : halo_offsets(grid, c))
            if (std::binary_search(big.begin(), big.end(), c + d)) return true;
    return false;
}

bool adjacent(GridKind grid, const Placement& a, const Placement& b) {
    if (cells_overlap(a.cells, b.cells)) return false;
    return cells_contact(grid, a.cells, b.cells);
}

bool simply_connected(GridKind grid, std::span<const Cell> cells) {
    if (cells.empty()) return true;
    Raster raster(grid, cells);
    for (Cell c : cells) raster.paint(c, 0);
    raster.flood_exterior();
    return raster.extract_holes().empty();
}

bool pair_encloses_hole(GridKind grid, const Placement& a, const Placement& b) {
    if (!adjacent(grid, a, b))
        throw invalid_input("pair_encloses_hole requires adjacent placements");
    std::vector<Cell> both;
    both.reserve(a.cells.size() + b.cells.size());
    both.insert(both.end(), a.cells.begin(), a.cells.end());
    both.insert(both.end(), b.cells.begin(), b.cells.end());
    return !simply_connected(grid, both);
}

Shape canonical_form(const Shape& shape) {
    const GridKind grid = shape.grid();
    std::vector<Cell> best;
    std::vector<Cell> image(shape.cells().size());
    const auto os = orientations(grid);
    for (std::size_t o = 0; o < os.size(); ++o) {
        for (std::size_t i = 0; i < image.size(); ++i)
            image[i] = os[o].map(shape.cells()[i]);
        std::sort(image.begin(), image.end());
        const Cell a = normalization_anchor(grid, image);
        for (Cell& c : image) c = c - a;
        if (best.empty() || image < best) best = image;
    }
    Shape s = Shape::from_cells(grid, std::move(best));
    return s;
}

} // namespace heesch
