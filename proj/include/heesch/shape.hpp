#pragma once

#include "heesch/grid.hpp"

#include <span>
#include <vector>

namespace heesch {

// A polyform: a nonempty, edge-connected set of valid cells, stored
// sorted and normalized.  Square/Hex shapes are translated so the least
// cell is (0,0); Iamond shapes are translated by multiples of 3 so the
// least up-pointing cell lands on (0,0) (or, for all-down shapes, the
// least cell on (1,1)).
class Shape {
public:
    Shape() = default;

    // Validates, normalizes, sorts.  Throws invalid_input on an empty
    // set, invalid or duplicate cells, or a disconnected cell set.
    static Shape from_cells(GridKind grid, std::vector<Cell> cells);

    GridKind grid() const { return grid_; }
    std::span<const Cell> cells() const { return cells_; }
    int size() const { return int(cells_.size()); }
    bool contains(Cell p) const;

    friend bool operator==(const Shape& a, const Shape& b) {
        return a.grid_ == b.grid_ && a.cells_ == b.cells_;
    }
    friend bool operator<(const Shape& a, const Shape& b) {
        return a.cells_ < b.cells_;
    }

private:
    GridKind grid_ = GridKind::Square;
    std::vector<Cell> cells_;
};

// A transformed copy of a shape; cells are sorted.
struct Placement {
    Transform transform;
    std::vector<Cell> cells;
};

Placement place(const Shape& shape, const Transform& t);

// The ring of cells outside `cells` that touch it under the grid's
// vertex-inclusive neighborhood.  Input need not be sorted; output is
// sorted and unique.
std::vector<Cell> halo_of(GridKind grid, std::span<const Cell> cells);

// Sorted-range helpers.
bool cells_overlap(std::span<const Cell> a, std::span<const Cell> b);
bool cells_contact(GridKind grid, std::span<const Cell> a, std::span<const Cell> b);

// Disjoint but touching (edge or vertex).  Symmetric.
bool adjacent(GridKind grid, const Placement& a, const Placement& b);

// Whether the union of two adjacent placements encloses at least one
// empty cell.  Throws invalid_input if the placements are not adjacent.
bool pair_encloses_hole(GridKind grid, const Placement& a, const Placement& b);

// No enclosed empty region (cells need not be sorted).
bool simply_connected(GridKind grid, std::span<const Cell> cells);
bool edge_connected(GridKind grid, std::span<const Cell> cells);

// Least normalized image over the full orientation set.  Two shapes are
// congruent (as free polyforms) iff their canonical forms are equal.
Shape canonical_form(const Shape& shape);

// Normalizing translation used by Shape and by placement identity: the
// translation t with grid-legal residue such that min(cells - t) is the
// normalization anchor.
Cell normalization_anchor(GridKind grid, std::span<const Cell> sorted_cells);

} // namespace heesch
