#include "heesch/enumerate.hpp"

#include "heesch/error.hpp"

#include <set>
#include <string>

namespace heesch {

// Growth-based generation: every free n-form is some free (n-1)-form
// plus one edge-neighboring cell (every connected graph has a non-cut
// vertex), so growing all canonical forms level by level and
// deduplicating reaches each free polyform exactly once.  Holed shapes
// stay in the working sets regardless of exclude_holed; the filter
// applies only to the final level.
std::vector<Shape> enumerate_free(GridKind grid, int n, bool exclude_holed,
                                  int limit) {
    if (n < 1) throw invalid_input("polyform order must be at least 1");
    if (n > limit)
        throw resource_error("enumeration of order " + std::to_string(n) +
                             " exceeds the configured limit " +
                             std::to_string(limit));

    std::set<Shape> current;
    current.insert(Shape::from_cells(grid, {{0, 0}}));
    for (int k = 2; k <= n; ++k) {
        std::set<Shape> next;
        std::vector<Cell> grown;
        for (const Shape& s : current) {
            for (Cell c : s.cells()) {
                for (Cell d : edge_offsets(grid, c)) {
                    const Cell e = c + d;
                    if (s.contains(e)) continue;
                    grown.assign(s.cells().begin(), s.cells().end());
                    grown.push_back(e);
                    next.insert(canonical_form(Shape::from_cells(grid, grown)));
                }
            }
        }
        current = std::move(next);
    }

    std::vector<Shape> out;
    out.reserve(current.size());
    for (const Shape& s : current) {
        if (exclude_holed && !simply_connected(grid, s.cells())) continue;
        out.push_back(s);
    }
    return out;
}

} // namespace heesch
