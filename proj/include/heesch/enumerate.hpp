#pragma once

#include "heesch/shape.hpp"

#include <vector>

namespace heesch {

inline constexpr int kEnumerationLimit = 14;

// All free polyforms with n cells, as canonical forms in deterministic
// (sorted) order.  With exclude_holed, only simply connected shapes are
// returned.  Throws resource_error when n exceeds `limit`.
std::vector<Shape> enumerate_free(GridKind grid, int n, bool exclude_holed,
                                  int limit = kEnumerationLimit);

} // namespace heesch
