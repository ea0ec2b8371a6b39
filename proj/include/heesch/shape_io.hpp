#pragma once

#include "heesch/shape.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace heesch {

struct ParsedShapeLine {
    std::string id;  // empty when the line carries no label
    Shape shape;
};

// One shape per line: cells as "x,y" tokens separated by single spaces,
// optionally preceded by an "id:" label.  Lines starting with '#' and
// blank lines yield nullopt.  Malformed input raises parse_error.
std::optional<ParsedShapeLine> parse_shape_line(std::string_view line, GridKind grid);

Shape parse_shape(std::string_view line, GridKind grid);
std::string serialize_shape(const Shape& shape);

// Boundary words trace the outline of a shape as unit steps between
// lattice vertices and must form a closed, non-self-touching circuit.
// Square uses the letters E,N,W,S; Hex and Iamond use the digits 0-5
// for the six edge directions in counterclockwise order starting from
// the first basis direction.  The enclosed cells become the shape.
Shape parse_boundary_word(std::string_view word, GridKind grid);

} // namespace heesch
