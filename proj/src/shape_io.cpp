#include "heesch/shape_io.hpp"

#include "heesch/error.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

namespace heesch {

namespace {

int mod3(std::int32_t v) { return int(((v % 3) + 3) % 3); }

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

std::int32_t parse_int(std::string_view text, std::string_view token) {
    std::int32_t value = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw parse_error("malformed coordinate in token '" + std::string(token) + "'");
    return value;
}

Cell parse_cell_token(std::string_view token) {
    const std::size_t comma = token.find(',');
    if (comma == std::string_view::npos || token.find(',', comma + 1) != std::string_view::npos)
        throw parse_error("malformed cell token '" + std::string(token) + "'");
    return {parse_int(token.substr(0, comma), token),
            parse_int(token.substr(comma + 1), token)};
}

} // namespace

std::optional<ParsedShapeLine> parse_shape_line(std::string_view line, GridKind grid) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') return std::nullopt;

    ParsedShapeLine out;
    std::size_t first = 0;
    if (tokens[0].back() == ':') {
        if (tokens[0].size() == 1)
            throw parse_error("empty shape label");
        out.id = std::string(tokens[0].substr(0, tokens[0].size() - 1));
        first = 1;
    }
    if (first >= tokens.size())
        throw parse_error("shape line has no cells");

    std::vector<Cell> cells;
    for (std::size_t i = first; i < tokens.size(); ++i)
        cells.push_back(parse_cell_token(tokens[i]));
    try {
        out.shape = Shape::from_cells(grid, std::move(cells));
    } catch (const invalid_input& e) {
        throw parse_error(e.what());
    }
    return out;
}

Shape parse_shape(std::string_view line, GridKind grid) {
    auto parsed = parse_shape_line(line, grid);
    if (!parsed) throw parse_error("shape line is empty");
    return std::move(parsed->shape);
}

std::string serialize_shape(const Shape& shape) {
    std::string out;
    for (Cell c : shape.cells()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(c.x);
        out += ',';
        out += std::to_string(c.y);
    }
    return out;
}

namespace {

// Boundary circuits walk the vertex lattice of each grid.  Vertices are
// kept in a scaled integer lattice: the raw cell lattice for Square,
// three times the cell lattice for Hex (hexagon corners fall on the
// residues (1,1) and (2,2)) and for Iamond (triangle corners fall on
// (0,0)).

struct VertexWalk {
    std::vector<Cell> vertices;  // circuit, first == last
};

bool vertex_valid(GridKind grid, Cell v) {
    switch (grid) {
    case GridKind::Square: return true;
    case GridKind::Hex: {
        const int cx = mod3(v.x);
        return cx == mod3(v.y) && cx != 0;
    }
    default: return mod3(v.x) == 0 && mod3(v.y) == 0;
    }
}

Cell step_direction(GridKind grid, char symbol, std::size_t pos) {
    constexpr Cell kSquareDirs[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    constexpr Cell kHexDirs[6] = {{1, 1},  {-1, 2}, {-2, 1},
                                  {-1, -1}, {1, -2}, {2, -1}};
    constexpr Cell kIamondDirs[6] = {{3, 0},  {0, 3},  {-3, 3},
                                     {-3, 0}, {0, -3}, {3, -3}};
    if (grid == GridKind::Square) {
        switch (symbol) {
        case 'E': return kSquareDirs[0];
        case 'N': return kSquareDirs[1];
        case 'W': return kSquareDirs[2];
        case 'S': return kSquareDirs[3];
        default: break;
        }
        throw parse_error("unknown direction '" + std::string(1, symbol) +
                          "' at position " + std::to_string(pos));
    }
    if (symbol < '0' || symbol > '5')
        throw parse_error("unknown direction '" + std::string(1, symbol) +
                          "' at position " + std::to_string(pos));
    const int d = symbol - '0';
    return grid == GridKind::Hex ? kHexDirs[d] : kIamondDirs[d];
}

VertexWalk walk_boundary(std::string_view word, GridKind grid) {
    if (word.empty()) throw parse_error("empty boundary word");
    const Cell start = grid == GridKind::Hex ? Cell{1, 1} : Cell{0, 0};
    VertexWalk walk;
    walk.vertices.push_back(start);
    std::set<Cell> seen{start};
    Cell v = start;
    for (std::size_t i = 0; i < word.size(); ++i) {
        v = v + step_direction(grid, word[i], i);
        if (!vertex_valid(grid, v))
            throw parse_error("illegal step '" + std::string(1, word[i]) +
                              "' at position " + std::to_string(i));
        const bool last = i + 1 == word.size();
        if (seen.count(v) && !(last && v == start))
            throw parse_error("boundary word touches itself at position " +
                              std::to_string(i));
        seen.insert(v);
        walk.vertices.push_back(v);
    }
    if (walk.vertices.back() != start)
        throw parse_error("boundary word is not closed");
    return walk;
}

// Cells incident to a lattice vertex.
std::vector<Cell> incident_cells(GridKind grid, Cell v) {
    switch (grid) {
    case GridKind::Square:
        return {{v.x - 1, v.y - 1}, {v.x, v.y - 1}, {v.x - 1, v.y}, {v.x, v.y}};
    case GridKind::Hex: {
        constexpr Cell kOffsSmall[3] = {{1, 1}, {-2, 1}, {1, -2}};
        constexpr Cell kOffsLarge[3] = {{-1, 2}, {-1, -1}, {2, -1}};
        const auto& offs = mod3(v.x) == 1 ? kOffsSmall : kOffsLarge;
        std::vector<Cell> out;
        for (Cell o : offs) out.push_back({(v.x - o.x) / 3, (v.y - o.y) / 3});
        return out;
    }
    default:
        return {{v.x, v.y},         {v.x - 3, v.y},     {v.x, v.y - 3},
                {v.x - 2, v.y + 1}, {v.x + 1, v.y - 2}, {v.x - 2, v.y - 2}};
    }
}

} // namespace

Shape parse_boundary_word(std::string_view word, GridKind grid) {
    const VertexWalk walk = walk_boundary(word, grid);

    // Each boundary step separates exactly two cells; record those pairs
    // as blocked crossings for the exterior fill.
    std::set<std::pair<std::uint64_t, std::uint64_t>> blocked;
    std::vector<Cell> nearby;
    for (std::size_t i = 0; i + 1 < walk.vertices.size(); ++i) {
        const auto ca = incident_cells(grid, walk.vertices[i]);
        const auto cb = incident_cells(grid, walk.vertices[i + 1]);
        std::vector<Cell> shared;
        for (Cell a : ca)
            for (Cell b : cb)
                if (a == b) shared.push_back(a);
        if (shared.size() != 2)
            throw integrity_error("boundary step does not separate two cells");
        blocked.emplace(cell_key(shared[0]), cell_key(shared[1]));
        blocked.emplace(cell_key(shared[1]), cell_key(shared[0]));
        for (Cell c : ca) nearby.push_back(c);
    }

    std::int32_t lo_x = nearby[0].x, hi_x = nearby[0].x;
    std::int32_t lo_y = nearby[0].y, hi_y = nearby[0].y;
    for (Cell c : nearby) {
        lo_x = std::min(lo_x, c.x);
        hi_x = std::max(hi_x, c.x);
        lo_y = std::min(lo_y, c.y);
        hi_y = std::max(hi_y, c.y);
    }
    const std::int32_t margin = grid == GridKind::Iamond ? 3 : 2;
    lo_x -= margin;
    lo_y -= margin;
    hi_x += margin;
    hi_y += margin;

    const auto in_box = [&](Cell c) {
        return c.x >= lo_x && c.x <= hi_x && c.y >= lo_y && c.y <= hi_y;
    };

    // Flood the exterior from the frame band without crossing the circuit.
    std::unordered_set<std::uint64_t> outside;
    std::vector<Cell> stack;
    for (std::int32_t y = lo_y; y <= hi_y; ++y) {
        for (std::int32_t x = lo_x; x <= hi_x; ++x) {
            const bool frame = x - lo_x < margin || hi_x - x < margin ||
                               y - lo_y < margin || hi_y - y < margin;
            if (!frame) continue;
            const Cell c{x, y};
            if (cell_valid(grid, c) && outside.insert(cell_key(c)).second)
                stack.push_back(c);
        }
    }
    while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        for (Cell d : edge_offsets(grid, c)) {
            const Cell n = c + d;
            if (!in_box(n)) continue;
            if (blocked.count({cell_key(c), cell_key(n)})) continue;
            if (outside.insert(cell_key(n)).second) stack.push_back(n);
        }
    }

    std::vector<Cell> interior;
    for (std::int32_t y = lo_y; y <= hi_y; ++y)
        for (std::int32_t x = lo_x; x <= hi_x; ++x) {
            const Cell c{x, y};
            if (cell_valid(grid, c) && !outside.count(cell_key(c)))
                interior.push_back(c);
        }
    if (interior.empty())
        throw parse_error("boundary word encloses no cells");
    try {
        return Shape::from_cells(grid, std::move(interior));
    } catch (const invalid_input& e) {
        throw parse_error(e.what());
    }
}

} // namespace heesch
