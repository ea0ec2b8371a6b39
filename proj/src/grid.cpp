#include "heesch/grid.hpp"

#include "heesch/error.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <string>

namespace heesch {

namespace {

using Mat = std::array<std::int32_t, 4>;

constexpr Mat mul(const Mat& a, const Mat& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

constexpr Cell mat_map(const Mat& m, Cell p) {
    return {m[0] * p.x + m[1] * p.y, m[2] * p.x + m[3] * p.y};
}

constexpr int mod3(std::int32_t v) { return int(((v % 3) + 3) % 3); }

// 60-degree rotation and reflection across the first basis vector, in
// the basis v=(1,0), w=(1/2, sqrt(3)/2).
constexpr Mat kHexA{0, -1, 1, 1};
constexpr Mat kHexB{1, 1, 0, -1};
// Counterclockwise quarter turn and mirror across the x axis.
constexpr Mat kSqR{0, -1, 1, 0};
constexpr Mat kSqM{1, 0, 0, -1};

struct GridTables {
    std::vector<Orientation> orients;
    std::array<std::int8_t, 16 * 16> comp{};
    std::array<std::int8_t, 16> inv{};
};

int find_matrix(const std::vector<Orientation>& os, const Mat& m) {
    for (std::size_t i = 0; i < os.size(); ++i)
        if (os[i].m == m) return int(i);
    return -1;
}

void fill_composition(GridTables& t, bool iamond) {
    const int n = int(t.orients.size());
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const Mat prod = mul(t.orients[a].m, t.orients[b].m);
            const int c = find_matrix(t.orients, prod);
            if (c < 0) throw std::logic_error("orientation set not closed");
            if (iamond) {
                // The residual translation of the affine composition must
                // itself be a legal Iamond translation.
                const Cell r = mat_map(t.orients[a].m, t.orients[b].offset) +
                               t.orients[a].offset - t.orients[c].offset;
                if (mod3(r.x) != 0 || mod3(r.y) != 0)
                    throw std::logic_error("iamond orientation offsets inconsistent");
            }
            t.comp[std::size_t(a) * 16 + std::size_t(b)] = std::int8_t(c);
            if (c == 0) t.inv[std::size_t(a)] = std::int8_t(b);
        }
    }
}

GridTables make_square_tables() {
    GridTables t;
    Mat rot{1, 0, 0, 1};
    for (int i = 0; i < 4; ++i) {
        t.orients.push_back({rot, {}});
        rot = mul(kSqR, rot);
    }
    rot = kSqM;
    for (int i = 0; i < 4; ++i) {
        t.orients.push_back({rot, {}});
        rot = mul(kSqR, rot);
    }
    fill_composition(t, false);
    return t;
}

GridTables make_hex_tables() {
    GridTables t;
    Mat rot{1, 0, 0, 1};
    for (int i = 0; i < 6; ++i) {
        t.orients.push_back({rot, {}});
        rot = mul(kHexA, rot);
    }
    for (int i = 0; i < 6; ++i)
        t.orients.push_back({mul(t.orients[std::size_t(i)].m, kHexB), {}});
    fill_composition(t, false);
    return t;
}

GridTables make_iamond_tables() {
    // Color-preserving orientations are the hex orientations that map the
    // down triangle at (1,1) to a down triangle; in hex order those are
    // I, A^2, A^4, AB, A^3B, A^5B.  Each color-swapping orientation is a
    // color-preserving one composed with the swap map (B, +(1,-2)).
    GridTables t;
    const GridTables hex = make_hex_tables();
    const Cell swap_off{1, -2};
    std::vector<Orientation> preserving;
    for (const Orientation& o : hex.orients) {
        const Cell img = mat_map(o.m, {1, 1});
        if (mod3(img.x) == 1 && mod3(img.y) == 1) preserving.push_back(o);
    }
    if (preserving.size() != 6)
        throw std::logic_error("expected six color-preserving hex orientations");
    for (const Orientation& o : preserving)
        t.orients.push_back(o);
    for (const Orientation& o : preserving)
        t.orients.push_back({mul(o.m, kHexB), mat_map(o.m, swap_off)});
    fill_composition(t, true);
    return t;
}

const GridTables& tables(GridKind g) {
    static const GridTables square = make_square_tables();
    static const GridTables hex = make_hex_tables();
    static const GridTables iamond = make_iamond_tables();
    switch (g) {
    case GridKind::Square: return square;
    case GridKind::Hex: return hex;
    default: return iamond;
    }
}

constexpr Cell kSquareHalo[8] = {{1, 0},  {1, 1},   {0, 1},  {-1, 1},
                                 {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
constexpr Cell kSquareEdge[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
constexpr Cell kHexRing[6] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};

// Triangle neighborhoods in the sparse hex embedding.  Same-color
// neighbors sit at the six hex directions scaled by 3; opposite-color
// neighbors at the remaining vertex-sharing positions.  The edge tables
// are the subsets that share a full edge.
constexpr Cell kIamondHaloUp[12] = {{3, 0},  {0, 3},  {-3, 3},  {-3, 0},
                                    {0, -3}, {3, -3}, {1, 1},   {-2, 1},
                                    {1, -2}, {-2, -2}, {4, -2}, {-2, 4}};
constexpr Cell kIamondHaloDown[12] = {{3, 0},  {0, 3},  {-3, 3},  {-3, 0},
                                      {0, -3}, {3, -3}, {-1, -1}, {2, -1},
                                      {-1, 2}, {2, 2},  {-4, 2},  {2, -4}};
constexpr Cell kIamondEdgeUp[3] = {{1, 1}, {-2, 1}, {1, -2}};
constexpr Cell kIamondEdgeDown[3] = {{-1, -1}, {2, -1}, {-1, 2}};

} // namespace

std::string_view grid_name(GridKind grid) {
    switch (grid) {
    case GridKind::Square: return "omino";
    case GridKind::Hex: return "hex";
    default: return "iamond";
    }
}

int orientation_count(GridKind grid) {
    return grid == GridKind::Square ? 8 : 12;
}

std::span<const Orientation> orientations(GridKind grid) {
    const GridTables& t = tables(grid);
    return {t.orients.data(), t.orients.size()};
}

bool cell_valid(GridKind grid, Cell p) {
    if (grid != GridKind::Iamond) return true;
    const int cx = mod3(p.x);
    return cx == mod3(p.y) && cx != 2;
}

bool transform_valid(GridKind grid, const Transform& t) {
    if (t.orient < 0 || t.orient >= orientation_count(grid)) return false;
    if (grid == GridKind::Iamond && (mod3(t.tx) != 0 || mod3(t.ty) != 0))
        return false;
    return true;
}

void require_cell(GridKind grid, Cell p) {
    if (!cell_valid(grid, p))
        throw invalid_input("invalid cell (" + std::to_string(p.x) + "," +
                            std::to_string(p.y) + ") for grid " +
                            std::string(grid_name(grid)));
}

void require_transform(GridKind grid, const Transform& t) {
    if (!transform_valid(grid, t))
        throw invalid_input("invalid transform (orient " + std::to_string(t.orient) +
                            ", translation " + std::to_string(t.tx) + "," +
                            std::to_string(t.ty) + ") for grid " +
                            std::string(grid_name(grid)));
}

int iamond_color(Cell p) {
    assert(cell_valid(GridKind::Iamond, p));
    return mod3(p.x);
}

Cell apply_orientation(GridKind grid, int orient, Cell p) {
    return tables(grid).orients[std::size_t(orient)].map(p);
}

Cell apply(GridKind grid, const Transform& t, Cell p) {
    require_transform(grid, t);
    require_cell(grid, p);
    const Cell q = tables(grid).orients[std::size_t(t.orient)].map(p);
    return {q.x + t.tx, q.y + t.ty};
}

Transform compose(GridKind grid, const Transform& t1, const Transform& t2) {
    require_transform(grid, t1);
    require_transform(grid, t2);
    const GridTables& tab = tables(grid);
    const Orientation& o1 = tab.orients[std::size_t(t1.orient)];
    const Orientation& o2 = tab.orients[std::size_t(t2.orient)];
    const int o3 = tab.comp[std::size_t(t1.orient) * 16 + std::size_t(t2.orient)];
    const Cell inner{o2.offset.x + t2.tx, o2.offset.y + t2.ty};
    const Cell moved = mat_map(o1.m, inner);
    Transform r;
    r.orient = o3;
    r.tx = moved.x + o1.offset.x + t1.tx - tab.orients[std::size_t(o3)].offset.x;
    r.ty = moved.y + o1.offset.y + t1.ty - tab.orients[std::size_t(o3)].offset.y;
    if (!packable(r))
        throw range_error("composed transform outside packable range");
    return r;
}

Transform inverse(GridKind grid, const Transform& t) {
    require_transform(grid, t);
    const GridTables& tab = tables(grid);
    const int oi = tab.inv[std::size_t(t.orient)];
    const Orientation& inv = tab.orients[std::size_t(oi)];
    const Orientation& fwd = tab.orients[std::size_t(t.orient)];
    const Cell moved = mat_map(inv.m, {fwd.offset.x + t.tx, fwd.offset.y + t.ty});
    Transform r;
    r.orient = oi;
    r.tx = -moved.x - inv.offset.x;
    r.ty = -moved.y - inv.offset.y;
    if (!packable(r))
        throw range_error("inverted transform outside packable range");
    return r;
}

int compose_orientations(GridKind grid, int o1, int o2) {
    return tables(grid).comp[std::size_t(o1) * 16 + std::size_t(o2)];
}

int inverse_orientation(GridKind grid, int o) {
    return tables(grid).inv[std::size_t(o)];
}

std::span<const Cell> halo_offsets(GridKind grid, Cell p) {
    switch (grid) {
    case GridKind::Square: return {kSquareHalo, 8};
    case GridKind::Hex: return {kHexRing, 6};
    default:
        return iamond_color(p) == 0 ? std::span<const Cell>{kIamondHaloUp, 12}
                                    : std::span<const Cell>{kIamondHaloDown, 12};
    }
}

std::span<const Cell> edge_offsets(GridKind grid, Cell p) {
    switch (grid) {
    case GridKind::Square: return {kSquareEdge, 4};
    case GridKind::Hex: return {kHexRing, 6};
    default:
        return iamond_color(p) == 0 ? std::span<const Cell>{kIamondEdgeUp, 3}
                                    : std::span<const Cell>{kIamondEdgeDown, 3};
    }
}

std::vector<Cell> halo_neighbors(GridKind grid, Cell p) {
    require_cell(grid, p);
    std::vector<Cell> out;
    for (Cell d : halo_offsets(grid, p)) out.push_back(p + d);
    return out;
}

std::vector<Cell> edge_neighbors(GridKind grid, Cell p) {
    require_cell(grid, p);
    std::vector<Cell> out;
    for (Cell d : edge_offsets(grid, p)) out.push_back(p + d);
    return out;
}

Vec2 to_cartesian(GridKind grid, Cell p) {
    if (grid == GridKind::Square) return {double(p.x), double(p.y)};
    static const double kRoot3Half = std::sqrt(3.0) / 2.0;
    return {p.x + 0.5 * p.y, kRoot3Half * p.y};
}

bool packable(const Transform& t) {
    return t.orient >= 0 && t.orient < 16 && t.tx >= -128 && t.tx <= 127 &&
           t.ty >= -128 && t.ty <= 127;
}

std::uint32_t pack(const Transform& t) {
    if (!packable(t))
        throw range_error("transform outside packable range");
    return (std::uint32_t(t.orient) << 16) |
           (std::uint32_t(std::uint8_t(t.tx)) << 8) |
           std::uint32_t(std::uint8_t(t.ty));
}

Transform unpack(std::uint32_t word) {
    Transform t;
    t.orient = std::int32_t((word >> 16) & 0xf);
    t.tx = std::int8_t(std::uint8_t(word >> 8));
    t.ty = std::int8_t(std::uint8_t(word));
    return t;
}

} // namespace heesch
