/**
 * @file geometry.hpp
 * @brief Cells, collections of cells and their combinatorics: vertices,
 * inner intervals, maximal edge intervals, holes and classification.
 *
 * Every sequence returned here is sorted by the vertex order
 * (i,j) > (k,l) iff i > k, or i = k and j > l, so results are deterministic.
 */
#pragma once

#include "polyo/error.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace polyo {

inline constexpr std::int64_t kCoordinateBound = 1'000'000;

/// A point of Z^2. `i` is the column, `j` the row. The defaulted ordering is
/// exactly the vertex order: first by column, then by row.
struct GridPoint {
    std::int64_t i = 0;
    std::int64_t j = 0;

    friend constexpr auto operator<=>(const GridPoint&, const GridPoint&) = default;
    friend constexpr bool operator==(const GridPoint&, const GridPoint&) = default;

    constexpr GridPoint operator+(GridPoint o) const { return {i + o.i, j + o.j}; }

    /// Componentwise partial order used for intervals.
    constexpr bool weakly_below(GridPoint o) const { return i <= o.i && j <= o.j; }
};

inline std::string to_string(GridPoint p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

struct GridPointHash {
    std::size_t operator()(GridPoint p) const noexcept {
        auto h = static_cast<std::uint64_t>(p.i) * 0x9E3779B97F4A7C15ULL;
        h ^= static_cast<std::uint64_t>(p.j) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

/// Unit square identified by its lower-left corner.
struct Cell {
    GridPoint a;

    constexpr GridPoint lower_left() const { return a; }
    constexpr GridPoint lower_right() const { return a + GridPoint{1, 0}; }
    constexpr GridPoint upper_left() const { return a + GridPoint{0, 1}; }
    constexpr GridPoint upper_right() const { return a + GridPoint{1, 1}; }

    std::array<GridPoint, 4> vertices() const {
        return {lower_left(), lower_right(), upper_left(), upper_right()};
    }

    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
    friend constexpr bool operator==(const Cell&, const Cell&) = default;
};

struct CellHash {
    std::size_t operator()(Cell c) const noexcept { return GridPointHash{}(c.a); }
};

/// Interval [a,b] of Z^2 with a <= b componentwise.
struct Interval {
    GridPoint a;
    GridPoint b;

    constexpr bool proper() const { return a.i < b.i && a.j < b.j; }
    constexpr GridPoint anti_diagonal_upper_left() const { return {a.i, b.j}; }
    constexpr GridPoint anti_diagonal_lower_right() const { return {b.i, a.j}; }

    friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
    friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

enum class Direction { horizontal, vertical };

/// A run of collinear unit edges of the collection. For horizontal intervals
/// `fixed` is the row j and the span runs over columns; vertical ones swap roles.
struct EdgeInterval {
    Direction direction = Direction::horizontal;
    std::int64_t fixed = 0;
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    bool contains(GridPoint p) const {
        if (direction == Direction::horizontal) return p.j == fixed && lo <= p.i && p.i <= hi;
        return p.i == fixed && lo <= p.j && p.j <= hi;
    }

    friend constexpr auto operator<=>(const EdgeInterval&, const EdgeInterval&) = default;
    friend constexpr bool operator==(const EdgeInterval&, const EdgeInterval&) = default;
};

/// Bounded edge-connected component of the complement. `corner` is the
/// minimum vertex of the hole's cells.
struct Hole {
    std::vector<Cell> cells;
    GridPoint corner;

    friend bool operator==(const Hole&, const Hole&) = default;
};

struct Classification {
    bool is_polyomino = false;
    bool weakly_connected = false;
    bool row_convex = false;
    bool column_convex = false;
    bool convex = false;
    bool simple = false;
    std::size_t hole_count = 0;
    std::size_t component_count = 0;
};

/// Nonempty, duplicate-free finite set of cells. Construction validates.
class CellCollection {
public:
    explicit CellCollection(std::vector<Cell> cells) : cells_(std::move(cells)) {
        if (cells_.empty()) throw PreconditionError("a collection of cells must be nonempty");
        for (const Cell& c : cells_) {
            // the upper-right corner must stay within the bound too
            if (std::abs(c.a.i) > kCoordinateBound - 1 || std::abs(c.a.j) > kCoordinateBound - 1) {
                throw PreconditionError("cell " + to_string(c.a) + " exceeds the coordinate bound");
            }
        }
        std::sort(cells_.begin(), cells_.end());
        auto dup = std::adjacent_find(cells_.begin(), cells_.end());
        if (dup != cells_.end()) throw PreconditionError("duplicate cell " + to_string(dup->a));
        members_.reserve(cells_.size() * 2);
        for (const Cell& c : cells_) members_.insert(c.a);
    }

    static CellCollection from_corners(std::span<const GridPoint> lower_left) {
        std::vector<Cell> cells;
        cells.reserve(lower_left.size());
        for (GridPoint p : lower_left) cells.push_back(Cell{p});
        return CellCollection(std::move(cells));
    }

    /// Cells sorted ascending by lower-left corner.
    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t rank() const { return cells_.size(); }
    bool contains(Cell c) const { return members_.contains(c.a); }
    bool contains_cell_at(std::int64_t i, std::int64_t j) const { return members_.contains({i, j}); }

    /// Smallest interval containing every cell.
    Interval bounding_interval() const {
        GridPoint lo = cells_.front().a, hi = cells_.front().upper_right();
        for (const Cell& c : cells_) {
            lo.i = std::min(lo.i, c.a.i);
            lo.j = std::min(lo.j, c.a.j);
            hi.i = std::max(hi.i, c.a.i + 1);
            hi.j = std::max(hi.j, c.a.j + 1);
        }
        return {lo, hi};
    }

    CellCollection translated(GridPoint by) const {
        std::vector<Cell> moved;
        moved.reserve(cells_.size());
        for (const Cell& c : cells_) moved.push_back(Cell{c.a + by});
        return CellCollection(std::move(moved));
    }

    friend bool operator==(const CellCollection& x, const CellCollection& y) { return x.cells_ == y.cells_; }

private:
    std::vector<Cell> cells_;
    std::unordered_set<GridPoint, GridPointHash> members_;
};

/// V(P), sorted descending by the vertex order: index 0 is the top-ranked variable.
inline std::vector<GridPoint> vertex_set(const CellCollection& P) {
    std::vector<GridPoint> out;
    out.reserve(P.rank() * 4);
    for (const Cell& c : P.cells())
        for (GridPoint v : c.vertices()) out.push_back(v);
    std::sort(out.begin(), out.end(), std::greater<>{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// All proper intervals whose cell interval lies in P, sorted ascending by (a, b).
///
/// For each lower-left cell the candidate rectangles are grown column by
/// column while tracking the minimum run of cells upwards, so each inner
/// interval is produced exactly once.
inline std::vector<Interval> inner_intervals(const CellCollection& P) {
    std::vector<Interval> out;
    auto column_run = [&](std::int64_t i, std::int64_t j) {
        std::int64_t h = 0;
        while (P.contains_cell_at(i, j + h)) ++h;
        return h;
    };
    for (const Cell& c : P.cells()) {
        const GridPoint a = c.a;
        std::int64_t height = column_run(a.i, a.j);
        for (std::int64_t k = a.i; height > 0 && P.contains_cell_at(k, a.j); ++k) {
            height = std::min(height, column_run(k, a.j));
            for (std::int64_t t = 1; t <= height; ++t) out.push_back({a, {k + 1, a.j + t}});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Unit edges keyed by (fixed coordinate, start of the unit segment).
inline std::vector<std::pair<std::int64_t, std::int64_t>> unit_edges(const CellCollection& P, Direction d) {
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    edges.reserve(P.rank() * 2);
    for (const Cell& c : P.cells()) {
        if (d == Direction::horizontal) {
            edges.emplace_back(c.a.j, c.a.i);
            edges.emplace_back(c.a.j + 1, c.a.i);
        } else {
            edges.emplace_back(c.a.i, c.a.j);
            edges.emplace_back(c.a.i + 1, c.a.j);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace detail

/// Maximal edge intervals of one direction, sorted by (fixed, lo).
inline std::vector<EdgeInterval> maximal_edge_intervals(const CellCollection& P, Direction d) {
    std::vector<EdgeInterval> out;
    for (auto [fixed, start] : detail::unit_edges(P, d)) {
        if (!out.empty() && out.back().fixed == fixed && out.back().hi == start) {
            out.back().hi = start + 1;
        } else {
            out.push_back({d, fixed, start, start + 1});
        }
    }
    return out;
}

/// Bounded components of the cell complement, sorted by corner ascending.
///
/// A complement cell can only be enclosed if both its column and its row
/// carry cells of P; any other complement cell sees infinity along an empty
/// row or column. The flood fill therefore runs on the compressed grid of
/// occupied columns x occupied rows, and a component is unbounded as soon as
/// it steps off that grid.
inline std::vector<Hole> detect_holes(const CellCollection& P) {
    std::vector<std::int64_t> xs, ys;
    for (const Cell& c : P.cells()) {
        xs.push_back(c.a.i);
        ys.push_back(c.a.j);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    auto on_grid = [&](GridPoint p) {
        return std::binary_search(xs.begin(), xs.end(), p.i) && std::binary_search(ys.begin(), ys.end(), p.j);
    };

    std::unordered_set<GridPoint, GridPointHash> seen;
    std::vector<Hole> holes;
    constexpr GridPoint steps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (std::int64_t x : xs) {
        for (std::int64_t y : ys) {
            GridPoint start{x, y};
            if (P.contains_cell_at(x, y) || seen.contains(start)) continue;
            std::vector<Cell> component;
            bool bounded = true;
            std::queue<GridPoint> frontier;
            frontier.push(start);
            seen.insert(start);
            while (!frontier.empty()) {
                GridPoint p = frontier.front();
                frontier.pop();
                component.push_back(Cell{p});
                for (GridPoint s : steps) {
                    GridPoint q = p + s;
                    if (P.contains_cell_at(q.i, q.j)) continue;
                    if (!on_grid(q)) {
                        bounded = false;
                        continue;
                    }
                    if (seen.insert(q).second) frontier.push(q);
                }
            }
            if (bounded) {
                std::sort(component.begin(), component.end());
                GridPoint corner = component.front().a;
                holes.push_back({std::move(component), corner});
            }
        }
    }
    std::sort(holes.begin(), holes.end(), [](const Hole& x, const Hole& y) { return x.corner < y.corner; });
    return holes;
}

namespace detail {

// Union-find over cell indices of P.
inline std::size_t count_components(const CellCollection& P, bool vertex_adjacency) {
    const auto& cells = P.cells();
    std::unordered_map<GridPoint, std::size_t, GridPointHash> index;
    for (std::size_t k = 0; k < cells.size(); ++k) index.emplace(cells[k].a, k);
    std::vector<std::size_t> parent(cells.size());
    for (std::size_t k = 0; k < parent.size(); ++k) parent[k] = k;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = cells.size();
    for (std::size_t k = 0; k < cells.size(); ++k) {
        for (std::int64_t di = -1; di <= 1; ++di) {
            for (std::int64_t dj = -1; dj <= 1; ++dj) {
                if (di == 0 && dj == 0) continue;
                if (!vertex_adjacency && di != 0 && dj != 0) continue;
                auto it = index.find(cells[k].a + GridPoint{di, dj});
                if (it == index.end()) continue;
                auto r1 = find(k), r2 = find(it->second);
                if (r1 != r2) {
                    parent[r1] = r2;
                    --components;
                }
            }
        }
    }
    return components;
}

// Cells sharing a row (or column) must be joined by a run of cells of P.
inline bool lines_convex(const CellCollection& P, bool rows) {
    std::map<std::int64_t, std::vector<std::int64_t>> lines;
    for (const Cell& c : P.cells()) {
        if (rows) lines[c.a.j].push_back(c.a.i);
        else lines[c.a.i].push_back(c.a.j);
    }
    for (auto& [_, pos] : lines) {
        std::sort(pos.begin(), pos.end());
        if (pos.back() - pos.front() + 1 != static_cast<std::int64_t>(pos.size())) return false;
    }
    return true;
}

}  // namespace detail

inline Classification classify(const CellCollection& P) {
    Classification c;
    c.component_count = detail::count_components(P, false);
    c.is_polyomino = c.component_count == 1;
    c.weakly_connected = detail::count_components(P, true) == 1;
    c.row_convex = detail::lines_convex(P, true);
    c.column_convex = detail::lines_convex(P, false);
    c.convex = c.row_convex && c.column_convex;
    c.hole_count = detect_holes(P).size();
    c.simple = c.hole_count == 0;
    return c;
}

}  // namespace polyo
